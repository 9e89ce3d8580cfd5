"""weaklam: the weak lambda calculus, its superdevelopments, and a
randomized harness checking their metatheory at desk scale."""

from .errors import (BarrierViolatedError, InvalidPositionError,
                     NotALabeledRedexError, NotAMarkedRedexError,
                     NotAWeakRedexError, NotInitiallyMarkedError, ParseError,
                     PremisesNotDerivableError, SideConditionError,
                     SizeCapError, UnknownSuiteError, WeaklamError)
from .generate import (GenConfig, gen_barrier, gen_labeled_term, gen_term,
                       gen_term_once, random_labeled_trace, random_weak_trace,
                       shrink_term)
from .labeled import (ChainDerivation, ChainSegment, check_chain,
                      erase_labels, head_abstraction, is_initially_labeled,
                      label_initial, labeled_contract, labeled_normalize,
                      labeled_redexes, lift_chain_abs, lift_chain_app1,
                      lift_chain_app2, plain_chain)
from .marked import (CreationCase, detect_creations, erase_stars,
                     is_initially_marked, mark_initial, marked_contract,
                     marked_redexes, match_creation_cases)
from .parsing import parse, print_term
from .reduction import (FUEL_EXHAUSTED, NORMAL, ReductionStep, ReductionTrace,
                        weak_contract, weak_normalize, weak_redexes)
from .suites import SuiteReport, run_all, run_suite, suite_names
from .supersteps import (SuperstepDerivation, SuperstepEngine,
                         chain_from_superstep, complete_superstep,
                         derive_labeled_superstep, derive_superstep,
                         diamond_join, enumerate_labeled_supersteps,
                         enumerate_supersteps, full_superdev, lift_derivation)
from .terms import (Abs, App, Barrier, LAbs, LApp, MarkedRedex, STAR, Term,
                    Var, away_from, binding_path, canonical, free_labels,
                    free_vars, freshen, label_subst_star, positions,
                    replace_at, subst, subterm_at, term_size)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
