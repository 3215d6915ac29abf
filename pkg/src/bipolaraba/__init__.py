"""Solvers for non-flat assumption-based argumentation, bipolar argumentation
frameworks under closed-set semantics, their premise-augmented variant, and
the CNF gadget constructions connecting them to satisfiability."""

from .aba import (AbaFramework, Argument, aba_closure, aba_decide,
                  aba_defends, aba_extensions, attacks, enumerate_arguments,
                  format_aba, parse_aba, theory)
from .baf import (Baf, Pbaf, af_extensions, attack_range, baf_closure,
                  baf_decide, baf_defends, baf_extensions, characteristic,
                  format_baf, format_pbaf, is_exhaustive, parse_baf,
                  parse_pbaf, pbaf_extensions)
from .errors import (CapExceeded, EmptyClause, NotAnAssumption, ParseError,
                     SolverError, SupportsPresent, TooLarge)
from .harness import (CheckReport, GenParams, check_construction_lemmas,
                      check_correspondence, check_defense_equivalence,
                      random_aba, random_baf, random_cnf, random_pbaf)
from .instantiate import (Instantiation, arguments_for, assumptions_of,
                          describe_arguments, instantiate_baf,
                          instantiate_pbaf, is_assumption_exhaustive)
from .reductions import (Cnf, brute_force_sat, construct_gr_baf,
                         construct_sat_baf, construct_skept_baf,
                         construct_skept_pbaf, format_dimacs, parse_dimacs)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
