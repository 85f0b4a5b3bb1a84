"""Finite residuated binars: construction, law checking, model search and
prime-filter frames."""

from ._accel import backend
from .algebra import (NotResiduated, ResiduatedBinar, algebra_predicates, derive_residuals,
                      load_algebra, loads_algebra, opposite_algebra, save_algebra)
from .bundled import load_bundled
from .lattice import FiniteLattice, NotALattice, build_lattice, chain, lattice_predicates
from .laws import ALL_LAWS, NONTRIVIAL, RULES, check_law, closure, law_profile, law_statement
from .search import (SearchConfig, TimeBudgetExceeded, canonical_key, enumerate_binars,
                     enumerate_lattices, verify_section4, verify_theorem32)
from .terms import check_statement, format_term, parse, parse_statement

__version__ = "0.1.0"

__all__ = [
    "ALL_LAWS", "FiniteLattice", "NONTRIVIAL", "NotALattice", "NotResiduated", "RULES",
    "ResiduatedBinar", "SearchConfig", "TimeBudgetExceeded", "algebra_predicates", "backend",
    "build_lattice", "canonical_key", "chain", "check_law", "check_statement", "closure",
    "derive_residuals", "enumerate_binars", "enumerate_lattices", "format_term",
    "lattice_predicates", "law_profile", "law_statement", "load_algebra", "load_bundled",
    "loads_algebra", "opposite_algebra", "parse", "parse_statement", "save_algebra",
    "verify_section4", "verify_theorem32",
]
