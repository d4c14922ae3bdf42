"""Exact computations with finite group actions on noncommutative graded algebras.

Modules: scalar (cyclotomic fields and linear algebra), freealg and rewrite
(free algebras and degree-bounded completion), algebra (quotients and presets),
action (graded automorphisms and groups), skew (A#G and the ideal (f_G)),
series (trace and Molien series), commutative (the square subalgebra T),
derivation and chains (certified derivation scripts), pertinency, config,
scenarios and cli.
"""

from .algebra import QuotientAlgebra, preset
from .action import ActionGroup, GradedAutomorphism, group_closure
from .config import Session, load_config, parse_session
from .derivation import run_derivation
from .pertinency import certify_p_geq_2, finite_dim_check, monotonicity_check, pertinency_report
from .scalar import CyclotomicField
from .skew import SkewAlgebra, is_member, quotient_dims

__version__ = "0.1.0"

__all__ = ["ActionGroup", "CyclotomicField", "GradedAutomorphism", "QuotientAlgebra", "Session", "SkewAlgebra",
           "certify_p_geq_2", "finite_dim_check", "group_closure", "is_member", "load_config",
           "monotonicity_check", "parse_session", "pertinency_report", "preset", "quotient_dims",
           "run_derivation"]
