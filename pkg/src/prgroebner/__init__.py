"""Groebner bases, syzygies and free resolutions over ``R[x_1..x_n]``.

``R`` is a finite product of copies of ``Z`` and ``Z/N``; elements of ``R``
are plain integer tuples normalized by :class:`RingSpec`.
"""

from .coeff import RingSpec
from .division import DivisionResult, check_division, divide, reduces_to_zero
from .estimators import FreeResolution, GroebnerEstimator, SyzygyEstimator, check_elements
from .exceptions import (
    ConsistencyError,
    IterationLimitError,
    NotDivisible,
    OracleRefusal,
    PRGroebnerError,
    StructuralError,
)
from .groebner import (
    GroebnerBasis,
    ann_element,
    buchberger,
    certify,
    criterion_check,
    groebner_basis,
    minimize,
    s_r_element,
)
from .oracle import member_bruteforce, random_syzygy
from .order import MonomialOrder, SchreyerOrder, TermOrder
from .parse import ParseError, ProblemFile, parse, parse_element, render
from .poly import FreeModule, ModuleElement, substitute
from .resolution import Resolution, resolve
from .syzygy import SyzygyRelation, collapse_same_lm, syzygy_basis

__version__ = "0.1.0"

__all__ = [
    "RingSpec", "MonomialOrder", "TermOrder", "SchreyerOrder",
    "FreeModule", "ModuleElement", "substitute",
    "DivisionResult", "divide", "check_division", "reduces_to_zero",
    "GroebnerBasis", "buchberger", "minimize", "groebner_basis", "certify",
    "criterion_check", "s_r_element", "ann_element",
    "SyzygyRelation", "syzygy_basis", "collapse_same_lm",
    "Resolution", "resolve",
    "member_bruteforce", "random_syzygy",
    "ProblemFile", "ParseError", "parse", "parse_element", "render",
    "GroebnerEstimator", "SyzygyEstimator", "FreeResolution", "check_elements",
    "PRGroebnerError", "StructuralError", "NotDivisible", "IterationLimitError",
    "ConsistencyError", "OracleRefusal",
]
