"""Finite models of n-concrete categories.

Groupoids stand in for 1-types, functors for maps and natural
isomorphisms for paths.  A concrete category realises every object as a
groupoid and every hom as a functor into a functor groupoid; the library
computes the truncation level of those realisations, certifies the least
level at which the data is concrete, and runs the coherence laws that
level demands.
"""
__version__ = "0.1.0"

from .concat import (ConcreteCategory, ConcretenessReport, check_pentagon_triangle,
                     check_unit_assoc, check_univalent, conformity_report, is_equiv, raise_level)
from .config import cap, get_cap, set_cap
from .delta import canonicalize, count_ord, delta_category, enumerate_ord, ord_compose, realize
from .errors import (ArrowlikeViolation, ConcreteCatError, EnumerationOverflow, ExtractionError,
                     InfinitePathsError, LevelTooLowError, NotMonotoneError, RejectedInput,
                     SchemaError, StructuralValidationError)
from .fingpd import (FinGroupoid, GFunctor, NatIso, bz2, discrete, functor_groupoid,
                     homotopy_fiber, is_equivalence, trunc_level_functor, trunc_level_groupoid)
from .finset import FinFun, FinSet, trunc_level_set_map
from .freecat import Quiver, free_category

__all__ = [
    "ArrowlikeViolation", "ConcreteCatError", "ConcreteCategory", "ConcretenessReport",
    "EnumerationOverflow", "ExtractionError", "FinFun", "FinGroupoid", "FinSet", "GFunctor",
    "InfinitePathsError", "LevelTooLowError", "NatIso", "NotMonotoneError", "Quiver",
    "RejectedInput", "SchemaError", "StructuralValidationError", "bz2", "canonicalize", "cap",
    "check_pentagon_triangle", "check_unit_assoc", "check_univalent", "conformity_report",
    "count_ord", "delta_category", "discrete", "enumerate_ord", "free_category",
    "functor_groupoid", "get_cap", "homotopy_fiber", "is_equiv", "is_equivalence", "ord_compose",
    "raise_level", "realize", "set_cap", "trunc_level_functor", "trunc_level_groupoid",
    "trunc_level_set_map",
]
