"""Exact classification and bounded enumeration of codimension-2 weighted
complete intersection del Pezzo surfaces.

The package decides, in exact integer arithmetic, whether a candidate
(a0..a4; d1, d2) is well-formed, quasi-smooth, free of linear-cone
degeneration and of positive amplitude; encodes the 45 infinite series of
such surfaces as a declarative catalog; and reproduces the sporadic solution
table by pruned exhaustive search.
"""

from .classifier import Candidate, Verdict, WeightSystem, amplitude, classify, is_linear_cone
from .enumerator import (
    Bounds,
    EnumerationResult,
    PrefixRange,
    degree_shapes,
    enumerate_solutions,
    partition,
    sporadic,
)
from .families import (
    CATALOG,
    FamilyMatch,
    FamilySpec,
    catalog_records,
    instantiate,
    match_tuple,
    smallest_assignments,
    valid_params,
    verify_amplitude_column,
)
from .quasismooth import QsReport, check_qs, qs_pair, qs_singleton, qs_triple
from .semigroup import contains, subset_gcd
from .wellformed import WfReport, check_wf

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "CATALOG",
    "Candidate",
    "EnumerationResult",
    "FamilyMatch",
    "FamilySpec",
    "PrefixRange",
    "QsReport",
    "Verdict",
    "WeightSystem",
    "WfReport",
    "amplitude",
    "catalog_records",
    "check_qs",
    "check_wf",
    "classify",
    "contains",
    "degree_shapes",
    "enumerate_solutions",
    "instantiate",
    "is_linear_cone",
    "match_tuple",
    "partition",
    "qs_pair",
    "qs_singleton",
    "qs_triple",
    "smallest_assignments",
    "sporadic",
    "subset_gcd",
    "valid_params",
    "verify_amplitude_column",
    "__version__",
]
