"""Well-formedness of a codimension-2 weighted complete intersection surface.

A candidate (a0..a4; d1, d2) is well-formed exactly when three gcd conditions
hold on the weight subsets:

* for every omitted index triple, the gcd of the remaining two weights
  divides d1 or d2;
* for every omitted index pair, the gcd of the remaining three weights
  divides both d1 and d2;
* for every omitted single index, the remaining four weights are coprime.

``check_wf`` reports every violated sub-condition; ``is_well_formed`` is the
short-circuiting variant used inside enumeration loops.  Both always agree on
the boolean outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import TYPE_CHECKING

from .semigroup import subset_gcd

if TYPE_CHECKING:  # pragma: no cover
    from .classifier import Candidate

TRIPLE_GCD = "triple-gcd"
PAIR_GCD = "pair-gcd"
SINGLE_GCD = "single-gcd"


@dataclass(frozen=True)
class WfViolation:
    """One failed gcd condition: which indices were omitted and the gcd seen."""

    condition: str
    omitted: tuple[int, ...]
    gcd_value: int

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "omitted": list(self.omitted),
            "gcd_value": self.gcd_value,
        }


@dataclass(frozen=True)
class WfReport:
    passed: bool
    violations: tuple[WfViolation, ...]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.as_dict() for v in self.violations],
        }


def check_wf(candidate: "Candidate") -> WfReport:
    """Evaluate all 25 sub-conditions and list every violation."""
    a = candidate.weights.a
    d1, d2 = candidate.d1, candidate.d2
    violations = []
    for omitted in combinations(range(5), 3):
        b = subset_gcd(a, omitted)
        if d1 % b != 0 and d2 % b != 0:
            violations.append(WfViolation(TRIPLE_GCD, omitted, b))
    for omitted in combinations(range(5), 2):
        b = subset_gcd(a, omitted)
        if d1 % b != 0 or d2 % b != 0:
            violations.append(WfViolation(PAIR_GCD, omitted, b))
    for i in range(5):
        b = subset_gcd(a, (i,))
        if b != 1:
            violations.append(WfViolation(SINGLE_GCD, (i,), b))
    return WfReport(passed=not violations, violations=tuple(violations))


def is_well_formed(a: tuple[int, int, int, int, int], d1: int, d2: int) -> bool:
    """Short-circuiting boolean variant over a raw sorted weight tuple."""
    # Single omissions first: they are weight-only and the cheapest to refute.
    for i in range(5):
        g = 0
        for j in range(5):
            if j != i:
                g = gcd(g, a[j])
        if g != 1:
            return False
    for i, j in combinations(range(5), 2):
        g = 0
        for k in range(5):
            if k != i and k != j:
                g = gcd(g, a[k])
        if g != 1 and (d1 % g != 0 or d2 % g != 0):
            return False
    for omitted in combinations(range(5), 3):
        rest = [a[k] for k in range(5) if k not in omitted]
        g = gcd(rest[0], rest[1])
        if g != 1 and d1 % g != 0 and d2 % g != 0:
            return False
    return True
