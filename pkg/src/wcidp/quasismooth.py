"""Quasi-smoothness of a codimension-2 weighted complete intersection surface.

Quasi-smoothness is equivalent to a family of numerical-semigroup membership
conditions indexed by single coordinates, coordinate pairs and coordinate
triples.  Writing (g, h, ...) for the semigroup of non-negative combinations
of the listed weights and {k, l, m} for the complement of a pair {i, j}:

* singleton i: a_i divides d1 or d2, or d1 - a_e and d2 - a_f both lie in
  (a_i) for some e != f;
* pair {i, j}: one of
    (a) d1, d2 in (a_i, a_j),
    (b) d1 in (a_i, a_j) and d2 - a_e in (a_i, a_j) for some e,
    (c) d1 - a_e in (a_i, a_j) for some e, and d2 in (a_i, a_j),
    (d) two-element sets E, F within {k, l, m} with E + F covering all of
        {k, l, m}, with d1 - a_e in (a_i, a_j) for both e in E and
        d2 - a_f in (a_i, a_j) for both f in F;
* triple {k, l, m}: d1 and d2 in (a_k, a_l, a_m), or d1 plus both d2 - a_i,
  d2 - a_j, or d2 plus both d1 - a_i, d1 - a_j.

In (b) and (c) the shift index e ranges over all five coordinates; a shift
that goes negative simply fails membership.  ``check_qs`` reports every
failing subset, ``is_quasi_smooth`` short-circuits for enumeration loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .semigroup import member

if TYPE_CHECKING:  # pragma: no cover
    from .classifier import Candidate

SINGLETON = "singleton"
PAIR = "pair"
TRIPLE = "triple"

# Two-element subsets of a 3-element complement, as positions 0..2.
_TWO_SUBSETS = ((0, 1), (0, 2), (1, 2))

# High-weight subsets are the most selective; test them first.  Index 3
# leads: degree patterns born at the top weight rarely fail index 4.
_SINGLE_ORDER = (3, 2, 4, 1, 0)
_PAIR_ORDER = ((3, 4), (2, 4), (2, 3), (1, 4), (1, 3), (0, 4), (0, 3), (1, 2), (0, 2), (0, 1))
_TRIPLE_ORDER = (
    (2, 3, 4), (1, 3, 4), (0, 3, 4), (1, 2, 4), (0, 2, 4),
    (0, 1, 4), (1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2),
)


@dataclass(frozen=True)
class QsViolation:
    """One failing index subset with a short account of the failed branches."""

    level: str
    indices: tuple[int, ...]
    detail: str

    def as_dict(self) -> dict:
        return {"level": self.level, "indices": list(self.indices), "detail": self.detail}


@dataclass(frozen=True)
class QsReport:
    passed: bool
    violations: tuple[QsViolation, ...]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.as_dict() for v in self.violations],
        }


def _singleton_ok(a: tuple[int, ...], d1: int, d2: int, i: int) -> bool:
    ai = a[i]
    if d1 % ai == 0 or d2 % ai == 0:
        return True
    hits1 = 0
    only1 = -1
    for e in range(5):
        ae = a[e]
        if d1 >= ae and (d1 - ae) % ai == 0:
            hits1 += 1
            only1 = e
            if hits1 > 1:
                break
    if hits1 == 0:
        return False
    for f in range(5):
        af = a[f]
        if d2 >= af and (d2 - af) % ai == 0 and (hits1 > 1 or f != only1):
            return True
    return False


def _pair_ok(a: tuple[int, ...], d1: int, d2: int, i: int, j: int) -> bool:
    gens = (a[i], a[j])
    limit = d2

    def mem(v: int) -> bool:
        return member(gens, v, limit)

    in1 = mem(d1)
    in2 = mem(d2)
    if in1 and in2:
        return True
    if in1 and any(mem(d2 - a[e]) for e in range(5)):
        return True
    if in2 and any(mem(d1 - a[e]) for e in range(5)):
        return True
    comp = tuple(k for k in range(5) if k != i and k != j)
    m1 = tuple(mem(d1 - a[e]) for e in comp)
    m2 = tuple(mem(d2 - a[f]) for f in comp)
    for E in _TWO_SUBSETS:
        if not (m1[E[0]] and m1[E[1]]):
            continue
        for F in _TWO_SUBSETS:
            if len({*E, *F}) != 3:
                continue
            if m2[F[0]] and m2[F[1]]:
                return True
    return False


def _triple_ok(a: tuple[int, ...], d1: int, d2: int, k: int, l: int, m: int) -> bool:
    gens = (a[k], a[l], a[m])
    limit = d2

    def mem(v: int) -> bool:
        return member(gens, v, limit)

    i, j = (x for x in range(5) if x not in (k, l, m))
    in1 = mem(d1)
    if in1 and mem(d2):
        return True
    if in1 and mem(d2 - a[i]) and mem(d2 - a[j]):
        return True
    return mem(d2) and mem(d1 - a[i]) and mem(d1 - a[j])


def _check_index(i: int) -> None:
    if not 0 <= i <= 4:
        raise ValueError(f"index out of range: {i}")


def qs_singleton(candidate: "Candidate", i: int) -> bool:
    """Singleton condition at coordinate i."""
    _check_index(i)
    return _singleton_ok(candidate.weights.a, candidate.d1, candidate.d2, i)


def qs_pair(candidate: "Candidate", i: int, j: int) -> bool:
    """Pair condition at coordinates i < j."""
    _check_index(i)
    _check_index(j)
    if i == j:
        raise ValueError("pair indices must differ")
    if i > j:
        i, j = j, i
    return _pair_ok(candidate.weights.a, candidate.d1, candidate.d2, i, j)


def qs_triple(candidate: "Candidate", k: int, l: int, m: int) -> bool:
    """Triple condition at coordinates k < l < m."""
    for x in (k, l, m):
        _check_index(x)
    if len({k, l, m}) != 3:
        raise ValueError("triple indices must be distinct")
    k, l, m = sorted((k, l, m))
    return _triple_ok(candidate.weights.a, candidate.d1, candidate.d2, k, l, m)


def check_qs(candidate: "Candidate") -> QsReport:
    """Evaluate all 5 + 10 + 10 subset conditions and list every failure."""
    a = candidate.weights.a
    d1, d2 = candidate.d1, candidate.d2
    violations = []
    for i in range(5):
        if not _singleton_ok(a, d1, d2, i):
            violations.append(
                QsViolation(
                    SINGLETON,
                    (i,),
                    f"a[{i}]={a[i]} divides neither degree and no shifted pair "
                    f"(d1-a_e, d2-a_f) with e != f lands in its span",
                )
            )
    for i, j in combinations(range(5), 2):
        if not _pair_ok(a, d1, d2, i, j):
            violations.append(
                QsViolation(
                    PAIR,
                    (i, j),
                    f"no branch places the degrees in <a[{i}], a[{j}]> = "
                    f"<{a[i]}, {a[j]}>, with or without single or paired shifts",
                )
            )
    for k, l, m in combinations(range(5), 3):
        if not _triple_ok(a, d1, d2, k, l, m):
            violations.append(
                QsViolation(
                    TRIPLE,
                    (k, l, m),
                    f"neither degree configuration lands in "
                    f"<{a[k]}, {a[l]}, {a[m]}>",
                )
            )
    return QsReport(passed=not violations, violations=tuple(violations))


def is_quasi_smooth(a: tuple[int, int, int, int, int], d1: int, d2: int) -> bool:
    """Short-circuiting boolean variant over a raw sorted weight tuple."""
    for i in _SINGLE_ORDER:
        if not _singleton_ok(a, d1, d2, i):
            return False
    for i, j in _PAIR_ORDER:
        if not _pair_ok(a, d1, d2, i, j):
            return False
    for k, l, m in _TRIPLE_ORDER:
        if not _triple_ok(a, d1, d2, k, l, m):
            return False
    return True


def degrees_in_span(candidate: "Candidate") -> bool:
    """Advisory check that both degrees lie in the span of all five weights.

    Not part of quasi-smoothness; reported by the command line as a note and
    never used to reject a candidate.
    """
    a = candidate.weights.a
    return member(a, candidate.d1, candidate.d2) and member(a, candidate.d2, candidate.d2)
