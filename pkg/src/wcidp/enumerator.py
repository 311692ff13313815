"""Bounded exhaustive search for del Pezzo weighted complete intersections.

Two modes enumerate every candidate (a0..a4; d1, d2) with a4 and d2 inside
the given bounds whose verdict is del Pezzo:

* ``exhaustive`` iterates all sorted weight tuples and *all* degree pairs
  with d1 <= d2 and d1 + d2 <= sum(a) - 1 (forced by amplitude >= 1) and
  classifies each.  It exists to cross-validate the shaped mode at small
  bounds and refuses max_a4 > 60 unless explicitly overridden.

* ``shaped`` iterates only the fifteen degree patterns a quasi-smooth
  candidate can have at its largest weight: d2 = a_y + a4 (y < 4) with
  d1 = a_x + a4 (x < y), or d2 = 2*a4 with d1 a sum of two of the top
  weights or a_x + a4.  On top of the pattern restriction it prunes by
  amplitude >= 1, d2 <= min(max_d2, 2*a4), d1 >= a0 + a3, and the
  four-weight gcd conditions.  To keep the full-bound run tractable, the
  fast path solves the top-pair and top-singleton membership conditions for
  a4 in closed form instead of scanning it; these generators only ever
  produce supersets of the survivors, and every candidate they emit is still
  fully re-classified, so they cannot introduce false positives.  A plain
  scanning generator (`reference` shaped mode) backs the fast path in the
  differential tests.

Work is partitioned into disjoint (a0, a1, a2) prefix ranges; workers share
nothing mutable and the merged, sorted result is identical for every job
count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from multiprocessing import Pool
from typing import Callable, Iterator, Sequence

import numpy as np

from . import families
from .classifier import Candidate, del_pezzo_quick
from .families import FamilyMatch
from .quasismooth import _singleton_ok

MODE_SHAPED = "shaped"
MODE_EXHAUSTIVE = "exhaustive"
_MODE_SHAPED_REFERENCE = "shaped-reference"  # internal, for differential tests
_MODES = (MODE_SHAPED, MODE_EXHAUSTIVE, _MODE_SHAPED_REFERENCE)

EXHAUSTIVE_A4_LIMIT = 60


@dataclass(frozen=True)
class Bounds:
    """Search box: largest weight and largest degree allowed."""

    max_a4: int
    max_d2: int

    def __post_init__(self):
        if self.max_a4 < 1:
            raise ValueError(f"max_a4 must be >= 1, got {self.max_a4}")
        if self.max_d2 < 2:
            raise ValueError(f"max_d2 must be >= 2, got {self.max_d2}")


@dataclass(frozen=True)
class PrefixRange:
    """Half-open slice [start, stop) of the lexicographic (a0, a1, a2) order."""

    start: int
    stop: int

    def __len__(self) -> int:
        return max(0, self.stop - self.start)


@dataclass(frozen=True)
class EnumerationResult:
    bounds: Bounds
    mode: str
    solutions: tuple[Candidate, ...]
    sporadic: tuple[Candidate, ...]
    family_instances: tuple[tuple[Candidate, tuple[FamilyMatch, ...]], ...]


def degree_shapes(weights: Sequence[int]) -> list[tuple[int, int]]:
    """The deduplicated degree pairs a del Pezzo candidate can carry.

    Every quasi-smooth non-cone candidate with amplitude >= 1 has (d1, d2)
    among these fifteen patterns; equal weights collapse some of them.
    """
    a0, a1, a2, a3, a4 = weights
    pairs = {
        (a0 + a4, a1 + a4), (a0 + a4, a2 + a4), (a1 + a4, a2 + a4),
        (a0 + a4, a3 + a4), (a1 + a4, a3 + a4), (a2 + a4, a3 + a4),
        (a0 + a3, 2 * a4), (a1 + a3, 2 * a4), (a2 + a3, 2 * a4),
        (a0 + a4, 2 * a4), (a1 + a4, 2 * a4), (a2 + a4, 2 * a4),
        (2 * a3, 2 * a4), (a3 + a4, 2 * a4), (2 * a4, 2 * a4),
    }
    return sorted(pairs)


# ---------------------------------------------------------------------------
# prefix indexing

def prefix_count(max_a4: int) -> int:
    """Number of sorted (a0, a1, a2) prefixes with entries in 1..max_a4."""
    n = max_a4
    return n * (n + 1) * (n + 2) // 6


def _prefix_at(index: int, max_a4: int) -> tuple[int, int, int]:
    a0 = 1
    while True:
        block = (max_a4 - a0 + 1) * (max_a4 - a0 + 2) // 2
        if index < block:
            break
        index -= block
        a0 += 1
    a1 = a0
    while True:
        block = max_a4 - a1 + 1
        if index < block:
            break
        index -= block
        a1 += 1
    return (a0, a1, a1 + index)


def _iter_prefixes(max_a4: int, start: int, stop: int) -> Iterator[tuple[int, int, int]]:
    if start >= stop:
        return
    a0, a1, a2 = _prefix_at(start, max_a4)
    for _ in range(stop - start):
        yield (a0, a1, a2)
        a2 += 1
        if a2 > max_a4:
            a1 += 1
            if a1 > max_a4:
                a0 += 1
                a1 = a0
            a2 = a1


def partition(bounds: Bounds, jobs: int) -> list[PrefixRange]:
    """Split the prefix space into ``jobs`` disjoint contiguous ranges.

    Their union covers everything; trailing ranges may be empty when jobs
    exceeds the number of prefixes.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    total = prefix_count(bounds.max_a4)
    base, extra = divmod(total, jobs)
    ranges = []
    pos = 0
    for j in range(jobs):
        size = base + (1 if j < extra else 0)
        ranges.append(PrefixRange(pos, pos + size))
        pos += size
    return ranges


# ---------------------------------------------------------------------------
# shaped mode: candidate generation per weight prefix

# Below this many a4 values, scanning a pattern's range outright is cheaper
# than solving the membership conditions for a4.
_SCAN_THRESHOLD = 6


# d1 = c1 + k1*a4, d2 = c2 + k2*a4 for each of the fifteen patterns.
def _shape_rows(a0: int, a1: int, a2: int, a3: int):
    return (
        (1, a0, 1, a1), (1, a0, 1, a2), (1, a1, 1, a2),
        (1, a0, 1, a3), (1, a1, 1, a3), (1, a2, 1, a3),
        (0, a0 + a3, 2, 0), (0, a1 + a3, 2, 0), (0, a2 + a3, 2, 0),
        (1, a0, 2, 0), (1, a1, 2, 0), (1, a2, 2, 0),
        (0, 2 * a3, 2, 0), (1, a3, 2, 0), (2, 0, 2, 0),
    )


def _mod_sols(k: int, r: int, m: int):
    """Residues x (mod m) with k*x == r (mod m); None means every x.

    Only k in {-1, 0, 1, 2} occurs (degree patterns are at most 2*a4 plus a
    constant), so each case has a closed form; a generic solver is kept for
    safety.
    """
    r %= m
    if k == 1:
        return (r,)
    if k == -1:
        return ((m - r) % m,)
    if k == 0:
        return None if r == 0 else ()
    if k == 2:
        if m & 1:
            return ((r * ((m + 1) // 2)) % m,)
        if r & 1:
            return ()
        half = m // 2
        return (r // 2, r // 2 + half)
    k %= m
    if k == 0:
        return None if r == 0 else ()
    g = gcd(k, m)
    if r % g:
        return ()
    m2 = m // g
    x0 = (r // g) * pow(k // g, -1, m2) % m2
    return tuple(x0 + t * m2 for t in range(g))


def _side_residues(kappa: int, c: int, subs: tuple[int, int, int, int], m: int):
    """Residues of a4 (mod m) letting d - a_e be divisible by m for some e,
    where d = kappa*a4 + c.  The fifth subtrahend is a4 itself (kappa - 1).
    None means the side is satisfiable for every a4."""
    out: set[int] = set()
    for s in subs:
        sols = _mod_sols(kappa, s - c, m)
        if sols is None:
            return None
        out.update(sols)
    sols = _mod_sols(kappa - 1, -c, m)
    if sols is None:
        return None
    out.update(sols)
    return out


class _ResidueTable:
    """Per-(prefix, modulus) cache of side residues and divisibility residues.

    Shapes share their (kappa, c) sides, so each distinct side is solved
    once per prefix and modulus.
    """

    def __init__(self, subs: tuple[int, int, int, int], m: int):
        self.subs = subs
        self.m = m
        self._sides: dict[tuple[int, int], set[int] | None] = {}
        self._divs: dict[tuple[int, int], tuple[int, ...] | None] = {}

    def side(self, kappa: int, c: int):
        key = (kappa, c)
        try:
            return self._sides[key]
        except KeyError:
            val = _side_residues(kappa, c, self.subs, self.m)
            self._sides[key] = val
            return val

    def div(self, kappa: int, c: int):
        key = (kappa, c)
        try:
            return self._divs[key]
        except KeyError:
            val = _mod_sols(kappa, -c, self.m)
            self._divs[key] = val
            return val

    def coord_residues(self, k1: int, c1: int, k2: int, c2: int):
        """Necessary residues of a4 for the singleton condition at the
        coordinate of weight m: m divides d1 or d2, or both sides admit a
        shift divisible by m.  None means no restriction."""
        div1 = self.div(k1, c1)
        if div1 is None:
            return None
        div2 = self.div(k2, c2)
        if div2 is None:
            return None
        r1 = self.side(k1, c1)
        r2 = self.side(k2, c2)
        if r1 is None and r2 is None:
            return None
        if r1 is None:
            both = r2
        elif r2 is None:
            both = r1
        else:
            both = r1 & r2
        return both | set(div1) | set(div2)


_TWO_OF_THREE = ((0, 1), (0, 2), (1, 2))
# Ordered pairs (E, F) of two-element position sets covering {0, 1, 2}.
_COVERING_EF = tuple(
    (E, F) for E in _TWO_OF_THREE for F in _TWO_OF_THREE if len({*E, *F}) == 3
)


def _top_pair_member(c: int, a3: int):
    """Closed forms for the a4 values that can make c + a4 a member of
    <a3, a4>, assuming a3 <= a4 < 2*a3 and |c| <= a3.

    Membership then forces c + a4 to be a plain multiple of a3, except when
    c is itself a non-negative multiple of a3 (the combination a4 + c), in
    which case it holds for every a4; that case returns None.  Values
    outside the caller's range are filtered later."""
    if c >= 0 and c % a3 == 0:
        return None
    return (a3 - c, 2 * a3 - c, 3 * a3 - c)


def _top_pair_candidates(c1: int, c2: int, trio: tuple[int, int, int], a3: int):
    """a4 values compatible with the pair condition at the two largest
    coordinates for the pattern (d1, d2) = (c1 + a4, c2 + a4); None when
    the condition holds for every a4."""
    m2 = _top_pair_member(c2, a3)
    if m2 is None:
        return None
    m1 = _top_pair_member(c1, a3)
    if m1 is None:
        return None
    out = set(m1)
    out.update(m2)
    mem1 = tuple(_top_pair_member(c1 - t, a3) for t in trio)
    mem2 = tuple(_top_pair_member(c2 - t, a3) for t in trio)
    if mem1.count(None) == 1 and mem2.count(None) == 1:
        x = mem1.index(None)
        y = mem2.index(None)
        if x != y:
            # Generic case: only the shift cancelling the degree's own weight
            # is unconditional, and the paired-shift condition reduces to
            # three two-way intersections.
            z = 3 - x - y
            m1y, m1z = mem1[y], mem1[z]
            m2x, m2z = mem2[x], mem2[z]
            for u in m1y:
                if u in m2z:
                    out.add(u)
            for u in m1z:
                if u in m2x or u in m2z:
                    out.add(u)
            return out
    for E, F in _COVERING_EF:
        sets = [mem1[e] for e in E if mem1[e] is not None]
        sets += [mem2[f] for f in F if mem2[f] is not None]
        if not sets:
            return None
        first = sets[0]
        if len(sets) == 1:
            out.update(first)
        else:
            rest = sets[1:]
            out.update(v for v in first if all(v in s for s in rest))
    return out


def _candidates_fast(a0: int, a1: int, a2: int, a3: int,
                     max_a4: int, max_d2: int) -> set[tuple[int, int, int]]:
    """Shaped-mode candidates (a4, d1, d2) for one weight prefix."""
    subs = (a0, a1, a2, a3)
    trio = (a0, a1, a2)
    psum = a0 + a1 + a2 + a3
    lo = a3
    table3: _ResidueTable | None = None
    table2: _ResidueTable | None = None
    cands: set[tuple[int, int, int]] = set()
    for k1, c1, k2, c2 in set(_shape_rows(a0, a1, a2, a3)):
        if c2 > max_d2:
            continue
        hi = min((psum - 1 - c1 - c2) // (k1 + k2 - 1), (max_d2 - c2) // k2, max_a4)
        if hi < lo:
            continue
        source: Sequence[int]
        if hi - lo <= _SCAN_THRESHOLD:
            # Small ranges: scanning beats solving for a4.
            source = range(lo, hi + 1)
        else:
            pinned = _top_pair_candidates(c1, c2, trio, a3) if k2 == 1 else None
            if pinned is not None:
                source = [v for v in pinned if lo <= v <= hi]
            else:
                if table3 is None:
                    table3 = _ResidueTable(subs, a3)
                res3 = table3.coord_residues(k1, c1, k2, c2)
                if res3 is not None:
                    source = []
                    for r in res3:
                        first = lo + ((r - lo) % a3)
                        source.extend(range(first, hi + 1, a3))
                else:
                    if table2 is None:
                        table2 = _ResidueTable(subs, a2)
                    res2 = table2.coord_residues(k1, c1, k2, c2)
                    if res2 is not None:
                        source = []
                        for r in res2:
                            first = lo + ((r - lo) % a2)
                            source.extend(range(first, hi + 1, a2))
                    else:
                        source = range(lo, hi + 1)
        for a4 in source:
            cands.add((a4, c1 + k1 * a4, c2 + k2 * a4))
    return cands


def _candidates_reference(a0: int, a1: int, a2: int, a3: int,
                          max_a4: int, max_d2: int) -> set[tuple[int, int, int]]:
    """Plain shaped-mode generator: scan a4 and apply only the documented
    prunes.  Differential tests hold the fast generator to this one."""
    cands: set[tuple[int, int, int]] = set()
    d1_floor = a0 + a3
    for a4 in range(a3, max_a4 + 1):
        w = (a0, a1, a2, a3, a4)
        total = a0 + a1 + a2 + a3 + a4
        d2_cap = min(max_d2, 2 * a4)
        for d1, d2 in degree_shapes(w):
            if d2 > d2_cap or d1 + d2 > total - 1 or d1 < d1_floor:
                continue
            cands.add((a4, d1, d2))
    return cands


def _solve_shaped_chunk(max_a4: int, max_d2: int, start: int, stop: int,
                        generator: Callable) -> list[tuple[int, ...]]:
    sols = []
    for a0, a1, a2 in _iter_prefixes(max_a4, start, stop):
        g01 = gcd(a0, a1)
        g012 = gcd(g01, a2)
        for a3 in range(a2, max_a4 + 1):
            if gcd(g012, a3) != 1:
                continue
            g013 = gcd(g01, a3)
            g023 = gcd(gcd(a0, a2), a3)
            g123 = gcd(gcd(a1, a2), a3)
            wp = (a0, a1, a2, a3)
            for a4, d1, d2 in generator(a0, a1, a2, a3, max_a4, max_d2):
                if (gcd(g012, a4) != 1 or gcd(g013, a4) != 1
                        or gcd(g023, a4) != 1 or gcd(g123, a4) != 1):
                    continue
                if d1 == a4 or d2 == a4 or d1 in wp or d2 in wp:
                    continue
                w = (a0, a1, a2, a3, a4)
                if _singleton_ok(w, d1, d2, 3) and del_pezzo_quick(w, d1, d2):
                    sols.append((*w, d1, d2))
    return sols


# ---------------------------------------------------------------------------
# exhaustive mode

def _exhaustive_tuple_solutions(w: tuple[int, ...], max_d2: int) -> list[tuple[int, ...]]:
    """Classify every admissible degree pair for one weight tuple.

    Vectorized masks evaluate necessary parts of the verdict (linear cone,
    coordinate conditions, gcd conditions) over the whole degree grid; the
    few survivors are re-classified exactly.
    """
    total = sum(w)
    for i in range(5):
        g = 0
        for j in range(5):
            if j != i:
                g = gcd(g, w[j])
        if g != 1:
            return []
    dmax = min(max_d2, total - 2)
    if dmax < 1:
        return []
    d = np.arange(1, dmax + 1, dtype=np.int64)
    d1g = d[:, None]
    d2g = d[None, :]
    mask = (d1g <= d2g) & (d1g + d2g <= total - 1)
    cone = np.isin(d, np.asarray(w, dtype=np.int64))
    mask &= ~cone[:, None] & ~cone[None, :]
    for i in (4, 3, 2, 1, 0):
        if not mask.any():
            return []
        ai = w[i]
        div = d % ai == 0
        bits = np.zeros(len(d), dtype=np.uint8)
        for e in range(5):
            hit = (d >= w[e]) & ((d - w[e]) % ai == 0)
            bits |= hit.astype(np.uint8) << e
        b1 = bits[:, None]
        b2 = bits[None, :]
        multi1 = (b1 & (b1 - 1)) != 0
        pair_ok = (multi1 & (b2 != 0)) | ((b1 != 0) & ((b2 & ~b1) != 0))
        mask &= div[:, None] | div[None, :] | pair_ok
    for omitted in combinations(range(5), 3):
        rest = [w[x] for x in range(5) if x not in omitted]
        b = gcd(rest[0], rest[1])
        if b > 1:
            mask &= (d1g % b == 0) | (d2g % b == 0)
    for omitted in combinations(range(5), 2):
        rest = [w[x] for x in range(5) if x not in omitted]
        b = gcd(gcd(rest[0], rest[1]), rest[2])
        if b > 1:
            mask &= (d1g % b == 0) & (d2g % b == 0)
    sols = []
    for i1, i2 in np.argwhere(mask):
        d1 = int(d[i1])
        d2 = int(d[i2])
        if del_pezzo_quick(w, d1, d2):
            sols.append((*w, d1, d2))
    return sols


def _solve_exhaustive_chunk(max_a4: int, max_d2: int, start: int, stop: int) -> list[tuple[int, ...]]:
    sols = []
    for a0, a1, a2 in _iter_prefixes(max_a4, start, stop):
        for a3 in range(a2, max_a4 + 1):
            for a4 in range(a3, max_a4 + 1):
                sols.extend(_exhaustive_tuple_solutions((a0, a1, a2, a3, a4), max_d2))
    return sols


# ---------------------------------------------------------------------------
# orchestration

def _solve_chunk(args: tuple) -> list[tuple[int, ...]]:
    max_a4, max_d2, mode, start, stop = args
    if mode == MODE_EXHAUSTIVE:
        return _solve_exhaustive_chunk(max_a4, max_d2, start, stop)
    generator = _candidates_fast if mode == MODE_SHAPED else _candidates_reference
    return _solve_shaped_chunk(max_a4, max_d2, start, stop, generator)


def enumerate_solutions(
    bounds: Bounds,
    mode: str = MODE_SHAPED,
    jobs: int = 1,
    progress: Callable[[int, int, int], None] | None = None,
    allow_large_exhaustive: bool = False,
) -> EnumerationResult:
    """All del Pezzo candidates within the bounds, split into family
    instances and sporadic solutions.

    ``progress`` is called as progress(done_chunks, total_chunks,
    solutions_so_far) after each completed prefix chunk.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == MODE_EXHAUSTIVE and bounds.max_a4 > EXHAUSTIVE_A4_LIMIT and not allow_large_exhaustive:
        raise ValueError(
            f"exhaustive mode with max_a4 = {bounds.max_a4} > {EXHAUSTIVE_A4_LIMIT} "
            "is infeasible; it exists for cross-validation at small bounds "
            "(pass allow_large_exhaustive=True to override)"
        )
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    total = prefix_count(bounds.max_a4)
    n_chunks = max(1, min(total, max(jobs * 16, 64)))
    base, extra = divmod(total, n_chunks)
    chunk_args = []
    pos = 0
    for j in range(n_chunks):
        size = base + (1 if j < extra else 0)
        chunk_args.append((bounds.max_a4, bounds.max_d2, mode, pos, pos + size))
        pos += size

    raw: list[tuple[int, ...]] = []
    done = 0
    if jobs == 1:
        for args in chunk_args:
            raw.extend(_solve_chunk(args))
            done += 1
            if progress is not None:
                progress(done, n_chunks, len(raw))
    else:
        with Pool(processes=jobs) as pool:
            for part in pool.imap(_solve_chunk, chunk_args):
                raw.extend(part)
                done += 1
                if progress is not None:
                    progress(done, n_chunks, len(raw))

    keys = sorted(set(raw))
    matches = families.instances_within(bounds.max_a4, bounds.max_d2)
    solutions = []
    sporadic_list = []
    instances = []
    for key in keys:
        c = Candidate(key[:5], key[5], key[6])
        solutions.append(c)
        found = matches.get(key, ())
        if found:
            instances.append((c, found))
        else:
            sporadic_list.append(c)
    return EnumerationResult(
        bounds=bounds,
        mode=mode,
        solutions=tuple(solutions),
        sporadic=tuple(sporadic_list),
        family_instances=tuple(instances),
    )


def sporadic(bounds: Bounds, mode: str = MODE_SHAPED, jobs: int = 1,
             progress: Callable[[int, int, int], None] | None = None) -> tuple[Candidate, ...]:
    """Solutions within bounds that no family instance accounts for."""
    return enumerate_solutions(bounds, mode=mode, jobs=jobs, progress=progress).sporadic
