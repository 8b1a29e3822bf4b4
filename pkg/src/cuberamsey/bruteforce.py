"""Ground-truth oracle for tiny cubes: exhaust every 2-coloring of 2^[m]
and decide whether one avoids a monochromatic copy of 2^[n].

The copy test here is deliberately independent of the pruned search
engine.  All copies of 2^[n] inside the full cube 2^[m] are enumerated
once by a literal backtracking over every value choice, checking the
order biconditional pairwise with no pruning at all; a color class
then contains a copy exactly when its membership mask covers one of the
catalogued image families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .coloring import Coloring
from .lattice import CapacityError, CubeSpace

MAX_BRUTE_M = 4


@dataclass(frozen=True)
class BruteForceResult:
    """Verdict for one (n, m): the lowest-index good coloring if any.

    ``colorings_checked`` counts colorings inspected in ascending red-mask
    order: the index of the first good one plus one, or the full 2^(2^m)
    when none exists."""

    n: int
    m: int
    good_coloring: Coloring | None
    colorings_checked: int


@dataclass(frozen=True)
class RamseyScan:
    """Outcome of probing m = 1..max_m in order."""

    n: int
    max_m: int
    value: int | None
    results: tuple[BruteForceResult, ...]

    @property
    def status(self) -> str:
        return "resolved" if self.value is not None else "unresolved"


@lru_cache(maxsize=32)
def copy_image_masks(n: int, m: int) -> tuple[int, ...]:
    """Image families of every copy of 2^[n] inside the full cube 2^[m],
    each encoded as a bitmask over the 2^m subset values; deduplicated,
    ascending.  Literal enumeration: try every unused value for every
    source and keep assignments satisfying the subset biconditional."""
    if not 1 <= m <= MAX_BRUTE_M:
        raise CapacityError(f"copy catalog supports 1 <= m <= {MAX_BRUTE_M}, got {m}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > m:
        return ()
    size = 1 << n
    sources = sorted(range(size), key=lambda s: (s.bit_count(), s))
    values = range(1 << m)
    chosen = [0] * size
    out: set[int] = set()

    def rec(k: int) -> None:
        if k == size:
            mask = 0
            for v in chosen:
                mask |= 1 << v
            out.add(mask)
            return
        b = sources[k]
        for v in values:
            ok = True
            for j in range(k):
                a = sources[j]
                va = chosen[j]
                if v == va:
                    ok = False
                    break
                if ((a & b) == a) != ((va & v) == va):
                    ok = False
                    break
                if ((a & b) == b) != ((va & v) == v):
                    ok = False
                    break
            if ok:
                chosen[k] = v
                rec(k + 1)

    rec(0)
    return tuple(sorted(out))


def family_has_copy(family_mask: int, n: int, m: int) -> bool:
    """Oracle-side copy test: does the family (as a bitmask over subset
    values) cover some catalogued image family?"""
    return any(family_mask & img == img for img in copy_image_masks(n, m))


def naive_count_embeddings(members: list[int], n: int) -> int:
    """Count embeddings of 2^[n] with images among ``members`` by testing
    every ordered selection of 2^n distinct members against the full
    biconditional.  Exponential; oracle use only."""
    size = 1 << n
    if len(members) < size:
        return 0
    count = 0
    for images in permutations(members, size):
        ok = True
        for a in range(size):
            for b in range(a + 1, size):
                sub_ab = a & b == a
                sub_ba = a & b == b
                img_ab = images[a] & images[b] == images[a]
                img_ba = images[a] & images[b] == images[b]
                if sub_ab != img_ab or sub_ba != img_ba:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def _good_mask_array(n: int, m: int) -> np.ndarray:
    """has[r] over all red masks r: does the red class of r contain a
    copy?  Vectorized superset test against the copy catalog."""
    total = 1 << (1 << m)
    arr = np.arange(total, dtype=np.uint32)
    has = np.zeros(total, dtype=bool)
    for img in copy_image_masks(n, m):
        has |= (arr & img) == img
    return has


@lru_cache(maxsize=32)
def _perm_index_maps(m: int) -> tuple[tuple[int, ...], ...]:
    """For every ground-set permutation, the induced map on subset values."""
    maps = []
    for perm in permutations(range(m)):
        table = []
        for v in range(1 << m):
            w = 0
            for j in range(m):
                if v >> j & 1:
                    w |= 1 << perm[j]
            table.append(w)
        maps.append(tuple(table))
    return tuple(maps)


def _canonical_mask(r: int, m: int) -> int:
    """Orbit minimum of a red mask under ground permutations and the
    color swap."""
    full = (1 << (1 << m)) - 1
    best = r
    for table in _perm_index_maps(m):
        t = 0
        for v in range(1 << m):
            if r >> v & 1:
                t |= 1 << table[v]
        if t < best:
            best = t
        if full ^ t < best:
            best = full ^ t
    return best


def _coloring_from_mask(r: int, m: int) -> Coloring:
    size = 1 << m
    red = np.fromiter(((r >> v) & 1 for v in range(size)), dtype=bool, count=size)
    return Coloring(CubeSpace(m), red, scheme=f"brute-{r}")


def exists_good_coloring(n: int, m: int, symmetry: bool = False) -> BruteForceResult:
    """Exhaust red masks in ascending order; a coloring is good when
    neither color class covers a catalogued copy.  With symmetry enabled
    only orbit-minimal masks are inspected; the verdict and the returned
    coloring are unchanged because goodness is orbit-invariant and the
    lowest good mask is its own orbit minimum."""
    if not 1 <= m <= MAX_BRUTE_M:
        raise CapacityError(
            f"full coloring enumeration supports 1 <= m <= {MAX_BRUTE_M}, got {m}"
        )
    has = _good_mask_array(n, m)
    total = len(has)
    good = ~has & ~has[::-1]
    if symmetry:
        checked = 0
        for r in range(total):
            if _canonical_mask(r, m) != r:
                continue
            checked += 1
            if good[r]:
                return BruteForceResult(n, m, _coloring_from_mask(r, m), checked)
        return BruteForceResult(n, m, None, checked)
    idx = np.flatnonzero(good)
    if idx.size:
        r = int(idx[0])
        return BruteForceResult(n, m, _coloring_from_mask(r, m), r + 1)
    return BruteForceResult(n, m, None, total)


def ramsey_bruteforce(n: int, max_m: int, symmetry: bool = False) -> RamseyScan:
    """Probe m = 1, 2, ... and report the least m where no good coloring
    exists, or an unresolved scan when every probed cube has one."""
    results = []
    for m in range(1, max_m + 1):
        res = exists_good_coloring(n, m, symmetry)
        results.append(res)
        if res.good_coloring is None:
            return RamseyScan(n, max_m, m, tuple(results))
    return RamseyScan(n, max_m, None, tuple(results))
