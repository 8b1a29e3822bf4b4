"""Exhaustive search for copies of the subset lattice 2^[n] inside a set
family over [m], with verification of found embeddings and auditable
absence certificates.

An embedding f maps every A in 2^[n] to a member of the family so that
A is a subset of B exactly when f(A) is a subset of f(B).  The search
assigns images in a fixed order (bottom, top, then remaining sources by
ascending size and encoded value), deriving each candidate list from the
interval between the union of assigned subset images and the intersection
of assigned superset images.  Two provable bounds are available as prunes
and can be switched off without changing any outcome:

  * cardinality window: |f(empty)| + |A| <= |f(A)| <= |f(full)| - (n - |A|);
  * top children: any k images of the (n-1)-sized sources intersect in at
    most |f(full)| - k elements.

Reported node counts follow a fixed convention: one node per accepted
(bottom, top) root pair and one per accepted inner assignment.  Candidate
checks run in a fixed order (cardinality window, membership, reuse,
incomparability, top children), so prune hit counts are reproducible.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .coloring import Color, Coloring, SetFamily
from .lattice import ElementSet

MAX_SOURCE_N = 12

_PRUNE_NAMES = ("root-gap", "cardinality-window", "top-children")


@dataclass(frozen=True)
class Embedding:
    """A copy of 2^[n] inside 2^[m]: entry i of ``images`` is the image of
    the subset of [n] encoded by i."""

    n: int
    m: int
    images: tuple[ElementSet, ...]

    @classmethod
    def from_values(cls, n: int, m: int, values: tuple[int, ...]) -> "Embedding":
        return cls(n, m, tuple(ElementSet(v, m) for v in values))

    @property
    def image_values(self) -> tuple[int, ...]:
        return tuple(s.bits for s in self.images)

    def image_of(self, source: int | ElementSet) -> ElementSet:
        idx = source.bits if isinstance(source, ElementSet) else source
        return self.images[idx]


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    violation: str | None


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search run.

    ``status`` is "found", "absent", or "inconclusive" (budget hit before
    exhaustion).  "absent" always means the full tree was explored;
    ``nodes_explored`` and ``prune_hits`` then audit the exhaustion claim
    and are identical for any worker split.  ``count`` is the number of
    embeddings as labeled maps (count mode only).
    """

    status: str
    embedding: Embedding | None
    count: int | None
    nodes_explored: int
    prune_hits: dict[str, int]
    elapsed_ms: float


def verify_embedding(e: Embedding, family: SetFamily | None = None) -> EmbeddingCheck:
    """Re-check an embedding from scratch: distinct images, the subset
    biconditional over all ordered source pairs, both provable cardinality
    and top-children bounds, and membership when a family is given."""
    size = 1 << e.n
    if len(e.images) != size:
        raise ValueError(f"expected {size} images for n={e.n}, got {len(e.images)}")
    for s in e.images:
        if s.m != e.m:
            raise ValueError(f"image {s} is not over [{e.m}]")
    if family is not None:
        if family.space.m != e.m:
            raise ValueError(
                f"family over [{family.space.m}] but embedding targets [{e.m}]"
            )
        for a in range(size):
            if not family.contains(e.images[a]):
                return EmbeddingCheck(
                    False, f"image {e.images[a]} of {ElementSet(a, e.n)} not in family"
                )
    vals = [s.bits for s in e.images]
    seen: dict[int, int] = {}
    for a in range(size):
        if vals[a] in seen:
            return EmbeddingCheck(
                False,
                f"images of {ElementSet(seen[vals[a]], e.n)} and "
                f"{ElementSet(a, e.n)} coincide",
            )
        seen[vals[a]] = a
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            sub = a & b == a
            img_sub = vals[a] & vals[b] == vals[a]
            if sub != img_sub:
                return EmbeddingCheck(
                    False,
                    f"order violated on ({ElementSet(a, e.n)}, {ElementSet(b, e.n)})",
                )
            if sub:
                gap = vals[b].bit_count() - vals[a].bit_count()
                if gap < b.bit_count() - a.bit_count():
                    return EmbeddingCheck(
                        False,
                        "cardinality gap too small on "
                        f"({ElementSet(a, e.n)}, {ElementSet(b, e.n)})",
                    )
    if e.n >= 1:
        full = size - 1
        top_size = vals[full].bit_count()
        inter = [0] * size
        inter[0] = (1 << e.m) - 1
        for imask in range(1, size):
            low = imask & -imask
            child = full ^ low
            inter[imask] = inter[imask ^ low] & vals[child]
            if inter[imask].bit_count() > top_size - imask.bit_count():
                return EmbeddingCheck(
                    False,
                    f"top children over {ElementSet(imask, e.n)} intersect "
                    "in too many elements",
                )
    return EmbeddingCheck(True, None)


@lru_cache(maxsize=16)
def _prepare_sources(n: int):
    """Assignment order over 2^[n] and, per position, the earlier positions
    holding proper subsets, proper supersets, and incomparable sources."""
    if not 1 <= n <= MAX_SOURCE_N:
        raise ValueError(f"source cube parameter {n} outside 1..{MAX_SOURCE_N}")
    full = (1 << n) - 1
    order = [0, full] + sorted(range(1, full), key=lambda s: (s.bit_count(), s))
    subs, sups, incs = [], [], []
    for k, s in enumerate(order):
        sub_k, sup_k, inc_k = [], [], []
        for j in range(k):
            t = order[j]
            if t & s == t:
                sub_k.append(j)
            elif s & t == s:
                sup_k.append(j)
            else:
                inc_k.append(j)
        subs.append(sub_k)
        sups.append(sup_k)
        incs.append(inc_k)
    return order, subs, sups, incs


class _DeadlineHit(Exception):
    pass


class _Engine:
    """Sequential backtracking over one list of root bottoms."""

    def __init__(
        self,
        family: SetFamily,
        n: int,
        mode: str,
        prune: bool,
        deadline: float | None,
        collect: set | None = None,
    ) -> None:
        m = family.space.m
        self.m = m
        self.n = n
        self.member = family.mask.tobytes() if m <= 24 else family.mask
        self.order, self.subs, self.sups, self.incs = _prepare_sources(n)
        self.positions = len(self.order)
        self.first_tc = self.positions - n if n >= 2 else self.positions
        self.mode = mode
        self.prune = prune
        self.deadline = deadline
        self.collect = collect
        self.images = [0] * self.positions
        self.used: set[int] = set()
        self.nodes = 0
        self.prune_hits = dict.fromkeys(_PRUNE_NAMES, 0)
        self.count = 0
        self.found: tuple[int, ...] | None = None
        self._tick = 0

    def run(self, bottoms: list[int], members: list[int]) -> None:
        n = self.n
        for b in bottoms:
            pc_b = b.bit_count()
            for t in members:
                if t & b != b or t == b:
                    continue
                if self.prune and t.bit_count() - pc_b < n:
                    self.prune_hits["root-gap"] += 1
                    continue
                self.nodes += 1
                self._check_deadline()
                self.images[0] = b
                self.images[1] = t
                self.used = {b, t}
                if self._extend(2, t) and self.mode == "first":
                    return

    def _check_deadline(self) -> None:
        if self.deadline is None:
            return
        self._tick += 1
        if self._tick & 255 == 0 and time.monotonic() > self.deadline:
            raise _DeadlineHit

    def _extend(self, k: int, tc_inter: int) -> bool:
        if k == self.positions:
            if self.mode == "first":
                self.found = tuple(self.images)
                return True
            self.count += 1
            if self.collect is not None:
                self.collect.add(tuple(sorted(self.images)))
            return False
        images = self.images
        s = self.order[k]
        u = 0
        for j in self.subs[k]:
            u |= images[j]
        cap = (1 << self.m) - 1
        for j in self.sups[k]:
            cap &= images[j]
        if u & ~cap:
            return False
        d = cap & ~u
        prune = self.prune
        in_tc = k >= self.first_tc
        if prune:
            pc_s = s.bit_count()
            lo = images[0].bit_count() + pc_s
            hi = images[1].bit_count() - (self.n - pc_s)
            tc_budget = images[1].bit_count() - (k - self.first_tc + 1)
        member = self.member
        used = self.used
        incs = self.incs[k]
        w = 0
        while True:
            x = u | w
            ok = True
            if prune and not lo <= x.bit_count() <= hi:
                self.prune_hits["cardinality-window"] += 1
                ok = False
            if ok and not member[x]:
                ok = False
            if ok and x in used:
                ok = False
            if ok:
                for j in incs:
                    v = images[j]
                    xv = x & v
                    if xv == x or xv == v:
                        ok = False
                        break
            new_inter = tc_inter
            if ok and in_tc:
                new_inter = tc_inter & x
                if prune and new_inter.bit_count() > tc_budget:
                    self.prune_hits["top-children"] += 1
                    ok = False
            if ok:
                self.nodes += 1
                self._check_deadline()
                images[k] = x
                used.add(x)
                stop = self._extend(k + 1, new_inter)
                used.discard(x)
                if stop:
                    return True
            w = (w - d) & d
            if not w:
                break
        return False


def _run_engine(
    family: SetFamily,
    n: int,
    mode: str,
    prune: bool,
    deadline: float | None,
    bottoms: list[int],
    members: list[int],
    collect: set | None = None,
) -> tuple[tuple[int, ...] | None, int, int, dict[str, int], bool]:
    eng = _Engine(family, n, mode, prune, deadline, collect)
    hit = False
    try:
        eng.run(bottoms, members)
    except _DeadlineHit:
        hit = True
    return eng.found, eng.count, eng.nodes, eng.prune_hits, hit


def _search_worker(args) -> tuple[tuple[int, ...] | None, int, int, dict[str, int], bool]:
    family, n, mode, prune, deadline, bottoms, members = args
    return _run_engine(family, n, mode, prune, deadline, bottoms, members)


def find_copy(
    family: SetFamily,
    n: int,
    mode: str = "first",
    prune: bool = True,
    budget_ms: float | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Search the family for a copy of 2^[n].

    mode="first" stops at the embedding minimal in the deterministic branch
    order; mode="count" exhausts the tree and counts embeddings as labeled
    maps.  A budget turns an unfinished run into status "inconclusive",
    never "absent".  With several workers the root bottoms are split round
    robin; every worker runs to completion and the lowest-bottom find wins,
    so outcomes and first-mode witnesses match the sequential run.
    """
    if mode not in ("first", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    start = time.perf_counter()
    if n > family.space.m or n > MAX_SOURCE_N:
        # No injective size-respecting map exists once n exceeds m.
        elapsed = (time.perf_counter() - start) * 1000.0
        if n > MAX_SOURCE_N and n <= family.space.m:
            raise ValueError(f"source cube parameter {n} outside 1..{MAX_SOURCE_N}")
        count = 0 if mode == "count" else None
        return SearchOutcome("absent", None, count, 0, dict.fromkeys(_PRUNE_NAMES, 0), elapsed)
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    members = [int(v) for v in family.member_values()]
    if workers <= 1 or len(members) < 2:
        found, count, nodes, hits, hit_deadline = _run_engine(
            family, n, mode, prune, deadline, members, members
        )
        results = [(found, count, nodes, hits, hit_deadline)]
    else:
        jobs = [
            (family, n, mode, prune, deadline, members[i::workers], members)
            for i in range(workers)
            if members[i::workers]
        ]
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            results = list(pool.map(_search_worker, jobs))
    nodes = sum(r[2] for r in results)
    hits = dict.fromkeys(_PRUNE_NAMES, 0)
    for r in results:
        for name in _PRUNE_NAMES:
            hits[name] += r[3][name]
    elapsed = (time.perf_counter() - start) * 1000.0
    founds = [r[0] for r in results if r[0] is not None]
    any_deadline = any(r[4] for r in results)
    if mode == "first" and founds:
        best = min(founds, key=lambda vals: (vals[0], vals[1]))
        embedding = _embedding_from_branch(family, n, best)
        check = verify_embedding(embedding, family)
        if not check.ok:
            raise AssertionError(f"engine produced an invalid embedding: {check.violation}")
        return SearchOutcome("found", embedding, None, nodes, hits, elapsed)
    if any_deadline:
        return SearchOutcome("inconclusive", None, None, nodes, hits, elapsed)
    if mode == "count":
        total = sum(r[1] for r in results)
        status = "found" if total else "absent"
        return SearchOutcome(status, None, total, nodes, hits, elapsed)
    return SearchOutcome("absent", None, None, nodes, hits, elapsed)


def _embedding_from_branch(
    family: SetFamily, n: int, branch_values: tuple[int, ...]
) -> Embedding:
    order = _prepare_sources(n)[0]
    values = [0] * (1 << n)
    for pos, source in enumerate(order):
        values[source] = branch_values[pos]
    return Embedding.from_values(n, family.space.m, tuple(values))


def verify_no_copy(
    family: SetFamily,
    n: int,
    prune: bool = True,
    budget_ms: float | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Absence certificate: a first-mode search whose "absent" outcome
    records the explored node and prune hit counts for auditing."""
    return find_copy(family, n, "first", prune, budget_ms, workers)


def contains_monochromatic_copy(
    coloring: Coloring, n: int, prune: bool = True, workers: int = 1
) -> tuple[Color, Embedding] | None:
    """Search the Red class then the Blue class, exhaustively; first hit
    wins."""
    for color in (Color.RED, Color.BLUE):
        outcome = find_copy(coloring.color_class(color), n, "first", prune, None, workers)
        if outcome.status == "found":
            return color, outcome.embedding
    return None


def count_distinct_copies(family: SetFamily, n: int, prune: bool = True) -> tuple[int, int]:
    """Count embeddings as labeled maps and as distinct image families.

    The distinct count deduplicates by image set; kept sequential and
    capped small since the collection can grow with the labeled count.
    """
    if n > 6:
        raise ValueError(f"distinct-copy collection capped at n <= 6, got {n}")
    if n > family.space.m:
        return 0, 0
    members = [int(v) for v in family.member_values()]
    images: set[tuple[int, ...]] = set()
    found, count, nodes, hits, hit_deadline = _run_engine(
        family, n, "count", prune, None, members, members, images
    )
    return count, len(images)
