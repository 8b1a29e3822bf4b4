"""Total Red/Blue colorings of the subset lattice 2^[m].

Two built-in schemes:

* ``layered``: color by cardinality parity (odd sizes red).
* ``c0``: the explicit pairing-based scheme on [2n].  Five size bands:
  everything small is red, the band below n is red exactly when the set
  contains a complete pair, the middle layer n is red exactly when the
  element sum is odd, the band above n is red exactly when the set misses
  no pair, and everything above n + n//2 is blue.

Colorings are dense: one entry per encoded subset value.  The QRC1 text
format stores them bit-exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .lattice import (
    CubeSpace,
    ElementSet,
    element_sum_parity,
    hit_probe,
    missed_count_table,
    odd_sum_table,
    pair_count_table,
    pair_probe,
    popcount_table,
)


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    def flipped(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class SetFamily:
    """A collection of subsets of [m], stored as a dense membership table."""

    space: CubeSpace
    mask: np.ndarray  # bool, length 2^m, read-only

    def __post_init__(self) -> None:
        if self.mask.dtype != bool or self.mask.shape != (self.space.size,):
            raise ValueError("family mask must be bool of length 2^m")
        self.mask.flags.writeable = False

    @classmethod
    def from_sets(cls, space: CubeSpace, sets) -> "SetFamily":
        mask = np.zeros(space.size, dtype=bool)
        for s in sets:
            mask[s.bits if isinstance(s, ElementSet) else int(s)] = True
        return cls(space, mask)

    @classmethod
    def full(cls, space: CubeSpace) -> "SetFamily":
        return cls(space, np.ones(space.size, dtype=bool))

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self.mask))

    def contains(self, s: ElementSet | int) -> bool:
        bits = s.bits if isinstance(s, ElementSet) else int(s)
        return bool(self.mask[bits])

    def member_values(self) -> np.ndarray:
        """Encoded values of the members, ascending."""
        return np.flatnonzero(self.mask)

    def iter_sets(self):
        for bits in self.member_values():
            yield ElementSet(int(bits), self.space.m)

    def with_toggled(self, s: ElementSet | int) -> "SetFamily":
        """A copy with one set added or removed."""
        bits = s.bits if isinstance(s, ElementSet) else int(s)
        mask = self.mask.copy()
        mask[bits] = not mask[bits]
        return SetFamily(self.space, mask)

    def complement_image(self) -> "SetFamily":
        """The family of complements of the members."""
        return SetFamily(self.space, self.mask[::-1].copy())

    def membership_bytes(self) -> bytes:
        """One byte per subset (0/1), for cheap constant-time lookups."""
        return self.mask.astype(np.uint8).tobytes()


@dataclass(frozen=True)
class Coloring:
    """A total Red/Blue assignment on 2^[m]; ``red[i]`` is True iff the set
    encoded by i is red."""

    space: CubeSpace
    red: np.ndarray
    scheme: str = ""

    def __post_init__(self) -> None:
        if self.red.dtype != bool or self.red.shape != (self.space.size,):
            raise ValueError("assignment must be bool of length 2^m")
        if "\n" in self.scheme:
            raise ValueError("scheme label must not contain newlines")
        self.red.flags.writeable = False

    def color_of(self, s: ElementSet | int) -> Color:
        bits = s.bits if isinstance(s, ElementSet) else int(s)
        return Color.RED if self.red[bits] else Color.BLUE

    def color_class(self, color: Color) -> SetFamily:
        mask = self.red if color is Color.RED else ~self.red
        return SetFamily(self.space, mask.copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return (
            self.space == other.space
            and self.scheme == other.scheme
            and bool(np.array_equal(self.red, other.red))
        )


def layered_color(s: ElementSet) -> Color:
    """Red iff |s| is odd."""
    return Color.RED if s.size & 1 else Color.BLUE


def c0_color(s: ElementSet, n: int) -> Color:
    """The c0 scheme, decided set by set over [2n]."""
    space = CubeSpace.with_pairs(n)
    if s.m != space.m:
        raise ValueError(f"set over [{s.m}] but scheme needs [{2 * n}]")
    k = s.size
    if k < (n + 1) // 2:
        return Color.RED
    if k < n:
        return Color.RED if pair_probe(s.bits) else Color.BLUE
    if k == n:
        return Color.RED if element_sum_parity(s) == "odd" else Color.BLUE
    if k <= n + n // 2:
        misses = hit_probe(s.bits).bit_count() < n
        return Color.BLUE if misses else Color.RED
    return Color.BLUE


def make_layered(m: int) -> Coloring:
    space = CubeSpace(m)
    red = (popcount_table(m) & 1).astype(bool)
    return Coloring(space, red, scheme="layered")


def make_c0(n: int) -> Coloring:
    """Build the full c0 coloring on [2n] (vectorized; identical to applying
    c0_color index by index)."""
    space = CubeSpace.with_pairs(n)
    m = space.m
    sizes = popcount_table(m)
    red = np.empty(space.size, dtype=bool)

    low = sizes < (n + 1) // 2
    band_pair = (sizes >= (n + 1) // 2) & (sizes < n)
    middle = sizes == n
    band_miss = (sizes > n) & (sizes <= n + n // 2)
    high = sizes > n + n // 2

    red[low] = True
    red[band_pair] = pair_count_table(m)[band_pair] > 0
    red[middle] = odd_sum_table(m)[middle]
    red[band_miss] = missed_count_table(m)[band_miss] == 0
    red[high] = False
    return Coloring(space, red, scheme=f"c0 n={n}")


def dual_coloring(c: Coloring) -> Coloring:
    """The coloring S -> flip(c(complement(S))); an involution.

    Complementation reverses the index order because the full mask is all
    ones, so the assignment is the reversed, negated table.
    """
    red = ~c.red[::-1]
    scheme = c.scheme[5:-1] if c.scheme.startswith("dual(") and c.scheme.endswith(")") else f"dual({c.scheme})"
    return Coloring(c.space, red, scheme=scheme)


SCHEME_BUILDERS = {
    "c0": make_c0,
    "layered": make_layered,
}


class ColoringFormatError(ValueError):
    """Malformed QRC1 input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_WRAP = 64


def render_coloring(c: Coloring) -> str:
    """The QRC1 text for a coloring (Unix newlines, 64 chars per payload line)."""
    payload = np.where(c.red, "R", "B")
    chars = "".join(payload.tolist())
    lines = ["QRC1", f"m={c.space.m}", f"scheme={c.scheme}"]
    lines.extend(chars[i : i + _WRAP] for i in range(0, len(chars), _WRAP))
    return "\n".join(lines) + "\n"


def save_coloring(c: Coloring, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_coloring(c))


def parse_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline
    if not lines or lines[0] != "QRC1":
        raise ColoringFormatError("expected QRC1 magic", 1, 1)
    if len(lines) < 2 or not lines[1].startswith("m="):
        raise ColoringFormatError("expected m=<integer>", 2, 1)
    try:
        m = int(lines[1][2:])
    except ValueError:
        raise ColoringFormatError(f"bad ground-set size {lines[1][2:]!r}", 2, 3) from None
    if not 1 <= m <= 32:
        raise ColoringFormatError(f"ground-set size {m} outside 1..32", 2, 3)
    if len(lines) < 3 or not lines[2].startswith("scheme="):
        raise ColoringFormatError("expected scheme=<label>", 3, 1)
    scheme = lines[2][7:]

    expected = 1 << m
    red = np.empty(expected, dtype=bool)
    seen = 0
    for lineno, chunk in enumerate(lines[3:], start=4):
        if seen >= expected:
            raise ColoringFormatError("unexpected extra line after payload", lineno, 1)
        want = min(_WRAP, expected - seen)
        for col, ch in enumerate(chunk, start=1):
            if ch not in "RB":
                raise ColoringFormatError(f"illegal character {ch!r}", lineno, col)
            if seen >= expected:
                raise ColoringFormatError("payload longer than 2^m entries", lineno, col)
            red[seen] = ch == "R"
            seen += 1
        if len(chunk) != want:
            raise ColoringFormatError(
                f"payload line has {len(chunk)} entries, expected {want}", lineno, len(chunk) + 1
            )
    if seen != expected:
        raise ColoringFormatError(
            f"payload has {seen} entries, expected {expected}", len(lines) + 1, 1
        )
    return Coloring(CubeSpace(m), red, scheme=scheme)


def load_coloring(path) -> Coloring:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    return parse_coloring(text)
