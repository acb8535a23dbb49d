"""Integer partitions and their lattice profiles.

A partition is stored as a weakly decreasing tuple of positive parts; the
empty tuple is the empty partition.  The profile of a partition is the
boundary of its Young diagram drawn in the Russian convention, tracked in
integer diagonal coordinates: every cell of the diagram becomes a unit
diamond of area 2, so the region between the profile and ``|x|`` has area
exactly ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

DEFAULT_ENUMERATION_CAP = 1_000_000


class PartitionFormatError(ValueError):
    """Raised when partition text cannot be parsed."""


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration or DP exceeds its configured cap."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or p <= 0:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated decreasing parts; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token or not (token.isdigit() or (token[0] == "-" and token[1:].isdigit())):
            raise PartitionFormatError(f"bad part {token!r} in partition text {text!r}")
        parts.append(int(token))
    try:
        return Partition(tuple(parts))
    except ValueError as exc:
        raise PartitionFormatError(str(exc)) from exc


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts)


def enumerate_partitions(n: int, cap: int | None = DEFAULT_ENUMERATION_CAP) -> Iterator[Partition]:
    """Yield all partitions of n in decreasing lexicographic order.

    Raises ResourceLimitError once more than ``cap`` partitions have been
    produced; pass ``cap=None`` to disable the guard.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    produced = 0
    for parts in _descending_parts(n, n):
        produced += 1
        if cap is not None and produced > cap:
            raise ResourceLimitError(f"enumeration of partitions of {n} exceeded cap {cap}")
        yield Partition(parts)


def _descending_parts(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for part in range(min(remaining, max_part), 0, -1):
        for rest in _descending_parts(remaining - part, part):
            yield (part,) + rest


def is_subpartition(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram of mu fits inside the diagram of lam.

    The relation is reflexive, and the empty partition is contained in
    everything.
    """
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu.parts, lam.parts))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


@dataclass(frozen=True)
class LatticeProfile:
    """Profile heights G(j) on the integer window lo..hi.

    G takes the value |j| at both window endpoints, satisfies G(j) >= |j|,
    and moves by +-1 between consecutive integers.  Outside the window the
    profile continues as |j|.
    """

    lo: int
    hi: int
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.hi < self.lo or len(self.heights) != self.hi - self.lo + 1:
            raise ValueError("window does not match heights")
        if self.heights[0] != abs(self.lo) or self.heights[-1] != abs(self.hi):
            raise ValueError("profile must equal |j| at the window endpoints")
        for j, g in zip(range(self.lo, self.hi + 1), self.heights):
            if g < abs(j):
                raise ValueError(f"profile dips below |j| at {j}")
        for a, b in zip(self.heights, self.heights[1:]):
            if abs(b - a) != 1:
                raise ValueError("profile increments must be +-1")

    def value(self, j: int) -> int:
        if j < self.lo or j > self.hi:
            return abs(j)
        return self.heights[j - self.lo]

    def increments(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.heights, self.heights[1:]))

    def excess_area(self) -> int:
        """Area between the profile and |j|; equals 2n for a partition of n."""
        return sum(g - abs(j) for j, g in zip(range(self.lo, self.hi + 1), self.heights))


def profile(lam: Partition) -> LatticeProfile:
    """Profile of lam: G(j) = |j| + 2 * #cells on diagonal j.

    Diagonal j collects the cells (i, c) of the Young diagram with c - i = j
    (rows and columns 1-based).  The window is [-len(lam), lam_1], collapsing
    to [0, 0] for the empty partition.
    """
    if not lam.parts:
        return LatticeProfile(0, 0, (0,))
    lo, hi = -len(lam.parts), lam.parts[0]
    diag = [0] * (hi - lo + 1)
    for i, p in enumerate(lam.parts, start=1):
        # cells in row i occupy diagonals 1-i .. p-i
        for j in range(1 - i, p - i + 1):
            diag[j - lo] += 1
    heights = tuple(abs(j) + 2 * diag[j - lo] for j in range(lo, hi + 1))
    return LatticeProfile(lo, hi, heights)
