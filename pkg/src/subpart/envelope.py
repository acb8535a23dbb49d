"""Convex envelopes of functions on integer intervals, and path energies.

The central fact these envelopes exist to serve: among all paths pinned
under a ceiling f, the lower convex envelope minimizes any sum of a convex
function of the increments.  With both ends pinned the plain envelope is
the minimizer; with only the left end pinned it is the decreasing envelope,
which follows the plain one until the minimum of f and stays flat after.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable


@dataclass(frozen=True)
class DiscreteFunction:
    """Real values on the integer interval lo..lo+len(values)-1."""

    lo: int
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("domain must be nonempty")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def value(self, i: int) -> float:
        if not self.lo <= i <= self.hi:
            raise IndexError(f"{i} outside domain [{self.lo}, {self.hi}]")
        return self.values[i - self.lo]

    def increments(self) -> tuple[float, ...]:
        return tuple(b - a for a, b in zip(self.values, self.values[1:]))


@dataclass(frozen=True)
class EnergySpec:
    """A convex per-increment cost.  The default is the rate function of a
    symmetric +-1 step, which is +infinity outside [-1, 1]."""

    name: str
    psi: Callable[[float], float] = field(compare=False)

    @classmethod
    def default(cls) -> "EnergySpec":
        from .ratefn import rate_function

        return cls("rate-function", rate_function)


def lower_convex_envelope(f: DiscreteFunction) -> DiscreteFunction:
    """Greatest convex minorant, computed by a monotone-chain lower hull
    scan over the points (i, f(i)) and interpolated back to the grid."""
    pts = [(i, v) for i, v in zip(range(f.lo, f.hi + 1), f.values)]
    hull = _lower_hull(pts)
    return DiscreteFunction(f.lo, tuple(_interpolate(hull, f.lo, f.hi)))


def decreasing_lower_convex_envelope(f: DiscreteFunction) -> DiscreteFunction:
    """Greatest decreasing convex minorant.

    Coincides with the plain envelope up to the leftmost minimizer of f
    (where the envelope touches f) and is constant min(f) afterwards; ties
    in the argmin resolve leftmost, which does not change the result.
    """
    env = lower_convex_envelope(f)
    c = min(range(f.lo, f.hi + 1), key=lambda i: (f.value(i), i))
    floor = f.value(c)
    vals = tuple(env.value(i) if i < c else floor for i in range(f.lo, f.hi + 1))
    return DiscreteFunction(f.lo, vals)


def path_energy(f: DiscreteFunction, spec: EnergySpec | None = None) -> float:
    """Sum of psi over the increments of f; +infinity propagates."""
    if spec is None:
        spec = EnergySpec.default()
    total = 0.0
    for d in f.increments():
        v = spec.psi(d)
        if math.isinf(v):
            return math.inf
        total += v
    return total


def _lower_hull(pts: list[tuple[int, float]]) -> list[tuple[int, float]]:
    hull: list[tuple[int, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (p[1] - y0) - (y1 - y0) * (p[0] - x0) <= 0.0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _interpolate(hull: list[tuple[int, float]], lo: int, hi: int) -> list[float]:
    # hull vertices are reproduced exactly; only strict interiors interpolate
    vertex = dict(hull)
    out = []
    seg = 0
    for i in range(lo, hi + 1):
        if i in vertex:
            out.append(vertex[i])
            continue
        while hull[seg + 1][0] < i:
            seg += 1
        (x0, y0), (x1, y1) = hull[seg], hull[seg + 1]
        out.append(y0 + (y1 - y0) * (i - x0) / (x1 - x0))
    return out
