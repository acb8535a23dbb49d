"""Exact counting of subpartitions, nested chains, and bridge paths.

Everything here is integer-exact (Python arbitrary precision).  The three
counting routes are deliberately redundant: a row DP over part values, a
column DP over bridge paths below the profile, and chain DPs; they count
the same objects through different bijections and are cross-checked in the
test suite.  Bounds derived from the profile's convex envelope are carried
in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .envelope import DiscreteFunction, lower_convex_envelope
from .partitions import LatticeProfile, Partition, ResourceLimitError, format_partition, profile
from .ratefn import growth_rate

DEFAULT_STATE_CAP = 1_000_000

ROW_DP = "row-dp"
BRIDGE_DP = "bridge-dp"
TRANSFER_CHAIN = "transfer-chain"
MEMOIZED_CHAIN = "memoized-chain"
BRUTE_FORCE = "brute-force"
PENTAGONAL_ITERATIVE = "pentagonal-iterative"
PENTAGONAL_MEMOIZED = "pentagonal-memoized"


@dataclass(frozen=True)
class CountResult:
    """An exact count plus the algorithm and parameters that produced it."""

    value: int
    method: str
    params: dict[str, object] = field(default_factory=dict, compare=False)


def count_subpartitions(lam: Partition) -> CountResult:
    """Number of partitions whose diagram fits inside lam (lam and the
    empty partition included)."""
    return CountResult(
        value=_subpartition_count(lam.parts),
        method=ROW_DP,
        params={"partition": format_partition(lam)},
    )


def _subpartition_count(parts: tuple[int, ...]) -> int:
    """Row DP from the bottom row up; the state is the value of the current
    part, and prefix sums give each row in linear time."""
    if not parts:
        return 1
    counts = [1] * (parts[-1] + 1)
    for i in range(len(parts) - 2, -1, -1):
        prefix = [0] * (len(counts) + 1)
        for v, c in enumerate(counts):
            prefix[v + 1] = prefix[v] + c
        bound = len(counts) - 1
        counts = [prefix[min(v, bound) + 1] for v in range(parts[i] + 1)]
    return sum(counts)


def count_bridges_below(prof: LatticeProfile) -> CountResult:
    """Number of +-1 paths gamma with |j| <= gamma(j) <= G(j) across the
    profile window, pinned to |j| at both ends.

    Each such bridge is the profile of a subpartition, so this must agree
    with the row DP.
    """
    ways = {abs(prof.lo): 1}
    for j in range(prof.lo + 1, prof.hi + 1):
        ceiling = prof.value(j)
        floor = abs(j)
        new: dict[int, int] = {}
        for h, c in ways.items():
            for h2 in (h - 1, h + 1):
                if floor <= h2 <= ceiling:
                    new[h2] = new.get(h2, 0) + c
        ways = new
    return CountResult(
        value=ways.get(abs(prof.hi), 1 if prof.lo == prof.hi else 0),
        method=BRIDGE_DP,
        params={"window": [prof.lo, prof.hi]},
    )


def count_kchains(
    lam: Partition,
    k: int,
    strict: bool = False,
    method: str = TRANSFER_CHAIN,
    state_cap: int = DEFAULT_STATE_CAP,
) -> CountResult:
    """Number of nested chains mu_k <= ... <= mu_1 <= lam of length k.

    Weak chains allow equal consecutive elements; strict mode forbids
    equality between consecutive chain elements only (the top containment
    in lam stays weak).  Strict counts come from weak counts of every
    length up to k through the run-length binomial transform, so they can
    legitimately be zero.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if method not in (TRANSFER_CHAIN, MEMOIZED_CHAIN):
        raise ValueError(f"unknown chain method {method!r}")
    weak = _weak_counter(lam, method, state_cap)
    if not strict:
        value = weak(k)
    else:
        value = sum(
            (-1) ** (k - m) * math.comb(k - 1, m - 1) * weak(m)
            for m in range(1, k + 1)
        )
    return CountResult(
        value=value,
        method=method,
        params={"partition": format_partition(lam), "k": k, "strict": strict},
    )


def _weak_counter(lam, method, state_cap):
    if method == TRANSFER_CHAIN:
        prof = profile(lam)
        return lambda m: _weak_chains_transfer(prof, m, state_cap)
    return lambda m: _weak_chains_memoized(lam.parts, m)


def _weak_chains_transfer(prof: LatticeProfile, k: int, state_cap: int) -> int:
    """Column transfer DP over nested k-tuples of bridge heights.

    A weak k-chain is the same thing as k non-crossing bridges below the
    profile, ordered pointwise; the state at column j is the weakly
    decreasing tuple of their heights.
    """
    start = (abs(prof.lo),) * k
    ways = {start: 1}
    signs = tuple(product((-1, 1), repeat=k))
    for j in range(prof.lo + 1, prof.hi + 1):
        ceiling = prof.value(j)
        floor = abs(j)
        new: dict[tuple[int, ...], int] = {}
        for heights, c in ways.items():
            for step in signs:
                nh = tuple(h + s for h, s in zip(heights, step))
                if nh[0] > ceiling or nh[-1] < floor:
                    continue
                if any(a < b for a, b in zip(nh, nh[1:])):
                    continue
                new[nh] = new.get(nh, 0) + c
        if len(new) > state_cap:
            raise ResourceLimitError(
                f"chain DP state space exceeded cap {state_cap} at column {j}"
            )
        ways = new
    return ways.get((abs(prof.hi),) * k, 1 if prof.lo == prof.hi else 0)


@lru_cache(maxsize=None)
def _weak_chains_memoized(parts: tuple[int, ...], k: int) -> int:
    # oracle-duty recursion: chains below lam of length k sum the chains of
    # length k-1 below each subpartition
    if k == 0:
        return 1
    return sum(_weak_chains_memoized(mu, k - 1) for mu in subpartitions(parts))


def subpartitions(parts: tuple[int, ...]):
    """Yield all subpartitions of a part tuple, largest-first."""

    def rec(i: int, prev: int):
        if i == len(parts):
            yield ()
            return
        for v in range(min(prev, parts[i]), -1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for padded in rec(0, parts[0] if parts else 0):
        yield tuple(p for p in padded if p)


@dataclass(frozen=True)
class EnvelopeBound:
    """Upper bound exp(sum of growth rates along the profile's convex
    envelope), kept in log space."""

    log_value: float
    value: float


def envelope_count_bound(prof: LatticeProfile) -> EnvelopeBound:
    """Bound on the number of bridges below the profile: each unit step of
    the envelope with slope s can contribute at most e^{growth_rate(s)}
    paths per unit length.  Envelope slopes stay in [-1, 1] because the
    profile's own steps are +-1."""
    heights = DiscreteFunction(prof.lo, tuple(float(h) for h in prof.heights))
    env = lower_convex_envelope(heights)
    log_value = 0.0
    for d in env.increments():
        log_value += growth_rate(max(-1.0, min(1.0, d)))
    return EnvelopeBound(log_value=log_value, value=math.exp(log_value))


def partition_count(n: int, method: str = PENTAGONAL_ITERATIVE) -> CountResult:
    """p(n) by Euler's pentagonal-number recurrence.

    Two independent implementations, an iterative table and a memoized
    recursion, selected by method; they must agree everywhere.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == PENTAGONAL_ITERATIVE:
        value = _pentagonal_iterative(n)
    elif method == PENTAGONAL_MEMOIZED:
        value = _pentagonal_memoized(n)
    else:
        raise ValueError(f"unknown partition-count method {method!r}")
    return CountResult(value=value, method=method, params={"n": n})


def _pentagonal_iterative(n: int) -> int:
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


@lru_cache(maxsize=None)
def _pentagonal_memoized(n: int) -> int:
    if n == 0:
        return 1
    total = 0
    k = 1
    while k * (3 * k - 1) // 2 <= n:
        sign = 1 if k % 2 else -1
        total += sign * _pentagonal_memoized(n - k * (3 * k - 1) // 2)
        rest = n - k * (3 * k + 1) // 2
        if rest >= 0:
            total += sign * _pentagonal_memoized(rest)
        k += 1
    return total


def hardy_ramanujan_exponent(n: int, k: int = 1) -> float:
    """k * pi * sqrt(2n/3), the growth exponent of p(n) scaled to k nested
    chains."""
    return k * math.pi * math.sqrt(2.0 * n / 3.0)
