"""Exhaustive search for the partitions maximizing subpartition and chain
counts, and limit-shape reports for the winners.

The scan enumerates all partitions of n in decreasing lexicographic order
and keeps every argmax, so maximizer sets come out conjugation-closed and
deterministic.  Work can be spread over processes; counts are exact
integers, so the reduction is order-independent and the reports are
byte-for-byte identical however many workers ran.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .counting import (
    CountResult,
    ROW_DP,
    TRANSFER_CHAIN,
    _subpartition_count,
    _weak_chains_transfer,
    partition_count,
)
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    Partition,
    ResourceLimitError,
    enumerate_partitions,
    format_partition,
    profile,
)
from .ratefn import VershikCurve, shape_functional
from .shapes import PiecewiseLinearShape, rescale, sup_distance

HR_RATE = math.pi * math.sqrt(2.0 / 3.0)


@dataclass(frozen=True)
class MaximizerReport:
    n: int
    k: int
    maximizers: tuple[Partition, ...]
    max_count: CountResult
    exponent: float
    hr_reference: float
    distance_to_vershik: float


@dataclass(frozen=True)
class ShapeReport:
    n: int
    k: int
    partition: Partition
    profile_shape: PiecewiseLinearShape
    envelope_shape: PiecewiseLinearShape
    profile_distance: float
    envelope_distance: float
    envelope_functional: float


def _count_chunk(args: tuple[list[tuple[int, ...]], int]) -> list[int]:
    parts_list, k = args
    if k == 1:
        return [_subpartition_count(parts) for parts in parts_list]
    return [
        _weak_chains_transfer(profile(Partition(parts)), k, 10**9)
        for parts in parts_list
    ]


def find_maximizers(
    n: int,
    k: int = 1,
    jobs: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> MaximizerReport:
    """Scan every partition of n and report all maximizers of the weak
    k-chain count (the subpartition count when k = 1).

    Refuses upfront when p(n) exceeds the cap; nothing partial is kept.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    if partition_count(n).value > cap:
        raise ResourceLimitError(f"p({n}) exceeds enumeration cap {cap}")
    candidates = [lam.parts for lam in enumerate_partitions(n, cap=None)]
    counts = _all_counts(candidates, k, jobs)
    best = max(counts)
    maximizers = tuple(
        Partition(parts) for parts, c in zip(candidates, counts) if c == best
    )
    first = maximizers[0]
    shape = rescale(profile(first), n)
    return MaximizerReport(
        n=n,
        k=k,
        maximizers=maximizers,
        max_count=CountResult(
            value=best,
            method=ROW_DP if k == 1 else TRANSFER_CHAIN,
            params={"partition": format_partition(first), "k": k, "strict": False},
        ),
        exponent=math.log(best) / math.sqrt(n),
        hr_reference=k * HR_RATE,
        distance_to_vershik=sup_distance(shape, VershikCurve()),
    )


def _all_counts(candidates: list[tuple[int, ...]], k: int, jobs: int) -> list[int]:
    if jobs <= 1 or len(candidates) < 4 * jobs:
        return _count_chunk((candidates, k))
    chunk = (len(candidates) + 4 * jobs - 1) // (4 * jobs)
    batches = [
        (candidates[i : i + chunk], k) for i in range(0, len(candidates), chunk)
    ]
    out: list[int] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for partial in pool.map(_count_chunk, batches):
            out.extend(partial)
    return out


def convergence_table(
    n_values: list[int],
    k: int = 1,
    jobs: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[MaximizerReport]:
    return [find_maximizers(n, k=k, jobs=jobs, cap=cap) for n in n_values]


def shape_report(
    n: int,
    k: int = 1,
    jobs: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> ShapeReport:
    """Rescaled profile and convex envelope of the first maximizer, with
    sup-distances to the limit curve and the envelope's functional value."""
    report = find_maximizers(n, k=k, jobs=jobs, cap=cap)
    lam = report.maximizers[0]
    shape = rescale(profile(lam), n)
    env = shape.envelope()
    curve = VershikCurve()
    return ShapeReport(
        n=n,
        k=k,
        partition=lam,
        profile_shape=shape,
        envelope_shape=env,
        profile_distance=sup_distance(shape, curve),
        envelope_distance=sup_distance(env, curve),
        envelope_functional=shape_functional(env),
    )
