import math

import pytest

from subpart.counting import count_kchains, count_subpartitions
from subpart.maximizer import (
    HR_RATE,
    convergence_table,
    find_maximizers,
    shape_report,
)
from subpart.partitions import Partition, ResourceLimitError, conjugate
from subpart.ratefn import FUNCTIONAL_MAX


def test_ground_truth_n4():
    report = find_maximizers(4, 1)
    assert report.maximizers == (Partition((3, 1)), Partition((2, 1, 1)))
    assert report.max_count.value == 7
    assert report.exponent == pytest.approx(math.log(7.0) / 2.0, abs=1e-15)
    assert report.hr_reference == pytest.approx(HR_RATE, abs=0)
    assert report.distance_to_vershik > 0.0


def test_ground_truth_n4_chains():
    report = find_maximizers(4, 2)
    assert report.maximizers == (Partition((3, 1)), Partition((2, 1, 1)))
    assert report.max_count.value == 25
    assert report.hr_reference == pytest.approx(2 * HR_RATE, abs=0)


def test_maximizers_are_actual_maxima():
    from subpart.partitions import enumerate_partitions

    for n in (3, 5, 7):
        report = find_maximizers(n)
        best = report.max_count.value
        for lam in enumerate_partitions(n):
            s = count_subpartitions(lam).value
            assert s <= best
            assert (s == best) == (lam in report.maximizers)


def test_maximizer_sets_are_conjugation_closed():
    for n in range(1, 13):
        for k in (1, 2):
            report = find_maximizers(n, k)
            have = set(report.maximizers)
            assert {conjugate(lam) for lam in have} == have


def test_chain_maximizer_counts_match_direct():
    report = find_maximizers(6, 3)
    lam = report.maximizers[0]
    assert count_kchains(lam, 3).value == report.max_count.value


def test_parallel_scan_matches_serial():
    serial = find_maximizers(14, jobs=1)
    parallel = find_maximizers(14, jobs=3)
    assert serial == parallel


def test_input_validation_and_cap():
    with pytest.raises(ValueError):
        find_maximizers(0)
    with pytest.raises(ValueError):
        find_maximizers(3, k=0)
    with pytest.raises(ResourceLimitError):
        find_maximizers(30, cap=100)


def test_convergence_table():
    reports = convergence_table([2, 4, 6])
    assert [r.n for r in reports] == [2, 4, 6]
    assert all(r.k == 1 for r in reports)
    counts = [r.max_count.value for r in reports]
    assert counts == sorted(counts)


def test_shape_report_consistency():
    rep = shape_report(6)
    assert rep.partition.n == 6
    assert rep.profile_shape.excess_area() == pytest.approx(1.0, abs=1e-9)
    assert rep.envelope_distance <= rep.profile_distance + 1e-12
    assert rep.envelope_functional <= FUNCTIONAL_MAX + 1e-9
    assert rep.profile_distance == pytest.approx(
        find_maximizers(6).distance_to_vershik, abs=0
    )


def test_hr_rate_frozen():
    assert HR_RATE == pytest.approx(2.565099660323728, abs=1e-15)
