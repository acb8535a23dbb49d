import math

import pytest

from subpart.counting import (
    BRIDGE_DP,
    MEMOIZED_CHAIN,
    PENTAGONAL_ITERATIVE,
    PENTAGONAL_MEMOIZED,
    ROW_DP,
    TRANSFER_CHAIN,
    count_bridges_below,
    count_kchains,
    count_subpartitions,
    envelope_count_bound,
    hardy_ramanujan_exponent,
    partition_count,
    subpartitions,
)
from subpart.partitions import (
    Partition,
    ResourceLimitError,
    conjugate,
    enumerate_partitions,
    profile,
)

import oracles


FROZEN_COUNTS = {
    (): 1,
    (1,): 2,
    (2, 1): 5,
    (4,): 5,
    (3, 1): 7,
    (2, 2): 6,
    (2, 1, 1): 7,
    (1, 1, 1, 1): 5,
}


def test_count_subpartitions_frozen():
    for parts, want in FROZEN_COUNTS.items():
        res = count_subpartitions(Partition(parts))
        assert res.value == want
        assert res.method == ROW_DP


def test_count_subpartitions_against_enumeration():
    for n in range(0, 8):
        for mu in oracles.partitions_of(n):
            want = len(oracles.brute_subpartitions(mu))
            assert count_subpartitions(Partition(mu)).value == want


def test_bridges_agree_with_row_dp():
    for n in range(0, 9):
        for mu in oracles.partitions_of(n):
            lam = Partition(mu)
            res = count_bridges_below(profile(lam))
            assert res.value == count_subpartitions(lam).value
            assert res.method == BRIDGE_DP


def test_count_is_conjugation_invariant():
    for n in range(1, 9):
        for mu in oracles.partitions_of(n):
            lam = Partition(mu)
            assert (
                count_subpartitions(lam).value
                == count_subpartitions(conjugate(lam)).value
            )


def test_subpartitions_generator():
    got = list(subpartitions((2, 1)))
    assert got[0] == (2, 1)
    assert got[-1] == ()
    assert len(got) == 5
    assert set(got) == set(oracles.brute_subpartitions((2, 1)))
    assert list(subpartitions(())) == [()]


def test_kchains_frozen():
    assert count_kchains(Partition((2, 2)), 2).value == 20
    assert count_kchains(Partition((2, 2)), 2, strict=True).value == 14
    assert count_kchains(Partition((1,)), 3).value == 4
    assert count_kchains(Partition((1,)), 3, strict=True).value == 0
    assert count_kchains(Partition(()), 3).value == 1
    assert count_kchains(Partition(()), 2, strict=True).value == 0


def test_kchains_reduce_to_subpartition_count_at_k1():
    for n in range(0, 7):
        for mu in oracles.partitions_of(n):
            lam = Partition(mu)
            assert count_kchains(lam, 1).value == count_subpartitions(lam).value
            assert (
                count_kchains(lam, 1, strict=True).value
                == count_subpartitions(lam).value
            )


def test_kchains_both_methods_match_brute_force():
    for n in range(0, 6):
        for mu in oracles.partitions_of(n):
            lam = Partition(mu)
            for k in (1, 2, 3):
                for strict in (False, True):
                    want = oracles.brute_chain_count(mu, k, strict)
                    a = count_kchains(lam, k, strict, method=TRANSFER_CHAIN)
                    b = count_kchains(lam, k, strict, method=MEMOIZED_CHAIN)
                    assert a.value == want, (mu, k, strict)
                    assert b.value == want, (mu, k, strict)


def test_kchains_rectangles_match_macmahon():
    for a in range(1, 4):
        for b in range(1, 4):
            for k in range(1, 4):
                lam = Partition((b,) * a)
                want = oracles.macmahon_box(a, b, k)
                assert count_kchains(lam, k).value == want


def test_kchains_validation_and_caps():
    with pytest.raises(ValueError):
        count_kchains(Partition((2, 1)), 0)
    with pytest.raises(ValueError):
        count_kchains(Partition((2, 1)), 2, method="nonsense")
    with pytest.raises(ResourceLimitError):
        count_kchains(Partition((3, 3, 3)), 3, state_cap=2)


def test_envelope_bound_frozen_and_dominant():
    bound = envelope_count_bound(profile(Partition((1,))))
    assert bound.log_value == pytest.approx(math.log(4.0), abs=1e-15)
    assert bound.value == pytest.approx(4.0, abs=1e-12)
    for n in range(0, 10):
        for mu in oracles.partitions_of(n):
            lam = Partition(mu)
            b = envelope_count_bound(profile(lam))
            s = count_subpartitions(lam).value
            assert math.log(s) <= b.log_value + 1e-9, mu
            assert b.value == pytest.approx(math.exp(b.log_value), rel=1e-12)


def test_partition_count_frozen():
    small = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, want in enumerate(small):
        assert partition_count(n).value == want
    assert partition_count(20).value == 627
    assert partition_count(30).value == 5604
    assert partition_count(100).value == 190569292
    assert partition_count(100, PENTAGONAL_MEMOIZED).value == 190569292


def test_partition_count_methods_agree():
    for n in range(0, 61):
        assert (
            partition_count(n, PENTAGONAL_ITERATIVE).value
            == partition_count(n, PENTAGONAL_MEMOIZED).value
        )


def test_partition_count_matches_enumeration():
    for n in range(0, 21):
        assert partition_count(n).value == len(list(enumerate_partitions(n)))
        assert partition_count(n).value == len(oracles.partitions_of(n))


def test_partition_count_validation():
    with pytest.raises(ValueError):
        partition_count(-1)
    with pytest.raises(ValueError):
        partition_count(5, method="bogus")


def test_hardy_ramanujan_exponent():
    assert hardy_ramanujan_exponent(6) == pytest.approx(2.0 * math.pi, abs=1e-12)
    assert hardy_ramanujan_exponent(6, 3) == pytest.approx(6.0 * math.pi, abs=1e-12)
    assert hardy_ramanujan_exponent(1) == pytest.approx(
        math.pi * math.sqrt(2.0 / 3.0), abs=1e-15
    )


def test_count_monotone_in_containment():
    # adding one cell can only grow the subpartition count
    cases = [((2, 1), (2, 2)), ((3,), (4,)), ((2, 2), (3, 2)), ((1,), (1, 1))]
    for inner, outer in cases:
        assert (
            count_subpartitions(Partition(inner)).value
            < count_subpartitions(Partition(outer)).value
        )
