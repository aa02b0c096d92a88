import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from charcensus.partitions import (
    Partition,
    enumerate_partitions,
    hook_multiset,
    is_t_core,
    parse_partition,
    strips_of_length,
)


@st.composite
def partitions(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    remaining = n
    cap = n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return Partition(parts)


def test_partition_validation():
    assert Partition([]).size == 0
    assert Partition([4, 2, 1]).size == 7
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_text_round_trip():
    assert str(Partition([4, 2, 1])) == "[4,2,1]"
    assert str(Partition([])) == "[]"
    assert parse_partition("[4,2,1]") == Partition([4, 2, 1])
    assert parse_partition("[]") == Partition([])
    assert parse_partition(" [ 3 , 1 ] ".replace(" ", "")) == Partition([3, 1])
    with pytest.raises(ValueError):
        parse_partition("4,2,1")
    with pytest.raises(ValueError):
        parse_partition("[a]")


def test_enumerate_zero_yields_only_empty():
    assert list(enumerate_partitions(0)) == [Partition([])]


def test_enumerate_four_reverse_lex():
    got = [p.parts for p in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_seven_has_fifteen():
    assert len(list(enumerate_partitions(7))) == 15


def test_enumerate_counts_match_recurrence():
    from charcensus.counting import partition_count

    for n in range(0, 31):
        assert len(list(enumerate_partitions(n))) == partition_count(n)


def test_hook_multiset_421():
    assert Counter(hook_multiset(Partition([4, 2, 1]))) == Counter([6, 4, 3, 2, 1, 1, 1])


def test_hook_multiset_empty_and_column():
    assert hook_multiset(Partition([])) == []
    assert Counter(hook_multiset(Partition([1, 1, 1]))) == Counter([3, 2, 1])


def test_strips_421_length5_empty():
    assert strips_of_length(Partition([4, 2, 1]), 5) == []


def test_strips_single_box():
    (r,) = strips_of_length(Partition([1]), 1)
    assert r.remainder == Partition([])
    assert r.sign == 1
    assert r.hook.height == 0


def test_strips_21_length3():
    (r,) = strips_of_length(Partition([2, 1]), 3)
    assert r.remainder == Partition([])
    assert r.sign == -1
    assert r.hook.height == 1


def test_is_t_core_421():
    lam = Partition([4, 2, 1])
    assert is_t_core(lam, 5)
    assert not is_t_core(lam, 2)
    for t in range(1, 10):
        assert is_t_core(Partition([]), t)


@given(partitions(), st.integers(min_value=1, max_value=12))
def test_strip_removal_consistency(lam, t):
    for r in strips_of_length(lam, t):
        assert r.remainder.size == lam.size - t
        assert r.sign == (-1) ** r.hook.height
        assert r.hook.length == t
        assert len(hook_multiset(r.remainder)) == lam.size - t


@given(partitions())
def test_hook_count_equals_size(lam):
    assert len(hook_multiset(lam)) == lam.size


def test_hook_arm_leg_definition():
    # length = arm + leg + 1 and height = leg, checked per box directly
    for n in range(0, 11):
        for lam in enumerate_partitions(n):
            conj = lam.conjugate().parts
            for t in range(1, n + 1):
                for r in strips_of_length(lam, t):
                    i, j = r.hook.row, r.hook.col
                    arm = lam.parts[i] - j - 1
                    leg = conj[j] - i - 1 if j < len(conj) else 0
                    assert r.hook.length == arm + leg + 1
                    assert r.hook.height == leg


def test_divisibility_consistency():
    # a hook of length divisible by t exists iff one of length exactly t does
    for n in range(0, 13):
        for lam in enumerate_partitions(n):
            hooks = hook_multiset(lam)
            for t in range(1, 13):
                core = is_t_core(lam, t)
                assert core == (not any(h % t == 0 for h in hooks))
                no_multiple_strip = all(
                    strips_of_length(lam, k * t) == []
                    for k in range(1, n // t + 1)
                )
                assert core == no_multiple_strip


def test_conjugation_symmetry():
    for n in range(0, 13):
        for lam in enumerate_partitions(n):
            assert Counter(hook_multiset(lam)) == Counter(hook_multiset(lam.conjugate()))


def test_hook_product_divides_factorial():
    lam = Partition([4, 2, 1])
    assert math.prod(hook_multiset(lam)) == 144
    assert math.factorial(7) // 144 == 35
    for n in range(1, 11):
        for p in enumerate_partitions(n):
            prod = math.prod(hook_multiset(p))
            assert math.factorial(n) % prod == 0
            assert math.factorial(n) // prod >= 1
