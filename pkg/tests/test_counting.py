import pytest

from charcensus.counting import (
    CountTable,
    bounded_partition_count,
    build_bounded_table,
    build_p_table,
    build_tcore_table,
    load_or_build,
    partition_count,
    tcore_count,
    tcore_count_bruteforce,
)
from charcensus.errors import GuardError
from charcensus.partitions import enumerate_partitions, is_t_core


def test_partition_count_small():
    assert partition_count(0) == 1
    assert partition_count(4) == 5
    assert partition_count(100) == 190569292


def test_partition_count_matches_enumeration():
    for n in range(0, 31):
        assert partition_count(n) == sum(1 for _ in enumerate_partitions(n))


def test_bounded_count_trivial_cases():
    for n in (0, 1, 5, 17):
        assert bounded_partition_count(1, n) == 1
        assert bounded_partition_count(max(n, 1), n) == partition_count(n)
    assert bounded_partition_count(2, 4) == 3


def test_bounded_count_matches_enumeration_filter():
    for n in range(0, 21):
        for t in range(1, n + 2):
            by_filter = sum(
                1 for lam in enumerate_partitions(n)
                if not lam.parts or lam.parts[0] <= t
            )
            assert bounded_partition_count(t, n) == by_filter


def test_bounded_count_monotone_and_exhausts():
    for n in range(0, 61):
        prev = 0
        for t in range(1, n + 1):
            cur = bounded_partition_count(t, n)
            assert cur >= prev
            prev = cur
        if n >= 1:
            assert bounded_partition_count(n, n) == partition_count(n)


def test_column_sums_bijection():
    # grouping nonempty partitions of n by largest part t gives p_t(n-t)
    for n in range(1, 201):
        assert sum(bounded_partition_count(t, n - t) for t in range(1, n + 1)) \
            == partition_count(n)


def test_part_presence_count():
    # partitions of n containing at least one part t, by enumeration
    for n in range(1, 21):
        for t in range(1, n + 1):
            count = sum(1 for lam in enumerate_partitions(n) if t in lam.parts)
            assert count == partition_count(n - t)


def test_tcore_trivial_cases():
    for n in range(1, 10):
        assert tcore_count(1, n) == 0
    assert tcore_count(1, 0) == 1
    for n in range(0, 12):
        assert tcore_count(n + 1, n) == partition_count(n)
        assert tcore_count(n + 5, n) == partition_count(n)


def test_tcore_staircases():
    assert tcore_count(2, 3) == 1
    assert tcore_count(2, 4) == 0
    assert tcore_count(2, 6) == 1


def test_tcore_matches_bruteforce():
    for n in range(0, 21):
        for t in range(1, n + 3):
            assert tcore_count(t, n) == tcore_count_bruteforce(t, n)


def test_tcore_below_partition_count():
    for n in range(0, 41):
        for t in (1, 2, 3, 5, 7, n + 1):
            assert tcore_count(t, n) <= partition_count(n)


def test_bruteforce_guard():
    with pytest.raises(GuardError):
        tcore_count_bruteforce(5, 41)


def test_count_table_lookup():
    pt = build_p_table(30)
    assert pt.value(0) == 1 and pt.value(30) == partition_count(30)
    bt = build_bounded_table(10, 30)
    assert bt.value(0, t=0) == 1
    assert bt.value(17, t=4) == bounded_partition_count(4, 17)
    ct = build_tcore_table(6, 25)
    assert ct.value(0, t=3) == 1
    assert ct.value(19, t=5) == tcore_count(5, 19)


def test_count_table_round_trip(tmp_path):
    for table in (build_p_table(20), build_bounded_table(8, 20), build_tcore_table(5, 20)):
        path = tmp_path / f"{table.kind}.tbl"
        table.save(path)
        assert CountTable.load(path) == table


def test_load_or_build_caches(tmp_path):
    t1 = load_or_build("P_BOUNDED", 25, 25, cache_dir=tmp_path)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    t2 = load_or_build("P_BOUNDED", 25, 25, cache_dir=tmp_path)
    assert t1 == t2
