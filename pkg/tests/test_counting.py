from math import comb

import pytest

from sumsetlab.counting import (InfiniteLayerError, delannoy_a,
                                delannoy_a_recursive, delannoy_c,
                                delannoy_c_recursive, enumerate_layer,
                                enumerate_partitions, layer_halfspace_size,
                                layer_size, partition_count)


def test_delannoy_reference_values():
    assert delannoy_a(2, 3) == 25
    assert delannoy_a(0, 5) == 1
    assert delannoy_a(6, 6) == 8989
    assert delannoy_c(2, 2) == 8
    assert delannoy_c(0, 4) == 1
    assert [delannoy_c(1, k) for k in range(5)] == [0, 2, 4, 6, 8]
    assert delannoy_c(3, 0) == 0


def test_closed_forms_match_recursions():
    for j in range(13):
        for k in range(13):
            assert delannoy_a(j, k) == delannoy_a_recursive(j, k)
            assert delannoy_c(j, k) == delannoy_c_recursive(j, k)


def test_a_c_relations():
    for j in range(1, 13):
        for k in range(1, 13):
            assert delannoy_c(j, k) == delannoy_a(j, k - 1) + \
                delannoy_a(j - 1, k - 1)
            assert delannoy_c(j, k) == delannoy_a(j, k) - delannoy_a(j - 1, k)


def test_partition_count():
    assert [partition_count(a) for a in range(10)] == \
        [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    # enumeration oracle
    assert partition_count(10) == len(enumerate_partitions(10)) == 42


def test_layer_sizes_small():
    assert layer_size("Z", 2, ("exact", 3)) == 12
    assert layer_size("Z", 3, ("exact", 2)) == 18
    assert layer_size("N0", 4, ("exact", 0)) == 1
    assert layer_size("01", 5, ("all",)) == 32
    assert layer_size("pm1", 4, ("all",)) == 81
    with pytest.raises(InfiniteLayerError):
        layer_size("N0", 3, ("all",))
    with pytest.raises(InfiniteLayerError):
        layer_size("Z", 3, ("allpos",))


def test_layer_sizes_match_enumeration():
    for lam in ("N0", "Z", "01", "pm1"):
        for m in range(6):
            for h in range(6):
                vecs = enumerate_layer(lam, m, ("exact", h))
                assert len(set(vecs)) == len(vecs)
                assert layer_size(lam, m, ("exact", h)) == len(vecs)
            for s in range(6):
                assert layer_size(lam, m, ("upto", s)) == \
                    len(enumerate_layer(lam, m, ("upto", s)))
                if s >= 1:
                    assert layer_size(lam, m, ("from1", s)) == \
                        len(enumerate_layer(lam, m, ("from1", s)))


def test_row_consistency():
    for m in range(10):
        assert sum(comb(m, h) for h in range(m + 1)) == 1 << m
        assert sum(comb(m, h) << h for h in range(m + 1)) == 3 ** m


def test_halfspace_layer():
    assert layer_halfspace_size(2, 3) == 5
    assert layer_halfspace_size(7, 1) == 1
    # direct enumeration of the h-layer of Z^m with first coordinate > 0
    for m in range(1, 5):
        for h in range(1, 5):
            count = sum(1 for v in enumerate_layer("Z", m, ("exact", h))
                        if v[0] > 0)
            assert layer_halfspace_size(m, h) == count
