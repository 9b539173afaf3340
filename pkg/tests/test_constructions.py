import pytest

from sumsetlab.constructions import (build_A_d, build_B_d, bui_set,
                                     check_all, check_claim, collins_set,
                                     diderrich_set, erdos_griggs_set,
                                     hallfors_interval_set, hallfors_pair_set,
                                     interval_weak_sumfree,
                                     interval_weak_sumfree_scan,
                                     interval_weak_sumfree_size, kemnitz_set,
                                     named_set, perfect_spanning_pair,
                                     selfridge_even, selfridge_minus_two,
                                     selfridge_sequential,
                                     special_restricted_set,
                                     three_independent_set,
                                     zero_1t_free_interval)
from sumsetlab.groups import group
from sumsetlab.sides import divisors, u


def test_A_d_reference():
    A, claims = build_A_d(15, 6, 3, h=2)
    assert check_all(A, claims)
    assert len(A) == 6
    from sumsetlab.sumsets import sumset_mask
    assert sumset_mask(A.group, A.indices, "N0",
                       ("exact", 2)).bit_count() == 9 == u(15, 6, 2)
    A, claims = build_A_d(20, 7, 5, h=2)
    assert check_all(A, claims)
    A, claims = build_A_d(12, 12, 3, h=4)
    assert A.mask == A.group.full_mask


def test_A_d_formula_grid():
    # |hA_d| = min{n, f_d, hm-h+1} across a broad grid
    for n in range(2, 26):
        for d in divisors(n):
            for m in range(1, n + 1):
                for h in (2, 3, 5):
                    A, claims = build_A_d(n, m, d, h=h)
                    assert check_all(A, claims), (n, m, d, h)


def test_B_d_reference_sets():
    A, claims = special_restricted_set(12, 7, 2)
    assert sorted(A.indices) == [0, 1, 4, 5, 6, 9, 10]
    assert check_all(A, claims)
    A, claims = special_restricted_set(10, 6, 3)
    assert sorted(A.indices) == [0, 2, 4, 6, 7, 9]
    assert check_all(A, claims)
    A, claims = special_restricted_set(15, 8, 3)
    assert sorted(A.indices) == [0, 1, 3, 4, 6, 9, 10, 13]
    assert check_all(A, claims)
    # the same sets written via the raw builder
    B, _ = build_B_d(12, 7, 3, 2, 2, 1, 1)
    assert B.mask == special_restricted_set(12, 7, 2)[0].mask


def test_B_d_validation():
    with pytest.raises(ValueError):
        build_B_d(12, 7, 3, 3, 2, 1, 1)   # k1 = d
    with pytest.raises(ValueError):
        build_B_d(12, 7, 3, 1, 1, 1, 1)   # k1 + k2 <= d
    with pytest.raises(ValueError):
        build_B_d(12, 8, 3, 2, 2, 1, 1)   # m not matching c


def test_perfect_spanning_pairs():
    for s in range(1, 6):
        for variant in ("consecutive", "one_and_2s+1"):
            A, claims = perfect_spanning_pair(s, variant)
            assert A.group.n == 2 * s * s + 2 * s + 1
            assert check_all(A, claims), (s, variant)
    A, _ = perfect_spanning_pair(3)
    assert A.group.n == 25 and sorted(A.indices) == [3, 4]


def test_interval_weak_sumfree():
    assert interval_weak_sumfree_size(12, 2, 1) == 5
    size, witness = interval_weak_sumfree(12, 2, 1)
    assert size == 5 and len(witness) == 5
    # closed form equals exhaustive interval maximization
    for n in range(2, 41):
        for k in range(2, 6):
            for l in range(1, k):
                if k > n:
                    continue
                want, _w = interval_weak_sumfree_scan(n, k, l)
                assert interval_weak_sumfree_size(n, k, l) == want, (n, k, l)
    # prime case collapses to the floor formula
    for p in (5, 7, 11, 13, 17):
        for k in range(2, 5):
            for l in range(1, k):
                assert interval_weak_sumfree_size(p, k, l) == \
                    (p + k * k + l * l - 2) // (k + l)


def test_selfridge_sets():
    A, claims = selfridge_even(20, 6)
    assert len(A) == 6 == check_all(A, claims) * 6
    for n in range(6, 61, 2):
        A, claims = selfridge_even(n)
        assert check_all(A, claims), n
    A, claims = selfridge_sequential(30, 7)
    assert check_all(A, claims)
    A, claims = selfridge_minus_two(20, 5)
    assert check_all(A, claims)
    with pytest.raises(ValueError):
        selfridge_sequential(10, 4)   # 1+2+3+4 = 10 not < 10


def test_erdos_griggs():
    for n in range(3, 41):
        A, claims = erdos_griggs_set(n)
        assert check_all(A, claims), n


def test_bui_sets():
    for r in range(1, 5):
        A, claims = bui_set(r)
        assert check_all(A, claims), r
    assert len(bui_set(3)[0]) == 8
    assert len(bui_set(4)[0]) == 20


def test_kemnitz_sets():
    A, claims = kemnitz_set(3, 2)
    assert len(A) == 4
    assert check_all(A, claims)
    for k in (2, 3, 4, 5):
        for r in (1, 2, 3):
            if k ** r > 300:
                continue
            A, claims = kemnitz_set(k, r)
            assert check_all(A, claims), (k, r)


def test_hallfors_sets():
    A, claims = hallfors_interval_set(16, 3, 1)
    assert check_all(A, claims)
    for k, l in [(2, 1), (3, 1), (3, 2), (4, 1)]:
        modulus = (k * k - l * l) * (k - 1)
        for mult in (1, 2):
            n = modulus * mult
            if n < 2 or n > 60:
                continue
            A, claims = hallfors_interval_set(n, k, l)
            assert check_all(A, claims), (n, k, l)
    A, claims = hallfors_pair_set(20, 3, 1, 4)
    assert check_all(A, claims)
    A, claims = hallfors_pair_set(24, 5, 2, 6)
    assert check_all(A, claims)


def test_diderrich():
    for factors in [(15,), (21,), (3, 3), (2, 4), (25,), (2, 6)]:
        G = group(*factors)
        A, claims = diderrich_set(G)
        assert check_all(A, claims), factors
    with pytest.raises(ValueError):
        diderrich_set(group(7))


def test_zero_interval_and_collins():
    for n in range(3, 41):
        for t in (1, 2, 3, 4):
            A, claims = zero_1t_free_interval(n, t)
            assert check_all(A, claims), (n, t)
    for n in range(3, 32, 2):
        for h in (3, 5):
            if h <= n:
                A, claims = collins_set(n, h)
                assert check_all(A, claims), (n, h)


def test_three_independent():
    for n in range(4, 41):
        A, claims = three_independent_set(n)
        assert check_all(A, claims), n
    assert sorted(three_independent_set(25)[0].indices) == [1, 6, 11, 16, 21]


def test_named_set_dispatch():
    A, claims = named_set("kemnitz", k=3, r=2)
    assert len(A) == 4
    with pytest.raises(ValueError):
        named_set("nonesuch")


def test_claim_kinds():
    A, _ = build_A_d(12, 4, 2)
    assert check_claim(A, ("size", 4))
    assert not check_claim(A, ("size", 5))
    with pytest.raises(ValueError):
        check_claim(A, ("bogus",))
