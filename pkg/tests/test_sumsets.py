import random

import pytest

from sumsetlab.groups import Subset, group
from sumsetlab.sumsets import (SumsetSpec, dilate, generated, norm,
                               parse_terms, sigma, sigma_pm, sigma_star,
                               sumset, sumset_bruteforce)

Z13 = group(13)
A23 = Subset(Z13, [2, 3])


def _ids(S):
    return sorted(S.indices)


def test_twelve_types_worked_example():
    # the four h = 2 sumsets of {2,3} in Z_13
    assert _ids(sumset(A23, "N0", ("exact", 2))) == [4, 5, 6]
    assert _ids(sumset(A23, "Z", ("exact", 2))) == [1, 4, 5, 6, 7, 8, 9, 12]
    assert _ids(sumset(A23, "01", ("exact", 2))) == [5]
    assert _ids(sumset(A23, "pm1", ("exact", 2))) == [1, 5, 8, 12]
    # limited and unlimited term counts
    assert _ids(sumset(A23, "N0", ("upto", 3))) == [0, 2, 3, 4, 5, 6, 7, 8, 9]
    assert _ids(sumset(A23, "Z", ("upto", 3))) == list(range(13))
    assert _ids(sumset(A23, "N0", ("all",))) == list(range(13))
    assert _ids(sumset(A23, "01", ("exact", 0))) == [0]
    assert sumset(A23, "01", ("exact", 3)).mask == 0


def test_full_h_spectrum_z13():
    # hA and h_pm(A) for A = {2,3} in Z_13 across h = 0..12, element by
    # element
    plain = [
        [0], [2, 3], [4, 5, 6], [6, 7, 8, 9], [8, 9, 10, 11, 12],
        [0, 1, 2, 10, 11, 12], [0, 1, 2, 3, 4, 5, 12],
        [1, 2, 3, 4, 5, 6, 7, 8], [3, 4, 5, 6, 7, 8, 9, 10, 11],
        [0, 1, 5, 6, 7, 8, 9, 10, 11, 12],
        [0, 1, 2, 3, 4, 7, 8, 9, 10, 11, 12],
        [0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12], list(range(13))]
    signed = [
        [0], [2, 3, 10, 11], [1, 4, 5, 6, 7, 8, 9, 12],
        [1, 4, 5, 6, 7, 8, 9, 12], [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        [0, 1, 2, 3, 5, 8, 10, 11, 12], list(range(13)),
        list(range(1, 13)), list(range(1, 13)), list(range(13)),
        list(range(13)), list(range(13)), list(range(13))]
    for h in range(13):
        assert _ids(sumset(A23, "N0", ("exact", h))) == plain[h]
        assert _ids(sumset(A23, "Z", ("exact", h))) == signed[h]


def test_matches_direct_enumeration():
    rng = random.Random(11)
    groups = [group(n) for n in (6, 9, 13)] + [group(2, 4), group(3, 3)]
    for G in groups:
        for _ in range(20):
            m = rng.randint(0, min(5, G.n))
            A = Subset(G, rng.sample(range(G.n), m))
            for lam in ("N0", "Z", "01", "pm1"):
                for terms in [("exact", rng.randint(0, 4)),
                              ("upto", rng.randint(0, 3)),
                              ("from1", rng.randint(1, 3))]:
                    want = sumset_bruteforce(A, lam, terms)
                    got = sumset(A, lam, terms)
                    assert got == want, (G, _ids(A), lam, terms)


def test_sigma_star_interval():
    G = group(100)
    for m in range(1, 6):
        A = Subset(G, range(1, m + 1))
        assert _ids(sigma_star(A)) == list(range(1, m * (m + 1) // 2 + 1))
    assert _ids(sigma(Subset(G, ()))) == [0]
    assert sigma_star(Subset(G, ())).mask == 0


def test_sigma_pm_small():
    G = group(13)
    A = Subset(G, [1, 3, 9])
    # 3^3 coefficient vectors, directly
    want = set()
    for c1 in (-1, 0, 1):
        for c2 in (-1, 0, 1):
            for c3 in (-1, 0, 1):
                want.add((c1 * 1 + c2 * 3 + c3 * 9) % 13)
    assert set(sigma_pm(A).indices) == want


def test_generated_subgroup_consistency():
    from sumsetlab.groups import generated_subgroup
    rng = random.Random(5)
    for G in (group(12), group(2, 6), group(4, 4)):
        for _ in range(20):
            A = Subset(G, rng.sample(range(G.n), rng.randint(0, 4)))
            assert generated(A) == generated_subgroup(A)


def test_dilate():
    G = group(27)
    A = Subset(G, [5, 6, 7, 8, 9, 19, 20, 21, 22])
    assert _ids(dilate(25, A)) == list(range(9, 18))
    H = Subset(group(15), [0, 3, 6, 9, 12])
    assert dilate(2, H) == H
    assert _ids(dilate(-1, A)) == sorted((-x) % 27 for x in A.indices)


def test_norm():
    Z10 = group(10)
    assert norm(Subset(Z10, [0, 2, 5, 8])) == 9
    assert norm(Subset(Z10, [0])) == 0
    G = group(50)
    m = 6
    assert norm(Subset(G, range(1, m + 1))) == m * (m + 1) // 2
    with pytest.raises(ValueError):
        norm(Subset(group(2, 4), [1]))


def test_spec_parsing():
    assert parse_terms("exact:2") == ("exact", 2)
    assert parse_terms("upto:3") == ("upto", 3)
    assert parse_terms("from1:4") == ("from1", 4)
    assert parse_terms("all") == ("all",)
    assert parse_terms("allpos") == ("allpos",)
    with pytest.raises(ValueError):
        parse_terms("exactly:2")
    spec = SumsetSpec.parse("signed", "exact:2")
    assert spec.lam == "Z" and spec.terms == ("exact", 2)
    assert str(spec) == "Z/exact:2"


def test_empty_set_conventions():
    G = group(8)
    E = Subset(G, ())
    for lam in ("N0", "Z", "01", "pm1"):
        assert sumset(E, lam, ("exact", 0)).mask == 1
        assert sumset(E, lam, ("exact", 2)).mask == 0
        assert sumset(E, lam, ("upto", 3)).mask == 1
        assert sumset(E, lam, ("from1", 3)).mask == 0
