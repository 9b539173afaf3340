"""Randomized identity checks over small groups (criterion: zero failures
across at least a thousand cases each)."""

from hypothesis import given, settings, strategies as st

from sumsetlab.groups import Subset, group
from sumsetlab.search import QuantityQuery, evaluate, verify_witness
from sumsetlab.sumsets import norm, sigma, sumset, sumset_mask

MANY = settings(max_examples=1000, deadline=None)

FACTOR_CHOICES = [(n,) for n in range(2, 31)] + \
    [(2, 4), (2, 6), (3, 6), (2, 2, 4), (3, 3), (5, 5)]


@st.composite
def group_and_subset(draw, max_size=8, min_size=0):
    factors = draw(st.sampled_from(FACTOR_CHOICES))
    G = group(*factors)
    size = draw(st.integers(min_size, min(max_size, G.n)))
    members = draw(st.permutations(range(G.n)))[:size]
    return G, Subset(G, members)


@MANY
@given(group_and_subset(), st.integers(0, 6), st.data())
def test_shift_invariance(gs, h, data):
    G, A = gs
    g = data.draw(st.integers(0, G.n - 1))
    shifted = A.translate(g)
    assert len(sumset(A, "N0", ("exact", h))) == \
        len(sumset(shifted, "N0", ("exact", h)))
    assert len(sumset(A, "01", ("exact", h))) == \
        len(sumset(shifted, "01", ("exact", h)))


@MANY
@given(group_and_subset(), st.integers(0, 5))
def test_limited_terms_equal_padded_exact(gs, s):
    G, A = gs
    padded = Subset(G, mask=A.mask | 1)
    assert sumset(A, "N0", ("upto", s)) == sumset(padded, "N0", ("exact", s))
    assert sumset(A, "Z", ("upto", s)) == sumset(padded, "Z", ("exact", s))


@MANY
@given(group_and_subset(min_size=1), st.integers(0, 6))
def test_signed_decomposition(gs, h):
    G, A = gs
    sym = Subset(G, mask=A.mask | A.negate().mask)
    union = 0
    k = h
    while k >= 0:
        union |= sumset_mask(G, A.indices, "Z", ("exact", k))
        k -= 2
    assert sumset(sym, "N0", ("exact", h)).mask == union
    # one-directional restricted analogue
    restricted = sumset_mask(G, sym.indices, "01", ("exact", h))
    union_hat = 0
    k = h
    while k >= 0:
        union_hat |= sumset_mask(G, A.indices, "pm1", ("exact", k))
        k -= 2
    assert restricted & ~union_hat == 0


@MANY
@given(group_and_subset(), st.integers(0, 6))
def test_symmetric_set_signed_equals_plain(gs, h):
    G, A = gs
    sym = Subset(G, mask=A.mask | A.negate().mask)
    assert sumset(sym, "Z", ("exact", h)) == sumset(sym, "N0", ("exact", h))


@MANY
@given(group_and_subset(), st.integers(0, 8))
def test_restricted_palindromy(gs, h):
    G, A = gs
    m = len(A)
    if h > m:
        return
    assert len(sumset(A, "01", ("exact", h))) == \
        len(sumset(A, "01", ("exact", m - h)))


@MANY
@given(st.sampled_from(range(2, 26)), st.data())
def test_witness_reverification(n, data):
    G = group(n)
    family = data.draw(st.sampled_from(["nu", "rho", "tau", "mu", "phi",
                                        "sigma"]))
    lam = data.draw(st.sampled_from(["N0", "Z", "01", "pm1"]))
    h = data.draw(st.integers(1, 4))
    if family in ("nu", "rho"):
        m = data.draw(st.integers(1, min(5, n)))
        q = QuantityQuery(family, G, lam, ("exact", h), m=m)
    elif family == "mu":
        l = data.draw(st.integers(0, h - 1))
        q = QuantityQuery("mu", G, lam if lam in ("N0", "01") else "N0",
                          ("exact", h), k=h, l=l)
    else:
        q = QuantityQuery(family, G, lam, ("exact", h))
    res = evaluate(q)
    if res.witness is None:
        return
    if family in ("nu", "rho"):
        assert verify_witness(q, res.witness.indices) == res.value
    else:
        assert verify_witness(q, res.witness.indices)


# two extra guards from the engine's contract

@MANY
@given(group_and_subset())
def test_sigma_full_iff_dissociated(gs):
    G, A = gs
    m = len(A)
    full = len(sigma(A)) == (1 << m)
    dissociated = not sumset_mask(G, A.indices, "pm1", ("allpos",)) & 1
    assert full == dissociated


@given(st.integers(2, 40), st.data())
@settings(max_examples=1000, deadline=None)
def test_small_norm_blocks_spanning(n, data):
    G = group(n)
    size = data.draw(st.integers(0, min(8, n)))
    members = data.draw(st.permutations(range(n)))[:size]
    A = Subset(G, members)
    if norm(A) <= n - 2:
        assert sigma(A).mask != G.full_mask
