"""Explicit extremal subsets, each paired with machine-checkable claims.

Every builder returns a (subset, claims) pair.  A claim names a predicate
that the subset is supposed to satisfy; `check_claim` recomputes the
predicate with the sumset engine, so the whole catalogue can be verified
table-driven.  Claim kinds:

    ("sumset-size", lam, terms, expected)   |H_Lambda A| == expected
    ("zero-free",   lam, terms)             0 not in H_Lambda A
    ("spans",       lam, terms)             H_Lambda A == G
    ("not-spanning",lam, terms)             H_Lambda A != G
    ("disjoint",    lam, k, l)              k- and l-fold sumsets disjoint
    ("complete",    lam, k, l)              ... and their union is G
    ("size",        expected)               |A| == expected
"""

from itertools import combinations, product
from math import comb, gcd, isqrt

from .counting import delannoy_a
from .groups import Subset, group
from .sides import divisors, f_d, f_hat_d, prime_divisors
from .sumsets import sumset_mask


def check_claim(A, claim):
    """Recompute one claim on a subset; True iff it holds."""
    G = A.group
    gens = A.indices
    kind = claim[0]
    if kind == "size":
        return len(A) == claim[1]
    if kind == "sumset-size":
        _, lam, terms, expected = claim
        return sumset_mask(G, gens, lam, terms).bit_count() == expected
    if kind == "zero-free":
        _, lam, terms = claim
        return not sumset_mask(G, gens, lam, terms) & 1
    if kind == "spans":
        _, lam, terms = claim
        return sumset_mask(G, gens, lam, terms) == G.full_mask
    if kind == "not-spanning":
        _, lam, terms = claim
        return sumset_mask(G, gens, lam, terms) != G.full_mask
    if kind in ("disjoint", "complete"):
        _, lam, k, l = claim
        ka = sumset_mask(G, gens, lam, ("exact", k))
        la = sumset_mask(G, gens, lam, ("exact", l))
        if ka & la:
            return False
        return kind == "disjoint" or (ka | la) == G.full_mask
    raise ValueError(f"unknown claim kind {claim!r}")


def check_all(A, claims):
    return all(check_claim(A, c) for c in claims)


# -- coset-interval sets with minimum sumset size -----------------------------

def build_A_d(n, m, d, h=None):
    """The m-subset of Z_n built from cosets of the order-d subgroup.

    With H the subgroup of order d and m = c*d + k (1 <= k <= d), the set is
    the first c full cosets i+H plus k elements of the coset c+H.  Its
    h-fold sumset has size min{n, f_d, hm-h+1} and its restricted h-fold
    sumset has size f_hat_d(n,m,h); claims are attached for the given h.
    """
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    step = n // d
    c = -(-m // d) - 1
    k = m - c * d
    elems = [i + j * step for i in range(c) for j in range(d)]
    elems += [c + j * step for j in range(k)]
    A = Subset(group(n), elems)
    claims = [("size", m)]
    if h is not None:
        claims.append(("sumset-size", "N0", ("exact", h),
                       min(n, f_d(m, h, d), h * m - h + 1)))
        if 1 <= h < m:
            # restricted sumsets are palindromic in h, and the divisor
            # formula describes the h <= m/2 half of the range
            hr = min(h, m - h)
            claims.append(("sumset-size", "01", ("exact", h),
                           f_hat_d(n, m, hr, d) if hr else 1))
    return A, claims


def build_B_d(n, m, d, k1, k2, g, j0, h=None):
    """Two-partial-coset variant of build_A_d.

    B = B' + middle cosets + B'' where B' takes k1 elements of H, the c-1
    middle cosets i*g+H are full, and B'' takes k2 elements of c*g+H
    starting at offset j0.  Requires k1 < d, k2 < d, k1+k2 > d and
    m = k1 + (c-1)d + k2 for a positive integer c.
    """
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    if not (0 < k1 < d and 0 < k2 < d and k1 + k2 > d):
        raise ValueError("need k1 < d, k2 < d, k1 + k2 > d")
    if not 0 <= j0 <= d - 1:
        raise ValueError("need 0 <= j0 <= d-1")
    rest = m - k1 - k2
    if rest % d or rest < 0:
        raise ValueError("need m = k1 + (c-1)d + k2 with c >= 1")
    c = rest // d + 1
    step = n // d
    elems = [(j * step) % n for j in range(k1)]
    for i in range(1, c):
        elems += [(i * g + j * step) % n for j in range(d)]
    elems += [(c * g + (j0 + j) * step) % n for j in range(k2)]
    if len(set(elems)) != m:
        raise ValueError("parameters give coincident elements")
    A = Subset(group(n), elems)
    return A, [("size", m)]


def special_restricted_set(n, m, h):
    """The B_d set whose restricted h-fold sumset beats the divisor bound.

    Three parameter families exist; each returns the set together with the
    claimed restricted sumset size (one less than u_hat in each case).
    """
    if h == 2:
        if (m - 1) & (m - 2) == 0 or m - 1 <= 1:
            raise ValueError("m-1 must not be a power of 2")
        if n % (2 * m - 2):
            raise ValueError("n must be divisible by 2m-2")
        d = next(dd for dd in divisors(m - 1)[::-1] if dd % 2 == 1 and dd > 1)
        A, claims = build_B_d(n, m, d, (d + 1) // 2, (d + 1) // 2,
                              n // (2 * m - 2), (d - 1) // 2)
        claims.append(("sumset-size", "01", ("exact", 2), 2 * m - 4))
        return A, claims
    if h == 3 and m == 6:
        if n % 10:
            raise ValueError("n must be divisible by 10")
        A, claims = build_B_d(n, 6, 5, 4, 2, n // 10, 3)
        claims.append(("sumset-size", "01", ("exact", 3), 9))
        return A, claims
    if h % 2 == 1 and (m + 2) % (h + 2) == 0 and n % (h * m - h * h) == 0:
        A, claims = build_B_d(n, m, h + 2, h + 1, h + 1,
                              n // (h * m - h * h), (h + 3) // 2)
        claims.append(("sumset-size", "01", ("exact", h), h * m - h * h - 1))
        return A, claims
    raise ValueError(f"no special set for (n,m,h)=({n},{m},{h})")


# -- perfect spanning pairs ---------------------------------------------------

def perfect_spanning_pair(s, variant="consecutive"):
    """A perfect s-spanning pair in Z_{2s^2+2s+1}: {s,s+1} or {1,2s+1}."""
    if s < 1:
        raise ValueError("need s >= 1")
    n = 2 * s * s + 2 * s + 1
    G = group(n)
    if variant == "consecutive":
        A = Subset(G, [s, s + 1])
    elif variant == "one_and_2s+1":
        A = Subset(G, [1, 2 * s + 1])
    else:
        raise ValueError(f"unknown variant {variant!r}")
    # perfection: the group order matches the number of coefficient vectors
    assert n == delannoy_a(2, s)
    claims = [("size", 2), ("spans", "Z", ("upto", s)),
              ("sumset-size", "Z", ("upto", s), n)]
    return A, claims


# -- weak (k,l)-sum-free intervals ---------------------------------------------

def interval_weak_sumfree_size(n, k, l):
    """Largest size of an interval in Z_n whose restricted k- and l-fold
    sumsets are disjoint, by the closed form."""
    if not 0 < l < k <= n:
        raise ValueError("need 0 < l < k <= n")
    delta = gcd(n, k - l)
    J = k * k + l * l - (k + l)
    M = (n + J - 2) // (k + l)
    K = k * M - J // 2 + 1
    L = l * M - J // 2 + 1
    # L/delta is a true fraction; only the right side is floored
    if L <= delta * ((n - K) // delta):
        return M + 1
    return M


def interval_weak_sumfree_scan(n, k, l):
    """Exhaustive scan over all n intervals and all sizes (oracle).

    Returns (size, witness) for the largest weak (k,l)-sum-free interval.
    """
    G = group(n)
    best, witness = 0, None
    for size in range(1, n + 1):
        found = None
        for a in range(n):
            elems = [(a + i) % n for i in range(size)]
            ka = sumset_mask(G, elems, "01", ("exact", k))
            la = sumset_mask(G, elems, "01", ("exact", l))
            if not ka & la:
                found = elems
                break
        if found is None:
            break
        best, witness = size, found
    return best, Subset(G, witness) if witness else None


def interval_weak_sumfree(n, k, l):
    """(size, witness) of the largest weak (k,l)-sum-free interval in Z_n.

    The size comes from the closed form; the witness interval is located by
    scanning the n starting points and verifying disjointness directly.
    """
    size = interval_weak_sumfree_size(n, k, l)
    G = group(n)
    for a in range(n):
        elems = [(a + i) % n for i in range(size)]
        ka = sumset_mask(G, elems, "01", ("exact", k))
        la = sumset_mask(G, elems, "01", ("exact", l))
        if not ka & la:
            return size, Subset(G, elems)
    raise AssertionError(
        f"formula value {size} for (n,k,l)=({n},{k},{l}) has no witness")


# -- the catalogue of named sets ----------------------------------------------

def selfridge_sequential(n, m):
    """{1,2,...,m}: zero-sum-free in Z_n when 1+2+...+m < n."""
    if m * (m + 1) // 2 >= n:
        raise ValueError("need 1+2+...+m < n")
    A = Subset(group(n), range(1, m + 1))
    return A, [("size", m), ("zero-free", "01", ("allpos",))]


def selfridge_minus_two(n, m):
    """{1,-2,3,4,...,m}: zero-sum-free in Z_n when 1+3+...+m < n, n >= 6."""
    if n < 6 or m < 2:
        raise ValueError("need n >= 6 and m >= 2")
    if m * (m + 1) // 2 - 2 >= n:
        raise ValueError("need 1+3+4+...+m < n")
    elems = [1, n - 2] + list(range(3, m + 1))
    A = Subset(group(n), elems)
    return A, [("size", m), ("zero-free", "01", ("allpos",))]


def selfridge_even(n, m=None):
    """Split set around n/2 for even n; zero-sum-free of size ~ sqrt(2n)."""
    if n % 2:
        raise ValueError("n must be even")
    if m is None:
        m = isqrt(2 * n - 3)
    if m == 1:
        elems = [n // 2]
    elif m % 2:
        half = (m - 1) // 2
        if 2 * (half * (half + 1) // 2) >= n // 2:
            raise ValueError(f"m={m} too large for n={n}")
        elems = list(range(1, half + 1)) + [n // 2 + i for i in range(half + 1)]
    else:
        half = m // 2
        if 2 * ((half - 1) * half // 2) + half >= n // 2:
            raise ValueError(f"m={m} too large for n={n}")
        elems = list(range(1, half)) + [n // 2 + i for i in range(half + 1)]
    A = Subset(group(n), elems)
    return A, [("size", m), ("zero-free", "01", ("allpos",))]


def erdos_griggs_set(n):
    """Near-square-root set {+-1,...} whose subset sums miss part of Z_n."""
    if n < 3:
        raise ValueError("need n >= 3")
    k = isqrt(4 * (n - 2))
    if k % 2:
        elems = [i % n for i in range(1, (k - 1) // 2 + 1)]
        elems += [(-i) % n for i in range(1, (k - 1) // 2 + 1)]
    else:
        elems = [i % n for i in range(1, (k - 2) // 2 + 1)]
        elems += [(-i) % n for i in range(1, (k - 2) // 2 + 1)]
        elems += [k // 2]
    A = Subset(group(n), elems)
    return A, [("size", k - 1), ("not-spanning", "01", ("allpos",))]


def bui_set(r):
    """Union of middle-weight 0/1 layers and their negatives in Z_3^r;
    no three distinct elements sum to zero."""
    if r < 1:
        raise ValueError("need r >= 1")
    G = group(*(3,) * r)
    q, s = divmod(r, 3)
    lo, hi = max(q + s - 1, 0), 2 * q + s - 1
    elems = set()
    for zeros in range(lo, hi + 1):
        for zpos in combinations(range(r), zeros):
            coords = [1] * r
            for z in zpos:
                coords[z] = 0
            a = tuple(coords)
            elems.add(G.index(a))
            elems.add(G.index(G.neg(a)))
    A = Subset(G, elems)
    expected = 2 * sum(comb(r, i) for i in range(lo, hi + 1))
    return A, [("size", expected), ("zero-free", "01", ("exact", 3))]


def kemnitz_set(k, r):
    """{0,1}^{r-1} x {0..k-2} (all of Z_k for even k): no k distinct
    elements of Z_k^r sum to zero."""
    if k < 2 or r < 1:
        raise ValueError("need k >= 2 and r >= 1")
    G = group(*(k,) * r)
    last_range = range(k) if k % 2 == 0 else range(k - 1)
    elems = [G.index(bits + (last,))
             for bits in product((0, 1), repeat=r - 1)
             for last in last_range]
    A = Subset(G, elems)
    expected = (k if k % 2 == 0 else k - 1) * 2 ** (r - 1)
    return A, [("size", expected), ("zero-free", "01", ("exact", k))]


def hallfors_interval_set(n, k, l):
    """Coset-thickened interval that is weakly (k,l)-sum-free; complete
    (sumsets partition the group) when l <= k-2."""
    if not 0 < l < k:
        raise ValueError("need 0 < l < k")
    modulus = (k * k - l * l) * (k - 1)
    if n % modulus:
        raise ValueError(f"n must be divisible by {modulus}")
    G = group(n)
    a = l * n // modulus
    c = n // ((k + l) * (k - 1))
    step = n // (k - 1)  # subgroup of order k-1
    elems = {(a + i + j * step) % n for i in range(c + 1)
             for j in range(k - 1)}
    A = Subset(G, elems)
    claims = [("size", n // (k + l) + k - 1), ("disjoint", "01", k, l)]
    if l <= k - 2:
        claims.append(("complete", "01", k, l))
    return A, claims


def hallfors_pair_set(n, k, l, d):
    """(1+H) plus a sparse part of H; weakly (k,l)-sum-free whenever the
    residues of k and l mod d differ by d/2."""
    if d % 2 or n % d:
        raise ValueError("d must be an even divisor of n")
    if n < d * (d // 2 - 1):
        raise ValueError("need n >= d(d/2 - 1)")
    if abs(k % d - l % d) != d // 2:
        raise ValueError("residues of k and l mod d must differ by d/2")
    G = group(n)
    elems = {(1 + j * d) % n for j in range(n // d)}
    elems |= {(i * d) % n for i in range(d // 2 - 1)}
    A = Subset(G, elems)
    claims = [("size", n // d + d // 2 - 1), ("disjoint", "01", k, l)]
    if d // 2 - 1 < l < k < n // d:
        claims.append(("complete", "01", k, l))
    return A, claims


def diderrich_set(G):
    """(H \\ {0}) plus p-2 elements of a coset of H, where H has prime
    index p; its subset sums miss a whole coset."""
    n = G.n
    p = min(pp for pp in divisors(n) if pp > 1)
    if n == p:
        raise ValueError("order must be composite")
    # subgroup of index p: last coordinate restricted to multiples of p
    members = [idx for idx in range(n)
               if G.coords(idx)[-1] % p == 0]
    g = G.index((0,) * (G.r - 1) + (1,))
    elems = [idx for idx in members if idx != 0]
    elems += [G.index(G.add(G.coords(g), G.coords(idx)))
              for idx in members[:p - 2]]
    A = Subset(G, set(elems))
    return A, [("size", n // p + p - 3), ("not-spanning", "01", ("allpos",))]


def zero_1t_free_interval(n, t):
    """{1,...,floor((n-1)/t)}: no sum of up to t terms hits zero."""
    m = (n - 1) // t
    A = Subset(group(n), range(1, m + 1))
    return A, [("size", m), ("zero-free", "N0", ("from1", t))]


def collins_set(n, h):
    """Interval centred at (n+1)/2 avoiding zero in all restricted signed
    h-term sums; n and h odd."""
    if n % 2 == 0 or h % 2 == 0 or h > n:
        raise ValueError("need n, h odd with h <= n")
    q, r = divmod(2 * n + h * h - 3, 4 * h)
    mid = (n + 1) // 2
    if r < 2 * h:
        elems = [(mid - q + i) % n for i in range(2 * q)]
    else:
        elems = [(mid - q + i) % n for i in range(2 * q + 1)]
    A = Subset(group(n), elems)
    expected = (2 * n + h * h - 3) // (2 * h)
    return A, [("size", expected), ("zero-free", "pm1", ("exact", h))]


def three_independent_set(n):
    """A 3-independent set in Z_n of the conjectured-maximal pattern."""
    G = group(n)
    if n % 2 == 0:
        elems = [2 * i + 1 for i in range(n // 4)]
    else:
        p = next((d for d in prime_divisors(n) if d % 6 == 5), None)
        if p is not None:
            elems = [(p * i1 + 2 * i2 + 1) % n
                     for i1 in range(n // p)
                     for i2 in range((p - 5) // 6 + 1)]
        else:
            elems = [2 * i + 1 for i in range(n // 6)]
    A = Subset(G, elems)
    return A, [("zero-free", "Z", ("from1", 3))]


NAMED_SETS = {
    "Ad": lambda **kw: build_A_d(**kw),
    "Bd": lambda **kw: build_B_d(**kw),
    "special-restricted": lambda **kw: special_restricted_set(**kw),
    "perfect-spanning": lambda **kw: perfect_spanning_pair(**kw),
    "selfridge-sequential": lambda **kw: selfridge_sequential(**kw),
    "selfridge-minus-two": lambda **kw: selfridge_minus_two(**kw),
    "selfridge-even": lambda **kw: selfridge_even(**kw),
    "erdos-griggs": lambda **kw: erdos_griggs_set(**kw),
    "bui": lambda **kw: bui_set(**kw),
    "kemnitz": lambda **kw: kemnitz_set(**kw),
    "hallfors-interval": lambda **kw: hallfors_interval_set(**kw),
    "hallfors-pair": lambda **kw: hallfors_pair_set(**kw),
    "diderrich": lambda **kw: diderrich_set(group(kw.pop("n"))),
    "zero-interval": lambda **kw: zero_1t_free_interval(**kw),
    "collins": lambda **kw: collins_set(**kw),
    "three-independent": lambda **kw: three_independent_set(**kw),
}


def named_set(kind, **params):
    """Build one of the catalogue sets by name; returns (subset, claims)."""
    try:
        builder = NAMED_SETS[kind]
    except KeyError:
        raise ValueError(f"unknown construction {kind!r}") from None
    return builder(**params)
