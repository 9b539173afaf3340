"""Counting layer: binomials, Delannoy-type arrays, partitions, lattice layers.

Coefficient domains are named by strings:

    "N0"   nonnegative integers
    "Z"    all integers
    "01"   {0, 1}
    "pm1"  {-1, 0, 1}

Term-count sets are plain tuples:

    ("exact", h)    exactly h terms
    ("upto", s)     0 to s terms
    ("from1", t)    1 to t terms
    ("all",)        any number of terms (including zero)
    ("allpos",)     at least one term

A coefficient vector (lambda_1, ..., lambda_m) has norm |lambda_1| + ... +
|lambda_m|; the layer Lambda^m(H) collects the vectors with norm in H.
"""

from functools import lru_cache
from itertools import combinations, product
from math import comb

NONNEG = "N0"
SIGNED = "Z"
RESTRICTED = "01"
RESTRICTED_SIGNED = "pm1"

LAMBDA_DOMAINS = (NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED)


class InfiniteLayerError(ValueError):
    """The requested layer is infinite (unbounded coefficients, unbounded norm)."""


def binom(n, k):
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def delannoy_a(j, k):
    """Delannoy number a(j,k) = sum_i C(j,i) C(k,i) 2^i (OEIS A008288)."""
    return sum(binom(j, i) * binom(k, i) << i for i in range(min(j, k) + 1))


def delannoy_c(j, k):
    """Companion array c(j,k) = sum_i C(j-1,i-1) C(k,i) 2^i (OEIS A266213).

    The i = 0 term uses the convention C(j-1,-1) = 1 when j = 0 and 0 when
    j > 0, so c(0,k) = 1 and c(j,0) = 0 for j >= 1.
    """
    total = 1 if j == 0 else 0
    for i in range(1, k + 1):
        total += binom(j - 1, i - 1) * binom(k, i) << i
    return total


@lru_cache(maxsize=None)
def delannoy_a_recursive(j, k):
    """Triple recursion for a(j,k); independent cross-check of delannoy_a."""
    if j == 0 or k == 0:
        return 1
    return (delannoy_a_recursive(j - 1, k)
            + delannoy_a_recursive(j - 1, k - 1)
            + delannoy_a_recursive(j, k - 1))


@lru_cache(maxsize=None)
def delannoy_c_recursive(j, k):
    """Same recursion as a(j,k) with boundary c(j,0) = 0 for j >= 1."""
    if j == 0:
        return 1
    if k == 0:
        return 0
    return (delannoy_c_recursive(j - 1, k)
            + delannoy_c_recursive(j - 1, k - 1)
            + delannoy_c_recursive(j, k - 1))


def partition_count(alpha):
    """Number of partitions of alpha (OEIS A000041)."""
    if alpha < 0:
        raise ValueError("partition argument must be nonnegative")
    # table[i] = partitions of i using parts considered so far
    table = [1] + [0] * alpha
    for part in range(1, alpha + 1):
        for i in range(part, alpha + 1):
            table[i] += table[i - part]
    return table[alpha]


def enumerate_partitions(alpha):
    """All partitions of alpha as descending tuples (enumeration oracle)."""
    out = []
    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, maxpart), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()
    rec(alpha, alpha, [])
    return out


def _norms_of(terms, m):
    """The set of norms selected by a term-count tuple, clipped where needed."""
    kind = terms[0]
    if kind == "exact":
        return [terms[1]]
    if kind == "upto":
        return list(range(0, terms[1] + 1))
    if kind == "from1":
        return list(range(1, terms[1] + 1))
    raise ValueError(f"term-count {terms} has no finite norm list")


def layer_size(lam, m, terms):
    """|Lambda^m(H)| for the finite combinations; raises InfiniteLayerError else.

    For the two unbounded-coefficient domains the all-norms layers are
    infinite; for the restricted domains they equal 2^m and 3^m.
    """
    if lam not in LAMBDA_DOMAINS:
        raise ValueError(f"unknown coefficient domain {lam!r}")
    if m < 0:
        raise ValueError("dimension must be nonnegative")
    kind = terms[0]
    if kind in ("all", "allpos"):
        if lam == RESTRICTED:
            return (1 << m) - (1 if kind == "allpos" else 0)
        if lam == RESTRICTED_SIGNED:
            return 3 ** m - (1 if kind == "allpos" else 0)
        raise InfiniteLayerError(f"layer {lam}^{m}({terms}) is infinite")
    total = 0
    for h in _norms_of(terms, m):
        if lam == NONNEG:
            total += binom(m + h - 1, h) if h > 0 else 1
        elif lam == SIGNED:
            total += delannoy_c(h, m)
        elif lam == RESTRICTED:
            total += binom(m, h)
        else:
            total += binom(m, h) << h
    return total


def layer_halfspace_size(m, h):
    """Points of the h-layer of Z^m with a fixed coordinate positive.

    Equals a(m-1, h-1) for m, h >= 1.
    """
    if m < 1 or h < 1:
        raise ValueError("need m >= 1 and h >= 1")
    return delannoy_a(m - 1, h - 1)


def enumerate_layer(lam, m, terms):
    """All coefficient vectors in Lambda^m(H); enumeration oracle for tests."""
    if terms[0] in ("all", "allpos"):
        if lam not in (RESTRICTED, RESTRICTED_SIGNED):
            raise InfiniteLayerError(f"layer {lam}^{m}({terms}) is infinite")
        norms = range(0 if terms[0] == "all" else 1, m + 1)
    else:
        norms = _norms_of(terms, m)
    seen = []
    for h in norms:
        seen.extend(_layer_vectors(lam, m, h))
    return seen


def _layer_vectors(lam, m, h):
    if lam == NONNEG:
        return _compositions(m, h)
    if lam == RESTRICTED:
        out = []
        for pos in combinations(range(m), h):
            v = [0] * m
            for p in pos:
                v[p] = 1
            out.append(tuple(v))
        return out
    if lam == RESTRICTED_SIGNED:
        out = []
        for pos in combinations(range(m), h):
            for signs in product((1, -1), repeat=h):
                v = [0] * m
                for p, s in zip(pos, signs):
                    v[p] = s
                out.append(tuple(v))
        return out
    # SIGNED: nonneg compositions with signs on the nonzero entries
    out = []
    for base in _compositions(m, h):
        nonzero = [i for i, x in enumerate(base) if x]
        for signs in product((1, -1), repeat=len(nonzero)):
            v = list(base)
            for i, s in zip(nonzero, signs):
                v[i] *= s
            out.append(tuple(v))
    return out


def _compositions(m, h):
    """All m-tuples of nonnegative integers summing to h."""
    if m == 0:
        return [()] if h == 0 else []
    out = []
    def rec(pos, rest, acc):
        if pos == m - 1:
            out.append(tuple(acc + [rest]))
            return
        for x in range(rest + 1):
            rec(pos + 1, rest - x, acc + [x])
    rec(0, h, [])
    return out
