"""Arithmetic side functions over divisor lattices.

These arithmetic functions drive everything else in the package: v_g(n,h)
and its signed and hatted relatives pin down critical numbers, while the
Hopf-Stiefel style minima u(n,m,h) and uhat(n,m,h) give the minimum size of
h-fold (restricted) sumsets of m-subsets of Z_n.

Each function has a definitional evaluator (max/min over all divisors); the
main v entry point additionally has a theorem-accelerated path and can be
asked to check the two against each other.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def divisors(n):
    """Sorted tuple of positive divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def prime_divisors(n):
    """Sorted tuple of distinct prime divisors of n."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


# -- the v function and relatives ------------------------------------------

def v_definition(n, h, g):
    """v_g(n,h) straight from its definition: a maximum over divisors of n."""
    if not 1 <= g <= h:
        raise ValueError("need 1 <= g <= h")
    best = None
    best_d = None
    for d in divisors(n):
        val = ((d - 1 - gcd(d, g)) // h + 1) * (n // d)
        if best is None or val > best:
            best, best_d = val, d
    return best, best_d


def v_fast(n, h, g):
    """Theorem-accelerated v_g(n,h).

    Only divisors d = i (mod h) with gcd(d,g) < i can improve on the floor
    baseline, and among those only the smallest per residue class matters.
    """
    if not 1 <= g <= h:
        raise ValueError("need 1 <= g <= h")
    best = None
    for d in divisors(n):
        i = d % h
        if gcd(d, g) < i:
            cand = Fraction(n, h) * (1 + Fraction(h - i, d))
            if best is None or cand > best:
                best = cand
    if best is not None:
        assert best.denominator == 1
        return int(best)
    return n // h if g != h else (n - 1) // h


def v(n, h, g=1, check=False):
    """v_g(n,h); with check=True asserts the fast path against the definition."""
    value = v_fast(n, h, g)
    if check:
        defn, _ = v_definition(n, h, g)
        if defn != value:
            raise AssertionError(
                f"v_{g}({n},{h}): fast path {value} != definition {defn}")
    return value


def v_witness_divisor(n, h, g=1):
    """A divisor of n attaining the definitional maximum for v_g(n,h)."""
    return v_definition(n, h, g)[1]


def v_pm(n, h):
    """Signed analogue v_pm(n,h): max over d | n of (2*floor((d-2)/2h)+1)*n/d."""
    return max((2 * ((d - 2) // (2 * h)) + 1) * (n // d) for d in divisors(n))


def v_pm_witness_divisor(n, h):
    return max(divisors(n),
               key=lambda d: ((2 * ((d - 2) // (2 * h)) + 1) * (n // d), -d))


def v_hat(n, s):
    """max over divisors d >= s+2 of (floor((d-2)/s)+1)*n/d; 0 if none."""
    cands = [((d - 2) // s + 1) * (n // d) for d in divisors(n) if d >= s + 2]
    return max(cands, default=0)


def v_hat_pm(n, s):
    """Signed analogue of v_hat, over divisors d >= 2s+2; 0 if none."""
    cands = [(2 * ((d - 2) // (2 * s)) + 1) * (n // d)
             for d in divisors(n) if d >= 2 * s + 2]
    return max(cands, default=0)


# -- the Hopf-Stiefel function u and the restricted variant ----------------

def f_d(m, h, d):
    """f_d(m,h) = (h*ceil(m/d) - h + 1) * d."""
    return (h * (-(-m // d)) - h + 1) * d


def u(n, m, h):
    """u(n,m,h) = min over d | n of f_d(m,h)."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    if h < 1:
        raise ValueError("need h >= 1")
    return min(f_d(m, h, d) for d in divisors(n))


def u_witness_divisor(n, m, h):
    return min(divisors(n), key=lambda d: (f_d(m, h, d), d))


def positive_remainder(x, d):
    """The representative of x mod d lying in [1, d]."""
    k = x % d
    return d if k == 0 else k


def delta_d(d, m, h):
    """The correction term entering f_hat_d, from the positive remainders
    k, r of m, h mod d."""
    k = positive_remainder(m, d)
    r = positive_remainder(h, d)
    if r < k:
        return (k - r) * r - (d - 1)
    if k < r < d:
        return (d - r) * (r - k) - (d - 1)
    if k == r == d:
        return d - 1
    return 0


def f_hat_d(n, m, h, d):
    """Restricted analogue of f_d; piecewise by whether h <= min{k, d-1}."""
    k = positive_remainder(m, d)
    if h <= min(k, d - 1):
        return min(n, f_d(m, h, d), h * m - h * h + 1)
    return min(n, h * m - h * h + 1 - delta_d(d, m, h))


def u_hat(n, m, h):
    """uhat(n,m,h) = min over d | n of f_hat_d(n,m,h); needs h < m <= n."""
    if not 1 <= h < m <= n:
        raise ValueError("need 1 <= h < m <= n")
    return min(f_hat_d(n, m, h, d) for d in divisors(n))


def u_hat_witness_divisor(n, m, h):
    return min(divisors(n), key=lambda d: (f_hat_d(n, m, h, d), d))


def u_hat_h2(n, m):
    """Simplified uhat(n,m,2): min{u(n,m,2), 2m-4} when n and m are both
    even, else min{u(n,m,2), 2m-3}."""
    drop = 4 if n % 2 == 0 and m % 2 == 0 else 3
    return min(u(n, m, 2), 2 * m - drop)


def u_hat_h3(n, m):
    """Simplified uhat(n,m,3), split on gcd(n, m-1)."""
    g = gcd(n, m - 1)
    base = u(n, m, 3)
    if g >= 8:
        return min(base, 3 * m - 3 - g)
    if g == 7 or (g <= 5 and n % 3 == 0 and m % 3 == 0):
        return min(base, 3 * m - 10)
    if g == 6:
        return min(base, 3 * m - 9)
    return min(base, 3 * m - 8)


def _two_adic(k):
    v = 0
    while k % 2 == 0:
        k //= 2
        v += 1
    return v


def u_pm_limited(n, m, s):
    """Divisor bound for the minimum [0,s]-fold signed sumset size in Z_n.

    Divisors split on whether d*ceil(m/d) carries more factors of two than
    n; the second kind enter with m padded to m+d.
    """
    vn = _two_adic(n)
    best = None
    for d in divisors(n):
        if vn >= _two_adic(d * (-(-m // d))):
            cand = f_d(m, s, d)
        else:
            cand = f_d(m + d, s, d)
        if best is None or cand < best:
            best = cand
    return best


# -- critical numbers of n ---------------------------------------------------

def h_critical(n, h):
    """Least m with u(n,m,h) = n; equals v_1(n,h) + 1."""
    return v(n, h, 1) + 1


def h_critical_bruteforce(n, h):
    """Scan m upward until u(n,m,h) = n (oracle for h_critical)."""
    for m in range(1, n + 1):
        if u(n, m, h) == n:
            return m
    raise AssertionError(f"u({n},m,{h}) never reached {n}")


def restricted_2_critical(n):
    """Least m with uhat(n,m,2) = n: floor(n/2) + 2."""
    return n // 2 + 2


def restricted_2_critical_bruteforce(n):
    """Scan m upward until uhat(n,m,2) = n; None if no m <= n works."""
    for m in range(3, n + 1):
        if u_hat(n, m, 2) == n:
            return m
    return None
