"""Closed-form values and conjecture sweeps.

`known_value` matches a quantity query against a registry of published
theorems; every entry verifies its own hypotheses (primality, parity,
divisibility, group shape) before answering, and a query may match several
entries, in which case their answers must agree.  `conjecture_check` runs a
registered conjecture over a parameter grid, comparing its prediction
against brute-force search point by point.

Citation ids are short slugs naming the theorem the way the literature
does (after its authors or its content), e.g. "cauchy-davenport" or
"dias-da-silva-hamidoune".
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .counting import NONNEG, RESTRICTED, RESTRICTED_SIGNED, SIGNED
from .groups import group, ord_set
from .search import BudgetExceededError, QuantityQuery, max_zero_sum_free
from .sides import (divisors, prime_divisors, u, u_pm_limited, v, v_hat,
                    v_hat_pm, v_pm)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime_power(n):
    if n < 2:
        return None
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return n  # n itself is prime


def _ord2(G):
    return len(ord_set(G, 2)) if G.n % 2 == 0 else 0


def _is_elementary_2(G):
    return G.n == 1 or G.kappa == 2


def _smallest_prime_divisor(n):
    return next(d for d in divisors(n) if d > 1) if n > 1 else None


@dataclass
class KnownResult:
    citation: str
    value: int | None          # None encodes "does not exist"
    applicability: str


NOVALUE = object()  # sentinel: entry does not apply


# Each entry: (citation, function(query) -> value | None | NOVALUE).
# Returning None asserts the quantity does not exist; NOVALUE means the
# entry's hypotheses are not met.

def _entry_rho_plagne(q):
    if q.family == "rho" and q.lam == NONNEG and q.terms[0] == "exact" \
            and q.terms[1] >= 1 and q.m and 1 <= q.m <= q.group.n:
        return u(q.group.n, q.m, q.terms[1])
    return NOVALUE


def _entry_rho_upto(q):
    # [0,s]-fold minimum coincides with the s-fold one (shift 0 into A)
    if q.family == "rho" and q.lam == NONNEG and q.terms[0] == "upto" \
            and q.terms[1] >= 1 and q.m and 1 <= q.m <= q.group.n:
        return u(q.group.n, q.m, q.terms[1])
    return NOVALUE


def _entry_cauchy_davenport(q):
    if q.family == "rho" and q.lam == NONNEG and q.terms[0] == "exact" \
            and q.m:
        h, n, m = q.terms[1], q.group.n, q.m
        p = _smallest_prime_divisor(n)
        if h >= 1 and p is not None and m <= p:
            return min(p, h * m - h + 1)
    return NOVALUE


def _entry_dias_da_silva_hamidoune(q):
    if q.family == "rho" and q.lam == RESTRICTED and q.terms[0] == "exact" \
            and q.m:
        n, h, m = q.group.n, q.terms[1], q.m
        if is_prime(n) and q.group.r == 1 and 1 <= h <= m <= n:
            return min(n, h * m - h * h + 1)
    return NOVALUE


def _entry_bajnok_matzke_cyclic(q):
    if q.family == "rho" and q.lam == SIGNED and q.terms[0] == "exact" \
            and q.group.r <= 1 and q.terms[1] >= 1 and q.m \
            and 1 <= q.m <= q.group.n:
        return u(q.group.n, q.m, q.terms[1])
    return NOVALUE


def _entry_matzke_limited_prime(q):
    if q.family == "rho" and q.lam == SIGNED and q.terms[0] == "upto" \
            and q.m:
        n, s, m = q.group.n, q.terms[1], q.m
        if is_prime(n) and n % 2 == 1 and q.group.r == 1 and s >= 1:
            return min(n, 2 * s * (m // 2) + 1)
    return NOVALUE


def _entry_rho_hat_m4(q):
    if q.family == "rho" and q.lam == RESTRICTED and q.m == 4 \
            and q.terms == ("exact", 2):
        t = _ord2(q.group)
        return 3 if t >= 2 else (4 if t == 1 else 5)
    return NOVALUE


def _entry_carrick(q):
    if q.family == "rho" and q.lam == RESTRICTED and q.m == 5 \
            and q.terms == ("exact", 2):
        n = q.group.n
        if n % 5 == 0:
            return 5
        if n % 6 == 0:
            return 6
        return 7
    return NOVALUE


def _entry_chi_h(q):
    if q.family == "chi" and q.lam == NONNEG and q.terms[0] == "exact" \
            and q.terms[1] >= 1 and not q.exclude_zero \
            and not q.generating_only:
        return v(q.group.n, q.terms[1], 1) + 1
    return NOVALUE


def _entry_chi_upto(q):
    if q.family == "chi" and q.lam == NONNEG and q.terms[0] == "upto" \
            and q.terms[1] >= 1 and not q.exclude_zero \
            and not q.generating_only:
        return v(q.group.n, q.terms[1], 1) + 1
    return NOVALUE


def _entry_chi_pm_cyclic(q):
    if q.family == "chi" and q.lam == SIGNED and q.terms[0] == "exact" \
            and q.terms[1] >= 1 and q.group.r <= 1 and not q.exclude_zero \
            and not q.generating_only:
        return v(q.group.n, q.terms[1], 1) + 1
    return NOVALUE


def _entry_chi_hat_2(q):
    if q.family == "chi" and q.lam == RESTRICTED and q.terms == ("exact", 2) \
            and not q.exclude_zero:
        if q.generating_only:
            return NOVALUE
        G = q.group
        if G.n >= 3:
            if _is_elementary_2(G):
                return None
            return (G.n + _ord2(G) + 3) // 2
    return NOVALUE


def _entry_chi_hat_easy(q):
    if q.family == "chi" and q.lam == RESTRICTED and q.terms[0] == "exact" \
            and not q.exclude_zero:
        if q.generating_only:
            return NOVALUE
        n, h = q.group.n, q.terms[1]
        if h == 0:
            return 1 if n == 1 else None
        if h == 1 or h == n - 1:
            return n
        if h == n:
            return 1 if n == 1 else None
        if h > n:
            return None
        if h == n - 2 and _is_elementary_2(q.group):
            return None
    return NOVALUE


def _entry_prime_rest_crit(q):
    if q.family == "chi" and q.lam == RESTRICTED and q.terms[0] == "exact" \
            and not q.exclude_zero:
        if q.generating_only:
            return NOVALUE
        n, h = q.group.n, q.terms[1]
        if is_prime(n) and q.group.r == 1 and 1 <= h <= n - 1:
            return (n - 2) // h + h + 1
    return NOVALUE


def _entry_roth_lempel_even(q):
    if q.family == "chi" and q.lam == RESTRICTED and q.terms[0] == "exact" \
            and not q.exclude_zero:
        if q.generating_only:
            return NOVALUE
        G = q.group
        n, h = G.n, q.terms[1]
        if n % 2 or n < 12 or not 3 <= h <= n - 2:
            return NOVALUE
        special = (_is_elementary_2(G)
                   or (G.factors and G.factors[-1] == 4
                       and all(f == 2 for f in G.factors[:-1])))
        if special and h in (3, n // 2 - 2):
            return n // 2 + 2
        if 3 <= h <= n // 2 - 2:
            return n // 2 + 1
        if n // 2 - 1 <= h <= (n + _ord2(G) - 3) // 2:
            return h + 3
        if (n + _ord2(G) - 1) // 2 <= h <= n - 2:
            return h + 2
    return NOVALUE


def _entry_chi_hat_big_h_odd(q):
    if q.family == "chi" and q.lam == RESTRICTED and q.terms[0] == "exact" \
            and not q.exclude_zero:
        if q.generating_only:
            return NOVALUE
        n, h = q.group.n, q.terms[1]
        if n % 2 == 1 and (n - 1) // 2 <= h <= n - 2:
            return h + 2
    return NOVALUE


def _entry_klopsch_lev_cyclic(q):
    if q.family == "chi" and q.lam == NONNEG and q.terms[0] == "upto" \
            and q.generating_only and q.group.r <= 1:
        return v_hat(q.group.n, q.terms[1]) + 1
    return NOVALUE


def _entry_klopsch_lev_pm(q):
    if q.family == "chi" and q.lam == SIGNED and q.terms[0] == "upto" \
            and q.generating_only and q.group.r <= 1 \
            and q.group.n >= 2:
        return v_hat_pm(q.group.n, q.terms[1]) + 1
    return NOVALUE


def _entry_lev_2_groups(q):
    if q.family == "chi" and q.lam == NONNEG and q.terms[0] == "upto" \
            and q.generating_only and _is_elementary_2(q.group):
        r, s = q.group.r, q.terms[1]
        if s >= 2:
            if r <= s:
                return 1
            return (s + 2) * (1 << (r - s - 1)) + 1
    return NOVALUE


def _entry_critical_number(q):
    # the classical critical number chi^(G*, N)
    if q.family == "chi" and q.lam == RESTRICTED \
            and q.terms[0] == "allpos" and q.exclude_zero \
            and not q.generating_only:
        G = q.group
        n = G.n
        if n < 3:
            return NOVALUE
        p = _smallest_prime_divisor(n)
        k = isqrt(4 * (p - 2)) if p > 2 else 0
        if n == p:
            return isqrt(4 * (n - 2))
        if G.factors in ((4,), (6,), (8,), (2, 4), (3, 3)) or \
                (G.r == 1 and is_prime(n // p) and 3 <= p <= n // p <= p + k + 1):
            return n // p + p - 1
        if G.factors == (2, 2):
            return n // p + p - 1  # matches the even-order classification
        return n // p + p - 2
    return NOVALUE


def _entry_tau_small_h(q):
    if q.family == "tau" and q.lam in (NONNEG, SIGNED):
        G = q.group
        if q.terms in (("exact", 1), ("from1", 1)):
            return G.n - 1
        if q.terms in (("exact", 2), ("from1", 2)):
            return (G.n - _ord2(G) - 1) // 2
    return NOVALUE


def _entry_zforp(q):
    if q.family == "tau" and q.lam == NONNEG and q.terms[0] == "exact":
        n, h = q.group.n, q.terms[1]
        if is_prime(n) and q.group.r == 1 and h >= 1:
            return 0 if h % n == 0 else (n - 2) // h + 1
    return NOVALUE


def _entry_tau_elementary(q):
    if q.family == "tau" and q.lam == NONNEG and q.terms[0] == "exact":
        G = q.group
        h = q.terms[1]
        if h >= 1 and G.n > 1 and all(f == G.factors[0] for f in G.factors) \
                and is_prime(G.factors[0]):
            p, r = G.factors[0], G.r
            if h % p == 0:
                return 0
            if h == 1 or p % h == 1:
                return (p ** r - 1) // h
            return p ** (r - 1) * (1 + p // h)
    return NOVALUE


def _entry_tau_coprime(q):
    if q.family == "tau" and q.lam == NONNEG and q.terms[0] == "exact":
        n, h = q.group.n, q.terms[1]
        if h >= 1 and gcd(h, n) == 1:
            return v(n, h, 1)
    return NOVALUE


def _entry_alon_tau_limited(q):
    if q.family == "tau" and q.lam == NONNEG and q.terms[0] == "from1" \
            and q.group.r <= 1:
        return (q.group.n - 1) // q.terms[1]
    return NOVALUE


def _entry_3free(q):
    if q.family == "tau" and q.lam == SIGNED and q.terms == ("from1", 3):
        G = q.group
        n, kappa = G.n, G.kappa
        if kappa % 4 == 0:
            return n // 4
        if kappa % 2 == 0:
            return (n - _ord2(G) - 1) // 4
        p = next((d for d in prime_divisors(kappa) if d % 6 == 5), None)
        if p is not None:
            return (p + 1) * n // (6 * p)
        if G.r <= 1:
            return n // 6
    return NOVALUE


def _entry_matys_even(q):
    if q.family == "tau" and q.lam == SIGNED and q.terms[0] == "exact" \
            and q.group.r <= 1:
        n, h = q.group.n, q.terms[1]
        if n % 2 == 0 and h % 2 == 1 and h >= 3:
            return n // 2
    return NOVALUE


def _entry_tau_hat_small_h(q):
    if q.family == "tau" and q.lam in (RESTRICTED, RESTRICTED_SIGNED):
        G = q.group
        if q.terms == ("exact", 1):
            return G.n - 1
        if q.terms == ("exact", 2):
            return (G.n + _ord2(G) + 1) // 2
        if q.terms[0] == "exact" and q.terms[1] >= G.n + 1:
            return G.n
    return NOVALUE


def _entry_tau_hat_pm_limited12(q):
    if q.family == "tau" and q.lam == RESTRICTED_SIGNED:
        if q.terms == ("from1", 1):
            return q.group.n - 1
        if q.terms == ("from1", 2):
            return (q.group.n + _ord2(q.group) - 1) // 2
    return NOVALUE


def _entry_Zforp_hat(q):
    if q.family == "tau" and q.lam == RESTRICTED and q.terms[0] == "exact":
        n, h = q.group.n, q.terms[1]
        if is_prime(n) and q.group.r == 1 and 1 <= h <= n - 1:
            return (n - 2) // h + h
    return NOVALUE


def _entry_tau_hat_even_odd(q):
    if q.family == "tau" and q.lam == RESTRICTED and q.terms[0] == "exact" \
            and q.group.r <= 1:
        n, h = q.group.n, q.terms[1]
        if n >= 12 and n % 2 == 0 and h % 2 == 1 and 1 <= h <= n - 1:
            if h == 1 or h == n - 1:
                return n - 1
            if 3 <= h <= n // 2 - 2:
                return n // 2
            if h == n // 2 - 1:
                return n // 2 + 1
            return h + 1
    return NOVALUE


def _entry_harborth(q):
    if q.family == "tau" and q.lam == RESTRICTED \
            and q.terms == ("exact", q.group.n):
        G = q.group
        if G.kappa % 2 == 0 and (G.n // G.kappa) % 2 == 1:
            return G.n
        return G.n - 1
    return NOVALUE


def _entry_harborth_signed(q):
    if q.family == "tau" and q.lam == RESTRICTED_SIGNED \
            and q.terms == ("exact", q.group.n):
        G = q.group
        if G.kappa % 4 == 2 and (G.n // G.kappa) % 2 == 1:
            return G.n
        return G.n - 1
    return NOVALUE


def _entry_balandraud(q):
    if q.family == "tau" and q.lam == RESTRICTED and q.terms[0] == "allpos" \
            and is_prime(q.group.n) and q.group.r == 1:
        # floor(sqrt(2p) - 1/2): the largest k with (2k+1)^2 <= 8p
        return (isqrt(8 * q.group.n) - 1) // 2
    return NOVALUE


def _entry_olson_small(q):
    if q.family == "tau" and q.lam == RESTRICTED and q.terms[0] == "allpos":
        G = q.group
        if G.r >= 3 and all(f == 2 for f in G.factors):
            return G.r
        if G.r >= 3 and all(f == 3 for f in G.factors):
            return 2 * G.r
    return NOVALUE


def _entry_dissociated_cyclic(q):
    if q.family == "tau" and q.lam == RESTRICTED_SIGNED \
            and q.terms[0] == "allpos" and q.group.r <= 1:
        return q.group.n.bit_length() - 1
    return NOVALUE


def _entry_weak_t_indep_small_n(q):
    if q.family == "tau" and q.lam == RESTRICTED_SIGNED \
            and q.terms[0] == "from1" and q.group.r <= 1:
        n, t = q.group.n, q.terms[1]
        if (1 << (t - 1)) <= n < (1 << t):
            return t - 1
    return NOVALUE


def _entry_diananda_yap(q):
    if q.family == "mu" and q.lam == NONNEG and (q.k, q.l) == (2, 1) \
            and q.group.r <= 1:
        return v(q.group.n, 3, 1)
    return NOVALUE


def _entry_green_ruzsa(q):
    if q.family == "mu" and q.lam == NONNEG and (q.k, q.l) == (2, 1):
        G = q.group
        return v(G.kappa, 3, 1) * (G.n // G.kappa)
    return NOVALUE


def _entry_hamidoune_plagne(q):
    if q.family == "mu" and q.lam == NONNEG and q.k is not None \
            and q.group.r <= 1 and gcd(q.k - q.l, q.group.n) == 1:
        return v(q.group.n, q.k + q.l, 1)
    return NOVALUE


def _entry_muforp(q):
    if q.family == "mu" and q.lam == NONNEG and q.k is not None:
        n = q.group.n
        if is_prime(n) and q.group.r == 1:
            if (q.k - q.l) % n == 0:
                return 0
            return (n - 2) // (q.k + q.l) + 1
    return NOVALUE


def _entry_bajnok_mu31(q):
    if q.family == "mu" and q.lam == NONNEG and (q.k, q.l) == (3, 1) \
            and q.group.r <= 1:
        return v(q.group.n, 4, 2)
    return NOVALUE


def _entry_butterworth_mu41(q):
    if q.family == "mu" and q.lam == NONNEG and (q.k, q.l) == (4, 1) \
            and q.group.r <= 1:
        return v(q.group.n, 5, 3)
    return NOVALUE


def _entry_mu_2group(q):
    if q.family == "mu" and q.lam == NONNEG and q.k is not None \
            and _is_elementary_2(q.group) and q.group.n >= 2:
        if (q.k - q.l) % 2 == 0:
            return 0
        return q.group.n // 2
    return NOVALUE


def _entry_zannier(q):
    if q.family == "mu" and q.lam == RESTRICTED and (q.k, q.l) == (2, 1) \
            and q.group.r <= 1:
        n = q.group.n
        p = next((d for d in prime_divisors(n) if d % 3 == 2), None)
        if p is not None:
            return (p + 1) * n // (3 * p)
        return n // 3 + 1
    return NOVALUE


def _entry_weak_kl_prime(q):
    if q.family == "mu" and q.lam == RESTRICTED and q.k is not None:
        n = q.group.n
        if is_prime(n) and q.group.r == 1 and 0 < q.l < q.k <= n:
            return (n + q.k ** 2 + q.l ** 2 - 2) // (q.k + q.l)
    return NOVALUE


def _entry_phi_pm_1(q):
    if q.family == "phi" and q.lam == SIGNED and q.terms == ("exact", 1):
        return (q.group.n + _ord2(q.group) + 1) // 2
    return NOVALUE


def _entry_phi_pm_upto1(q):
    if q.family == "phi" and q.lam == SIGNED and q.terms == ("upto", 1):
        return (q.group.n + _ord2(q.group) - 1) // 2
    return NOVALUE


def _entry_phi_upto1(q):
    if q.family == "phi" and q.lam in (NONNEG, RESTRICTED) \
            and q.terms == ("upto", 1) and q.group.n >= 2:
        return q.group.n - 1
    return NOVALUE


def _entry_phi_pm_pair(q):
    if q.family == "phi" and q.lam == SIGNED and q.terms[0] == "upto" \
            and q.group.r <= 1:
        n, s = q.group.n, q.terms[1]
        if s >= 1 and n <= 2 * s + 1:
            return 1
        if s >= 1 and 2 * s + 2 <= n <= 2 * s * s + 2 * s + 1:
            return 2
    return NOVALUE


def _entry_sigma_1(q):
    if q.family == "sigma" and q.lam == NONNEG and q.terms == ("exact", 1):
        return q.group.n
    return NOVALUE


def _entry_sigma_big_h(q):
    if q.family == "sigma" and q.lam == NONNEG and q.terms[0] == "exact" \
            and q.terms[1] >= q.group.kappa and q.group.n >= 1:
        return 1
    return NOVALUE


def _entry_sigma_pm_1(q):
    if q.family == "sigma" and q.lam == SIGNED and q.terms == ("exact", 1):
        return (q.group.n - 1 - _ord2(q.group)) // 2
    return NOVALUE


def _entry_singer_bose_ruzsa(q):
    if q.family == "sigma" and q.lam == NONNEG and q.terms == ("exact", 2) \
            and q.group.r <= 1:
        n = q.group.n
        for qq in range(2, isqrt(n) + 2):
            if is_prime_power(qq):
                if n == qq * qq + qq + 1:
                    return qq + 1
                if n == qq * qq - 1:
                    return qq
        for p in range(2, isqrt(n) + 2):
            if is_prime(p) and n == p * p - p:
                return p - 1
    return NOVALUE


def _entry_babai_sos(q):
    if q.family == "sigma" and q.lam == NONNEG and q.terms == ("exact", 2):
        G = q.group
        if G.r >= 2 and G.r % 2 == 0 and \
                all(f == G.factors[0] for f in G.factors) and \
                is_prime(G.factors[0]) and G.factors[0] % 2 == 1:
            return G.factors[0] ** (G.r // 2)
    return NOVALUE


def _entry_nu_trivial(q):
    if q.family == "nu" and q.lam == NONNEG and q.terms[0] == "exact":
        h, m, G = q.terms[1], q.m, q.group
        if h == 0:
            return 1
        if h == 1:
            return m
        if m == 1:
            return 1
        if m == 2:
            return min(G.kappa, h + 1)
    return NOVALUE


def _entry_nu_pm_trivial(q):
    if q.family == "nu" and q.lam == SIGNED:
        G, m = q.group, q.m
        if q.terms == ("exact", 0):
            return 1
        if q.terms == ("exact", 1):
            return min(G.n, 2 * m, m + (G.n - _ord2(G) - 1) // 2)
        if q.terms[0] == "exact" and m == 1:
            return 1 if (2 * q.terms[1]) % G.kappa == 0 else 2
        if q.terms == ("upto", 1):
            return min(G.n, 2 * m + 1, m + (G.n - _ord2(G) + 1) // 2)
        if q.terms[0] == "upto" and m == 1:
            return min(G.kappa, 2 * q.terms[1] + 1)
    return NOVALUE


def _entry_nu_hat_trivial(q):
    if q.family == "nu" and q.lam == RESTRICTED and q.terms[0] == "exact":
        h, m, n = q.terms[1], q.m, q.group.n
        if h > m:
            return 0
        if h in (0, m):
            return 1
        if h in (1, m - 1):
            return min(n, m)
    return NOVALUE


def _entry_nu_hat_cyclic_all(q):
    if q.family == "nu" and q.lam == RESTRICTED and q.terms[0] == "all" \
            and q.group.r <= 1:
        return min(q.group.n, 1 << q.m)
    return NOVALUE


def prime_divisors(n):
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
    return out


REGISTRY = [
    ("plagne-rho-u", _entry_rho_plagne),
    ("rho-upto-shift", _entry_rho_upto),
    ("cauchy-davenport", _entry_cauchy_davenport),
    ("dias-da-silva-hamidoune", _entry_dias_da_silva_hamidoune),
    ("bajnok-matzke-cyclic", _entry_bajnok_matzke_cyclic),
    ("matzke-limited-prime", _entry_matzke_limited_prime),
    ("rho-hat-m4", _entry_rho_hat_m4),
    ("carrick-rho-hat-52", _entry_carrick),
    ("h-critical", _entry_chi_h),
    ("h-critical-upto", _entry_chi_upto),
    ("chi-pm-cyclic", _entry_chi_pm_cyclic),
    ("roth-lempel-chi-hat-2", _entry_chi_hat_2),
    ("restricted-critical-easy", _entry_chi_hat_easy),
    ("erdos-heilbronn-critical", _entry_prime_rest_crit),
    ("roth-lempel-even", _entry_roth_lempel_even),
    ("chi-hat-big-h-odd", _entry_chi_hat_big_h_odd),
    ("klopsch-lev-cyclic", _entry_klopsch_lev_cyclic),
    ("klopsch-lev-signed", _entry_klopsch_lev_pm),
    ("lev-2-groups", _entry_lev_2_groups),
    ("critical-number", _entry_critical_number),
    ("tau-small-h", _entry_tau_small_h),
    ("tau-prime", _entry_zforp),
    ("tau-elementary", _entry_tau_elementary),
    ("tau-coprime", _entry_tau_coprime),
    ("alon-tau-limited", _entry_alon_tau_limited),
    ("bajnok-ruzsa-3-independent", _entry_3free),
    ("matys-even", _entry_matys_even),
    ("tau-hat-small-h", _entry_tau_hat_small_h),
    ("tau-hat-pm-limited-12", _entry_tau_hat_pm_limited12),
    ("tau-hat-prime", _entry_Zforp_hat),
    ("tau-hat-even-odd", _entry_tau_hat_even_odd),
    ("harborth-cyclic", _entry_harborth),
    ("harborth-signed", _entry_harborth_signed),
    ("balandraud", _entry_balandraud),
    ("subocz-olson-small", _entry_olson_small),
    ("dissociated-cyclic", _entry_dissociated_cyclic),
    ("weak-t-independent-small-n", _entry_weak_t_indep_small_n),
    ("diananda-yap", _entry_diananda_yap),
    ("green-ruzsa", _entry_green_ruzsa),
    ("hamidoune-plagne", _entry_hamidoune_plagne),
    ("mu-prime", _entry_muforp),
    ("bajnok-mu-31", _entry_bajnok_mu31),
    ("butterworth-mu-41", _entry_butterworth_mu41),
    ("mu-elementary-2", _entry_mu_2group),
    ("zannier-weak-sum-free", _entry_zannier),
    ("weak-kl-prime", _entry_weak_kl_prime),
    ("phi-pm-exact-1", _entry_phi_pm_1),
    ("phi-pm-upto-1", _entry_phi_pm_upto1),
    ("phi-upto-1", _entry_phi_upto1),
    ("bajnok-spanning-pair", _entry_phi_pm_pair),
    ("sigma-exact-1", _entry_sigma_1),
    ("sigma-big-h", _entry_sigma_big_h),
    ("sigma-pm-1", _entry_sigma_pm_1),
    ("singer-bose-ruzsa", _entry_singer_bose_ruzsa),
    ("babai-sos", _entry_babai_sos),
    ("nu-trivial", _entry_nu_trivial),
    ("nu-pm-trivial", _entry_nu_pm_trivial),
    ("nu-hat-trivial", _entry_nu_hat_trivial),
    ("nu-hat-cyclic-all", _entry_nu_hat_cyclic_all),
]


class InconsistentRegistryError(AssertionError):
    """Two matching theorems disagree on a value."""


def known_value(query):
    """All registry matches for a query; their values must agree.

    Returns a list of KnownResult (empty when no theorem applies).
    """
    matches = []
    for citation, entry in REGISTRY:
        got = entry(query)
        if got is NOVALUE:
            continue
        matches.append(KnownResult(citation, got, _describe(query)))
    values = {m.value for m in matches}
    if len(values) > 1:
        raise InconsistentRegistryError(
            f"registry disagrees on {query}: "
            + ", ".join(f"{m.citation}={m.value}" for m in matches))
    return matches


def known_value_single(query):
    """The agreed value, or NOVALUE when no theorem applies."""
    matches = known_value(query)
    return matches[0].value if matches else NOVALUE


def _describe(q):
    bits = [q.family, str(q.group), q.lam, str(q.terms)]
    if q.m is not None:
        bits.append(f"m={q.m}")
    if q.k is not None:
        bits.append(f"k={q.k},l={q.l}")
    if q.exclude_zero:
        bits.append("nonzero")
    return " ".join(bits)


# -- conjecture sweeps --------------------------------------------------------

@dataclass
class ConjecturePoint:
    params: dict
    predicted: object
    computed: object
    status: str                 # confirmed / refuted / skipped
    witness: list | None = None


@dataclass
class ConjectureReport:
    conjecture_id: str
    points: list

    @property
    def refuted(self):
        return [p for p in self.points if p.status == "refuted"]

    @property
    def all_confirmed(self):
        return all(p.status == "confirmed" for p in self.points)


def _compare(conj_id, params, predicted, query, budget, seed=None):
    from . import search as _search
    try:
        res = _search.evaluate(query, budget=budget, seed=seed)
    except _search.BudgetExceededError:
        return ConjecturePoint(params, predicted, None, "skipped")
    status = "confirmed" if res.value == predicted else "refuted"
    witness = res.witness_indices() if status == "refuted" else None
    return ConjecturePoint(params, predicted, res.value, status, witness)


def _grid_range(grid, key, default):
    value = grid.get(key, default)
    if isinstance(value, int):
        return range(value, value + 1)
    return value


def _conj_zero_h_sum_free(grid, budget):
    # tau(Z_n, h) = v_h(n, h)
    points = []
    for n in _grid_range(grid, "n", range(2, 25)):
        for h in _grid_range(grid, "h", range(3, 4)):
            q = QuantityQuery("tau", group(n), NONNEG, ("exact", h))
            points.append(_compare("zero-h-sum-free", {"n": n, "h": h},
                                   v(n, h, h), q, budget))
    return points


def _conj_3_sum_free_signed(grid, budget):
    # tau_pm(Z_n, 3) = v_3(n, 3)
    points = []
    for n in _grid_range(grid, "n", range(2, 25)):
        q = QuantityQuery("tau", group(n), SIGNED, ("exact", 3))
        points.append(_compare("signed-3-sum-free", {"n": n},
                               v(n, 3, 3), q, budget))
    return points


def _rho_hat_h2_prediction(n, m):
    rho = u(n, m, 2)
    if (n % 2 == 0 and m % 2 == 0) or \
            ((2 * m - 2) > 0 and n % (2 * m - 2) == 0
             and (m - 1) & (m - 2) != 0):
        return min(rho, 2 * m - 4)
    return min(rho, 2 * m - 3)


def _conj_rho_hat_h2(grid, budget):
    points = []
    for n in _grid_range(grid, "n", range(3, 21)):
        for m in _grid_range(grid, "m", range(3, 100)):
            if m > n:
                continue
            q = QuantityQuery("rho", group(n), RESTRICTED, ("exact", 2), m=m)
            points.append(_compare("rho-hat-h2", {"n": n, "m": m},
                                   _rho_hat_h2_prediction(n, m), q, budget))
    return points


def _rho_hat_h3_prediction(n, m):
    base = u(n, m, 3)
    d0 = gcd(n, m - 1)
    if d0 >= 8:
        return min(base, 3 * m - 3 - d0)
    if d0 == 7 or (d0 <= 5 and n % 3 == 0 and m % 3 == 0) or \
            (d0 <= 5 and (3 * m - 9) > 0 and n % (3 * m - 9) == 0
             and (m - 3) % 5 == 0):
        return min(base, 3 * m - 10)
    if d0 == 6 or (m == 6 and n % 10 == 0 and n % 3 != 0):
        return min(base, 3 * m - 9)
    return min(base, 3 * m - 8)


def _conj_rho_hat_h3(grid, budget):
    points = []
    for n in _grid_range(grid, "n", range(4, 19)):
        for m in _grid_range(grid, "m", range(4, 100)):
            if m > n:
                continue
            q = QuantityQuery("rho", group(n), RESTRICTED, ("exact", 3), m=m)
            points.append(_compare("rho-hat-h3", {"n": n, "m": m},
                                   _rho_hat_h3_prediction(n, m), q, budget))
    return points


def _conj_signed_limited_rho(grid, budget):
    # rho_pm(Z_n, m, [0,s]) = u_pm(n, m, [0,s]); posed for s >= 2 (the
    # [0,1] case has its own exact value m or m+1, below the divisor bound
    # when n = 2 mod 4 and 4 | m)
    points = []
    for n in _grid_range(grid, "n", range(2, 13)):
        for m in _grid_range(grid, "m", range(1, 100)):
            if m > n:
                continue
            for s in _grid_range(grid, "s", range(2, 4)):
                q = QuantityQuery("rho", group(n), SIGNED, ("upto", s), m=m)
                points.append(_compare(
                    "signed-limited-rho", {"n": n, "m": m, "s": s},
                    min(n, u_pm_limited(n, m, s)), q, budget))
    return points


def _conj_chi_pm_limited(grid, budget):
    # chi_pm(Z_n, [0,s]) = v_pm(n, s) + 1
    points = []
    for n in _grid_range(grid, "n", range(3, 17)):
        for s in _grid_range(grid, "s", range(1, 4)):
            q = QuantityQuery("chi", group(n), SIGNED, ("upto", s))
            points.append(_compare("chi-pm-limited", {"n": n, "s": s},
                                   v_pm(n, s) + 1, q, budget))
    return points


def _conj_mu_upto_2(grid, budget):
    # mu(Z_n, [0,2]) = v_2(n, 4)
    points = []
    for n in _grid_range(grid, "n", range(3, 21)):
        q = QuantityQuery("mu", group(n), NONNEG, ("upto", 2))
        points.append(_compare("mu-upto-2", {"n": n},
                               v(n, 4, 2), q, budget))
    return points


def _conj_no_perfect_bases(grid, budget):
    # no perfect s-basis of size m (s >= 2, m >= 2): no m-subset of
    # Z_{C(m+s,s)} has [0,s]-fold sumset equal to the whole group
    from math import comb as _comb
    from .search import _spanning_witness
    points = []
    for s in _grid_range(grid, "s", range(2, 3)):
        for m in _grid_range(grid, "m", range(2, 9)):
            n = _comb(m + s, s)
            G = group(n)
            try:
                witness, _ = _spanning_witness(G, m, NONNEG, ("upto", s),
                                               budget)
            except BudgetExceededError:
                points.append(ConjecturePoint({"s": s, "m": m, "n": n},
                                              "no witness", None, "skipped"))
                continue
            status = "confirmed" if witness is None else "refuted"
            points.append(ConjecturePoint({"s": s, "m": m, "n": n},
                                          "no witness", witness, status,
                                          list(witness) if witness else None))
    return points


def _conj_min_subset_sums(grid, budget):
    # smallest |Sigma A| over m-subsets of Z_n equals the divisor formula
    points = []
    for n in _grid_range(grid, "n", range(2, 13)):
        for m in _grid_range(grid, "m", range(1, 100)):
            if m > n:
                continue
            best = None
            for d in divisors(n):
                c = -(-(m - d) // (2 * d))  # ceil((m/d - 1)/2)
                val = (c * m - c * c * d + 1) * d
                if best is None or val < best:
                    best = val
            q = QuantityQuery("rho", group(n), RESTRICTED, ("all",), m=m)
            points.append(_compare("min-subset-sums", {"n": n, "m": m},
                                   best, q, budget))
    return points


def _conj_selfridge_even(grid, budget):
    # tau^(Z_n, N) = floor(sqrt(2n-3)) for even n
    points = []
    for n in _grid_range(grid, "n", range(4, 33, 2)):
        q = QuantityQuery("tau", group(n), RESTRICTED, ("allpos",))
        points.append(_compare("selfridge-even", {"n": n},
                               isqrt(2 * n - 3), q, budget))
    return points


def _conj_harborth_rank2(grid, budget):
    # tau^(Z_k^2, k) = 2k-2 for odd k, 2k for even k
    points = []
    for k in _grid_range(grid, "k", range(2, 6)):
        G = group(k, k)
        pred = 2 * k if k % 2 == 0 else 2 * k - 2
        q = QuantityQuery("tau", G, RESTRICTED, ("exact", k))
        points.append(_compare("harborth-rank-2", {"k": k}, pred, q, budget))
    return points


def _conj_dissociated_2power(grid, budget):
    # dissociated k-subsets of Z_{2^k} are exactly the recursive family
    points = []
    for k in _grid_range(grid, "k", range(1, 5)):
        n = 1 << k
        G = group(n)
        fam = {frozenset(s) for s in _dissociated_family(k)}
        _res, wits = max_zero_sum_free(G, RESTRICTED_SIGNED, ("allpos",),
                                       budget=budget, collect=True)
        got = {frozenset(w.indices) for w in wits if len(w) == k}
        status = "confirmed" if got == fam else "refuted"
        points.append(ConjecturePoint({"k": k}, len(fam), len(got), status))
    return points


def _dissociated_family(k):
    from itertools import product as _product
    n = 1 << k
    fam = [(1,)]
    for j in range(1, k):
        nxt = []
        for A in fam:
            for eps in _product((0, 1), repeat=j):
                nxt.append(tuple(sorted(
                    {1 << j} | {(a + e * (1 << j)) % n
                                for a, e in zip(A, eps)})))
        fam = nxt
    return fam


def _conj_dissociated_dimension(grid, budget):
    # min over m-subsets of Z_n of their largest dissociated subset
    points = []
    for n in _grid_range(grid, "n", range(2, 11)):
        G = group(n)
        for m in _grid_range(grid, "m", range(2, 100)):
            if m > n:
                continue
            pred = m.bit_length() - 1
            computed = _dimension_of_group(G, m, budget)
            status = "confirmed" if computed == pred else "refuted"
            points.append(ConjecturePoint({"n": n, "m": m}, pred, computed,
                                          status))
    return points


def _dimension_of_group(G, m, budget):
    from itertools import combinations as _combinations
    best = None
    for subset in _combinations(range(G.n), m):
        dim = _max_dissociated_within(G, subset)
        if best is None or dim < best:
            best = dim
    return best


def _max_dissociated_within(G, subset):
    from .search import CountState, _dfs_max_hereditary

    def try_extend(state, x):
        nxt = state.extend(x)
        for j in range(1, len(nxt.D)):
            if nxt.D[j] & 1:
                return None
        return nxt

    state = CountState(G, RESTRICTED_SIGNED, G.n, grow=True)
    best, _w, _n = _dfs_max_hereditary(tuple(subset), try_extend, state)
    return best


CONJECTURES = {
    "zero-h-sum-free": _conj_zero_h_sum_free,
    "signed-3-sum-free": _conj_3_sum_free_signed,
    "rho-hat-h2": _conj_rho_hat_h2,
    "rho-hat-h3": _conj_rho_hat_h3,
    "signed-limited-rho": _conj_signed_limited_rho,
    "chi-pm-limited": _conj_chi_pm_limited,
    "mu-upto-2": _conj_mu_upto_2,
    "no-perfect-bases": _conj_no_perfect_bases,
    "min-subset-sums": _conj_min_subset_sums,
    "selfridge-even": _conj_selfridge_even,
    "harborth-rank-2": _conj_harborth_rank2,
    "dissociated-2-power": _conj_dissociated_2power,
    "dissociated-dimension": _conj_dissociated_dimension,
}


def conjecture_check(conjecture_id, grid=None, budget=10 ** 8):
    """Sweep one conjecture over a grid; every refutation carries a witness."""
    try:
        runner = CONJECTURES[conjecture_id]
    except KeyError:
        raise ValueError(f"unknown conjecture {conjecture_id!r}") from None
    points = runner(grid or {}, budget)
    return ConjectureReport(conjecture_id, points)
