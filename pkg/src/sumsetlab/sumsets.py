"""The twelve sumset types and derived objects.

Given a subset A of a finite abelian group, a coefficient domain Lambda in
{N0, Z, {0,1}, {-1,0,1}} and a term-count set H, the sumset H_Lambda(A) is
the set of all linear combinations of elements of A whose coefficients lie
in Lambda and whose coefficient norm (sum of absolute values) lies in H.

All computations here run on bitmasks: per-count dynamic programming over
the generators, with whole-set translation done by the group's mask
rotation.  Costs are polynomial in |G|, h and |A| rather than in the number
of coefficient vectors.
"""

from dataclasses import dataclass

from .counting import NONNEG, RESTRICTED, RESTRICTED_SIGNED, SIGNED
from .groups import Subset, indices_of

_LAMBDA_ALIASES = {
    "n0": NONNEG, "nonneg": NONNEG, "N0": NONNEG,
    "z": SIGNED, "Z": SIGNED, "signed": SIGNED,
    "01": RESTRICTED, "restricted": RESTRICTED,
    "pm1": RESTRICTED_SIGNED, "restricted-signed": RESTRICTED_SIGNED,
    "signed-restricted": RESTRICTED_SIGNED,
}


def parse_lambda(text):
    try:
        return _LAMBDA_ALIASES[text]
    except KeyError:
        raise ValueError(f"unknown coefficient domain {text!r}") from None


def parse_terms(text):
    """Parse a term-count spec: exact:h, upto:s, from1:t, all, allpos."""
    if text == "all":
        return ("all",)
    if text == "allpos":
        return ("allpos",)
    kind, _, num = text.partition(":")
    if kind in ("exact", "upto", "from1") and num.lstrip("-").isdigit():
        value = int(num)
        if value < 0 or (kind == "from1" and value < 1):
            raise ValueError(f"term count out of range in {text!r}")
        return (kind, value)
    raise ValueError(f"cannot parse term-count spec {text!r}")


def format_terms(terms):
    if terms[0] in ("all", "allpos"):
        return terms[0]
    return f"{terms[0]}:{terms[1]}"


@dataclass(frozen=True)
class SumsetSpec:
    """Coefficient domain plus term-count set."""
    lam: str
    terms: tuple

    @classmethod
    def parse(cls, lam_text, terms_text):
        return cls(parse_lambda(lam_text), parse_terms(terms_text))

    def __str__(self):
        return f"{self.lam}/{format_terms(self.terms)}"


# -- per-count tables ---------------------------------------------------------

def _multiples(G, a, count):
    """Canonical indices of a, 2a, ..., count*a."""
    out = []
    cur = G.coords(a)
    step = cur
    for _ in range(count):
        out.append(G.index(cur))
        cur = G.add(cur, step)
    return out


def nonneg_table(G, gens, hmax):
    """List D with D[j] = bitmask of the j-fold sumset of gens, j <= hmax."""
    D = [1] + [0] * hmax
    cur = 1
    for j in range(1, hmax + 1):
        nxt = 0
        for a in gens:
            nxt |= G.translate(cur, a)
        D[j] = cur = nxt
    return D


def signed_table(G, gens, hmax):
    """D[j] = bitmask of the j-fold signed sumset of gens."""
    D = [1] + [0] * (hmax)
    for a in gens:
        pos = _multiples(G, a, hmax)
        neg = [G.neg_index(i) for i in pos]
        new = D[:]
        for t in range(1, hmax + 1):
            ia, ib = pos[t - 1], neg[t - 1]
            for j in range(t, hmax + 1):
                base = D[j - t]
                if base:
                    new[j] |= G.translate(base, ia) | G.translate(base, ib)
        D = new
    return D


def restricted_table(G, gens, hmax):
    """D[j] = bitmask of the restricted j-fold sumset of gens."""
    hmax = min(hmax, len(gens))
    D = [1] + [0] * hmax
    for a in gens:
        for j in range(hmax, 0, -1):
            if D[j - 1]:
                D[j] |= G.translate(D[j - 1], a)
    return D


def restricted_signed_table(G, gens, hmax):
    """D[j] = bitmask of the restricted j-fold signed sumset of gens."""
    hmax = min(hmax, len(gens))
    D = [1] + [0] * hmax
    for a in gens:
        b = G.neg_index(a)
        for j in range(hmax, 0, -1):
            if D[j - 1]:
                D[j] |= G.translate(D[j - 1], a) | G.translate(D[j - 1], b)
    return D


def _closure(G, start_mask, gens, include_negatives):
    """Union of start_mask with everything reachable by adding generators."""
    step = list(gens)
    if include_negatives:
        step += [G.neg_index(a) for a in gens]
    mask = start_mask
    while True:
        new = mask
        for a in step:
            new |= G.translate(mask, a)
        if new == mask:
            return mask
        mask = new


def sumset_mask(G, gens, lam, terms):
    """Bitmask of H_Lambda({gens}) for generator indices gens."""
    gens = tuple(gens)
    kind = terms[0]

    if kind == "exact":
        h = terms[1]
        if h == 0:
            return 1
        if not gens:
            return 0
        if lam == NONNEG:
            return nonneg_table(G, gens, h)[h]
        if lam == SIGNED:
            return signed_table(G, gens, h)[h]
        if lam == RESTRICTED:
            return restricted_table(G, gens, h)[h] if h <= len(gens) else 0
        return restricted_signed_table(G, gens, h)[h] if h <= len(gens) else 0

    if kind in ("upto", "from1"):
        bound = terms[1]
        lo = 0 if kind == "upto" else 1
        if not gens:
            return 1 if lo == 0 else 0
        if lam == NONNEG:
            D = nonneg_table(G, gens, bound)
        elif lam == SIGNED:
            D = signed_table(G, gens, bound)
        elif lam == RESTRICTED:
            D = restricted_table(G, gens, bound)
        else:
            D = restricted_signed_table(G, gens, bound)
        out = 0
        for j in range(lo, min(bound, len(D) - 1) + 1):
            out |= D[j]
        return out

    if kind in ("all", "allpos"):
        include_zero = kind == "all"
        if not gens:
            return 1 if include_zero else 0
        if lam in (RESTRICTED, RESTRICTED_SIGNED):
            m = len(gens)
            if lam == RESTRICTED:
                D = restricted_table(G, gens, m)
            else:
                D = restricted_signed_table(G, gens, m)
            out = 0
            for j in range(0 if include_zero else 1, m + 1):
                out |= D[j]
            return out
        # unbounded coefficients: closure; the union over h >= 1 already
        # contains 0 (ord(a) many copies of any a sum to 0), so both term
        # ranges give the generated subgroup, and we start from A itself
        # for "allpos" only to keep the h >= 1 reading literal.
        start = 0
        for a in gens:
            start |= 1 << a
        if include_zero:
            start |= 1
        return _closure(G, start, gens, include_negatives=(lam == SIGNED))

    raise ValueError(f"unknown term-count spec {terms!r}")


def sumset(A, lam, terms=None):
    """H_Lambda(A) as a Subset.

    Accepts either a SumsetSpec or a (lam, terms) pair, with strings or
    parsed forms for both parts.
    """
    if isinstance(lam, SumsetSpec):
        lam, terms = lam.lam, lam.terms
    if isinstance(lam, str) and lam not in (NONNEG, SIGNED, RESTRICTED,
                                            RESTRICTED_SIGNED):
        lam = parse_lambda(lam)
    if isinstance(terms, str):
        terms = parse_terms(terms)
    mask = sumset_mask(A.group, indices_of(A.mask), lam, terms)
    return Subset(A.group, mask=mask)


# -- named derived objects ----------------------------------------------------

def sigma_star(A):
    """Union of all restricted h-fold sumsets, h >= 1."""
    return sumset(A, RESTRICTED, ("allpos",))


def sigma(A):
    """Sigma A: all subset sums (including the empty one, which gives 0)."""
    return sumset(A, RESTRICTED, ("all",))


def sigma_pm(A):
    """All signed subset sums, each element used at most once."""
    return sumset(A, RESTRICTED_SIGNED, ("all",))


def sigma_pm_star(A):
    return sumset(A, RESTRICTED_SIGNED, ("allpos",))


def generated(A):
    """The subgroup generated by A."""
    return sumset(A, SIGNED, ("all",))


def dilate(b, A):
    """The dilation {b*a : a in A}."""
    return A.dilate(b)


def norm(A):
    """Sum of |x| over the representatives of A in (-n/2, n/2]; cyclic only."""
    G = A.group
    if G.r > 1:
        raise ValueError("norm is defined for cyclic groups only")
    n = G.n
    total = 0
    for idx in indices_of(A.mask):
        rep = idx if 2 * idx <= n else idx - n
        total += abs(rep)
    return total


def sumset_bruteforce(A, lam, terms):
    """Direct enumeration over coefficient vectors; oracle for small cases."""
    from .counting import enumerate_layer
    G = A.group
    members = [G.coords(i) for i in indices_of(A.mask)]
    m = len(members)
    if isinstance(terms, str):
        terms = parse_terms(terms)
    out = 0
    for vec in enumerate_layer(lam, m, terms):
        total = G.zero()
        for lam_i, a in zip(vec, members):
            total = G.add(total, G.scale(lam_i, a))
        out |= 1 << G.index(total)
    return Subset(G, mask=out)
