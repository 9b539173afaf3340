"""Finite abelian groups in invariant-factor form.

A group is specified by its invariant decomposition Z_{n_1} x ... x Z_{n_r}
with n_1 | n_2 | ... | n_r and every n_i >= 2 (the trivial group has an empty
factor list).  Elements are coordinate tuples; internally every element also
has a canonical index given by the mixed-radix encoding of its coordinates
(last factor fastest), and subsets are stored as bitmasks over these indices.
Translation of a whole subset by a group element is a composition of per-axis
bit rotations of the mask, which keeps exhaustive searches fast.
"""

import json
import re
from functools import lru_cache
from math import gcd, lcm, prod

DEFAULT_ORDER_BOUND = 1 << 20


class GroupOrderError(ValueError):
    """Group order exceeds the configured indexing bound."""


class GroupMismatchError(ValueError):
    """Operands belong to different groups."""


def _factorize(n):
    """Prime factorization of n as a dict {prime: exponent}."""
    facts = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            facts[d] = facts.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        facts[n] = facts.get(n, 0) + 1
    return facts


def normalize_factors(factors, order_bound=None):
    """Invariant decomposition of Z_{f_1} x ... x Z_{f_k}.

    Factors equal to 1 are dropped.  The result (n_1, ..., n_r) satisfies
    n_1 >= 2 and n_i | n_{i+1}, and the product group is isomorphic to the
    input product.  The order bound, when given, guards dense element
    indexing; plain normalization accepts any size.
    """
    exponents = {}  # prime -> list of exponents, one per input factor
    for f in factors:
        if f < 1:
            raise ValueError(f"factors must be positive, got {f}")
        for p, e in _factorize(f).items():
            exponents.setdefault(p, []).append(e)
    order = prod(p ** sum(es) for p, es in exponents.items()) if exponents else 1
    if order_bound is not None and order > order_bound:
        raise GroupOrderError(f"group order {order} exceeds bound {order_bound}")
    # Largest invariant factor collects the largest prime power of each prime,
    # the next one the second largest, and so on.
    rank = max((len(es) for es in exponents.values()), default=0)
    invariant = []
    for i in range(rank):
        f = 1
        for p, es in exponents.items():
            es_sorted = sorted(es, reverse=True)
            if i < len(es_sorted):
                f *= p ** es_sorted[i]
        invariant.append(f)
    invariant.reverse()  # ascending: n_1 | n_2 | ... | n_r
    return tuple(invariant)


_GROUP_TOKEN = re.compile(r"^Z(\d+)(?:\^(\d+))?$")


def parse_group_string(text):
    """Parse 'Zn', 'Zn^r', or 'Zn1xZn2x...' into a factor list."""
    factors = []
    for token in text.strip().split("x"):
        mo = _GROUP_TOKEN.match(token.strip())
        if mo is None:
            raise ValueError(f"cannot parse group token {token!r}")
        base = int(mo.group(1))
        power = int(mo.group(2)) if mo.group(2) else 1
        factors.extend([base] * power)
    return factors


class Group:
    """A finite abelian group given as a direct product of cyclic factors.

    The factor list is kept as presented (so element coordinates match the
    presentation); factors equal to 1 are dropped.  The library-wide
    constructor `group()` normalizes to invariant form, which is the
    canonical representation used by all searches.
    """

    __slots__ = (
        "factors", "n", "r", "kappa", "_strides",
        "_coords", "_neg", "_orders", "_rot", "full_mask",
    )

    def __init__(self, factors=(), order_bound=DEFAULT_ORDER_BOUND):
        if isinstance(factors, int):
            factors = (factors,)
        kept = []
        for f in factors:
            if f < 1:
                raise ValueError(f"factors must be positive, got {f}")
            if f > 1:
                kept.append(int(f))
        self.factors = tuple(kept)
        self.n = prod(self.factors) if self.factors else 1
        if order_bound is not None and self.n > order_bound:
            raise GroupOrderError(
                f"group order {self.n} exceeds bound {order_bound}")
        self.r = len(self.factors)
        self.kappa = lcm(*self.factors) if self.factors else 1
        strides = [1] * self.r
        for i in range(self.r - 2, -1, -1):
            strides[i] = strides[i + 1] * self.factors[i + 1]
        self._strides = tuple(strides)
        self.full_mask = (1 << self.n) - 1
        self._coords = None
        self._neg = None
        self._orders = None
        self._rot = None

    def is_invariant(self):
        return all(self.factors[i + 1] % self.factors[i] == 0
                   for i in range(self.r - 1))

    def canonical(self):
        """The isomorphic group in invariant-factor form."""
        return group(*self.factors)

    @classmethod
    def from_string(cls, text, order_bound=DEFAULT_ORDER_BOUND):
        return cls(parse_group_string(text), order_bound)

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text)["factors"])

    def to_json(self):
        return json.dumps({"factors": list(self.factors)})

    def __str__(self):
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{f}" for f in self.factors)

    def __repr__(self):
        return f"Group({list(self.factors)})"

    def __eq__(self, other):
        return isinstance(other, Group) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    # -- elements as coordinate tuples ------------------------------------

    def _check(self, a):
        if len(a) != self.r:
            raise GroupMismatchError(f"element {a} has wrong rank for {self}")
        for c, f in zip(a, self.factors):
            if not 0 <= c < f:
                raise GroupMismatchError(f"coordinate {c} out of range for {self}")

    def add(self, a, b):
        self._check(a)
        self._check(b)
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def sub(self, a, b):
        self._check(a)
        self._check(b)
        return tuple((x - y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a):
        self._check(a)
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def scale(self, lam, a):
        self._check(a)
        return tuple((lam * x) % f for x, f in zip(a, self.factors))

    def zero(self):
        return (0,) * self.r

    def element_order(self, a):
        """Least d >= 1 with d*a = 0; always a divisor of the exponent."""
        self._check(a)
        d = 1
        for c, f in zip(a, self.factors):
            d = lcm(d, f // gcd(f, c))
        return d

    # -- canonical indexing ------------------------------------------------

    def index(self, a):
        self._check(a)
        return sum(c * s for c, s in zip(a, self._strides))

    def coords(self, idx):
        if self._coords is None:
            self._build_coords()
        return self._coords[idx]

    def _build_coords(self):
        out = []
        for idx in range(self.n):
            rem = idx
            cs = []
            for s, f in zip(self._strides, self.factors):
                cs.append((rem // s) % f)
            out.append(tuple(cs))
        self._coords = out

    def elements(self):
        """All elements as coordinate tuples, in canonical-index order."""
        if self._coords is None:
            self._build_coords()
        return list(self._coords)

    def neg_index(self, idx):
        if self._neg is None:
            if self._coords is None:
                self._build_coords()
            self._neg = [self.index(self.neg(a)) for a in self._coords]
        return self._neg[idx]

    def index_order(self, idx):
        if self._orders is None:
            if self._coords is None:
                self._build_coords()
            self._orders = [self.element_order(a) for a in self._coords]
        return self._orders[idx]

    def add_index(self, i, j):
        return self.index(self.add(self.coords(i), self.coords(j)))

    # -- bitmask machinery ---------------------------------------------------

    def _build_rot(self):
        # Per axis i and rotation amount c: translating a mask by c along axis
        # i is ((mask & lo) << s) | ((mask & hi) >> (P - s)) where P is the
        # axis period and s = c * stride.
        rot = []
        blocks_bits = self.n
        for f, stride in zip(self.factors, self._strides):
            period = f * stride
            nblocks = blocks_bits // period
            ops = [None]  # c == 0 is the identity; never looked up
            for c in range(1, f):
                s = c * stride
                lo_pat = (1 << (period - s)) - 1
                lo = 0
                for b in range(nblocks):
                    lo |= lo_pat << (b * period)
                hi = self.full_mask & ~lo
                ops.append((s, lo, hi, period - s))
            rot.append(ops)
        self._rot = rot

    def translate(self, mask, idx):
        """Bitmask of {x + a : x in mask} where a has canonical index idx."""
        if self._rot is None:
            self._build_rot()
            if self._coords is None:
                self._build_coords()
        if self.r == 1:
            if idx == 0:
                return mask
            s, lo, hi, back = self._rot[0][idx]
            return ((mask & lo) << s) | ((mask & hi) >> back)
        for ops, c in zip(self._rot, self._coords[idx]):
            if c:
                s, lo, hi, back = ops[c]
                mask = ((mask & lo) << s) | ((mask & hi) >> back)
        return mask

    def negate_mask(self, mask):
        """Bitmask of {-x : x in mask}."""
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << self.neg_index(low.bit_length() - 1)
            mask ^= low
        return out

    def dilate_mask(self, mask, b):
        """Bitmask of {b*x : x in mask}."""
        out = 0
        while mask:
            low = mask & -mask
            idx = low.bit_length() - 1
            out |= 1 << self.index(self.scale(b, self.coords(idx)))
            mask ^= low
        return out


@lru_cache(maxsize=None)
def _cached_group(factors):
    return Group(factors)


def group(*factors):
    """Shared, cached Group in invariant form for the given factor list."""
    if len(factors) == 1 and not isinstance(factors[0], int):
        factors = tuple(factors[0])
    return _cached_group(normalize_factors(factors))


def normalize(factors, order_bound=None):
    """The invariant-form Group isomorphic to the given direct product."""
    return group(*normalize_factors(factors, order_bound))


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_of(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Subset:
    """An immutable subset of a Group, stored as a bitmask over indices."""

    __slots__ = ("group", "mask")

    def __init__(self, group, elements=(), mask=None):
        self.group = group
        if mask is None:
            mask = 0
            for e in elements:
                idx = group.index(e) if isinstance(e, tuple) else e
                if not 0 <= idx < group.n:
                    raise ValueError(f"index {idx} out of range for {group}")
                mask |= 1 << idx
        self.mask = mask

    @classmethod
    def from_mask(cls, group, mask):
        return cls(group, mask=mask)

    @classmethod
    def full(cls, group):
        return cls(group, mask=group.full_mask)

    @property
    def indices(self):
        return tuple(indices_of(self.mask))

    @property
    def m(self):
        return self.mask.bit_count()

    def coords_list(self):
        return [self.group.coords(i) for i in self.indices]

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, e):
        idx = self.group.index(e) if isinstance(e, tuple) else e
        return bool(self.mask >> idx & 1)

    def __eq__(self, other):
        return (isinstance(other, Subset) and self.group == other.group
                and self.mask == other.mask)

    def __hash__(self):
        return hash((self.group.factors, self.mask))

    def _coerce(self, other):
        if self.group != other.group:
            raise GroupMismatchError("subsets live in different groups")
        return other.mask

    def __or__(self, other):
        return Subset(self.group, mask=self.mask | self._coerce(other))

    def __and__(self, other):
        return Subset(self.group, mask=self.mask & self._coerce(other))

    def __sub__(self, other):
        return Subset(self.group, mask=self.mask & ~self._coerce(other))

    def translate(self, e):
        idx = self.group.index(e) if isinstance(e, tuple) else e
        return Subset(self.group, mask=self.group.translate(self.mask, idx))

    def negate(self):
        return Subset(self.group, mask=self.group.negate_mask(self.mask))

    def dilate(self, b):
        return Subset(self.group, mask=self.group.dilate_mask(self.mask, b))

    def to_json(self):
        return json.dumps(list(self.indices))

    def __repr__(self):
        return f"Subset({self.group}, {list(self.indices)})"


def ord_set(G, d):
    """All elements of G of order exactly d, as a Subset."""
    if d < 1:
        raise ValueError("order must be positive")
    mask = 0
    for idx in range(G.n):
        if G.index_order(idx) == d:
            mask |= 1 << idx
    return Subset(G, mask=mask)


def cyclic_subgroup(n, d):
    """The unique subgroup of order d of Z_n, for d | n."""
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    G = group(n)
    step = n // d
    return Subset(G, mask=mask_of(j * step for j in range(d)))


def generated_subgroup(A):
    """Closure of A united with {0} under addition: the subgroup <A>."""
    G = A.group
    mask = 1 | A.mask  # 0 always belongs
    # In a finite group, closing under addition by the generators suffices
    # (negatives arrive as high multiples).
    while True:
        new = mask
        for idx in indices_of(A.mask):
            new |= G.translate(mask, idx)
        if new == mask:
            return Subset(G, mask=mask)
        mask = new


def subgroup_count_rank2(n1, n2):
    """Number of subgroups of Z_{n1} x Z_{n2} (requires n1 | n2)."""
    if n2 % n1:
        raise ValueError(f"invariant form needs {n1} | {n2}")
    return sum(gcd(d1, d2)
               for d1 in _divisor_list(n1) for d2 in _divisor_list(n2))


@lru_cache(maxsize=None)
def _divisor_list(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def all_subgroups(G):
    """Every subgroup of G, by closure over element pairs (exhaustive).

    Exponential in general; intended for cross-checks on small groups.
    """
    zero_only = Subset(G, mask=1)
    found = {zero_only.mask: zero_only}
    frontier = [zero_only]
    while frontier:
        H = frontier.pop()
        for idx in range(G.n):
            if H.mask >> idx & 1:
                continue
            bigger = generated_subgroup(Subset(G, mask=H.mask | (1 << idx)))
            if bigger.mask not in found:
                found[bigger.mask] = bigger
                frontier.append(bigger)
    return sorted(found.values(), key=lambda s: (len(s), s.mask))


def abelian_groups_of_order(n, order_bound=DEFAULT_ORDER_BOUND):
    """One Group per isomorphism type of abelian groups of order n."""
    if n == 1:
        return [group()]
    parts = {p: _partitions_of(e) for p, e in _factorize(n).items()}
    combos = [[]]
    for p, plist in parts.items():
        combos = [c + [(p, part)] for c in combos for part in plist]
    out = []
    for combo in combos:
        factors = []
        for p, part in combo:
            factors.extend(p ** e for e in part)
        out.append(group(tuple(factors)))
    # normalize_factors makes each combo canonical; dedupe just in case
    seen, uniq = set(), []
    for g in out:
        if g.factors not in seen:
            seen.add(g.factors)
            uniq.append(g)
    return sorted(uniq, key=lambda g: g.factors)


@lru_cache(maxsize=None)
def _partitions_of(n):
    """All partitions of n as descending tuples."""
    if n == 0:
        return ((),)
    out = []
    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, maxpart), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()
    rec(n, n, [])
    return tuple(out)
