"""Exhaustive search for the seven extremal quantities.

Every function here answers a question of the form "what is the largest /
smallest / threshold size ... over subsets of a group", always by complete
enumeration (plain sweeps in colex order, or depth-first search with sound
pruning), never heuristically.  Searches keep per-term-count bitmasks of
partial sumsets and extend them one element at a time, so the work per node
stays polynomial.

Three search shapes cover everything:

  * sweeps over all m-subsets (maximum/minimum sumset size);
  * DFS maximization of a hereditary property (Sidon, zero-sum-free,
    sum-free), optionally seeded with a verified witness as initial bound;
  * DFS existence of a spanning set of a given size, with a coverage
    bound for pruning (spanning and critical numbers).
"""

from dataclasses import dataclass
from math import comb

from .counting import (NONNEG, RESTRICTED, RESTRICTED_SIGNED, SIGNED,
                       InfiniteLayerError, layer_size)
from .groups import Subset, mask_of
from .sumsets import parse_lambda, parse_terms

DEFAULT_BUDGET = 10 ** 9


class BudgetExceededError(RuntimeError):
    """Estimated node count exceeds the configured search budget."""


@dataclass
class SearchResult:
    value: int | None
    witness: Subset | None = None
    exhaustive: bool = True
    nodes: int = 0

    def witness_indices(self):
        return None if self.witness is None else list(self.witness.indices)


@dataclass(frozen=True)
class QuantityQuery:
    """One extremal quantity: family plus its parameters."""
    family: str            # nu, phi, sigma, rho, chi, tau, mu
    group: object
    lam: str = NONNEG
    terms: tuple = ("exact", 2)
    m: int | None = None
    k: int | None = None   # sum-free pair
    l: int | None = None
    exclude_zero: bool = False
    generating_only: bool = False


def colex_combinations(n, m):
    """All m-subsets of range(n) in colex order (compare reversed tuples)."""
    if m < 0 or m > n:
        return
    if m == 0:
        yield ()
        return
    c = list(range(m))
    while True:
        yield tuple(c)
        i = 0
        while i + 1 < m and c[i] + 1 == c[i + 1]:
            i += 1
        c[i] += 1
        if c[i] >= n:
            return
        for j in range(i):
            c[j] = j


def _check_budget(nodes, budget):
    if nodes > budget:
        raise BudgetExceededError(
            f"search space of {nodes} nodes exceeds budget {budget}")


# -- incremental per-count sumset state ---------------------------------------

def _norm_bound(terms, cap):
    kind = terms[0]
    if kind == "exact":
        return terms[1]
    if kind in ("upto", "from1"):
        return terms[1]
    return cap  # all / allpos with restricted domains


def _selected_norms(terms, size):
    kind = terms[0]
    if kind == "exact":
        return [terms[1]]
    if kind == "upto":
        return list(range(0, terms[1] + 1))
    if kind == "from1":
        return list(range(1, terms[1] + 1))
    if kind == "all":
        return list(range(0, size + 1))
    return list(range(1, size + 1))


class CountState:
    """Per-norm sumset masks of a growing subset, extended element-wise.

    For the two restricted domains the table grows with the set; for the
    unbounded domains it is capped at the largest norm in the term set.
    """

    __slots__ = ("G", "lam", "hmax", "grow", "D")

    def __init__(self, G, lam, hmax, grow):
        self.G = G
        self.lam = lam
        self.hmax = hmax
        self.grow = grow
        self.D = [1]

    def extend(self, x):
        """New state with element x added to the set."""
        G, lam, D = self.G, self.lam, self.D
        translate = G.translate
        size = len(D) - 1
        cap = min(self.hmax, size + 1) if self.grow else self.hmax
        width = cap + 1
        nd = list(D) + [0] * (width - len(D)) if width > len(D) else list(D)
        if lam == RESTRICTED:
            for j in range(min(cap, len(D)), 0, -1):
                base = D[j - 1]
                if base:
                    nd[j] |= translate(base, x)
        elif lam == RESTRICTED_SIGNED:
            y = G.neg_index(x)
            for j in range(min(cap, len(D)), 0, -1):
                base = D[j - 1]
                if base:
                    nd[j] |= translate(base, x) | translate(base, y)
        elif lam == NONNEG:
            shifted = list(D[:width])
            for t in range(1, width):
                run = min(width - t, len(shifted))
                for i in range(run):
                    mask = shifted[i]
                    if mask:
                        shifted[i] = mask = translate(mask, x)
                        nd[i + t] |= mask
        else:  # SIGNED
            y = G.neg_index(x)
            pos = list(D[:width])
            neg = list(D[:width])
            for t in range(1, width):
                run = min(width - t, len(pos))
                for i in range(run):
                    mask = pos[i]
                    if mask:
                        pos[i] = mask = translate(mask, x)
                        nd[i + t] |= mask
                    mask = neg[i]
                    if mask:
                        neg[i] = mask = translate(mask, y)
                        nd[i + t] |= mask
        new = CountState.__new__(CountState)
        new.G = G
        new.lam = lam
        new.hmax = self.hmax
        new.grow = self.grow
        new.D = nd
        return new

    def selected_mask(self, terms):
        out = 0
        for h in _selected_norms(terms, len(self.D) - 1):
            if h < len(self.D):
                out |= self.D[h]
        return out

    def mask_at(self, h):
        return self.D[h] if h < len(self.D) else 0


def _make_state(G, lam, terms):
    kind = terms[0]
    grow = kind in ("all", "allpos") or lam in (RESTRICTED, RESTRICTED_SIGNED)
    if kind in ("all", "allpos"):
        if lam in (NONNEG, SIGNED):
            raise InfiniteLayerError(
                "per-count state needs a finite norm bound; "
                "unbounded coefficient domains with unlimited terms are "
                "handled via closures")
        hmax = G.n  # grows with the set anyway
    else:
        hmax = _norm_bound(terms, G.n)
    return CountState(G, lam, hmax, grow)


# -- nu and rho: extremal sumset size over m-subsets -------------------------

def _sweep_sumset_size(G, m, lam, terms, minimize, budget, collect=False):
    from .sumsets import sumset_mask
    n = G.n
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= {n}")
    lam = parse_lambda(lam) if lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    if isinstance(terms, str):
        terms = parse_terms(terms)
    # Translating a subset leaves |hA| and |h^A| unchanged, so for those two
    # domains with a fixed term count the sweep may fix 0 in A.  No such
    # shift invariance holds for the signed variants.
    fix_zero = (not collect and m >= 1 and terms[0] == "exact"
                and lam in (NONNEG, RESTRICTED))
    if fix_zero:
        node_count = comb(n - 1, m - 1)
    else:
        node_count = comb(n, m)
    _check_budget(node_count, budget)

    best = None
    best_witness = None
    witnesses = []
    nodes = 0
    if fix_zero:
        subsets = ((0,) + tuple(i + 1 for i in rest)
                   for rest in colex_combinations(n - 1, m - 1))
    else:
        subsets = colex_combinations(n, m)
    for subset in subsets:
        nodes += 1
        size = sumset_mask(G, subset, lam, terms).bit_count()
        if best is None or (size < best if minimize else size > best):
            best = size
            best_witness = subset
            if collect:
                witnesses = [subset]
        elif collect and size == best:
            witnesses.append(subset)
    result = SearchResult(best, Subset(G, mask=mask_of(best_witness))
                          if best_witness is not None else None,
                          True, nodes)
    if collect:
        return result, [Subset(G, mask=mask_of(w)) for w in witnesses]
    return result


def max_sumset_size(G, m, lam, terms, budget=DEFAULT_BUDGET):
    """nu: the largest |H_Lambda(A)| over m-subsets A of G."""
    return _sweep_sumset_size(G, m, lam, terms, minimize=False, budget=budget)


def min_sumset_size(G, m, lam, terms, budget=DEFAULT_BUDGET):
    """rho: the smallest |H_Lambda(A)| over m-subsets A of G."""
    return _sweep_sumset_size(G, m, lam, terms, minimize=True, budget=budget)


def min_sumset_size_h_sweep(G, m, hmax, lam=NONNEG, budget=DEFAULT_BUDGET):
    """rho(G,m,h) for every h in 0..hmax in one pass over the subsets.

    Sumsets are built incrementally in h (folding one more round of the
    generators), which makes the master regression against the divisor-
    minimum formula tractable.
    """
    n = G.n
    fix_zero = m >= 1 and lam in (NONNEG, RESTRICTED)
    node_count = comb(n - 1, m - 1) if fix_zero else comb(n, m)
    _check_budget(node_count, budget)
    best = [None] * (hmax + 1)
    best[0] = 1
    translate = G.translate
    if fix_zero:
        subsets = ((0,) + tuple(i + 1 for i in rest)
                   for rest in colex_combinations(n - 1, m - 1))
    else:
        subsets = colex_combinations(n, m)
    full = G.full_mask
    for subset in subsets:
        cur = 1
        for h in range(1, hmax + 1):
            nxt = 0
            for a in subset:
                nxt |= translate(cur, a)
            cur = nxt
            size = cur.bit_count()
            if best[h] is None or size < best[h]:
                best[h] = size
            if cur == full:
                for rest in range(h + 1, hmax + 1):
                    if best[rest] is None or n < best[rest]:
                        best[rest] = n
                break
    return best


# -- hereditary-property maximization (sigma, tau, mu) ------------------------

def _dfs_max_hereditary(universe, try_extend, initial_state,
                        seed=None, budget=DEFAULT_BUDGET,
                        collect=False):
    """Largest subset of universe whose prefixes all pass try_extend.

    try_extend(state, x) returns the successor state, or None if adding x
    breaks the property.  The property must be hereditary (closed under
    subsets), which makes incremental checking sound.  seed, if given, is a
    pre-verified (size, witness) pair used as the initial bound.
    """
    best = 0
    best_witness = ()
    if seed is not None:
        best, best_witness = seed
    found = []
    nodes = 0
    usize = len(universe)

    stack = [(0, (), initial_state)]
    while stack:
        pos, chosen, state = stack.pop()
        for idx in range(pos, usize):
            remaining = usize - idx
            limit = best if not collect else best - 1
            if len(chosen) + remaining <= limit:
                break
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"hereditary search exceeded budget {budget}")
            nxt = try_extend(state, universe[idx])
            if nxt is None:
                continue
            new_chosen = chosen + (universe[idx],)
            if len(new_chosen) > best:
                best = len(new_chosen)
                best_witness = new_chosen
                if collect:
                    found = [new_chosen]
            elif collect and len(new_chosen) == best:
                found.append(new_chosen)
            stack.append((idx + 1, new_chosen, nxt))
    if collect:
        return best, best_witness, found, nodes
    return best, best_witness, nodes


def max_zero_sum_free(G, lam, terms, seed=None, budget=DEFAULT_BUDGET,
                      collect=False):
    """tau: the largest A with 0 not in H_Lambda(A); 0 when none exists."""
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    if isinstance(terms, str):
        terms = parse_terms(terms)
    kind = terms[0]
    if kind in ("all", "allpos") and lam in (NONNEG, SIGNED):
        # some multiple of any element hits 0, so no set qualifies
        return SearchResult(0, None, True, 0)

    if lam == RESTRICTED_SIGNED and kind == "allpos":
        # 0 avoided in every nonempty restricted signed sum exactly when
        # all subset sums are distinct, so it suffices to track the
        # subset-sum mask and insist it doubles with each new element
        n = G.n

        def try_extend(state, x):
            mask, size = state
            if 2 * size > n:
                return None
            grown = mask | G.translate(mask, x)
            if grown.bit_count() != 2 * size:
                return None
            return (grown, 2 * size)

        state = (1, 1)
    else:
        def try_extend(state, x):
            nxt = state.extend(x)
            if nxt.selected_mask(terms) & 1:
                return None
            return nxt

        state = _make_state(G, lam, terms)
        if state.selected_mask(terms) & 1:
            # the empty selection already contains 0 (term count 0 allowed)
            return SearchResult(0, None, True, 0)
    universe = tuple(range(G.n))
    out = _dfs_max_hereditary(universe, try_extend, state, seed=seed,
                              budget=budget, collect=collect)
    if collect:
        best, witness, found, nodes = out
        result = SearchResult(best, Subset(G, witness), True, nodes)
        return result, [Subset(G, w) for w in found]
    best, witness, nodes = out
    return SearchResult(best, Subset(G, witness) if best else None,
                        True, nodes)


def max_sidon_size(G, lam, terms, seed=None, budget=DEFAULT_BUDGET):
    """sigma: the largest A whose H_Lambda-sumset has full layer size."""
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    if isinstance(terms, str):
        terms = parse_terms(terms)

    def expected(size):
        return layer_size(lam, size, terms)

    # The Sidon check needs the subset size, so wrap state as (count, state).
    def try_extend2(wrapped, x):
        count, state = wrapped
        nxt = state.extend(x)
        want = expected(count + 1)
        if want > G.n:
            return None
        if nxt.selected_mask(terms).bit_count() != want:
            return None
        return (count + 1, nxt)

    base = (0, _make_state(G, lam, terms))
    universe = tuple(range(G.n))
    best, witness, nodes = _dfs_max_hereditary(
        universe, try_extend2, base, seed=seed, budget=budget)
    return SearchResult(best, Subset(G, witness) if best else None,
                        True, nodes)


def max_sum_free(G, k, l, lam=NONNEG, seed=None, budget=DEFAULT_BUDGET,
                 collect=False):
    """mu pair form: the largest A with kA and lA disjoint."""
    if not k > l >= 0:
        raise ValueError("need k > l >= 0")
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    hmax = k

    def try_extend(state, x):
        nxt = state.extend(x)
        if nxt.mask_at(k) & nxt.mask_at(l):
            return None
        return nxt

    state = CountState(G, lam, hmax, grow=lam in (RESTRICTED,
                                                  RESTRICTED_SIGNED))
    out = _dfs_max_hereditary(tuple(range(G.n)), try_extend, state,
                              seed=seed, budget=budget, collect=collect)
    if collect:
        best, witness, found, nodes = out
        return (SearchResult(best, Subset(G, witness) if best else None,
                             True, nodes),
                [Subset(G, w) for w in found])
    best, witness, nodes = out
    return SearchResult(best, Subset(G, witness) if best else None,
                        True, nodes)


def max_sum_free_upto(G, s, lam=NONNEG, seed=None, budget=DEFAULT_BUDGET):
    """mu [0,s] form: all pairs 0 <= l < k <= s have kA, lA disjoint."""
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam

    def try_extend(state, x):
        nxt = state.extend(x)
        masks = [nxt.mask_at(j) for j in range(s + 1)]
        for a in range(s + 1):
            for b in range(a + 1, s + 1):
                if masks[a] & masks[b]:
                    return None
        return nxt

    state = CountState(G, lam, s, grow=lam in (RESTRICTED, RESTRICTED_SIGNED))
    best, witness, nodes = _dfs_max_hereditary(
        tuple(range(G.n)), try_extend, state, seed=seed, budget=budget)
    return SearchResult(best, Subset(G, witness) if best else None,
                        True, nodes)


# -- spanning and critical numbers -------------------------------------------

def _spanning_witness(G, m, lam, terms, budget):
    """DFS for an m-subset whose selected sumset covers G; None if none.

    Pruned by a coverage bound: a partial set of size j can gain at most
    (number of coefficient vectors on m elements) minus (those on j
    elements) further sumset elements, since each new sum involves at least
    one elements not yet chosen.
    """
    n = G.n
    full = G.full_mask
    try:
        layers = [layer_size(lam, j, terms) for j in range(m + 1)]
    except InfiniteLayerError:
        layers = None
    nodes = 0

    def rec(pos, chosen, state):
        nonlocal nodes
        covered = state.selected_mask(terms)
        if len(chosen) == m:
            return chosen if covered == full else None
        if layers is not None and \
                covered.bit_count() + (layers[m] - layers[len(chosen)]) < n:
            return None
        for idx in range(pos, n):
            if n - idx < m - len(chosen):
                break
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"spanning search exceeded budget {budget}")
            got = rec(idx + 1, chosen + (idx,), state.extend(idx))
            if got is not None:
                return got
        return None

    witness = rec(0, (), _make_state(G, lam, terms))
    return witness, nodes


def _closure_spanning_min(G, lam, include_zero_terms):
    """Minimum size of a generating set (term counts unbounded)."""
    # scan m upward; a generating m-set exists iff m >= rank over each prime,
    # but we simply search: the universe is small whenever this is called.
    from .sumsets import sumset_mask
    n = G.n
    for m in range(0 if include_zero_terms and n == 1 else 1, n + 1):
        for subset in colex_combinations(n, m):
            if sumset_mask(G, subset, lam, ("all",)) == G.full_mask:
                return SearchResult(m, Subset(G, mask=mask_of(subset)), True, 0)
    return SearchResult(None, None, True, 0)


def min_spanning_size(G, lam, terms, budget=DEFAULT_BUDGET):
    """phi: the least m admitting an H-spanning m-subset; None if none."""
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    if isinstance(terms, str):
        terms = parse_terms(terms)
    n = G.n
    if terms[0] in ("all", "allpos") and lam in (NONNEG, SIGNED):
        return _closure_spanning_min(G, lam, terms[0] == "all")
    if terms == ("exact", 0) or terms == ("upto", 0):
        if n == 1:
            return SearchResult(0, Subset(G, ()), True, 0)
        return SearchResult(None, None, True, 0)
    total_nodes = 0
    for m in range(1, n + 1):
        try:
            if layer_size(lam, m, terms) < n:
                continue
        except InfiniteLayerError:
            pass
        witness, nodes = _spanning_witness(G, m, lam, terms, budget)
        total_nodes += nodes
        if witness is not None:
            return SearchResult(m, Subset(G, witness), True, total_nodes)
    return SearchResult(None, None, True, total_nodes)


def critical_number(G, lam, terms, exclude_zero=False, seed=None,
                    budget=DEFAULT_BUDGET):
    """chi: least m such that EVERY qualifying m-subset spans; None if none.

    Computed as 1 + (largest non-spanning subset size): any non-spanning set
    misses some element g, and "g not in the sumset" is hereditary, so each
    g is handled by a DFS sharing one global bound.
    """
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    if isinstance(terms, str):
        terms = parse_terms(terms)
    n = G.n
    universe = tuple(range(1, n)) if exclude_zero else tuple(range(n))
    usize = len(universe)
    if terms[0] in ("all", "allpos") and lam in (NONNEG, SIGNED):
        return _critical_closure(G, lam, universe)

    best = 0 if seed is None else seed
    nodes = 0
    for g in range(n):
        gbit = 1 << g

        def try_extend(state, x, gbit=gbit):
            nxt = state.extend(x)
            if nxt.selected_mask(terms) & gbit:
                return None
            return nxt

        state = _make_state(G, lam, terms)
        if state.selected_mask(terms) & gbit:
            continue
        got, _w, nds = _dfs_max_hereditary(
            universe, try_extend, state,
            seed=(best, ()), budget=budget - nodes)
        nodes += nds
        best = max(best, got)
        if best == usize:
            return SearchResult(None, None, True, nodes)
    return SearchResult(best + 1, None, True, nodes)


def _extend_subgroup(G, sub_mask, x):
    """Mask of the subgroup generated by an existing subgroup plus x."""
    out = sub_mask
    shifted = sub_mask
    while True:
        shifted = G.translate(shifted, x)
        if shifted & ~out == 0:
            return out
        out |= shifted


def critical_number_generating(G, lam, terms, budget=DEFAULT_BUDGET):
    """Least m such that every GENERATING m-subset spans; None if none.

    Same per-missing-element scheme as critical_number, except the bound is
    only advanced by sets that generate the whole group.
    """
    lam = parse_lambda(lam) if isinstance(lam, str) and lam not in (
        NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED) else lam
    if isinstance(terms, str):
        terms = parse_terms(terms)
    n = G.n
    universe = tuple(range(n))
    best = 0
    nodes = 0
    # DFS over g-avoiding sets; only generating ones update the bound, but
    # any avoiding set may still be extendable to a bigger generating one,
    # so pruning uses the remaining-count test alone.
    for g in range(n):
        gbit = 1 << g
        base_counts = _make_state(G, lam, terms)
        if base_counts.selected_mask(terms) & gbit:
            continue
        stack = [(0, 0, base_counts, 1)]  # pos, size, counts, subgroup mask
        while stack:
            pos, size, counts, sub = stack.pop()
            for idx in range(pos, n):
                if size + (n - idx) <= best:
                    break
                nodes += 1
                if nodes > budget:
                    raise BudgetExceededError(
                        f"critical search exceeded budget {budget}")
                nxt = counts.extend(idx)
                if nxt.selected_mask(terms) & gbit:
                    continue
                nsub = _extend_subgroup(G, sub, idx)
                if nsub == G.full_mask and size + 1 > best:
                    best = size + 1
                stack.append((idx + 1, size + 1, nxt, nsub))
    if best == n:
        return SearchResult(None, None, True, nodes)
    return SearchResult(best + 1, None, True, nodes)


def _critical_closure(G, lam, universe):
    """Critical number for unbounded term counts (subgroup generation)."""
    from .sumsets import sumset_mask
    best = 0
    for g in range(G.n):
        gbit = 1 << g
        # largest subset of universe generating a subgroup missing g:
        # it is (largest subgroup missing g) intersected with the universe,
        # since the union of all subsets avoiding g is itself closed.
        from .groups import all_subgroups
        for H in all_subgroups(G):
            if not H.mask & gbit:
                avail = [u for u in universe if H.mask >> u & 1]
                best = max(best, len(avail))
    if best == len(universe):
        return SearchResult(None, None, True, 0)
    return SearchResult(best + 1, None, True, 0)


# -- witness re-verification and enumeration ---------------------------------

def verify_witness(query, witness):
    """Recompute the defining predicate of a query on an explicit subset."""
    from .sumsets import sumset_mask
    G = query.group
    gens = tuple(witness)
    lam, terms = query.lam, query.terms
    if query.family in ("nu", "rho"):
        return sumset_mask(G, gens, lam, terms).bit_count()
    if query.family == "phi":
        return sumset_mask(G, gens, lam, terms) == G.full_mask
    if query.family == "sigma":
        return (sumset_mask(G, gens, lam, terms).bit_count()
                == layer_size(lam, len(gens), terms))
    if query.family == "tau":
        return not sumset_mask(G, gens, lam, terms) & 1
    if query.family == "mu":
        if query.k is not None:
            ka = sumset_mask(G, gens, lam, ("exact", query.k))
            la = sumset_mask(G, gens, lam, ("exact", query.l))
            return not ka & la
        s = query.terms[1]
        masks = [sumset_mask(G, gens, lam, ("exact", j)) for j in range(s + 1)]
        return all(not masks[a] & masks[b]
                   for a in range(s + 1) for b in range(a + 1, s + 1))
    raise ValueError(f"cannot verify witnesses for family {query.family!r}")


def evaluate(query, budget=DEFAULT_BUDGET, seed=None):
    """Run the brute-force search named by a QuantityQuery."""
    G = query.group
    fam = query.family
    if fam == "nu":
        return max_sumset_size(G, query.m, query.lam, query.terms,
                               budget=budget)
    if fam == "rho":
        return min_sumset_size(G, query.m, query.lam, query.terms,
                               budget=budget)
    if fam == "phi":
        return min_spanning_size(G, query.lam, query.terms, budget=budget)
    if fam == "sigma":
        return max_sidon_size(G, query.lam, query.terms, seed=seed,
                              budget=budget)
    if fam == "chi":
        if query.generating_only:
            return critical_number_generating(G, query.lam, query.terms,
                                              budget=budget)
        return critical_number(G, query.lam, query.terms,
                               exclude_zero=query.exclude_zero, budget=budget)
    if fam == "tau":
        return max_zero_sum_free(G, query.lam, query.terms, seed=seed,
                                 budget=budget)
    if fam == "mu":
        if query.k is not None:
            return max_sum_free(G, query.k, query.l, query.lam, seed=seed,
                                budget=budget)
        return max_sum_free_upto(G, query.terms[1], query.lam, seed=seed,
                                 budget=budget)
    raise ValueError(f"unknown family {fam!r}")


def enumerate_extremal(G, query, budget=DEFAULT_BUDGET):
    """All subsets attaining the extremum, canonicalized and deduplicated."""
    fam = query.family
    if fam in ("nu", "rho"):
        _res, witnesses = _sweep_sumset_size(
            G, query.m, query.lam, query.terms,
            minimize=(fam == "rho"), budget=budget, collect=True)
        return witnesses
    if fam == "tau":
        _res, witnesses = max_zero_sum_free(
            G, query.lam, query.terms, budget=budget, collect=True)
        return witnesses
    if fam == "mu" and query.k is not None:
        _res, witnesses = max_sum_free(
            G, query.k, query.l, query.lam, budget=budget, collect=True)
        return witnesses
    raise ValueError(f"enumeration not supported for family {fam!r}")
