"""Exact exponential-time solvers for the integer graph quantities.

Everything here is deterministic: candidate vertices are visited in
increasing index and incumbents are replaced only on strict
improvement, so witnesses are reproducible.  Family and search caps are
configurable through the FRACDOM_STABLE_SET_CAP and
FRACDOM_SUBSET_BUDGET environment variables.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb

from .digraph import Digraph, bit, iter_bits, mask_of
from .errors import BudgetExceeded, EmptyGraph, TooLarge
from .rational import rat_ceil


def stable_set_cap() -> int:
    return int(os.environ.get("FRACDOM_STABLE_SET_CAP", "1000000"))


def subset_budget() -> int:
    return int(os.environ.get("FRACDOM_SUBSET_BUDGET", "20000000"))


def is_stable(g: Digraph, members: int) -> bool:
    """True iff no arc joins two members (in either direction)."""
    g._check_set(members)
    for v in iter_bits(members):
        if g.und_mask(v) & members:
            return False
    return True


def is_dominating(g: Digraph, members: int) -> bool:
    """True iff every vertex is a member or an out-neighbor of one."""
    return g.out_closed(members) == g.full_mask


def maximal_stable_sets(g: Digraph, cap: int | None = None) -> list[int]:
    """All maximal stable sets of the underlying graph, as bitmasks.

    Pivoting Bron-Kerbosch on the complement adjacency (a stable set
    here is a clique of the complement).  The result is sorted by mask
    value, which fixes the column order of the stable-set LP.  Raises
    TooLarge once the family exceeds the cap (default
    FRACDOM_STABLE_SET_CAP).
    """
    limit = stable_set_cap() if cap is None else cap
    n = g.n
    if n == 0:
        return []
    comp = [g.indep_mask(v) for v in range(n)]
    found: list[int] = []

    def extend(chosen: int, cand: int, excluded: int):
        if cand == 0 and excluded == 0:
            found.append(chosen)
            if len(found) > limit:
                raise TooLarge(
                    f"more than {limit} maximal stable sets; raise the cap to enumerate"
                )
            return
        pivot = -1
        pivot_cnt = -1
        for u in iter_bits(cand | excluded):
            c = (cand & comp[u]).bit_count()
            if c > pivot_cnt:
                pivot_cnt = c
                pivot = u
        for v in iter_bits(cand & ~comp[pivot]):
            extend(chosen | bit(v), cand & comp[v], excluded & comp[v])
            cand ^= bit(v)
            excluded |= bit(v)

    extend(0, g.full_mask, 0)
    found.sort()
    return found


def independence_number(g: Digraph) -> tuple[int, int]:
    """(alpha, witness): a maximum stable set of the underlying graph.

    Branch and bound on the complement (maximum clique) with a greedy
    coloring bound; candidates are expanded in decreasing color so the
    bound prunes early.
    """
    n = g.n
    if n == 0:
        return 0, 0
    comp = [g.indep_mask(v) for v in range(n)]
    best = 0
    best_mask = 0

    def expand(chosen: int, size: int, cand: int):
        nonlocal best, best_mask
        if cand == 0:
            if size > best:
                best = size
                best_mask = chosen
            return
        # Greedy color classes (independent sets of the complement);
        # a vertex colored c caps any clique through it at size + c.
        order: list[int] = []
        bound: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                order.append(v)
                bound.append(color)
                uncolored ^= b
                avail = (avail ^ b) & ~comp[v]
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            v = order[i]
            expand(chosen | bit(v), size + 1, cand & comp[v])
            cand ^= bit(v)

    expand(0, 0, g.full_mask)
    return best, best_mask


def domination_number(g: Digraph, gamma_star_hint=None) -> tuple[int, int]:
    """(gamma, witness): a minimum dominating set.

    Sizes are searched upward from the exact lower bound
    ceil(n / (max out-degree + 1)); a caller-provided fractional
    domination value raises the start to its ceiling.  For n >= 20 the
    LP bound is computed and the greedy log-cover supplies an upper
    bound witness; below that the search is plain subset enumeration.
    Raises BudgetExceeded if the enumeration would exceed
    FRACDOM_SUBSET_BUDGET subset checks.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("domination number needs at least one vertex")
    closed = [g.closed_out_mask(v) for v in range(n)]
    full = g.full_mask
    dplus = g.max_out_degree()
    start = (n + dplus) // (dplus + 1)
    if gamma_star_hint is not None:
        start = max(start, rat_ceil(gamma_star_hint))

    upper_mask = None
    upper = n
    if n >= 20:
        from .constructions import greedy_dominating_set
        from .lp import gamma_star

        if gamma_star_hint is None:
            start = max(start, rat_ceil(gamma_star(g)[0]))
        trace = greedy_dominating_set(g)
        upper_mask = trace.dominating
        upper = upper_mask.bit_count()

    budget = subset_budget()
    checked = 0
    for k in range(start, n + 1):
        if upper_mask is not None and k >= upper:
            return upper, upper_mask
        checked += comb(n, k)
        if checked > budget:
            raise BudgetExceeded(
                f"dominating-set search at size {k} exceeds {budget} subset checks"
            )
        for combo in combinations(range(n), k):
            m = 0
            for v in combo:
                m |= closed[v]
            if m == full:
                return k, mask_of(combo)
    return n, full  # every vertex dominates itself


def has_directed_triangle(g: Digraph) -> bool:
    """True iff some u -> v -> w -> u exists."""
    for u in range(g.n):
        for v in iter_bits(g.out_adj[u]):
            if g.out_adj[v] & g.in_adj[u]:
                return True
    return False


def extend_to_maximal_stable(g: Digraph, members: int) -> int:
    """Greedily grow a stable set to maximality (lowest index first).

    Used to relate half covers to the stable-set LP's columns: the
    closed out-neighborhood only grows, so any coverage bound on the
    input carries over to the extension.
    """
    candidates = g.full_mask & ~members
    for v in iter_bits(members):
        candidates &= g.indep_mask(v)
    while candidates:
        b = candidates & -candidates
        v = b.bit_length() - 1
        members |= b
        candidates &= g.indep_mask(v)
    return members
