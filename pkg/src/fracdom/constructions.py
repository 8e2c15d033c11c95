"""Constructive algorithms: light vertices, half covers, the greedy
logarithmic dominating set, and both fractional-dominating-function
constructions.

All tie-breaks are lowest-index, so every trace and witness is
deterministic and the worked examples in the tests are pinned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, bit, check_weights, iter_bits, weight_sum
from .errors import EmptyGraph, NotFeasible
from .exact import independence_number
from .lp import farkas_weights, stable_lp_value
from .rational import RONE, RTWO, RZERO


@dataclass(frozen=True)
class GreedyTrace:
    """Round-by-round certificate of the greedy halving cover.

    rounds[i] is (stable set chosen in round i, vertices first covered
    in round i), both as bitmasks on the original vertex labels; the
    covered sets are disjoint and union to V, and dominating is the
    union of the round sets.
    """

    rounds: tuple
    dominating: int

    @property
    def round_count(self) -> int:
        return len(self.rounds)

    @property
    def size(self) -> int:
        return self.dominating.bit_count()


@dataclass(frozen=True)
class FracDomWitness:
    """A fractional dominating function with its certified total bound."""

    weights: tuple
    certified_bound: object

    def total(self):
        return sum(self.weights, RZERO)


def log2_bound(n: int) -> int:
    """ceil(log2(n + 1)), computed exactly."""
    return n.bit_length()


def light_vertex(g: Digraph, weights) -> int:
    """Smallest-index vertex v with weights(N-(v)) <= weights(N+(v)).

    Such a vertex always exists for nonnegative weights: summing
    weights(v) * weights(N-(v)) over all v counts each arc's endpoint
    product once, and the same holds with N+, so the two totals agree
    and not every vertex can be strictly in-heavy.
    """
    if g.n == 0:
        raise EmptyGraph("light vertex needs at least one vertex")
    check_weights(weights, g.n)
    for v in range(g.n):
        if weight_sum(weights, g.in_adj[v]) <= weight_sum(weights, g.out_adj[v]):
            return v
    raise AssertionError("no light vertex found; weights must be invalid")


def half_cover(g: Digraph, weights) -> int:
    """A stable set S with weights(N+[S]) >= weights(V)/2, exactly.

    Recursion on the light vertex v: take v plus a half cover of the
    subgraph induced on the vertices independent of v, with the weights
    restricted.  A zero total weight returns the empty set (coverage is
    vacuous).  The recursion is tail-shaped, so it runs as a loop over
    a shrinking live mask; neighborhoods of the induced subgraph are
    the original ones intersected with the mask.
    """
    if g.n == 0:
        raise EmptyGraph("half cover needs at least one vertex")
    check_weights(weights, g.n)
    chosen = 0
    live = g.full_mask
    while live:
        if weight_sum(weights, live) == 0:
            break
        v = -1
        for u in iter_bits(live):
            if weight_sum(weights, g.in_adj[u] & live) <= weight_sum(
                weights, g.out_adj[u] & live
            ):
                v = u
                break
        assert v >= 0, "a light vertex always exists"
        chosen |= bit(v)
        live &= ~(g.und_mask(v) | bit(v))
    return chosen


def greedy_dominating_set(g: Digraph) -> GreedyTrace:
    """Dominating set built by repeated half covers with unit weights.

    Each round covers at least half of the still-uncovered vertices, so
    there are at most ceil(log2(n+1)) rounds and the result has at most
    alpha(G) * rounds vertices.
    """
    if g.n == 0:
        raise EmptyGraph("greedy domination needs at least one vertex")
    uncovered = g.full_mask
    rounds = []
    dominating = 0
    while uncovered:
        sub, verts = g.induced_subgraph(uncovered)
        chosen = half_cover(sub, (RONE,) * sub.n)
        covered_sub = sub.out_closed(chosen)
        chosen_lift = 0
        for i in iter_bits(chosen):
            chosen_lift |= bit(verts[i])
        covered_lift = 0
        for i in iter_bits(covered_sub):
            covered_lift |= bit(verts[i])
        rounds.append((chosen_lift, covered_lift))
        dominating |= chosen_lift
        uncovered &= ~covered_lift
    return GreedyTrace(tuple(rounds), dominating)


def frac_dom_recursive(g: Digraph) -> FracDomWitness:
    """Fractional dominating function with total <= 2 alpha(G), built by
    the combinatorial recursion.

    At each level, with p a probability weighting satisfying
    p(N-(v)) >= p(N+(v)) everywhere, set
    g(x) = 2 p(x) + sum over y independent of x of g_y(x) p(y), where
    g_y is the recursively built function on the subgraph induced on
    the vertices independent of y.  In a tournament no vertex has an
    independent partner, so the formula degenerates to g = 2p there.
    Subgraph results are memoized by original-vertex subset, and the
    independence number strictly drops at each level (asserted).
    """
    if g.n == 0:
        raise EmptyGraph("construction needs at least one vertex")
    memo: dict[int, dict[int, object]] = {}
    alpha_memo: dict[int, int] = {}

    def alpha_of(members: int) -> int:
        if members not in alpha_memo:
            sub, _ = g.induced_subgraph(members)
            alpha_memo[members] = independence_number(sub)[0]
        return alpha_memo[members]

    def build(members: int) -> dict[int, object]:
        if members in memo:
            return memo[members]
        sub, verts = g.induced_subgraph(members)
        level_alpha = alpha_of(members)
        p = farkas_weights(sub)
        values = [RTWO * p[i] for i in range(sub.n)]
        for y in range(sub.n):
            indep = sub.indep_mask(y)
            if indep == 0:
                continue
            sub_members = 0
            for i in iter_bits(indep):
                sub_members |= bit(verts[i])
            assert alpha_of(sub_members) <= level_alpha - 1
            gy = build(sub_members)
            py = p[y]
            if py:
                for x in iter_bits(indep):
                    values[x] += gy[verts[x]] * py
        result = {verts[i]: values[i] for i in range(sub.n)}
        memo[members] = result
        return result

    by_vertex = build(g.full_mask)
    weights = tuple(by_vertex[v] for v in range(g.n))
    bound = RTWO * alpha_of(g.full_mask)
    _check_witness(g, weights, bound)
    return FracDomWitness(weights, bound)


def frac_dom_from_lp(g: Digraph) -> FracDomWitness:
    """Fractional dominating function derived from an optimal covering
    of the stable-set program: g(v) = total weight of the maximal
    stable sets containing v."""
    if g.n == 0:
        raise EmptyGraph("construction needs at least one vertex")
    _, z = stable_lp_value(g)
    values = [RZERO] * g.n
    for members, weight in z.items():
        if weight:
            for v in iter_bits(members):
                values[v] += weight
    alpha, _ = independence_number(g)
    bound = RTWO * alpha
    weights = tuple(values)
    _check_witness(g, weights, bound)
    return FracDomWitness(weights, bound)


def _check_witness(g: Digraph, weights, bound):
    for v in range(g.n):
        assert weight_sum(weights, g.closed_in_mask(v)) >= 1
    assert sum(weights, RZERO) <= bound


def clip_to_one(g: Digraph, weights):
    """Cap a fractional dominating function at 1 per vertex.

    Every closed in-neighborhood either contains a vertex clipped to 1
    or is untouched, so the result still dominates; the total never
    grows.  Raises NotFeasible if the input did not dominate.
    """
    check_weights(weights, g.n)
    for v in range(g.n):
        if weight_sum(weights, g.closed_in_mask(v)) < 1:
            raise NotFeasible(
                f"input weighting leaves vertex {v}'s closed in-neighborhood below 1"
            )
    clipped = tuple(w if w <= 1 else RONE for w in weights)
    for v in range(g.n):
        assert weight_sum(clipped, g.closed_in_mask(v)) >= 1
    return clipped
