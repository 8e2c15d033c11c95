import pytest

from fracdom import (
    Digraph,
    EmptyGraph,
    NotFeasible,
    clip_to_one,
    directed_cycle,
    frac_dom_from_lp,
    frac_dom_recursive,
    gamma_star,
    greedy_dominating_set,
    half_cover,
    independence_number,
    is_dominating,
    light_vertex,
    log2_bound,
    mask_of,
    random_digraph,
    rat,
    rotational_tournament,
    weight_sum,
)
from fracdom.generators import stream_word
from fracdom.rational import RZERO
from oracles import brute_is_stable


def unit_weights(n):
    return (rat(1),) * n


def random_weights(n, seed, allow_zero_total=False):
    w = []
    for v in range(n):
        word = stream_word(seed, v)
        num = word % 9
        den = 1 + (word >> 8) % 6
        w.append(rat(num, den))
    if not allow_zero_total and all(x == 0 for x in w):
        w[0] = rat(1)
    return tuple(w)


def test_light_vertex_examples():
    for r in (2, 3, 4):
        g = rotational_tournament(r)
        assert light_vertex(g, unit_weights(g.n)) == 0

    arc = Digraph(2, [(0, 1)])
    assert light_vertex(arc, unit_weights(2)) == 0
    # vertex 1 is in-heavy under unit weights
    assert weight_sum(unit_weights(2), arc.in_adj[1]) > weight_sum(
        unit_weights(2), arc.out_adj[1]
    )

    assert light_vertex(Digraph(3), unit_weights(3)) == 0
    with pytest.raises(EmptyGraph):
        light_vertex(Digraph(0), ())


def test_light_vertex_always_exists():
    for seed in range(80):
        n = 1 + seed % 9
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 100 + seed)
        p = random_weights(n, 200 + seed)
        v = light_vertex(g, p)
        assert weight_sum(p, g.in_adj[v]) <= weight_sum(p, g.out_adj[v])


def test_half_cover_examples():
    assert half_cover(directed_cycle(3), unit_weights(3)) == mask_of([0])
    assert half_cover(directed_cycle(5), unit_weights(5)) == mask_of([0, 2])
    assert half_cover(Digraph(2), unit_weights(2)) == mask_of([0, 1])


def test_half_cover_zero_weight_returns_empty():
    assert half_cover(directed_cycle(4), (RZERO,) * 4) == 0


def test_half_cover_property():
    # stable output and exact half coverage on seeded (G, p) pairs
    for seed in range(150):
        n = 1 + seed % 9
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 300 + seed)
        p = random_weights(n, 400 + seed, allow_zero_total=True)
        cover = half_cover(g, p)
        assert brute_is_stable(g, cover)
        assert 2 * weight_sum(p, g.out_closed(cover)) >= weight_sum(p, g.full_mask)


def test_greedy_examples():
    t = greedy_dominating_set(directed_cycle(3))
    assert t.round_count == 2 and t.size == 2

    t = greedy_dominating_set(directed_cycle(5))
    assert t.dominating == mask_of([0, 2, 4]) and t.round_count == 2

    t = greedy_dominating_set(Digraph(1))
    assert t.round_count == 1 and t.dominating == 1


def test_greedy_trace_invariants():
    for seed in range(60):
        n = 1 + seed % 10
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 500 + seed)
        t = greedy_dominating_set(g)
        assert is_dominating(g, t.dominating)
        assert t.round_count <= log2_bound(n)
        union_sets = 0
        union_covered = 0
        remaining = n
        for chosen, covered in t.rounds:
            assert brute_is_stable(g, chosen)
            assert chosen & covered == chosen
            assert union_covered & covered == 0  # disjoint across rounds
            # each round covers at least half of what remained
            assert 2 * covered.bit_count() >= remaining
            remaining -= covered.bit_count()
            union_sets |= chosen
            union_covered |= covered
        assert union_covered == g.full_mask
        assert union_sets == t.dominating
        alpha, _ = independence_number(g)
        assert t.size <= alpha * t.round_count


def test_frac_dom_recursive_examples():
    w = frac_dom_recursive(directed_cycle(3))
    assert w.weights == (rat(2, 3),) * 3
    assert w.total() == 2 and w.certified_bound == 2

    w = frac_dom_recursive(Digraph(1))
    assert w.weights == (rat(2),)  # raw construction, no clipping

    w = frac_dom_recursive(Digraph(2))
    assert w.total() <= 4
    for v in range(2):
        assert w.weights[v] >= 1  # isolated vertices must self-cover


def test_frac_dom_from_lp_examples():
    w = frac_dom_from_lp(directed_cycle(3))
    assert w.weights == (rat(1, 2),) * 3 and w.total() == rat(3, 2)

    w = frac_dom_from_lp(Digraph(2))
    assert w.weights == (rat(1), rat(1)) and w.certified_bound == 4

    assert frac_dom_from_lp(Digraph(1)).weights == (rat(1),)


def test_constructions_feasible_and_bounded():
    for seed in range(40):
        n = 1 + seed % 8
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 600 + seed)
        alpha, _ = independence_number(g)
        optimum = gamma_star(g)[0]
        for witness in (frac_dom_recursive(g), frac_dom_from_lp(g)):
            for v in range(n):
                assert weight_sum(witness.weights, g.closed_in_mask(v)) >= 1
            total = witness.total()
            assert total <= 2 * alpha
            assert total >= optimum
            assert witness.certified_bound == 2 * alpha


def test_frac_dom_recursive_deterministic():
    g = random_digraph(7, rat(1, 2), 4242)
    assert frac_dom_recursive(g).weights == frac_dom_recursive(g).weights


def test_clip_to_one():
    assert clip_to_one(Digraph(1), (rat(2),)) == (rat(1),)
    assert clip_to_one(directed_cycle(3), (rat(1, 2),) * 3) == (rat(1, 2),) * 3

    arc = Digraph(2, [(0, 1)])
    assert clip_to_one(arc, (rat(3, 2), rat(1, 4))) == (rat(1), rat(1, 4))
    with pytest.raises(NotFeasible):
        clip_to_one(arc, (rat(1, 4), rat(1, 4)))


def test_half_cover_extends_into_lp_column():
    # a maximalized half cover is one of the stable-set LP's columns and
    # keeps the coverage inequality
    from fracdom import maximal_stable_sets
    from fracdom.exact import extend_to_maximal_stable

    for seed in range(40):
        n = 1 + seed % 8
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 800 + seed)
        p = random_weights(n, 900 + seed)
        cover = half_cover(g, p)
        maximal = extend_to_maximal_stable(g, cover)
        assert maximal & cover == cover
        assert brute_is_stable(g, maximal)
        assert maximal in maximal_stable_sets(g)
        assert 2 * weight_sum(p, g.out_closed(maximal)) >= weight_sum(p, g.full_mask)


def test_clip_never_grows_and_still_dominates():
    for seed in range(25):
        n = 1 + seed % 7
        g = random_digraph(n, rat(1, 2), 700 + seed)
        w = frac_dom_recursive(g)
        clipped = clip_to_one(g, w.weights)
        assert sum(clipped, RZERO) <= w.total()
        for v in range(n):
            assert weight_sum(clipped, g.closed_in_mask(v)) >= 1
