import pytest

from fracdom import (
    Digraph,
    EmptyGraph,
    INFEASIBLE,
    LpProblem,
    OPTIMAL,
    UNBOUNDED,
    directed_cycle,
    disjoint_union,
    emit_lp,
    farkas_weights,
    gamma_star,
    independence_number,
    max_outdegree_lower_bound,
    random_digraph,
    rat,
    rotational_tournament,
    solve_lp,
    stable_lp_dual_value,
    stable_lp_value,
    weight_sum,
)
from fracdom.rational import RZERO
from oracles import brute_gamma_star, brute_lp_min


def lp(objective, rows_rels_rhs):
    constraints = tuple(
        (tuple(row), rel, rhs) for row, rel, rhs in rows_rels_rhs
    )
    return LpProblem(tuple(objective), constraints)


def test_solve_trivial():
    sol = solve_lp(lp([rat(1)], [([rat(1)], ">=", rat(3))]))
    assert sol.status == OPTIMAL and sol.value == 3 and sol.assignment == (rat(3),)

    sol = solve_lp(
        lp([rat(1), rat(1)], [([rat(1), rat(1)], ">=", rat(1))])
    )
    assert sol.status == OPTIMAL and sol.value == 1


def test_solve_equality_and_infeasible():
    sol = solve_lp(lp([rat(0)], [([rat(1)], "==", rat(2))]))
    assert sol.status == OPTIMAL and sol.assignment == (rat(2),)

    sol = solve_lp(
        lp(
            [rat(1)],
            [([rat(1)], ">=", rat(1)), ([rat(-1)], ">=", rat(0))],
        )
    )
    assert sol.status == INFEASIBLE


def test_solve_unbounded():
    sol = solve_lp(lp([rat(-1)], [([rat(1)], ">=", rat(1))]))
    assert sol.status == UNBOUNDED


def test_stable_set_program_for_three_cycle():
    # independent oracle: enumerate the 3-variable LP's vertices
    one = rat(1)
    rows = [[one, RZERO, one], [one, one, RZERO], [RZERO, one, one]]
    expected = brute_lp_min([one] * 3, rows, [">="] * 3, [one] * 3)
    assert expected == rat(3, 2)
    value, _ = stable_lp_value(directed_cycle(3))
    assert value == expected


def test_solve_lp_against_vertex_enumeration():
    # seeded small programs, exact comparison with the brute oracle
    from fracdom.generators import stream_word

    for case in range(40):
        nvars = 1 + case % 3
        nrows = 1 + (case // 3) % 3
        entries = []
        for k in range(nrows * nvars + nvars + nrows):
            w = stream_word(5000 + case, k)
            entries.append(rat((w % 7) - 2, 1 + (w >> 8) % 3))
        rows = [
            entries[i * nvars : (i + 1) * nvars] for i in range(nrows)
        ]
        c = [abs(x) + 1 for x in entries[nrows * nvars : nrows * nvars + nvars]]
        rhs = entries[nrows * nvars + nvars :]
        rels = [">=" if (stream_word(9000 + case, i) & 1) else "<=" for i in range(nrows)]
        sol = solve_lp(lp(c, list(zip(rows, rels, rhs))))
        expected = brute_lp_min(c, rows, rels, rhs)
        if expected is None:
            assert sol.status == INFEASIBLE
        else:
            # objective > 0 on x >= 0, so the optimum is finite
            assert sol.status == OPTIMAL
            assert sol.value == expected


def test_gamma_star_examples():
    assert gamma_star(Digraph(1))[0] == 1
    assert gamma_star(directed_cycle(3))[0] == rat(3, 2)
    assert gamma_star(rotational_tournament(3))[0] == rat(5, 3)
    with pytest.raises(EmptyGraph):
        gamma_star(Digraph(0))


def test_gamma_star_rotational_family():
    # uniform 1/r is feasible and the out-degree bound meets it
    for r in range(2, 9):
        g = rotational_tournament(r)
        value, weights = gamma_star(g)
        assert value == rat(2 * r - 1, r)
        assert value == max_outdegree_lower_bound(g)
        for v in range(g.n):
            assert weight_sum(weights, g.closed_in_mask(v)) >= 1


def test_gamma_star_against_vertex_enumeration():
    for seed in range(30):
        n = 1 + seed % 5
        g = random_digraph(n, rat(1, 2), 4000 + seed)
        value, weights = gamma_star(g)
        assert value == brute_gamma_star(g)
        assert sum(weights, RZERO) == value


def test_gamma_star_bounds():
    for seed in range(40):
        n = 1 + seed % 8
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 6000 + seed)
        value, _ = gamma_star(g)
        alpha, _ = independence_number(g)
        assert value <= 2 * alpha
        assert value >= max_outdegree_lower_bound(g)
        from fracdom import domination_number

        assert domination_number(g)[0] >= value


def test_gamma_star_additive_over_disjoint_union():
    for seed in range(15):
        a = random_digraph(1 + seed % 5, rat(1, 2), 7000 + seed)
        b = random_digraph(1 + (seed * 3) % 5, rat(1, 2), 7100 + seed)
        u = disjoint_union([a, b])
        assert gamma_star(u)[0] == gamma_star(a)[0] + gamma_star(b)[0]


def test_farkas_examples():
    assert farkas_weights(Digraph(1)) == (rat(1),)
    # cyclic symmetry forces the uniform point on the 3-cycle
    assert farkas_weights(directed_cycle(3)) == (rat(1, 3),) * 3
    p = farkas_weights(Digraph(2))
    assert sum(p, RZERO) == 1 and all(x >= 0 for x in p)


def test_farkas_random_instances():
    for seed in range(60):
        n = 1 + seed % 9
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 8000 + seed)
        p = farkas_weights(g)
        assert sum(p, RZERO) == 1
        assert all(x >= 0 for x in p)
        for v in range(n):
            assert weight_sum(p, g.in_adj[v]) >= weight_sum(p, g.out_adj[v])


def test_stable_lp_examples():
    assert stable_lp_value(Digraph(1))[0] == 1
    assert stable_lp_value(Digraph(2))[0] == 1
    value, z = stable_lp_value(directed_cycle(3))
    assert value == rat(3, 2)
    assert set(z) == {1, 2, 4}  # the three singleton sets
    assert stable_lp_dual_value(Digraph(1)) == 1
    assert stable_lp_dual_value(directed_cycle(3)) == rat(3, 2)
    assert stable_lp_dual_value(Digraph(2)) == 1


def test_stable_lp_strong_duality_and_bound():
    for seed in range(30):
        n = 1 + seed % 8
        g = random_digraph(n, (rat(1, 4), rat(1, 2), rat(1))[seed % 3], 9000 + seed)
        value, z = stable_lp_value(g)
        assert value <= 2
        assert value == stable_lp_dual_value(g)
        assert sum(z.values(), RZERO) == value


def test_max_outdegree_lower_bound_examples():
    assert max_outdegree_lower_bound(directed_cycle(3)) == rat(3, 2)
    for r in (2, 3, 5):
        assert max_outdegree_lower_bound(rotational_tournament(r)) == rat(2 * r - 1, r)
    assert max_outdegree_lower_bound(Digraph(4)) == 4


def test_emit_lp():
    text = emit_lp(lp([rat(1), rat(1)], [([rat(1), RZERO], ">=", rat(1))]))
    assert text == "min 1/1 1/1\n1/1 0/1 >= 1/1\n"


def test_solver_deterministic():
    g = random_digraph(9, rat(1, 2), 123)
    assert gamma_star(g) == gamma_star(g)
    assert farkas_weights(g) == farkas_weights(g)
