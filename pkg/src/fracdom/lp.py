"""Exact rational linear programming and the LP-defined graph quantities.

The solver is a dense two-phase primal simplex over exact rationals.
Entering rule: most negative reduced cost with lowest column index on
ties; after _DEGENERATE_SWITCH consecutive degenerate pivots it falls
back to Bland's rule (lowest eligible index) until the objective
strictly improves again.  Bland phases cannot cycle and every strict
improvement reaches a basis that is never revisited, so the solver
terminates; all comparisons are exact, so it is fully deterministic.

Dual prices are read from the reduced costs of each row's initial unit
column, which lets gamma_star solve the small packing program (feasible
at the slack basis, no phase 1) and recover the covering weights from
the duals.  Every returned optimum is re-certified by exact
substitution before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, weight_sum
from .errors import BadParameter, EmptyGraph
from .exact import maximal_stable_sets
from .rational import RONE, RZERO, Rat, format_rat

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_RELATIONS = (">=", "<=", "==")
_DEGENERATE_SWITCH = 24


@dataclass(frozen=True)
class LpProblem:
    """min objective . x  subject to  row . x (rel) rhs, x >= 0."""

    objective: tuple
    constraints: tuple  # of (row, relation, rhs)

    def __post_init__(self):
        n = len(self.objective)
        for row, rel, _ in self.constraints:
            if len(row) != n:
                raise BadParameter(f"constraint row length {len(row)} != {n} variables")
            if rel not in _RELATIONS:
                raise BadParameter(f"unknown relation {rel!r}")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    status: str
    value: object = None
    assignment: tuple | None = None


def _certify(condition: bool, message: str):
    if not condition:
        raise RuntimeError(f"exact certification failed: {message}")


def _sub_scaled(target, row, f):
    # target - f * row, with fast paths for the common unit factors
    if f == 1:
        return [a - b for a, b in zip(target, row)]
    if f == -1:
        return [a + b for a, b in zip(target, row)]
    return [a - f * b for a, b in zip(target, row)]


def _pivot(tableau, zrow, basis, leave, enter):
    row = tableau[leave]
    piv = row[enter]
    if piv != 1:
        inv = RONE / piv
        row = [x * inv for x in row]
        tableau[leave] = row
    for i in range(len(tableau)):
        if i != leave:
            f = tableau[i][enter]
            if f:
                tableau[i] = _sub_scaled(tableau[i], row, f)
    f = zrow[enter]
    if f:
        zrow[:] = _sub_scaled(zrow, row, f)
    basis[leave] = enter


def _pivot_loop(tableau, zrow, basis, enterable) -> str:
    m = len(tableau)
    rhs = len(zrow) - 1
    bland = False
    degenerate_run = 0
    while True:
        enter = -1
        if bland:
            for j in enterable:
                if zrow[j] < 0:
                    enter = j
                    break
        else:
            best = RZERO
            for j in enterable:
                zj = zrow[j]
                if zj < best:
                    best = zj
                    enter = j
        if enter < 0:
            return OPTIMAL
        leave = -1
        best_ratio = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                r = tableau[i][rhs] / a
                if (
                    best_ratio is None
                    or r < best_ratio
                    or (r == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = r
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(tableau, zrow, basis, leave, enter)
        if best_ratio == 0:
            degenerate_run += 1
            if degenerate_run >= _DEGENERATE_SWITCH:
                bland = True
        else:
            degenerate_run = 0
            bland = False


def _solve(c, rows, rels, rhs):
    """Two-phase simplex core.

    Returns (status, value, assignment, duals) where duals satisfy
    value == duals . rhs for the original rows when status is optimal
    (redundant rows get dual 0).
    """
    n = len(c)
    m = len(rows)
    work_rows = []
    work_rels = []
    work_rhs = []
    flip = []
    for row, rel, b in zip(rows, rels, rhs):
        # Orient every row to rhs >= 0; '>= 0' rows become '<= 0' so
        # their slack can start basic and no artificial is needed.
        if b < 0 or (b == 0 and rel == ">="):
            work_rows.append([-x for x in row])
            work_rhs.append(-b)
            work_rels.append({">=": "<=", "<=": ">=", "==": "=="}[rel])
            flip.append(-1)
        else:
            work_rows.append(list(row))
            work_rhs.append(b)
            work_rels.append(rel)
            flip.append(1)

    ncols = n
    aux_col = [None] * m
    art_col = [None] * m
    for i in range(m):
        if work_rels[i] != "==":
            aux_col[i] = ncols
            ncols += 1
    for i in range(m):
        if work_rels[i] != "<=":
            art_col[i] = ncols
            ncols += 1
    width = ncols + 1

    tableau = []
    for i in range(m):
        row = [RZERO] * width
        for j, x in enumerate(work_rows[i]):
            if x:
                row[j] = Rat(x)
        if work_rels[i] == "<=":
            row[aux_col[i]] = RONE
        elif work_rels[i] == ">=":
            row[aux_col[i]] = -RONE
        if art_col[i] is not None:
            row[art_col[i]] = RONE
        row[width - 1] = Rat(work_rhs[i])
        tableau.append(row)

    basis = [aux_col[i] if work_rels[i] == "<=" else art_col[i] for i in range(m)]
    unit_col = list(basis)  # the column that starts as e_i, for dual readout
    artificial = {col for col in art_col if col is not None}
    enterable = [j for j in range(ncols) if j not in artificial]
    row_origin = list(range(m))

    if artificial:
        zrow = [RZERO] * width
        for i in range(m):
            if basis[i] in artificial:
                zrow = [a - b for a, b in zip(zrow, tableau[i])]
        for j in artificial:
            zrow[j] += RONE
        status = _pivot_loop(tableau, zrow, basis, enterable)
        _certify(status == OPTIMAL, "phase 1 is bounded below by zero")
        if zrow[width - 1] != 0:
            return INFEASIBLE, None, None, None
        # Pivot leftover artificials out at level zero; rows that offer
        # no pivot are redundant in the original variables and dropped.
        keep = []
        for i in range(len(tableau)):
            if basis[i] in artificial:
                enter = next(
                    (j for j in enterable if tableau[i][j] != 0), None
                )
                if enter is None:
                    continue
                _pivot(tableau, zrow, basis, i, enter)
            keep.append(i)
        tableau = [tableau[i] for i in keep]
        basis = [basis[i] for i in keep]
        unit_col = [unit_col[i] for i in keep]
        row_origin = [row_origin[i] for i in keep]

    zrow = [RZERO] * width
    for j in range(n):
        if c[j]:
            zrow[j] = Rat(c[j])
    for i in range(len(tableau)):
        b = basis[i]
        cb = c[b] if b < n else RZERO
        if cb:
            zrow = [a - cb * x for a, x in zip(zrow, tableau[i])]
    status = _pivot_loop(tableau, zrow, basis, enterable)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None, None

    assignment = [RZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            assignment[b] = tableau[i][width - 1]
    value = RZERO
    for j in range(n):
        if assignment[j]:
            value += Rat(c[j]) * assignment[j]

    duals = [RZERO] * m
    for i in range(len(tableau)):
        orig = row_origin[i]
        duals[orig] = flip[orig] * -zrow[unit_col[i]]
    return OPTIMAL, value, tuple(assignment), tuple(duals)


def solve_lp(problem: LpProblem) -> LpSolution:
    """Solve an exact-rational LP; the optimum is certified by
    substituting the assignment back into every constraint."""
    rows = [row for row, _, _ in problem.constraints]
    rels = [rel for _, rel, _ in problem.constraints]
    rhs = [b for _, _, b in problem.constraints]
    status, value, assignment, _ = _solve(problem.objective, rows, rels, rhs)
    if status != OPTIMAL:
        return LpSolution(status)
    for row, rel, b in problem.constraints:
        lhs = RZERO
        for coeff, x in zip(row, assignment):
            if coeff and x:
                lhs += Rat(coeff) * x
        if rel == ">=":
            _certify(lhs >= b, f"row violates {format_rat(Rat(b))} lower bound")
        elif rel == "<=":
            _certify(lhs <= b, "row violates upper bound")
        else:
            _certify(lhs == b, "equality row not met")
    _certify(all(x >= 0 for x in assignment), "negative variable in optimum")
    return LpSolution(OPTIMAL, value, assignment)


def emit_lp(problem: LpProblem) -> str:
    """Plain-text LP form: 'min' + objective, then one row per line with
    exact num/den coefficients, for external cross-checks."""
    lines = ["min " + " ".join(format_rat(Rat(x)) for x in problem.objective)]
    for row, rel, b in problem.constraints:
        coeffs = " ".join(format_rat(Rat(x)) for x in row)
        lines.append(f"{coeffs} {rel} {format_rat(Rat(b))}")
    return "\n".join(lines) + "\n"


# -- the domination LP quantities --------------------------------------


def max_outdegree_lower_bound(g: Digraph):
    """n / (max out-degree + 1), an exact lower bound on gamma*."""
    if g.n == 0:
        raise EmptyGraph("bound needs at least one vertex")
    return Rat(g.n, g.max_out_degree() + 1)


def gamma_star(g: Digraph):
    """(value, weights): the fractional domination number and an optimal
    fractional dominating function.

    Solved through the packing program max 1.y with y(N+[u]) <= 1,
    which starts feasible at the slack basis; the covering weights are
    the duals.  Feasibility (weights(N-[v]) >= 1 for all v), sign and
    total are re-verified exactly before returning.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("gamma* needs at least one vertex")
    objective = [-RONE] * n
    rows = []
    for u in range(n):
        m = g.closed_out_mask(u)
        rows.append([RONE if (m >> v) & 1 else RZERO for v in range(n)])
    status, value, _, duals = _solve(objective, rows, ["<="] * n, [RONE] * n)
    _certify(status == OPTIMAL, "packing program is feasible and bounded")
    total = -value
    weights = tuple(-d for d in duals)
    _certify(all(w >= 0 for w in weights), "covering weights nonnegative")
    _certify(sum(weights, RZERO) == total, "covering total equals packing optimum")
    for v in range(n):
        _certify(
            weight_sum(weights, g.closed_in_mask(v)) >= 1,
            f"closed in-neighborhood of {v} undercovered",
        )
    return total, weights


def farkas_weights(g: Digraph):
    """A probability weighting p with p(N-(v)) >= p(N+(v)) for every v.

    Realized as the feasibility LP {p >= 0, sum p = 1, per-vertex
    inequality}; the deterministic pivot rule fixes which feasible
    point is returned.  The output is verified exactly.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("weights need at least one vertex")
    rows = [[RONE] * n]
    rels = ["=="]
    rhs = [RONE]
    for v in range(n):
        row = [RZERO] * n
        for x in _bits(g.in_adj[v]):
            row[x] += RONE
        for y in _bits(g.out_adj[v]):
            row[y] -= RONE
        rows.append(row)
        rels.append(">=")
        rhs.append(RZERO)
    status, _, assignment, _ = _solve([RZERO] * n, rows, rels, rhs)
    _certify(status == OPTIMAL, "the weighting LP is always feasible")
    p = tuple(assignment)
    _certify(all(x >= 0 for x in p), "weights nonnegative")
    _certify(sum(p, RZERO) == 1, "weights sum to one")
    for v in range(n):
        _certify(
            weight_sum(p, g.in_adj[v]) >= weight_sum(p, g.out_adj[v]),
            f"in-weight below out-weight at {v}",
        )
    return p


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _stable_set_program(g: Digraph, cap):
    family = maximal_stable_sets(g, cap)
    covers = [g.out_closed(s) for s in family]
    return family, covers


def stable_lp_value(g: Digraph, cap: int | None = None):
    """(value, z): optimum of the covering program over maximal stable
    sets (minimize total z with every vertex v reached by total weight
    >= 1 over the sets whose closed out-neighborhood contains v).

    z maps each maximal stable set (bitmask) to its weight; columns are
    ordered by the deterministic enumeration of maximal_stable_sets.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("the stable-set program needs at least one vertex")
    family, covers = _stable_set_program(g, cap)
    k = len(family)
    rows = []
    for v in range(n):
        rows.append([RONE if (covers[s] >> v) & 1 else RZERO for s in range(k)])
    status, value, assignment, _ = _solve([RONE] * k, rows, [">="] * n, [RONE] * n)
    _certify(status == OPTIMAL, "the covering program is always feasible")
    for v in range(n):
        got = RZERO
        for s in range(k):
            if (covers[s] >> v) & 1:
                got += assignment[s]
        _certify(got >= 1, f"vertex {v} undercovered")
    _certify(sum(assignment, RZERO) == value, "objective mismatch")
    return value, {family[s]: assignment[s] for s in range(k)}


def stable_lp_dual_value(g: Digraph, cap: int | None = None):
    """Optimum of the packing dual: maximize total w subject to
    w(N+[S]) <= 1 for every maximal stable set S.  Equals
    stable_lp_value by strong duality (asserted downstream)."""
    n = g.n
    if n == 0:
        raise EmptyGraph("the stable-set program needs at least one vertex")
    _, covers = _stable_set_program(g, cap)
    rows = []
    for cover in covers:
        rows.append([RONE if (cover >> v) & 1 else RZERO for v in range(n)])
    status, value, assignment, _ = _solve(
        [-RONE] * n, rows, ["<="] * len(rows), [RONE] * len(rows)
    )
    _certify(status == OPTIMAL, "the packing program is feasible and bounded")
    for cover, row in zip(covers, rows):
        got = RZERO
        for v in range(n):
            if (cover >> v) & 1:
                got += assignment[v]
        _certify(got <= 1, "packing row overfull")
    return -value
