"""Exact rational linear programming with checkable certificates.

Problems have free variables ``x``, inequality rows ``form(x) >= 0``, equality
rows ``form(x) == 0`` and an affine objective to minimize.  They typically
have few variables and many rows, so the solver runs a revised simplex with
Bland's rule on the dual in standard form::

    minimize   sum b_i y_i + sum f_j z_j
    subject to sum y_i a_i + sum z_j e_j = c,   y >= 0

whose simplex multipliers are (minus) the primal point.  Every outcome carries
a certificate that :func:`check_certificate` verifies without looking at the
solver.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linear import LinearForm

log = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Constraint:
    form: LinearForm
    equality: bool = False
    tag: str = ""


@dataclass
class LPProblem:
    objective: LinearForm
    constraints: list

    @property
    def dim(self) -> int:
        return self.objective.dim

    def __post_init__(self):
        self.constraints = [
            c if isinstance(c, Constraint) else Constraint(c.form, c.equality, getattr(c, "tag", ""))
            for c in self.constraints
        ]
        for c in self.constraints:
            if c.form.dim != self.dim:
                raise ValueError(f"row {c.tag!r} has dimension {c.form.dim}, objective has {self.dim}")


@dataclass
class LPOutcome:
    status: str
    point: tuple | None = None
    value: Fraction | None = None
    multipliers: list = field(default_factory=list)  # one per constraint row
    ray: tuple | None = None
    pivots: int = 0


class _Simplex:
    """Revised simplex for ``min cost.y, M y = rhs, y >= 0`` with Bland's rule.

    Columns are sparse dicts ``row -> value``.  ``B^-1`` is kept dense; the
    row count is the number of primal variables and stays small.
    """

    def __init__(self, columns, costs, rhs):
        self.m = len(rhs)
        self.N = len(columns)
        self.flip = [(-1 if v < 0 else 1) for v in rhs]
        self.cols = [{i: v * self.flip[i] for i, v in col.items() if v} for col in columns]
        self.costs = list(costs)
        self.rhs = [v * f for v, f in zip(rhs, self.flip)]
        m = self.m
        # artificial variable for row i has index N + i
        self.basis = [self.N + i for i in range(m)]
        self.binv = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        self.xb = list(self.rhs)
        self.pivots = 0

    def _column(self, j):
        if j >= self.N:
            return {j - self.N: Fraction(1)}
        return self.cols[j]

    def _ftran(self, col):
        binv = self.binv
        return [sum((binv[i][l] * v for l, v in col.items()), _ZERO) for i in range(self.m)]

    def _prices(self, cost):
        cb = [cost(b) for b in self.basis]
        binv = self.binv
        return [sum((cb[i] * binv[i][l] for i in range(self.m) if cb[i]), _ZERO) for l in range(self.m)]

    def _pivot(self, r, j, u):
        piv = u[r]
        rowr = [v / piv for v in self.binv[r]]
        xr = self.xb[r] / piv
        for i in range(self.m):
            if i == r or not u[i]:
                continue
            f = u[i]
            bi = self.binv[i]
            self.binv[i] = [bi[l] - f * rowr[l] for l in range(self.m)]
            self.xb[i] -= f * xr
        self.binv[r] = rowr
        self.xb[r] = xr
        self.basis[r] = j
        self.pivots += 1

    def _run(self, cost):
        """Iterate to optimality; returns None or ``(entering, u)`` on a ray."""
        while True:
            pi = self._prices(cost)
            basic = set(self.basis)
            enter = None
            for j in range(self.N):
                if j in basic:
                    continue
                col = self.cols[j]
                rc = cost(j) - sum((pi[l] * v for l, v in col.items()), _ZERO)
                if rc < 0:
                    enter = j
                    break
            if enter is None:
                return None
            u = self._ftran(self.cols[enter])
            best = None
            for i in range(self.m):
                if u[i] > 0:
                    ratio = self.xb[i] / u[i]
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < self.basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return enter, u
            self._pivot(best[1], enter, u)

    def phase1(self):
        """Returns ``None`` if feasible, else a Farkas vector ``w`` (w.M <= 0, w.rhs > 0)."""
        N = self.N

        def cost(j):
            return Fraction(1) if j >= N else _ZERO

        self._run(cost)
        infeas = sum((x for b, x in zip(self.basis, self.xb) if b >= N), _ZERO)
        if infeas > 0:
            pi = self._prices(cost)
            return [p * f for p, f in zip(pi, self.flip)]
        # drive zero-level artificials out where possible
        for r in range(self.m):
            if self.basis[r] < N:
                continue
            basic = set(self.basis)
            for j in range(N):
                if j in basic:
                    continue
                u = self._ftran(self.cols[j])
                if u[r] != 0:
                    self._pivot(r, j, u)
                    break
        return None

    def phase2(self):
        N = self.N
        costs = self.costs

        def cost(j):
            return costs[j] if j < N else _ZERO

        ray = self._run(cost)
        if ray is not None:
            enter, u = ray
            direction = [_ZERO] * N
            direction[enter] = Fraction(1)
            for i, b in enumerate(self.basis):
                if b < N:
                    direction[b] = -u[i]
            return "unbounded", direction
        y = [_ZERO] * N
        for b, x in zip(self.basis, self.xb):
            if b < N:
                y[b] = x
        pi = self._prices(cost)
        # undo the row flips: multipliers of the original system
        return "optimal", (y, [p * f for p, f in zip(pi, self.flip)])


def _dual_columns(problem: LPProblem):
    """Columns of the dual; returns (columns, costs, owner) with owner = (row, sign)."""
    columns, costs, owner = [], [], []
    for idx, con in enumerate(problem.constraints):
        col = dict(con.form.coeffs)
        columns.append(col)
        costs.append(con.form.constant)
        owner.append((idx, 1))
        if con.equality:
            columns.append({i: -v for i, v in col.items()})
            costs.append(-con.form.constant)
            owner.append((idx, -1))
    return columns, costs, owner


def _fold(y, owner, nrows):
    mult = [_ZERO] * nrows
    for val, (idx, sign) in zip(y, owner):
        if val:
            mult[idx] += sign * val
    return mult


def solve(problem: LPProblem) -> LPOutcome:
    """Minimize the objective exactly; deterministic for a fixed row order."""
    dim = problem.dim
    if dim < 1:
        raise ValueError("problem needs at least one variable")
    columns, costs, owner = _dual_columns(problem)
    nrows = len(problem.constraints)
    c = problem.objective.dense()
    c0 = problem.objective.constant

    sx = _Simplex(columns, costs, c)
    farkas = sx.phase1()
    if farkas is None:
        status, data = sx.phase2()
        pivots = sx.pivots
        if status == "optimal":
            y, pi = data
            point = tuple(-p for p in pi)
            value = problem.objective(point)
            return LPOutcome(OPTIMAL, point, value, _fold(y, owner, nrows), pivots=pivots)
        # dual unbounded: the ray is a Farkas certificate of primal infeasibility
        return LPOutcome(INFEASIBLE, multipliers=_fold(data, owner, nrows), pivots=pivots)

    # dual infeasible: primal has an improving direction; decide feasibility
    ray = tuple(-w for w in farkas)
    fx = _Simplex(columns, costs, [_ZERO] * dim)
    fx.phase1()
    status, data = fx.phase2()
    pivots = sx.pivots + fx.pivots
    if status == "unbounded":
        return LPOutcome(INFEASIBLE, multipliers=_fold(data, owner, nrows), pivots=pivots)
    _, pi = data
    point = tuple(-p for p in pi)
    return LPOutcome(UNBOUNDED, point=point, ray=ray, pivots=pivots)


def _feasible(problem: LPProblem, x) -> bool:
    for con in problem.constraints:
        v = con.form(x)
        if (con.equality and v != 0) or v < 0:
            return False
    return True


def _combine(problem: LPProblem, mult):
    """``sum mult_i * form_i`` as (constant, dense coefficients)."""
    dense = [_ZERO] * problem.dim
    const = _ZERO
    for con, lam in zip(problem.constraints, mult):
        if not lam:
            continue
        const += lam * con.form.constant
        for i, v in con.form.coeffs:
            dense[i] += lam * v
    return const, dense


def _signs_ok(problem: LPProblem, mult) -> bool:
    if len(mult) != len(problem.constraints):
        return False
    return all(con.equality or lam >= 0 for con, lam in zip(problem.constraints, mult))


def check_certificate(problem: LPProblem, outcome: LPOutcome) -> bool:
    """True iff the outcome's certificate proves its status in exact arithmetic."""
    try:
        mult = [Fraction(v) for v in outcome.multipliers]
        if outcome.status == OPTIMAL:
            x = outcome.point
            if x is None or len(x) != problem.dim or not _feasible(problem, x):
                return False
            if not _signs_ok(problem, mult):
                return False
            _, dense = _combine(problem, mult)
            if dense != problem.objective.dense():
                return False
            for con, lam in zip(problem.constraints, mult):
                if lam and not con.equality and con.form(x) != 0:
                    return False
            return outcome.value == problem.objective(x)
        if outcome.status == INFEASIBLE:
            if not _signs_ok(problem, mult):
                return False
            const, dense = _combine(problem, mult)
            return all(v == 0 for v in dense) and const < 0
        if outcome.status == UNBOUNDED:
            x, d = outcome.point, outcome.ray
            if x is None or d is None or len(x) != problem.dim or len(d) != problem.dim:
                return False
            if not _feasible(problem, x):
                return False
            for con in problem.constraints:
                slope = sum((v * d[i] for i, v in con.form.coeffs), _ZERO)
                if (con.equality and slope != 0) or slope < 0:
                    return False
            return sum((v * d[i] for i, v in problem.objective.coeffs), _ZERO) < 0
    except (TypeError, ValueError, ZeroDivisionError):
        return False
    return False


# -- alpha = beta identification ----------------------------------------------

def identify_alpha_beta(form: LinearForm) -> LinearForm:
    """Restrict a form on (alpha, beta, gamma) to points with alpha == beta.

    The result lives on (alpha, gamma), dimension ``2n``.
    """
    n = form.dim // 3
    items = []
    for i, v in form.coeffs:
        if i < n:
            items.append((i, v))
        elif i < 2 * n:
            items.append((i - n, v))
        else:
            items.append((i - n, v))
    return LinearForm.from_items(form.constant, items, 2 * n)


def expand_alpha_beta(x: Sequence, n: int) -> tuple:
    """Inverse of the identification on points: ``(alpha, gamma) -> (alpha, alpha, gamma)``."""
    x = tuple(x)
    return x[:n] + x[:n] + x[n:]


def build_problem(objective: LinearForm, rows, *, identify: bool = False) -> LPProblem:
    """LP from polytope rows, optionally on the ``alpha == beta`` slice."""
    cons = []
    for row in rows:
        form = identify_alpha_beta(row.form) if identify else row.form
        cons.append(Constraint(form, row.equality, row.tag))
    obj = identify_alpha_beta(objective) if identify else objective
    return LPProblem(obj, cons)
