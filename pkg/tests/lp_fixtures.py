"""Deterministic suite of small exact LPs: hand-built cases plus seeded random ones."""

import random
from fractions import Fraction as F

from hornlab.linear import LinearForm
from hornlab.lp import Constraint, LPProblem


def _form(const, coeffs):
    return LinearForm.from_dense(const, coeffs)


def _lp(obj, rows, eqs=()):
    cons = [Constraint(_form(c, v)) for c, v in rows]
    cons += [Constraint(_form(c, v), True) for c, v in eqs]
    return LPProblem(_form(*obj), cons)


def _box(dim, bound):
    rows = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        rows.append((bound, [-x for x in e]))
        rows.append((bound, e))
    return rows


# name -> (problem, bounded); bounded means the feasible region is a polytope
def hand_built():
    out = {}
    out["nonneg"] = (_lp((0, [1]), [(0, [1])]), False)
    out["farkas_1d"] = (_lp((0, [1]), [(-1, [1]), (0, [-1])]), True)
    out["unbounded_1d"] = (_lp((0, [-1]), [(0, [1])]), False)
    out["triangle"] = (_lp((0, [-1, -1]), [(0, [1, 0]), (0, [0, 1]), (4, [-2, -1]), (4, [-1, -2])]), True)
    out["degenerate_corner"] = (
        _lp((0, [-1, -1]), [(0, [1, 0]), (0, [0, 1]), (1, [-1, 0]), (1, [0, -1]), (2, [-1, -1]), (3, [-2, -1]), (3, [-1, -2])]),
        True,
    )
    dup = [(0, [1, 0]), (0, [0, 1]), (4, [-2, -1]), (4, [-1, -2])]
    out["duplicated_rows"] = (_lp((0, [-1, -1]), dup + dup + [(8, [-4, -2])]), True)
    out["simplex_eq"] = (
        _lp((0, [3, 1, 2]), [(0, [1, 0, 0]), (0, [0, 1, 0]), (0, [0, 0, 1])], eqs=[(-1, [1, 1, 1])]),
        True,
    )
    out["infeasible_eq"] = (_lp((0, [1, 1]), _box(2, 1), eqs=[(-5, [1, 1])]), True)
    out["equality_pair"] = (_lp((0, [1, -1]), _box(2, 3), eqs=[(-1, [1, 1]), (1, [1, -1])]), True)
    # Klee-Minty cube, 3 variables
    km = [(0, [1, 0, 0]), (0, [0, 1, 0]), (0, [0, 0, 1]),
          (5, [-1, 0, 0]), (25, [-4, -1, 0]), (125, [-8, -4, -1])]
    out["klee_minty"] = (_lp((0, [-4, -2, -1]), km), True)
    out["fractional_vertex"] = (_lp((0, [-3, -5]), [(0, [1, 0]), (0, [0, 1]), (F(7, 2), [-1, 0]), (6, [0, -2]), (18, [-3, -2])]), True)
    out["free_unbounded_eq"] = (_lp((0, [-1, 0]), [(0, [0, 1])], eqs=[(0, [1, -1])]), False)
    return out


def random_suite(count=14, seed=20240601):
    rng = random.Random(seed)
    out = {}
    for idx in range(count):
        dim = rng.choice([2, 3, 4])
        rows = _box(dim, rng.randint(2, 5))
        for _ in range(rng.randint(2, 5)):
            rows.append((rng.randint(-3, 6), [rng.randint(-4, 4) for _ in range(dim)]))
        rows.append(rng.choice(rows))
        if idx % 4 == 3:
            # scaled copy of an existing row
            c, v = rng.choice(rows)
            s = rng.randint(2, 5)
            rows.append((c * s, [x * s for x in v]))
        obj = (0, [rng.randint(-5, 5) for _ in range(dim)])
        out[f"random_{idx:02d}"] = (_lp(obj, rows), True)
    return out


def all_fixtures():
    out = hand_built()
    out.update(random_suite())
    return out
