"""Enumeration of coefficient-one indices and their orbit structure.

Inside the scanner an index is a plain integer tuple ``(r, a, b, c, d)`` where
``a, b, c`` are positions in the lexicographic list of partitions of the
``r x (n - r)`` rectangle.  Lexicographic position order equals partition
order, so orbit minima can be taken on these tuples directly.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from . import young
from .schubert import QIndex, format_qindex, parse_qindex, product_unchecked
from .symmetry import G0_WORDS, pieri_shift

log = logging.getLogger(__name__)


class Stratum:
    """Lookup tables for one rectangle ``r x k``."""

    def __init__(self, r: int, k: int):
        self.r, self.k, self.n = r, k, r + k
        self.parts = young.enumerate_partitions(r, k)
        self.index = young.partition_index(r, k)
        n = self.n
        self.shift = []
        for a in self.parts:
            row = []
            for s in range(2 * n):
                a2, d2 = pieri_shift(a, s, k)
                row.append((self.index[a2], d2))
            self.shift.append(row)
        self.comp = [self.index[young.complement(a, k)] for a in self.parts]
        conj_index = young.partition_index(k, r)
        self.conj = [conj_index[young.conjugate(a, k)] for a in self.parts]


@lru_cache(maxsize=None)
def stratum(r: int, k: int) -> Stratum:
    return Stratum(r, k)


def default_strata(n: int, star_reduce: bool = True) -> list:
    return [(r, n - r) for r in range(1, n) if not star_reduce or r <= n - r]


def to_key(t: QIndex) -> tuple:
    idx = young.partition_index(t.r, t.k)
    return (t.r, idx[t.a], idx[t.b], idx[t.c], t.d)


def from_key(key: tuple, n: int) -> QIndex:
    r, a, b, c, d = key
    parts = young.enumerate_partitions(r, n - r)
    return QIndex(r, n - r, parts[a], parts[b], parts[c], d)


def _apply_letter(key, letter, n):
    r, a, b, c, d = key
    st = stratum(r, n - r)
    if letter == "s":
        return (n - r, st.conj[a], st.conj[b], st.conj[c], d)
    if letter == "w":
        return (r, b, a, c, d)
    # Poincare duality
    return (r, b, st.comp[c], st.comp[a], d)


def orbit_keys(key, n: int, group: str = "G"):
    """Valid orbit members of ``key`` and whether any image had negative degree."""
    members = set()
    invalid = False
    for word in ("",) if group == "G" else G0_WORDS:
        base = key
        for letter in word:
            base = _apply_letter(base, letter, n)
        r, a, b, c, d = base
        sh = stratum(r, n - r).shift
        sa, sb, sc = sh[a], sh[b], sh[c]
        for i in range(n):
            a2, da = sa[i]
            for j in range(n):
                b2, db = sb[j]
                c2, dc = sc[i + j]
                d2 = d + dc - da - db
                if d2 < 0:
                    invalid = True
                else:
                    members.add((r, a2, b2, c2, d2))
    return members, invalid


def _order(key):
    r, a, b, c, d = key
    return (d, r, a, b, c)


# -- coefficient-one enumeration ----------------------------------------------

def _row_keys(r: int, k: int, ai: int, degree_zero: bool = False) -> list:
    """Coefficient-one keys for the pairs ``(a, b)`` with ``a = parts[ai] <= b``.

    Each product is expanded once; for ``a != b`` the swapped index follows
    its partner directly.
    """
    st = stratum(r, k)
    a = st.parts[ai]
    index = st.index
    out = []
    for bi in range(ai, len(st.parts)):
        for (c, d), v in product_unchecked(a, st.parts[bi], r, k).items():
            if v == 1 and (d == 0 or not degree_zero):
                ci = index[c]
                out.append((r, ai, bi, ci, d))
                if bi != ai:
                    out.append((r, bi, ai, ci, d))
    return out


def _row_keys_task(args):
    return _row_keys(*args)


def _stratum_rows(r, k, start=0, workers=1, degree_zero=False) -> Iterator[tuple]:
    """Yield ``(ai, keys)`` per row of the pair table, in order."""
    total = len(stratum(r, k).parts)
    if workers <= 1:
        for ai in range(start, total):
            yield ai, _row_keys(r, k, ai, degree_zero)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [(r, k, ai, degree_zero) for ai in range(start, total)]
        for ai, keys in zip(range(start, total), pool.map(_row_keys_task, tasks, chunksize=4)):
            yield ai, keys


def scan_coefficient_one(n: int, strata=None, *, workers: int = 1, degree_zero: bool = False) -> Iterator[QIndex]:
    """Every coefficient-one index of the selected strata, exactly once.

    Order: stratum, then the pair ``a <= b`` lexicographically, then
    ``(c, d)``, each index followed by its ``a <-> b`` swap when ``a != b``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    for r, k in strata or default_strata(n):
        if r + k != n:
            raise ValueError(f"stratum ({r}, {k}) does not match n={n}")
        for _, keys in _stratum_rows(r, k, workers=workers, degree_zero=degree_zero):
            for key in keys:
                yield from_key(key, n)


def all_coefficient_one(n: int, *, degree_zero: bool = False, star_reduce: bool = True) -> Iterator[QIndex]:
    """The whole index set over every ``r``; ``r > k`` via conjugation when ``star_reduce``."""
    from .symmetry import star

    for r in range(1, n):
        k = n - r
        if r <= k or not star_reduce:
            yield from scan_coefficient_one(n, [(r, k)], degree_zero=degree_zero)
        else:
            for t in scan_coefficient_one(n, [(k, r)], degree_zero=degree_zero):
                yield star(t)


def brute_force_coefficient_one(n: int) -> list:
    """Independent count: evaluate every degree-consistent index directly."""
    from .schubert import quantum_lr

    out = []
    for r in range(1, n):
        k = n - r
        parts = young.enumerate_partitions(r, k)
        for a in parts:
            for b in parts:
                for c in parts:
                    excess = sum(a) + sum(b) - sum(c)
                    if excess < 0 or excess % n:
                        continue
                    t = QIndex(r, k, a, b, c, excess // n)
                    if quantum_lr(t) == 1:
                        out.append(t)
    return out


# -- reduction check ----------------------------------------------------------

@dataclass(frozen=True)
class OrbitRecord:
    rep: QIndex
    size: int
    reaches_d0: bool
    has_invalid: bool = False

    def line(self) -> str:
        return f"rep={format_qindex(self.rep)} size={self.size} reaches_d0={'true' if self.reaches_d0 else 'false'}"


@dataclass
class ScanReport:
    n: int
    strata: list
    orbits: dict = field(default_factory=dict)  # (r, k) -> list of OrbitRecord
    elapsed: float = 0.0

    def exceptional(self) -> list:
        return [o.rep for s in self.strata for o in self.orbits.get(s, []) if not o.reaches_d0]

    def orbit_count(self, s=None) -> int:
        if s is not None:
            return len(self.orbits.get(s, []))
        return sum(len(v) for v in self.orbits.values())

    def reducible_count(self, s) -> int:
        return sum(1 for o in self.orbits.get(s, []) if o.reaches_d0)

    def to_text(self) -> str:
        strata = ",".join(f"{r}:{k}" for r, k in self.strata)
        lines = [f"HORNLAB-SCAN v1 n={self.n} strata={strata}"]
        for s in self.strata:
            lines.extend(o.line() for o in self.orbits.get(s, []))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ScanReport":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if head[:2] != ["HORNLAB-SCAN", "v1"]:
            raise ValueError("not a HORNLAB-SCAN v1 report")
        fields = dict(f.split("=", 1) for f in head[2:])
        n = int(fields["n"])
        strata = [tuple(int(x) for x in s.split(":")) for s in fields["strata"].split(",") if s]
        report = cls(n, strata, {s: [] for s in strata})
        for ln in lines[1:]:
            rec = _parse_orbit_line(ln)
            report.orbits.setdefault((rec.rep.r, rec.rep.k), []).append(rec)
        return report


def _parse_orbit_line(ln: str) -> OrbitRecord:
    if not ln.startswith("rep="):
        raise ValueError(f"bad orbit line {ln!r}")
    body, rest = ln[4:].split(" size=", 1)
    size, reach = rest.split(" reaches_d0=")
    return OrbitRecord(parse_qindex(body), int(size), reach.strip() == "true")


def _record_orbit(key, n):
    members, invalid = orbit_keys(key, n, "Gt")
    rep = min(members, key=_order)
    return members, OrbitRecord(from_key(rep, n), len(members), rep[4] == 0, invalid)


def reduction_check(n: int, strata=None, *, workers: int = 1, resume: str | None = None) -> ScanReport:
    """Group the coefficient-one indices into orbits of the full symmetry group.

    For each orbit the report gives its canonical representative (orbit
    minimum under ``(d, r, a, b, c)``), its size and whether it contains a
    degree-zero element.  With ``resume`` set to a directory, progress is
    logged there after every row of the pair table and an interrupted run
    picks up where it stopped.
    """
    strata = list(strata or default_strata(n))
    report = ScanReport(n, strata, {s: [] for s in strata})
    t_start = time.perf_counter()
    cursor = {}
    if resume:
        os.makedirs(resume, exist_ok=True)
        cursor = _load_resume(resume, n, report)
    for s in strata:
        r, k = s
        if r + k != n:
            raise ValueError(f"stratum ({r}, {k}) does not match n={n}")
        start = cursor.get(f"{r}:{k}", 0)
        total = len(stratum(r, k).parts)
        if start >= total:
            continue
        seen = set()
        for rec in report.orbits[s]:
            seen |= orbit_keys(to_key(rec.rep), n, "Gt")[0]
        for ai, keys in _stratum_rows(r, k, start, workers):
            fresh = []
            for key in keys:
                if key in seen:
                    continue
                members, rec = _record_orbit(key, n)
                if rec.has_invalid:
                    log.warning("orbit of %s left the valid index set", rec.rep)
                seen |= members
                fresh.append(rec)
            report.orbits[s].extend(fresh)
            if resume:
                _append_resume(resume, s, ai + 1, fresh)
        log.info("stratum %s: %d orbits", s, len(report.orbits[s]))
    for s in strata:
        report.orbits[s].sort(key=lambda o: o.rep.order_key())
    report.elapsed = time.perf_counter() - t_start
    return report


def _load_resume(path, n, report):
    cursor_file = os.path.join(path, "cursor.json")
    log_file = os.path.join(path, "orbits.log")
    if not os.path.exists(cursor_file):
        return {}
    with open(cursor_file) as fh:
        state = json.load(fh)
    if state.get("n") != n:
        raise ValueError(f"resume state is for n={state.get('n')}, not n={n}")
    # only trust log lines covered by the cursor
    committed = state.get("lines", 0)
    with open(log_file) as fh:
        lines = fh.read().splitlines()[:committed]
    for ln in lines:
        rec = _parse_orbit_line(ln)
        key = to_key(rec.rep)
        members, invalid = orbit_keys(key, n, "Gt")
        rec = OrbitRecord(rec.rep, rec.size, rec.reaches_d0, invalid)
        report.orbits.setdefault((rec.rep.r, rec.rep.k), []).append(rec)
    return state["cursor"]


def _append_resume(path, s, next_a, fresh):
    cursor_file = os.path.join(path, "cursor.json")
    log_file = os.path.join(path, "orbits.log")
    state = {"n": None, "cursor": {}, "lines": 0}
    if os.path.exists(cursor_file):
        with open(cursor_file) as fh:
            state = json.load(fh)
    with open(log_file, "a") as fh:
        for rec in fresh:
            fh.write(rec.line() + "\n")
    state["n"] = s[0] + s[1]
    state["cursor"][f"{s[0]}:{s[1]}"] = next_a
    state["lines"] = state.get("lines", 0) + len(fresh)
    tmp = cursor_file + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh, sort_keys=True)
    os.replace(tmp, cursor_file)


# -- evaluation at fixed points -----------------------------------------------

class _PointSums:
    """Per-partition sums ``sum_i x_{k+i-a_i}`` for the three blocks of a point."""

    def __init__(self, point, r, k):
        st = stratum(r, k)
        self.blocks = []
        for vec in (point.alpha, point.beta, point.gamma):
            sums = []
            for a in st.parts:
                sums.append(sum((vec[k + i - a[i]] for i in range(r)), Fraction(0)))
            self.blocks.append(sums)

    def value(self, key) -> Fraction:
        _, a, b, c, d = key
        sa, sb, sc = self.blocks
        return d + sc[c] - sa[a] - sb[b]


def tight_filter(n: int, anchors, exclude: QIndex | None = None) -> list:
    """Coefficient-one indices whose half-space is tight at every anchor point."""
    anchors = list(anchors)
    sums = {}
    out = []
    for t in all_coefficient_one(n):
        if exclude is not None and t == exclude:
            continue
        s = (t.r, t.k)
        if s not in sums:
            sums[s] = [_PointSums(p, t.r, t.k) for p in anchors]
        key = to_key(t)
        if all(ps.value(key) == 0 for ps in sums[s]):
            out.append(t)
    return out


def evaluate_indices(point, indices: Iterable[QIndex]):
    """Yield ``(t, h_t(point))`` using cached partition sums."""
    sums = {}
    for t in indices:
        s = (t.r, t.k)
        if s not in sums:
            sums[s] = _PointSums(point, t.r, t.k)
        yield t, sums[s].value(to_key(t))


# -- separation ---------------------------------------------------------------

def orbit_rows(indices: Iterable[QIndex], *, swap: bool = True) -> Iterator:
    """Half-space rows of every valid ``G``-orbit member of the given indices.

    With ``swap`` the ``a <-> b`` partner of each index is included as well.
    Rows repeat when orbits overlap; pass them through ``dedup_rows`` if that
    matters.
    """
    from .polytope import Row, halfspace_form

    done = set()
    for t in indices:
        n = t.n
        starts = [to_key(t)]
        if swap:
            starts.append(_apply_letter(starts[0], "w", n))
        for key in starts:
            members, _ = orbit_keys(key, n, "G")
            for m in sorted(members, key=_order):
                if m in done:
                    continue
                done.add(m)
                u = from_key(m, n)
                yield Row(halfspace_form(u), False, str(u), u)


@dataclass
class SeparationResult:
    target: QIndex
    outcome: object  # LPOutcome
    point: object  # SpectrumTriple or None
    certified: bool
    rows_used: int
    verdict: object = None  # polytope.Verdict or None

    @property
    def value(self):
        return self.outcome.value

    def transcript(self) -> str:
        from .linear import format_rational as fr

        lines = [
            f"target {format_qindex(self.target)}",
            f"rows {self.rows_used}",
            f"status {self.outcome.status}",
        ]
        if self.point is not None:
            lines.append(f"value {fr(self.value)}")
            for name, vec in zip(("alpha", "beta", "gamma"), (self.point.alpha, self.point.beta, self.point.gamma)):
                lines.append(f"{name} " + " ".join(fr(x) for x in vec))
        lines.append(f"certificate {'ok' if self.certified else 'FAILED'}")
        if self.verdict is not None:
            v = self.verdict
            lines.append(f"verify {v.status} rows={v.rows_checked} tight={len(v.tight)} violated={len(v.violated)}")
            lines.extend(f"violated {tag} {fr(val)}" for tag, val in v.violated)
            lines.extend(f"tight {tag}" for tag in v.tight)
        return "\n".join(lines) + "\n"


def separation_experiment(target: QIndex, rows, *, identify: bool = False, verify=None) -> SeparationResult:
    """Minimize ``h_target`` over the alcove cut by ``rows`` and check the minimizer.

    ``rows`` are facet rows (:class:`polytope.Row`); the alcove is added here.
    ``identify`` restricts to ``alpha == beta`` (sensible when ``a == b``).
    ``verify``, if given, is a row stream the minimizer is then tested
    against; the verdict lists every violated and tight row.
    Infeasibility is an error: the callers always include a known feasible
    point.
    """
    from . import lp, polytope
    from .linear import SpectrumTriple

    n = target.n
    objective = polytope.halfspace_form(target)
    system = list(polytope.dedup_rows(itertools.chain(polytope.alcove_constraints(n), rows)))
    problem = lp.build_problem(objective, system, identify=identify)
    outcome = lp.solve(problem)
    certified = lp.check_certificate(problem, outcome)
    if outcome.status == lp.INFEASIBLE:
        raise RuntimeError("separation LP is infeasible; the constraint rows are inconsistent")
    point = None
    verdict = None
    if outcome.status == lp.OPTIMAL:
        x = lp.expand_alpha_beta(outcome.point, n) if identify else outcome.point
        point = SpectrumTriple.from_flat(x, n)
        if verify is not None:
            verdict = polytope.membership(point, verify)
    return SeparationResult(target, outcome, point, certified, len(system), verdict)
