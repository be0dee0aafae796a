"""Bit-exact text formats: constraint dumps, points, LP outcomes, index lists.

Every writer emits exact rationals as ``p/q`` (or a bare integer) and every
reader ignores blank lines and ``#`` comments, so a written file always
re-parses to an equal value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .linear import LinearForm, SpectrumTriple, format_rational, parse_rational
from .lp import Constraint, LPOutcome, LPProblem
from .schubert import QIndex, format_qindex, parse_qindex

fr = format_rational


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(line: str, magic: str) -> dict:
    parts = line.split()
    if parts[:2] != [magic, "v1"]:
        raise ValueError(f"expected a '{magic} v1' header, got {line!r}")
    fields = {}
    for f in parts[2:]:
        key, sep, val = f.partition("=")
        if not sep:
            raise ValueError(f"bad header field {f!r}")
        fields[key] = val
    return fields


# -- linear forms -------------------------------------------------------------

def format_form(form: LinearForm) -> str:
    terms = " ".join(f"{i + 1}:{fr(v)}" for i, v in form.coeffs)
    return f"{fr(form.constant)} {terms}".rstrip()


def parse_form(tokens: list, dim: int) -> LinearForm:
    if not tokens:
        raise ValueError("missing constant")
    items = []
    for tok in tokens[1:]:
        idx, sep, val = tok.partition(":")
        if not sep:
            raise ValueError(f"bad term {tok!r}; expected <idx>:<coeff>")
        i = int(idx)
        if not 1 <= i <= dim:
            raise ValueError(f"index {i} outside 1..{dim}")
        items.append((i - 1, parse_rational(val)))
    return LinearForm.from_items(parse_rational(tokens[0]), items, dim)


# -- constraint systems ---------------------------------------------------------

def format_row(form: LinearForm, equality: bool, tag: str | None = None) -> str:
    line = f"{'EQ' if equality else 'GE'} {format_form(form)}"
    if tag:
        line += f"  # {tag}"
    return line


def write_system(fh, n: int, mode: str, rows: Iterable, *, tags: bool = False) -> int:
    """Stream rows to ``fh`` in ``HORNLAB-CS v1`` form; returns the row count."""
    fh.write(f"HORNLAB-CS v1 n={n} mode={mode}\n")
    count = 0
    for row in rows:
        fh.write(format_row(row.form, row.equality, row.tag if tags else None) + "\n")
        count += 1
    return count


def format_problem(problem: LPProblem, *, n: int | None = None) -> str:
    head = "HORNLAB-CS v1"
    if n is not None:
        head += f" n={n}"
    lines = [f"{head} mode=lp dim={problem.dim}", f"MIN {format_form(problem.objective)}"]
    lines += [format_row(c.form, c.equality, c.tag or None) for c in problem.constraints]
    return "\n".join(lines) + "\n"


def parse_system(text: str):
    """Parse a dump; returns ``(fields, objective or None, [Constraint])``.

    A trailing ``# comment`` on a row becomes its tag.
    """
    lines = text.splitlines()
    body = [(no, raw) for no, raw in enumerate(lines, 1) if raw.split("#", 1)[0].strip()]
    if not body:
        raise ValueError("empty constraint file")
    fields = _header(body[0][1].split("#", 1)[0].strip(), "HORNLAB-CS")
    if "dim" in fields:
        dim = int(fields["dim"])
    elif "n" in fields:
        dim = 3 * int(fields["n"])
    else:
        raise ValueError("header needs n=<n> or dim=<d>")
    objective = None
    rows = []
    for no, raw in body[1:]:
        content, _, comment = raw.partition("#")
        tokens = content.split()
        kind = tokens[0]
        try:
            form = parse_form(tokens[1:], dim)
        except ValueError as exc:
            raise ValueError(f"line {no}: {exc}") from None
        if kind == "MIN":
            if objective is not None:
                raise ValueError(f"line {no}: second objective")
            objective = form
        elif kind in ("GE", "EQ"):
            rows.append(Constraint(form, kind == "EQ", comment.strip()))
        else:
            raise ValueError(f"line {no}: unknown row kind {kind!r}")
    return fields, objective, rows


def parse_problem(text: str) -> LPProblem:
    _, objective, rows = parse_system(text)
    if objective is None:
        raise ValueError("LP file has no MIN line")
    return LPProblem(objective, rows)


# -- points -------------------------------------------------------------------

def format_point(p: SpectrumTriple) -> str:
    lines = [f"HORNLAB-PT v1 n={p.n}"]
    for vec in (p.alpha, p.beta, p.gamma):
        lines.append(" ".join(fr(x) for x in vec))
    return "\n".join(lines) + "\n"


def parse_point(text: str, *, normalize: bool = True) -> SpectrumTriple:
    body = list(_content_lines(text))
    if len(body) != 4:
        raise ValueError("point file needs a header and exactly three vectors")
    n = int(_header(body[0][1], "HORNLAB-PT")["n"])
    vecs = []
    for no, line in body[1:]:
        vec = [parse_rational(tok) for tok in line.split()]
        if len(vec) != n:
            raise ValueError(f"line {no}: expected {n} entries, got {len(vec)}")
        vecs.append(vec)
    return SpectrumTriple.make(*vecs, normalize=normalize)


# -- LP outcomes --------------------------------------------------------------

def format_outcome(out: LPOutcome) -> str:
    lines = ["HORNLAB-LP v1", f"status {out.status}"]
    if out.value is not None:
        lines.append(f"value {fr(out.value)}")
    if out.point is not None:
        lines.append("point " + " ".join(fr(x) for x in out.point))
    if out.ray is not None:
        lines.append("ray " + " ".join(fr(x) for x in out.ray))
    mult = " ".join(f"{i + 1}:{fr(v)}" for i, v in enumerate(out.multipliers) if v)
    lines.append(f"rows {len(out.multipliers)}")
    lines.append(f"mult {mult}".rstrip())
    return "\n".join(lines) + "\n"


def parse_outcome(text: str) -> LPOutcome:
    body = list(_content_lines(text))
    if not body:
        raise ValueError("empty outcome file")
    _header(body[0][1], "HORNLAB-LP")
    data = {}
    for _, line in body[1:]:
        key, _, rest = line.partition(" ")
        data[key] = rest.split()
    out = LPOutcome(data["status"][0])
    if "value" in data:
        out.value = parse_rational(data["value"][0])
    if "point" in data:
        out.point = tuple(parse_rational(x) for x in data["point"])
    if "ray" in data:
        out.ray = tuple(parse_rational(x) for x in data["ray"])
    mult = [Fraction(0)] * int(data.get("rows", ["0"])[0])
    for tok in data.get("mult", []):
        i, _, v = tok.partition(":")
        mult[int(i) - 1] = parse_rational(v)
    out.multipliers = mult
    return out


# -- index lists --------------------------------------------------------------

def format_indices(indices: Iterable[QIndex]) -> str:
    return "".join(format_qindex(t) + "\n" for t in indices)


def parse_indices(text: str) -> list:
    out = []
    for no, line in _content_lines(text):
        try:
            out.append(parse_qindex(line))
        except ValueError as exc:
            raise ValueError(f"line {no}: {exc}") from None
    return out
