import io
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hornlab import formats, polytope, scanner
from hornlab.linear import LinearForm, SpectrumTriple
from hornlab.lp import LPOutcome

rationals = st.builds(F, st.integers(-999, 999), st.integers(1, 50))


@given(st.integers(1, 9).flatmap(lambda d: st.tuples(st.just(d), rationals, st.lists(rationals, min_size=d, max_size=d))))
def test_form_round_trip(args):
    dim, const, coeffs = args
    form = LinearForm.from_dense(const, coeffs)
    line = formats.format_row(form, False, "t")
    assert "." not in line.split("#")[0]
    text = f"HORNLAB-CS v1 dim={dim}\n{line}\n"
    _, _, rows = formats.parse_system(text)
    assert rows[0].form == form and rows[0].tag == "t"


@given(st.integers(2, 6).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=3, max_size=3)))
def test_point_round_trip(vecs):
    p = SpectrumTriple.make(*vecs, normalize=False)
    text = formats.format_point(p)
    assert formats.parse_point(text, normalize=False) == p
    assert formats.format_point(formats.parse_point(text, normalize=False)) == text


def test_point_normalizes_by_default():
    with pytest.warns(UserWarning):
        p = formats.parse_point("HORNLAB-PT v1 n=2\n0 1\n1/2 -1/2\n0 0\n")
    assert p.alpha == (F(1), F(0))


@given(
    st.sampled_from(["optimal", "infeasible", "unbounded"]),
    st.lists(rationals, min_size=1, max_size=6),
    st.lists(rationals, min_size=0, max_size=8),
)
def test_outcome_round_trip(status, point, mult):
    out = LPOutcome(status, tuple(point), point[0] if status == "optimal" else None, list(mult),
                    tuple(point) if status == "unbounded" else None)
    back = formats.parse_outcome(formats.format_outcome(out))
    assert (back.status, back.point, back.value, back.ray) == (out.status, out.point, out.value, out.ray)
    assert back.multipliers == out.multipliers


def test_indices_round_trip(data):
    items = [data["t0"]] + data["roster"] + data["prop4"] + list(scanner.all_coefficient_one(5))
    text = formats.format_indices(items)
    assert formats.parse_indices(text) == items
    assert formats.parse_indices("# only a comment\n\n") == []


@pytest.mark.parametrize("mode", polytope.MODES)
def test_system_dump_round_trip(mode):
    rows = list(polytope.generate_system(3, mode))
    buf = io.StringIO()
    count = formats.write_system(buf, 3, mode, rows, tags=True)
    assert count == len(rows)
    fields, obj, back = formats.parse_system(buf.getvalue())
    assert fields == {"n": "3", "mode": mode} and obj is None
    assert [(c.form, c.equality, c.tag) for c in back] == [(r.form, r.equality, r.tag) for r in rows]


@pytest.mark.parametrize(
    "text",
    [
        "",
        "HORNLAB-PT v1 n=2\n0 0\n",
        "HORNLAB-CS v2 n=2\n",
        "HORNLAB-CS v1\nGE 0\n",
        "HORNLAB-CS v1 dim=2\nGE 0 3:1\n",
        "HORNLAB-CS v1 dim=2\nLE 0 1:1\n",
        "HORNLAB-CS v1 dim=2\nGE 0 1\n",
        "HORNLAB-CS v1 dim=2\nGE 0 1:0.5\n",
    ],
)
def test_malformed_system(text):
    with pytest.raises(ValueError):
        formats.parse_system(text)


def test_malformed_point_and_index():
    with pytest.raises(ValueError):
        formats.parse_point("HORNLAB-PT v1 n=3\n0 0\n0 0\n0 0\n")
    with pytest.raises(ValueError):
        formats.parse_indices("1 1 ; 2 ; 0 ; 0 ; 0\n")
    with pytest.raises(ValueError):
        formats.parse_problem("HORNLAB-CS v1 dim=1\nGE 0 1:1\n")
