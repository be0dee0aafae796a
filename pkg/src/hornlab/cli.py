"""``hornlab`` command line.

Exit codes: 0 for inside, boundary or optimal; 2 for violated or infeasible;
3 for unbounded; 1 for usage and input errors.  All numbers are printed as
exact rationals and every output is deterministic for a given command line.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from importlib import resources

from . import formats, lp, polytope, scanner, schubert, symmetry

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_UNBOUNDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fixture_text(name: str) -> str:
    """Contents of a shipped data file (``t0.idx``, ``p.pt``, ...)."""
    return resources.files("hornlab").joinpath("data", name).read_text()


def _read(arg: str) -> str:
    if arg.startswith("fixture:"):
        return fixture_text(arg[len("fixture:"):])
    if arg == "-":
        return sys.stdin.read()
    with open(arg) as fh:
        return fh.read()


def _index_arg(arg: str) -> list:
    """An index literal, or a file (or ``fixture:name``) holding a list."""
    if ";" in arg:
        return [schubert.parse_qindex(arg)]
    indices = formats.parse_indices(_read(arg))
    if not indices:
        raise UsageError(f"{arg}: no index found")
    return indices


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _strata(text: str | None, n: int, both: bool):
    if not text:
        return scanner.default_strata(n, star_reduce=not both)
    out = []
    for item in text.split(","):
        r, _, k = item.partition(":")
        r = int(r)
        k = int(k) if k else n - r
        if r + k != n or r < 1 or k < 1:
            raise UsageError(f"stratum {item!r} does not fit n={n}")
        out.append((r, k))
    return out


# -- commands -----------------------------------------------------------------

def cmd_qlr(args) -> int:
    out = []
    for t in _index_arg(args.index):
        if args.classical:
            out.append(schubert.classical_lr(t.a, t.b, t.c) if t.d == 0 else 0)
        else:
            out.append(schubert.quantum_lr(t))
    _emit("".join(f"{v}\n" for v in out), args.output)
    return EXIT_OK


def cmd_orbit(args) -> int:
    group = "G" if args.group == "G" else "Gt"
    lines = []
    for t in _index_arg(args.index):
        if args.images:
            for g in symmetry.group_elements(t.n, group):
                img = symmetry.act_on_index(g, t)
                lines.append(f"{g} {img}")
        else:
            orb = symmetry.orbit(t, group)
            lines.extend(str(u) for u in orb)
            if orb.has_invalid:
                logging.warning("orbit of %s has images with negative degree", t)
    _emit("".join(ln + "\n" for ln in lines), args.output)
    return EXIT_OK


def cmd_scan(args) -> int:
    strata = _strata(args.strata, args.n, args.both)
    report = scanner.reduction_check(args.n, strata, workers=args.workers, resume=args.resume)
    _emit(report.to_text(), args.output)
    exc = report.exceptional()
    print(f"n={args.n} orbits={report.orbit_count()} exceptional={len(exc)}", file=sys.stderr)
    return EXIT_OK


def _rows_for(args, n: int, mode: str):
    if args.system:
        fields, _, rows = formats.parse_system(_read(args.system))
        if int(fields.get("n", n)) != n:
            raise UsageError(f"system is for n={fields.get('n')}, point has n={n}")
        return (polytope.Row(c.form, c.equality, c.tag or f"row {i + 1}") for i, c in enumerate(rows))
    indices = _index_arg(args.indices) if args.indices else None
    return polytope.generate_system(n, mode, indices=indices)


def _format_verdict(v: polytope.Verdict) -> str:
    fr = formats.fr
    lines = [f"HORNLAB-VERDICT v1 status={v.status} rows={v.rows_checked}"]
    lines += [f"violated {fr(val)} {tag}" for tag, val in v.violated]
    lines += [f"tight {tag}" for tag in v.tight]
    return "\n".join(lines) + "\n"


def cmd_member(args) -> int:
    p = formats.parse_point(_read(args.point))
    n = args.n or p.n
    if p.n != n:
        raise UsageError(f"point has n={p.n}, -n is {n}")
    verdict = polytope.membership(p, _rows_for(args, n, args.mode))
    _emit(_format_verdict(verdict), args.output)
    return EXIT_NEGATIVE if verdict.status == "violated" else EXIT_OK


def _outcome_code(status: str) -> int:
    return {lp.OPTIMAL: EXIT_OK, lp.INFEASIBLE: EXIT_NEGATIVE, lp.UNBOUNDED: EXIT_UNBOUNDED}[status]


def cmd_lp(args) -> int:
    problem = formats.parse_problem(_read(args.problem))
    if args.check:
        outcome = formats.parse_outcome(_read(args.check))
        ok = lp.check_certificate(problem, outcome)
        print("certificate ok" if ok else "certificate INVALID")
        return EXIT_OK if ok else EXIT_NEGATIVE
    outcome = lp.solve(problem)
    if not lp.check_certificate(problem, outcome):
        raise RuntimeError("solver produced an invalid certificate")
    _emit(formats.format_outcome(outcome), args.output)
    return _outcome_code(outcome.status)


def cmd_separate(args) -> int:
    if args.preset == "relaxation":
        target = _index_arg(args.target or "fixture:t0.idx")[0]
        rows = scanner.orbit_rows(_index_arg(args.indices or "fixture:roster.idx"))
        identify = True
    elif args.preset == "full":
        target = _index_arg(args.target or "fixture:t0.idx")[0]
        anchors = [formats.parse_point(fixture_text(f)) for f in ("p1.pt", "p2.pt")]
        tight = scanner.tight_filter(target.n, anchors, exclude=target)
        print(f"tight indices: {len(tight)}", file=sys.stderr)
        rows = (polytope.Row(polytope.halfspace_form(t), False, str(t), t) for t in tight)
        identify = True
    else:
        if not args.target:
            raise UsageError("--preset custom needs --target")
        target = _index_arg(args.target)[0]
        if args.indices:
            rows = (polytope.Row(polytope.halfspace_form(t), False, str(t), t) for t in _index_arg(args.indices))
        else:
            rows = (r for r in polytope.generate_system(target.n, args.rows) if r.index is not None)
        identify = args.identify
    verify = None
    if args.verify != "none":
        verify = polytope.generate_system(target.n, args.verify)
    result = scanner.separation_experiment(target, rows, identify=identify, verify=verify)
    _emit(result.transcript(), args.output)
    if not result.certified:
        raise RuntimeError("separation LP certificate failed to verify")
    if result.outcome.status == lp.UNBOUNDED:
        return EXIT_UNBOUNDED
    return EXIT_OK


def cmd_gen(args) -> int:
    indices = _index_arg(args.indices) if args.indices else None
    rows = polytope.generate_system(args.n, args.mode, indices=indices)
    if args.dedup:
        rows = polytope.dedup_rows(rows)
    if args.output:
        with open(args.output, "w") as fh:
            formats.write_system(fh, args.n, args.mode, rows, tags=args.tags)
    else:
        formats.write_system(sys.stdout, args.n, args.mode, rows, tags=args.tags)
    return EXIT_OK


def cmd_sample(args) -> int:
    rng = random.Random(args.seed)
    p = polytope.random_hull_point(args.n, rng)
    _emit(formats.format_point(p), args.output)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _size(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hornlab", description="Quantum LR coefficients and the multiplicative Horn polytope.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qlr", help="print N_t for an index (literal, file or fixture:name)")
    p.add_argument("index")
    p.add_argument("--classical", action="store_true", help="classical LR coefficient of (a, b, c); 0 unless d = 0")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_qlr)

    p = sub.add_parser("orbit", help="list the orbit of an index")
    p.add_argument("index")
    p.add_argument("--group", choices=("G", "Gt"), default="G")
    p.add_argument("--images", action="store_true", help="one line 'g image' per group element instead of the set")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("scan", help="orbit reduction check, HORNLAB-SCAN report")
    p.add_argument("-n", type=_size, required=True)
    p.add_argument("--strata", help="comma list r:k (default: r <= k)")
    p.add_argument("--both", action="store_true", help="scan r > k directly instead of via conjugation")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--resume", metavar="DIR", help="checkpoint directory")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("member", help="membership verdict for a HORNLAB-PT point")
    p.add_argument("point")
    p.add_argument("--mode", choices=polytope.MODES, default="delta")
    p.add_argument("-n", type=_size)
    p.add_argument("--indices", help="restrict facet rows to these indices")
    p.add_argument("--system", help="read rows from a HORNLAB-CS dump instead")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("lp", help="solve a HORNLAB-CS problem file exactly")
    p.add_argument("problem")
    p.add_argument("--check", metavar="OUTCOME", help="verify a HORNLAB-LP outcome instead of solving")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("separate", help="minimize a half-space over a facet subsystem")
    p.add_argument("--preset", choices=("relaxation", "full", "custom"), default="relaxation")
    p.add_argument("--target", help="index to minimize (default fixture:t0.idx)")
    p.add_argument("--indices", help="facet indices to use as constraints")
    p.add_argument("--rows", choices=polytope.MODES, default="deltak", help="custom preset: system supplying the facet rows")
    p.add_argument("--identify", action="store_true", help="custom preset: restrict to alpha = beta")
    p.add_argument("--verify", choices=("none",) + polytope.MODES, default="none")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("gen", help="dump a constraint system as HORNLAB-CS")
    p.add_argument("-n", type=_size, required=True)
    p.add_argument("--mode", choices=polytope.MODES, default="delta")
    p.add_argument("--indices", help="use these indices instead of scanning")
    p.add_argument("--tags", action="store_true", help="append provenance comments")
    p.add_argument("--dedup", action="store_true", help="drop repeated forms")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sample", help="random exact point of conv(GO)")
    p.add_argument("-n", type=_size, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sample)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"hornlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
