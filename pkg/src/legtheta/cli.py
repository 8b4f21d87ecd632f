"""Command line interface.

Exit status: 0 success, 1 a check failed, 2 usage error or input that is
not realizable, 3 internal assertion (a bug).
"""
from __future__ import annotations

import argparse
import json
import sys

from .diagram import DiagramError, ParseError, parse, serialize, validate
from .fuzz import fuzz
from .invariants import classify_R, invariant_vector, is_standard_form, knot_invariants
from .pretzel import CrossingCapExceeded, verify_pretzel
from .realization import NotRealizable, plan_theta, realize_theta, theta_realizable
from .render import render
from .ribbon import components, linking_matrix, push_off, self_linking, vertex_type

OK, CHECK_FAILED, USAGE, INTERNAL = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _triple(text: str) -> tuple[int, int, int]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers, got {text!r}")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three integers, got {text!r}")
    return vals


def _tup(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _load(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}")
    return parse(text)


def _emit(args, command: str, code: int, result: dict, text: str) -> int:
    if getattr(args, "report", None) == "json":
        status = {OK: "ok", CHECK_FAILED: "fail"}.get(code, "error")
        print(json.dumps({"command": command, "status": status, "exit_code": code,
                          "result": result}, indent=2, sort_keys=True))
    else:
        print(text)
    return code


# ----------------------------------------------------------- subcommands

def _validate(args) -> int:
    try:
        d = _load(args.file)
        g = validate(d)
    except DiagramError as exc:
        res = {"valid": False, "error": str(exc)}
        if isinstance(exc, ParseError):
            res["line"] = exc.line
        return _emit(args, "validate", CHECK_FAILED, res, f"invalid: {exc}")
    res = {"valid": True, "mode": d.mode, "vertices": list(g.vertices),
           "edges": [e.name for e in g.edges], "cycles": [list(c) for c in g.cycles]}
    return _emit(args, "validate", OK, res,
                 f"valid {d.mode} diagram: {len(g.vertices)} vertices, {len(g.edges)} edges")


def _invariants(args) -> int:
    d = _load(args.file)
    if d.mode == "theta":
        iv = invariant_vector(d)
        res = {"tb": list(iv.tb), "rot": list(iv.rot), "R": iv.R,
               "vertex_type": vertex_type(d), "table1_case": None}
        text = f"tb={_tup(iv.tb)} rot={_tup(iv.rot)} R={iv.R}"
        if is_standard_form(d):
            res["table1_case"] = classify_R(d)[0]
            text += f" case={res['table1_case']}"
        return _emit(args, "invariants", OK, res, text)
    if d.mode == "knot":
        t, r = knot_invariants(d, d.edges[0].name)
        return _emit(args, "invariants", OK, {"tb": t, "rot": r}, f"tb={t} rot={r}")
    raise _Usage("invariants needs a theta or knot diagram")


def _realize(args) -> int:
    ok, cond, reason = theta_realizable(args.tb, args.rot)
    if not ok:
        return _emit(args, "realize", USAGE, {"realizable": False, "reason": reason},
                     f"not realizable: {reason}")
    try:
        d = realize_theta(args.tb, args.rot)
    except NotRealizable as exc:
        return _emit(args, "realize", USAGE, {"realizable": False, "reason": str(exc)},
                     f"not realizable: {exc}")
    plan = plan_theta(tuple(args.tb), tuple(args.rot))
    text = serialize(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    res = {"realizable": True, "case": cond, "diagram": text,
           "stabilizations": list(plan.stabilizations),
           "zswaps": list(plan.zswaps), "twists": list(plan.twists)}
    return _emit(args, "realize", OK, res, text.rstrip("\n"))


def _pushoff(args) -> int:
    d = _load(args.file)
    po = push_off(d)
    comps = components(po)
    sl = [self_linking(po, i) for i, _ in comps]
    lk = linking_matrix(po).tolist()
    vt = vertex_type(d) if d.mode == "theta" else None
    res = {"vertex_type": vt, "components": [{"index": i, "attribution": name, "self_linking": s}
                          for (i, name), s in zip(comps, sl)],
           "crossings": len(po.crossings), "writhe": self_linking(po, "all"),
           "linking_matrix": lk, "origins": {f"{o}{sgn:+d}": n for (o, sgn), n in sorted(po.origin_counts().items())}}
    lines = [f"{len(comps)} component(s), {len(po.crossings)} crossings"
             + (f", {vt} vertices" if vt else "")]
    lines += [f"  T{i + 1}: {name or '-'} sl={s}" for (i, name), s in zip(comps, sl)]
    if len(comps) > 1:
        lines.append(f"  linking matrix: {lk}")
    return _emit(args, "pushoff", OK, res, "\n".join(lines))


def _pretzel_check(args) -> int:
    d = _load(args.file)
    rep = verify_pretzel(d, cap=args.cap)
    code = OK if rep["passed"] else CHECK_FAILED
    lines = [f"coefficients {tuple(rep['coefficients'])}, push-off {rep['pushoff_crossings']} crossings"]
    lines += [f"  {name}: {verdict}" for name, verdict in rep["checks"].items()]
    lines.append("PASS" if rep["passed"] else "FAIL")
    return _emit(args, "pretzel-check", code, rep, "\n".join(lines))


def _fuzz(args) -> int:
    d = _load(args.file)
    rep = fuzz(d, args.walks, args.steps, args.seed)
    code = OK if rep["passed"] else CHECK_FAILED
    lines = [f"{'check':<18}{'passed':>8}{'failed':>8}"]
    lines += [f"{name:<18}{c['passed']:>8}{c['failed']:>8}" for name, c in rep["checks"].items()]
    if rep["table1_rows"]:
        lines.append("table 1 rows: " + ", ".join(f"{k}:{v}" for k, v in rep["table1_rows"].items()))
    for f in rep["failures"]:
        lines.append(f"FAIL walk {f['walk']} (seed {f['seed']}) step {f['step']}: "
                     f"{f['check']}: {f['detail']}")
        lines += [f"    {t}" for t in f["trace"]]
    lines.append("PASS" if rep["passed"] else "FAIL")
    return _emit(args, "fuzz", code, rep, "\n".join(lines))


def _render(args) -> int:
    d = _load(args.file)
    target = push_off(d) if args.pushoff else d
    text = render(target, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


# ----------------------------------------------------------- entry point

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legtheta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def reporting(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--report", choices=["text", "json"], default="text")
        return sp

    sp = reporting("validate", "parse and validate a diagram file")
    sp.add_argument("file")
    sp.set_defaults(run=_validate)

    sp = reporting("invariants", "tb and rot of the cycles, R and Table 1 case")
    sp.add_argument("file")
    sp.set_defaults(run=_invariants)

    sp = reporting("realize", "build a theta front with given invariants")
    sp.add_argument("--tb", type=_triple, required=True)
    sp.add_argument("--rot", type=_triple, required=True)
    sp.add_argument("-o", "--out")
    sp.set_defaults(run=_realize)

    sp = reporting("pushoff", "transverse push-off components and linking")
    sp.add_argument("file")
    sp.set_defaults(run=_pushoff)

    sp = reporting("pretzel-check", "compare the push-off with the predicted pretzel link")
    sp.add_argument("file")
    sp.add_argument("--cap", type=int, default=None,
                    help="crossing cap for polynomial checks (default from LEGTHETA_CROSSING_CAP)")
    sp.set_defaults(run=_pretzel_check)

    sp = reporting("fuzz", "seeded random move walks with invariant checks")
    sp.add_argument("file")
    sp.add_argument("--walks", type=int, default=10)
    sp.add_argument("--steps", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(run=_fuzz)

    sp = sub.add_parser("render", help="draw a diagram as SVG or ASCII")
    sp.add_argument("file")
    sp.add_argument("--format", choices=["svg", "ascii"], default="svg")
    sp.add_argument("--pushoff", action="store_true", help="draw the transverse push-off")
    sp.add_argument("-o", "--out")
    sp.set_defaults(run=_render)
    return p


def _glue_negatives(argv):
    """Let ``--tb -1,-5,-3`` through: argparse would read the value as a flag."""
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--tb", "--rot"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    parser = _parser()
    argv = _glue_negatives(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.run(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except CrossingCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except Exception as exc:     # assertion or other bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
