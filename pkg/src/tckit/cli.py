"""Command-line driver.

Exit codes: 0 success, 1 domain or validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fileformat
from .category import pentagon_check
from .duality import global_dimension, squared_norms
from .errors import ParseError, TCKitError
from .frobenius import build_frobenius, frobenius_axioms_check, separability_check, window_element
from .library import BUILTIN_NAMES, builtin
from .scalars import FieldSpec, Scalar
from .structures import pivotal_solve, quadruple_dual_check, quantum_dimensions, spherical_check

__all__ = ["main", "run_command"]

CATEGORY_COMMANDS = ("validate", "gdim", "norms", "pivotal", "spherical", "quaddual", "window", "separable", "frobenius-check")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tckit", description="Exact computations with fusion categories and framed-bordism words.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in CATEGORY_COMMANDS:
        c = sub.add_parser(name)
        c.add_argument("file", nargs="?", help="category file (JSON)")
        c.add_argument("--builtin", help="use a built-in category instead of a file")
        c.add_argument("--field", help="field for a built-in: rational, cyclotomic:n or prime:p")
        c.add_argument("--skip-pentagon", action="store_true", help="skip the pentagon check when loading a file")
        c.add_argument("--json", action="store_true", help="machine-readable output")
    c = sub.add_parser("circle-invariant")
    c.add_argument("file", help="polygon file, one 'x y' pair per line")
    c.add_argument("--side", choices=("left", "right"), default="left")
    c.add_argument("--json", action="store_true")
    b = sub.add_parser("bordism")
    bsub = b.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = bsub.add_parser("check")
    c.add_argument("file", help="word file with 'lhs = ...' and 'rhs = ...' lines")
    c.add_argument("--budget", type=int)
    c.add_argument("--json", action="store_true")
    b = sub.add_parser("builtin")
    bsub = b.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = bsub.add_parser("list")
    c.add_argument("--json", action="store_true")
    c = bsub.add_parser("export")
    c.add_argument("name")
    c.add_argument("--field")
    c.add_argument("-o", "--output")
    return p


def _field(text):
    if text is None:
        return None
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _category(args):
    if args.builtin and args.file:
        raise _UsageError("give either a category file or --builtin, not both")
    if args.builtin:
        return builtin(args.builtin, _field(args.field))
    if not args.file:
        raise _UsageError("a category file or --builtin is required")
    if args.field:
        raise _UsageError("--field only applies to built-ins; a file names its own field")
    skip = args.skip_pentagon or args.command == "validate"
    return fileformat.load_category(args.file, check_pentagon=not skip)


def _show(x: Scalar) -> str:
    exact = str(x)
    approx = x.approx()
    return exact if exact == approx or x.field.kind == "prime" else f"{exact}  (≈ {approx})"


class _Out:
    def __init__(self, as_json: bool, stream):
        self.json = as_json
        self.stream = stream
        self.doc = {}

    def line(self, text=""):
        if not self.json:
            print(text, file=self.stream)

    def put(self, **kw):
        self.doc.update(kw)

    def finish(self):
        if self.json:
            print(json.dumps(self.doc, ensure_ascii=False), file=self.stream)


def _enc(x: Scalar):
    return fileformat.encode_scalar(x)


def _run_category(args, out: _Out) -> int:
    F = _category(args)
    ring = F.ring
    names = ring.labels
    out.put(command=args.command, category=F.name, field=str(F.field))
    cmd = args.command
    if cmd == "validate":
        report = pentagon_check(F) if not args.skip_pentagon else None
        ok = report is None or report.passed
        out.put(valid=ok, rank=ring.rank, entries=len(F.F))
        out.line(f"{F.name} over {F.field}: rank {ring.rank}, {len(F.F)} F-entries")
        out.line("ring axioms: pass")
        out.line("F-table: complete, unit-normalized, invertible")
        if report is None:
            out.line("pentagon: skipped")
        else:
            out.put(pentagon=str(report), witness=list(report.witness) if report.witness else None)
            out.line(str(report))
        return 0 if ok else 1
    if cmd == "gdim":
        d = global_dimension(F)
        out.put(value=_enc(d))
        out.line(f"global dimension: {_show(d)}")
        return 0
    if cmd == "norms":
        norms = squared_norms(F)
        out.put(norms={names[i]: _enc(v) for i, v in enumerate(norms)})
        for i, v in enumerate(norms):
            out.line(f"‖{names[i]}‖ = {_show(v)}")
        return 0
    if cmd in ("pivotal", "spherical"):
        sols = pivotal_solve(F)
        rows = []
        for n, P in enumerate(sols):
            row = {"p": {names[i]: _enc(P[i]) for i in range(ring.rank)}}
            if cmd == "spherical":
                dims = quantum_dimensions(F, P)
                row["dims"] = {names[i]: _enc(v) for i, v in enumerate(dims)}
                row["spherical"] = spherical_check(F, P)
            rows.append(row)
            text = ", ".join(f"p[{names[i]}] = {P[i]}" for i in range(ring.rank))
            if cmd == "spherical":
                text += f"  -> {'spherical' if row['spherical'] else 'not spherical'}"
            out.line(f"{n + 1}. {text}")
        out.put(count=len(sols), solutions=rows)
        out.line(f"{len(sols)} pivotal structure{'s' if len(sols) != 1 else ''}")
        return 0
    if cmd == "quaddual":
        rep = quadruple_dual_check(F)
        witness = None if rep.witness is None else {names[i]: _enc(v) for i, v in enumerate(rep.witness)}
        out.put(solvable=rep.solvable, distinguished=names[rep.distinguished], witness=witness, solutions=rep.solutions)
        out.line(f"solvable: {str(rep.solvable).lower()}")
        out.line(f"distinguished object: {names[rep.distinguished]}")
        if rep.witness is not None:
            out.line("witness: " + ", ".join(f"q[{names[i]}] = {v}" for i, v in enumerate(rep.witness)))
        return 0 if rep.solvable else 1
    if cmd == "window":
        w = window_element(build_frobenius(F))
        d = global_dimension(F)
        out.put(value=_enc(w), equals_global_dimension=(w == d))
        out.line(f"window element: {_show(w)}")
        out.line(f"equals global dimension: {str(w == d).lower()}")
        return 0
    if cmd == "separable":
        rep = separability_check(F)
        out.put(separable=rep.separable, dimension=_enc(rep.dimension))
        out.line(str(rep.separable).lower())
        out.line(f"global dimension: {_show(rep.dimension)}")
        return 0
    rep = frobenius_axioms_check(build_frobenius(F))
    out.put(passed=rep.passed, failures=[list(f) for f in rep.failures])
    out.line("Frobenius axioms: " + ("pass" if rep.passed else "FAIL"))
    for label, k, vals in rep.failures:
        out.line(f"  {label} (factor {k}): {', '.join(vals)}")
    return 0 if rep.passed else 1


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _run_circle(args, out: _Out) -> int:
    from .bordism.circles import circle_invariant, parse_polygon, turning_number

    c = parse_polygon(_read(args.file), args.side)
    t = turning_number(c)
    inv = circle_invariant(c)
    out.put(command="circle-invariant", side=args.side, turning_number=t, invariant=inv)
    out.line(f"turning number: {t}")
    out.line(f"invariant: {inv}")
    return 0


def _run_bordism(args, out: _Out) -> int:
    from .bordism.grammar import parse_word_file
    from .bordism.rewrite import default_rules, replay_validate, rewrite_check
    from .bordism.words import two_cell

    wf = parse_word_file(_read(args.file))
    lhs, rhs = two_cell(wf.lhs), two_cell(wf.rhs)
    budget = args.budget if args.budget is not None else wf.budget
    rules = default_rules()
    result = rewrite_check(lhs, rhs, rules, budget)
    out.put(command="bordism check", lhs=str(wf.lhs), rhs=str(wf.rhs))
    if not result:
        out.put(proved=False, explored=result.explored, budget=result.budget)
        out.line(result.render())
        return 1
    valid = replay_validate(result, rules)
    out.put(
        proved=True,
        replay_valid=valid,
        explored=result.explored,
        steps=[{"rule": s.rule, "layers": [list(l) for l in s.after]} for s in result.steps],
    )
    out.line(result.render())
    out.line(f"replay validation: {'pass' if valid else 'FAIL'}")
    return 0 if valid else 1


def _run_builtin(args, out: _Out) -> int:
    if args.action == "list":
        out.put(builtins=list(BUILTIN_NAMES))
        for n in BUILTIN_NAMES:
            F = builtin(n)
            out.line(f"{n:15s} rank {F.ring.rank}  over {F.field}")
        out.line("vec_z<n>        any cyclic group")
        return 0
    F = builtin(args.name, _field(args.field))
    text = fileformat.export_category(F)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.stream.write(text)
    return 0


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return 2
    out = _Out(getattr(args, "json", False), stdout)
    try:
        if args.command in CATEGORY_COMMANDS:
            code = _run_category(args, out)
        elif args.command == "circle-invariant":
            code = _run_circle(args, out)
        elif args.command == "bordism":
            code = _run_bordism(args, out)
        else:
            code = _run_builtin(args, out)
    except _UsageError as exc:
        print(f"tckit: {exc}", file=stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return 2
    except TCKitError as exc:
        _fail(out, exc, stderr)
        return 1
    out.finish()
    return code


def _fail(out: _Out, exc: TCKitError, stderr):
    detail = {"error": type(exc).__name__, "message": str(exc)}
    for attr in ("axiom", "reason", "witness", "label", "entry", "quadruple"):
        if hasattr(exc, attr):
            detail[attr] = getattr(exc, attr)
    if out.json:
        print(json.dumps(detail, ensure_ascii=False, default=str), file=out.stream)
    else:
        print(f"error: {exc}", file=stderr)


def main(argv=None) -> int:
    # argparse --help exits through SystemExit(0); let it
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
