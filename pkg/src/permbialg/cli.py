"""Command-line front end.

Every command prints one JSON report on stdout and exits with 0 when the
report is clean, 1 when it carries defects (including failed
preconditions such as a non-factorizable tensor), and 2 on input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import catalog, formats
from .algebra import perm_axiom_defects
from .bialgebra import Classification, classify, coalgebra_defects, factorize
from .double import bialgebra_report, build_double, canonical_r
from .errors import (DimensionMismatch, ParseError, Singular, UnknownName, ZeroWeight)
from .linalg import Q, format_scalar, is_zero, identity, parse_scalar, qarray
from .representations import a_perm_algebra_defects, representation_defects
from .rotabaxter import (QuadraticRBData, qrb_to_r, quadratic_defects, quadratic_rb_defects,
                         r_to_qrb)
from .tensors import TwoTensor, pybe_defect, rad_invariance_defect, twist

EXIT_CLEAN, EXIT_DEFECTS, EXIT_INPUT = 0, 1, 2
CHECK_KINDS = ("perm", "coalgebra", "bialgebra", "representation", "apermalgebra",
               "quadratic", "quadratic-rb")
_FILE_KIND = {"perm": "algebra"}


class InputError(Exception):
    pass


def jsonable(x):
    """Defect values as JSON: rationals become strings, arrays become sparse entry lists."""
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Q):
        return format_scalar(x)
    if isinstance(x, Classification):
        return x.value
    if isinstance(x, TwoTensor):
        x = x.t
    if isinstance(x, np.ndarray):
        return [{"at": [int(i) for i in idx], "c": format_scalar(v)}
                for idx, v in np.ndenumerate(x) if v != 0]
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot report {type(x).__name__}")


def _families(report: dict) -> dict[str, list]:
    return {k: v for k, v in report.items() if isinstance(v, list)}


class Run:
    """Collects inputs, defects and outputs for one command."""

    def __init__(self, command: str, quiet: bool):
        self.command = command
        self.quiet = quiet
        self.t0 = time.perf_counter()
        self.digests: dict[str, str] = {}
        self.defects: dict[str, list] = {}
        self.info: dict = {}

    def load(self, path: str, kind: str):
        p = Path(path)
        try:
            data = p.read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from exc
        self.digests[str(p)] = hashlib.sha256(data).hexdigest()
        try:
            return formats.loads(data.decode("utf-8"), kind)
        except UnicodeDecodeError as exc:
            raise ParseError(f"{path}: not UTF-8") from exc

    def add_defects(self, report: dict):
        self.defects.update(_families(report))

    def write(self, out_dir: str, name: str, obj) -> str:
        d = Path(out_dir)
        d.mkdir(parents=True, exist_ok=True)
        path = d / name
        path.write_text(formats.dumps(obj))
        self.info.setdefault("outputs", []).append(str(path))
        return str(path)

    def finish(self) -> int:
        count = sum(len(v) for v in self.defects.values())
        verdict = "clean" if count == 0 else "defects"
        body = {k: (len(v) if self.quiet else jsonable(v)) for k, v in self.defects.items()}
        rep = {"command": self.command, "verdict": verdict, "defect_count": count,
               "defects": body, **jsonable(self.info),
               "timing_s": round(time.perf_counter() - self.t0, 6),
               "input_sha256": self.digests}
        print(json.dumps(rep, indent=2))
        return EXIT_CLEAN if count == 0 else EXIT_DEFECTS


def _weight(s: str) -> Q:
    try:
        return parse_scalar(s)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_check(args, run: Run):
    obj = run.load(args.path, _FILE_KIND.get(args.kind, args.kind))
    if args.kind == "perm":
        run.add_defects({"perm": perm_axiom_defects(obj)})
    elif args.kind == "coalgebra":
        run.add_defects({"coalgebra": coalgebra_defects(obj)})
    elif args.kind == "bialgebra":
        run.add_defects(bialgebra_report(obj))
    elif args.kind == "representation":
        run.add_defects(representation_defects(obj))
    elif args.kind == "apermalgebra":
        run.add_defects(a_perm_algebra_defects(obj))
    elif args.kind == "quadratic":
        A, B = obj
        rep = quadratic_defects(A, B)
        rep["perm"] = perm_axiom_defects(A)
        run.info["rank"] = rep["rank"]
        run.add_defects(rep)
    else:
        rep = quadratic_rb_defects(obj)
        run.info["rank"] = rep["rank"]
        run.add_defects(rep)


def _tensor_pair(args, run: Run):
    A = run.load(args.algebra, "algebra")
    r = run.load(args.tensor, "tensor")
    if r.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")
    return A, r


def _solution_defects(A, r) -> dict[str, list]:
    rr = pybe_defect(A, r)
    return {"pybe": [] if is_zero(rr) else [rr],
            "skew_invariance": rad_invariance_defect(A, r - twist(r))}


def cmd_classify(args, run: Run):
    A, r = _tensor_pair(args, run)
    run.info["classification"] = classify(A, r)
    run.add_defects(_solution_defects(A, r))


def cmd_double(args, run: Run):
    B = run.load(args.path, "bialgebra")
    rep = bialgebra_report(B)
    run.add_defects(rep)
    if any(rep.values()):
        return
    D = build_double(B)
    r = canonical_r(B.dim)
    run.write(args.out, "double.algebra.json", D.total)
    run.write(args.out, "double.tensor.json", r)
    run.info["dim"] = D.total.dim
    run.info["classification"] = cls = classify(D.total, r)
    if cls is not Classification.Factorizable:
        run.add_defects({"classification": [cls]})


def cmd_rb_to_bialg(args, run: Run):
    A = run.load(args.algebra, "algebra")
    B = run.load(args.form, "form")
    P = run.load(args.operator, "operator")
    D = QuadraticRBData(A, B, P, args.weight)
    rep = quadratic_rb_defects(D)
    run.info["rank"] = rep["rank"]
    run.add_defects(rep)
    if any(v for v in _families(rep).values()):
        return
    r = qrb_to_r(D)
    run.write(args.out, "tensor.json", r)
    run.info["classification"] = classify(A, r)


def cmd_bialg_to_rb(args, run: Run):
    A, r = _tensor_pair(args, run)
    if args.weight == 0:
        raise ZeroWeight("the weight must be nonzero")
    cls = classify(A, r)
    run.info["classification"] = cls
    if cls is not Classification.Factorizable:
        run.add_defects(_solution_defects(A, r))
        run.add_defects({"classification": [cls]})
        return
    D = r_to_qrb(A, r, args.weight)
    run.write(args.out, "form.json", formats.form_doc(D.form))
    run.write(args.out, "operator.json", formats.operator_doc(D.operator))


def _vector(s: str, n: int):
    parts = [p for p in s.split(",") if p.strip()]
    if len(parts) != n:
        raise DimensionMismatch(f"vector has {len(parts)} entries, algebra has dim {n}")
    return qarray([parse_scalar(p) for p in parts])


def cmd_factorize(args, run: Run):
    A, r = _tensor_pair(args, run)
    cls = classify(A, r)
    run.info["classification"] = cls
    if cls is not Classification.Factorizable:
        run.add_defects({"classification": [cls]})
        return
    xs = [_vector(args.vector, A.dim)] if args.vector else list(identity(A.dim))
    out = []
    for x in xs:
        x1, x2 = factorize(A, r, x)
        out.append({"x": [format_scalar(v) for v in x], "x1": [format_scalar(v) for v in x1],
                    "x2": [format_scalar(v) for v in x2]})
    run.info["factorizations"] = out


def cmd_catalog(args, run: Run):
    if args.action == "list":
        run.info["entries"] = [{"name": e.name, "kind": e.kind, "properties": list(e.properties),
                                "provenance": e.provenance} for e in catalog.entries()]
        return
    if not args.name:
        raise InputError("catalog export needs an entry name")
    e = catalog.get(args.name)
    p = e.payload
    if e.kind == "tensor":
        run.write(args.out, f"{e.name}.algebra.json", p.algebra)
        run.write(args.out, f"{e.name}.tensor.json", p.tensor)
    elif e.kind == "quadratic-rb":
        run.write(args.out, f"{e.name}.json", p)
        run.write(args.out, f"{e.name}.algebra.json", p.algebra)
        run.write(args.out, f"{e.name}.form.json", formats.form_doc(p.form))
        run.write(args.out, f"{e.name}.operator.json", formats.operator_doc(p.operator))
        run.info["weight"] = format_scalar(p.weight)
    else:
        run.write(args.out, f"{e.name}.json", p)
    run.info["properties"] = list(e.properties)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="report defect counts only")
    common.add_argument("--out", default=".", help="directory for output files")
    common.add_argument("--weight", type=_weight, default=parse_scalar("1"),
                        help="Rota-Baxter weight as p or p/q (default 1)")

    ap = argparse.ArgumentParser(prog="permbialg", description="Exact checks for perm algebras and bialgebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the defect checks for a structure")
    p.add_argument("kind", choices=CHECK_KINDS)
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    for name, func, hlp in (("classify", cmd_classify, "classify a 2-tensor over an algebra"),
                            ("bialg-to-rb", cmd_bialg_to_rb, "factorizable tensor -> quadratic RB data"),
                            ("factorize", cmd_factorize, "factorize basis elements (or --vector)")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("algebra")
        p.add_argument("tensor")
        if name == "factorize":
            p.add_argument("--vector", help="comma-separated coordinates")
        p.set_defaults(func=func)

    p = sub.add_parser("double", parents=[common], help="double of a bialgebra with canonical r")
    p.add_argument("path")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("rb-to-bialg", parents=[common], help="quadratic RB data -> 2-tensor")
    p.add_argument("algebra")
    p.add_argument("form")
    p.add_argument("operator")
    p.set_defaults(func=cmd_rb_to_bialg)

    p = sub.add_parser("catalog", parents=[common], help="list or export catalog entries")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_CLEAN
    run = Run(args.command, args.quiet)
    try:
        args.func(args, run)
    except (InputError, ParseError, DimensionMismatch, ZeroWeight, UnknownName, Singular) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(json.dumps({"command": args.command, "verdict": "error",
                          "error": type(exc).__name__, "message": str(msg),
                          "input_sha256": run.digests}, indent=2))
        return EXIT_INPUT
    return run.finish()


if __name__ == "__main__":
    sys.exit(main())
