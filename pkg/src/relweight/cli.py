"""Command-line front end.

Exit status is 0 on success, 1 when the input is well formed but the
computation rejects it, and 2 for malformed input or usage errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import jsonio
from .filtered import Filtration
from .jsonio import MalformedInput
from .nilwf import (
    CertifiedNonexistent,
    Exists,
    NilpotentOperator,
    construct_relative,
    monodromy_filtration,
    relative_wf_curve_formula,
    verify_relative,
    weight_filtration,
)
from .pants import a_move, a_move_reachable, handlebody_invariant, validate
from .repdim import dims_table, insufficient_pairs, structural_dims
from .surface import bounding_pair_model, picard_lefschetz, punctured_homology, sp_graded_dims


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}") from exc
    return jsonio.loads(text, path)


def _gr_table(f: Filtration, title: str = "weight") -> str:
    lines = [f"{title}\tdim Gr\tdim step"]
    for w, d in f.gr_dims().items():
        lines.append(f"{w}\t{d}\t{f.step(w).dim}")
    return "\n".join(lines)


def _emit(args, doc: dict, text: str) -> None:
    if args.output == "json":
        print(jsonio.dumps(doc))
    else:
        print(text)


def _operator(path: str) -> NilpotentOperator:
    return NilpotentOperator(jsonio.matrix_from_json(_read_json(path)))


def cmd_wf(args) -> int:
    f = weight_filtration(_operator(args.matrix))
    _emit(args, jsonio.filtration_to_json(f), _gr_table(f))
    return 0


def cmd_mwf(args) -> int:
    f = monodromy_filtration(_operator(args.matrix), args.center)
    _emit(args, jsonio.filtration_to_json(f), _gr_table(f))
    return 0


def _outcome_text(outcome) -> str:
    if isinstance(outcome, Exists):
        return f"Exists ({outcome.method})\n" + _gr_table(outcome.filtration)
    if isinstance(outcome, CertifiedNonexistent):
        witness = "[" + ", ".join(str(x) for x in outcome.witness) + "]"
        return (f"CertifiedNonexistent, witness k={outcome.weight}\n"
                f"clause {outcome.clause}: N maps {witness} outside M_{outcome.weight - 2}")
    return f"Inconclusive (search depth {outcome.search_depth})"


def cmd_rwf(args) -> int:
    n = _operator(args.matrix)
    w = jsonio.filtration_from_json(_read_json(args.filtration))
    outcome = construct_relative(n, w, args.depth)
    _emit(args, jsonio.outcome_to_json(outcome), _outcome_text(outcome))
    return 0


def cmd_pl(args) -> int:
    surface, cs = jsonio.curves_from_json(_read_json(args.curves))
    n = picard_lefschetz(surface, cs)
    w = punctured_homology(surface.genus, surface.punctures)
    mono = monodromy_filtration(n, -1)
    rel = relative_wf_curve_formula(w, n)
    if not verify_relative(n, w, rel):
        raise AssertionError("curve-system formula failed verification")
    doc = {"operator": jsonio.matrix_to_json(n.matrix),
           "weight": jsonio.filtration_to_json(w),
           "monodromy": jsonio.filtration_to_json(mono),
           "relative": jsonio.filtration_to_json(rel)}
    sp_text = ""
    if args.sp:
        sp = sp_graded_dims(surface, cs)
        doc["sp_gr_dims"] = {str(k): d for k, d in sorted(sp.items(), reverse=True)}
        sp_text = "\nGr^M sp(H):\n" + "\n".join(f"{k}\t{d}" for k, d in sorted(sp.items(), reverse=True))
    rows = "\n".join(" ".join(f"{str(x):>3}" for x in row) for row in n.matrix.entries)
    text = (f"Picard-Lefschetz operator ({surface.dim}x{surface.dim}):\n{rows}\n"
            f"monodromy filtration (centre -1):\n{_gr_table(mono)}\n"
            f"relative weight filtration:\n{_gr_table(rel)}{sp_text}")
    _emit(args, doc, text)
    return 0


def _parse_class(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise MalformedInput(f"--class: expected comma-separated integers, got {text!r}") from exc


def cmd_pants(args) -> int:
    pg = jsonio.pants_from_json(_read_json(args.graph))
    if args.action == "validate":
        v = validate(pg)
        _emit(args, {"valid": v.ok, "message": v.message}, v.message)
        return 0 if v.ok else 1
    if args.action == "move":
        if args.white is None or args.new_class is None:
            raise MalformedInput("move needs --white and --class")
        out = a_move(pg, args.white, args.pairing, _parse_class(args.new_class))
        doc = jsonio.pants_to_json(out)
        _emit(args, doc, jsonio.dumps(doc))
        return 0
    if args.action == "invariant":
        inv = handlebody_invariant(pg)
        doc = {"span": jsonio.subspace_to_json(inv.span),
               "monodromy": jsonio.filtration_to_json(inv.monodromy_filtration_on_h)}
        basis = "\n".join(" ".join(str(x) for x in row) for row in inv.span.basis)
        _emit(args, doc, f"span (dim {inv.span.dim}):\n{basis}\n"
                         + _gr_table(inv.monodromy_filtration_on_h))
        return 0
    other = jsonio.pants_from_json(_read_json(args.other)) if args.other else None
    if other is None:
        raise MalformedInput("reach needs a second graph")
    r = a_move_reachable(pg, other, args.bound)
    doc = {"status": r.status, "moves": r.moves}
    _emit(args, doc, r.status if r.moves is None else f"{r.status} in {r.moves} moves")
    return 0


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if "-" in part.strip()[1:]:
            lo, hi = part.rsplit("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_dims(args) -> int:
    try:
        genera = _int_list(args.g)
        degrees = _int_list(args.m)
    except ValueError as exc:
        raise MalformedInput(f"cannot parse range: {exc}") from exc
    rows = dims_table(genera, degrees)
    if args.output == "json":
        doc = {"rows": [r.as_dict() for r in rows],
               "insufficient": [list(p) for p in insufficient_pairs(genera, degrees)],
               "structural": {str(g): structural_dims(g) for g in genera}}
        print(jsonio.dumps(doc))
        return 0
    print("g\tm\tlambda\tdim\tbound")
    for r in rows:
        lam = "[" + ",".join(str(p) for p in r.partition) + "]"
        print(f"{r.g}\t{r.m}\t{lam}\t{r.dim}\t{r.bound}")
    return 0


def cmd_demo(args) -> int:
    w, n = bounding_pair_model(args.genus)
    outcome = construct_relative(n, w)
    _emit(args, jsonio.outcome_to_json(outcome), _outcome_text(outcome))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relweight",
                                     description="Weight and relative weight filtrations over Q.")
    parser.add_argument("--output", choices=("json", "table"), default="table")
    # lets --output also follow the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("wf", parents=[common], help="weight filtration of a nilpotent matrix")
    p.add_argument("matrix", help="matrix JSON file, or - for stdin")
    p.set_defaults(func=cmd_wf)

    p = sub.add_parser("mwf", parents=[common], help="monodromy filtration centred at --center")
    p.add_argument("matrix")
    p.add_argument("--center", type=int, required=True)
    p.set_defaults(func=cmd_mwf)

    p = sub.add_parser("rwf", parents=[common], help="relative weight filtration of a matrix on a filtered space")
    p.add_argument("matrix")
    p.add_argument("filtration")
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_rwf)

    p = sub.add_parser("pl", parents=[common], help="Picard-Lefschetz operator of a curve system")
    p.add_argument("curves")
    p.add_argument("--sp", action="store_true", help="also report Gr^M dimensions of sp(H)")
    p.set_defaults(func=cmd_pl)

    p = sub.add_parser("pants", parents=[common], help="pants graph operations")
    p.add_argument("action", choices=("validate", "move", "invariant", "reach"))
    p.add_argument("graph")
    p.add_argument("other", nargs="?", help="second graph for reach")
    p.add_argument("--white")
    p.add_argument("--pairing", type=int, default=0)
    p.add_argument("--class", dest="new_class")
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_pants)

    p = sub.add_parser("dims", parents=[common], help="representation dimension tables")
    p.add_argument("--g", default="3-10", help="genera, e.g. 7 or 3-8 or 3,5,7")
    p.add_argument("--m", default="1-8", help="degrees, same syntax")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("demo", parents=[common], help="worked examples")
    p.add_argument("example", choices=("bounding-pair",))
    p.add_argument("--genus", type=int, default=2)
    p.set_defaults(func=cmd_demo)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, AssertionError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
