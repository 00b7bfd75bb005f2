"""Command line front end.

Every subcommand prints a human-readable summary by default and a stable
JSON document with --json (no timings or other volatile fields, so output
is byte-for-byte reproducible). Exit status: 0 on success, 1 when inputs
are rejected or a verification fails, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .dunwoody import DiagramParams, GluedDiagram, build_diagram, check_seifert_diagram
from .foxcalc import alexander_polynomial, example_knot_presentation
from .homology import cokernel, first_homology
from .knots11 import (
    KnotParams,
    knot_from_seifert,
    lens_closed_form,
    lens_name,
    reduce_to_lens,
)
from .presentations import (
    Presentation,
    seifert_cyclic_presentation,
    standard_seifert_presentation,
    tietze_witnesses,
)
from .verify import DEFAULT_BUDGET, run_all


def _emit(args: argparse.Namespace, data: dict[str, Any], human: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(human)


def _load_json(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _group_payload(group) -> dict[str, Any]:
    return {"rank": group.rank, "torsion": list(group.torsion)}


def _group_line(group) -> str:
    order = group.order()
    size = "infinite" if order is None else f"order {order}"
    return f"{group} ({size})"


# -- subcommand handlers -------------------------------------------------------


def cmd_present(args: argparse.Namespace) -> int:
    params = (args.n, args.p, args.q, args.l)
    data: dict[str, Any] = {}
    lines = []
    if args.form in ("cyclic", "both"):
        pres = seifert_cyclic_presentation(*params)
        data["cyclic"] = pres.to_dict()
        lines.append(f"cyclic:   {pres}")
    if args.form in ("standard", "both"):
        pres = standard_seifert_presentation(*params)
        data["standard"] = pres.to_dict()
        lines.append(f"standard: {pres}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_tietze(args: argparse.Namespace) -> int:
    witnesses = tietze_witnesses(args.n, args.p, args.q, args.l)
    rows = []
    lines = []
    all_equal = True
    for label, lhs, rhs in witnesses:
        equal = lhs == rhs
        all_equal &= equal
        rows.append(
            {"label": label, "left": str(lhs), "right": str(rhs), "equal": equal}
        )
        status = "ok" if equal else "MISMATCH"
        lines.append(f"{label}: {lhs} = {rhs}  [{status}]")
    lines.append(
        f"{'all' if all_equal else 'NOT all'} {len(witnesses)} identities hold"
    )
    _emit(args, {"witnesses": rows, "all_equal": all_equal}, "\n".join(lines))
    return 0 if all_equal else 1


def cmd_homology(args: argparse.Namespace) -> int:
    if args.source == "matrix":
        rows = _load_json(args.file)
        if not isinstance(rows, list) or not rows:
            raise ValueError("expected a non-empty JSON list of matrix rows")
        group = cokernel(rows, len(rows[0]))
        label = "cokernel"
    else:
        build = (
            seifert_cyclic_presentation
            if args.source == "cyclic"
            else standard_seifert_presentation
        )
        group = first_homology(build(args.n, args.p, args.q, args.l))
        label = "H1"
    _emit(args, _group_payload(group), f"{label} = {_group_line(group)}")
    return 0


def _knot_payload(k: KnotParams) -> list[int]:
    return [k.a, k.b, k.c, k.r]


def cmd_knot(args: argparse.Namespace) -> int:
    if args.action == "from-seifert":
        cover = knot_from_seifert(args.n, args.p, args.q, args.l)
        data = {
            "knot": _knot_payload(cover.knot),
            "ambient": list(cover.ambient),
            "ambient_name": lens_name(cover.ambient),
            "sheets": cover.sheets,
            "shift": cover.shift,
        }
        human = (
            f"{cover.knot} in {lens_name(cover.ambient)}; "
            f"{cover.sheets}-fold cyclic branched cover, shift {cover.shift}"
        )
        _emit(args, data, human)
        return 0
    k = KnotParams(args.a, args.b, args.c, args.r)
    if args.action == "ambient":
        lens = lens_closed_form(k)
        _emit(
            args,
            {"knot": _knot_payload(k), "lens": list(lens), "name": lens_name(lens)},
            f"{k} lies in {lens_name(lens)}",
        )
        return 0
    lens, trace = reduce_to_lens(k)
    lines = [f"start  {k}"]
    lines.extend(f"{label:>5}  {state}" for label, state in trace)
    lines.append(f"result {lens_name(lens)}")
    data = {
        "start": _knot_payload(k),
        "moves": [[label, _knot_payload(state)] for label, state in trace],
        "lens": list(lens),
        "name": lens_name(lens),
    }
    _emit(args, data, "\n".join(lines))
    return 0


def _edge_classes_payload(diagram: GluedDiagram) -> list[list[list[Any]]]:
    return [
        [[list(edge), 1 - 2 * parity] for edge, parity in cls]
        for cls in diagram.edge_classes
    ]


def _edge_classes_lines(diagram: GluedDiagram) -> list[str]:
    lines = []
    for idx, cls in enumerate(diagram.edge_classes):
        members = " ".join(
            f"{'+' if parity == 0 else '-'}{kind}{i}.{j}"
            for (kind, i, j), parity in cls
        )
        lines.append(f"class {idx + 1}: {members}")
    return lines


def cmd_dunwoody(args: argparse.Namespace) -> int:
    if args.action == "check":
        report = check_seifert_diagram(args.n, args.p, args.q, args.l)
        diagram = build_diagram(report.params)
        data: dict[str, Any] = {
            "params": [
                report.params.a,
                report.params.b,
                report.params.c,
                report.params.n,
                report.params.r,
                report.params.s,
            ],
            "counts": list(report.counts),
            "criterion": report.criterion,
            "relators_match": report.relators_match,
        }
        lines = [
            f"gluing data {report.params}",
            "counts (vertices, edge classes, faces, cells) = "
            + str(report.counts),
            f"one-vertex / n-edge criterion: {'yes' if report.criterion else 'no'}",
            f"relators match cyclic presentation: "
            f"{'yes' if report.relators_match else 'no'}",
        ]
        ok = report.criterion and report.relators_match
    else:
        params = DiagramParams(args.a, args.b, args.c, args.n, args.r, args.s)
        diagram = build_diagram(params)
        counts = diagram.counts()
        criterion = diagram.satisfies_cover_criterion()
        data = {
            "params": [params.a, params.b, params.c, params.n, params.r, params.s],
            "counts": list(counts),
            "criterion": criterion,
        }
        lines = [
            f"gluing data {params}",
            f"counts (vertices, edge classes, faces, cells) = {counts}",
            f"one-vertex / n-edge criterion: {'yes' if criterion else 'no'}",
        ]
        if criterion:
            words = diagram.read_off_words()
            data["relators"] = [str(w) for w in words]
            lines.append("read-off relators: " + ", ".join(str(w) for w in words))
        ok = True
    if args.edges:
        data["edge_classes"] = _edge_classes_payload(diagram)
        lines.extend(_edge_classes_lines(diagram))
    _emit(args, data, "\n".join(lines))
    return 0 if ok else 1


def cmd_alexander(args: argparse.Namespace) -> int:
    if args.example:
        pres = example_knot_presentation()
    else:
        pres = Presentation.from_dict(_load_json(args.presentation))
    delta = alexander_polynomial(pres)
    determinant = abs(delta(-1))
    det_text = (
        str(determinant.numerator)
        if determinant.denominator == 1
        else str(determinant)
    )
    data = {
        "alexander": str(delta),
        "terms": [[e, c] for e, c in delta.terms()],
        "determinant": det_text,
    }
    human = f"Delta(t) = {delta}\ndeterminant |Delta(-1)| = {det_text}"
    _emit(args, data, human)
    return 0


def cmd_verify_all(args: argparse.Namespace) -> int:
    results = run_all(
        n_max=args.nmax,
        p_max=args.pmax,
        l_max=args.lmax,
        seed=args.seed,
        budget=args.budget,
        fail_fast=args.fail_fast,
    )
    all_passed = all(r.passed for r in results)
    if args.json:
        payload = {
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "all_passed": all_passed,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in results:
            flag = "PASS" if r.passed else "FAIL"
            print(f"{flag} {r.name} ({r.seconds:.2f}s): {r.detail}")
        done = len(results)
        print(
            f"{sum(r.passed for r in results)}/{done} checks passed"
            + ("" if all_passed else " (failure)")
        )
    return 0 if all_passed else 1


# -- parser --------------------------------------------------------------------


def _add_seifert_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("n", type=int, help="number of cyclic symmetries")
    sub.add_argument("p", type=int, help="exceptional fiber order")
    sub.add_argument("q", type=int, help="exceptional fiber twist, coprime to p")
    sub.add_argument("l", type=int, help="extra fiber parameter")


def _add_knot_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("a", type=int, help="outer band strands")
    sub.add_argument("b", type=int, help="middle band strands")
    sub.add_argument("c", type=int, help="crossing strands")
    sub.add_argument("r", type=int, help="twist (mod 2a+b+c)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifknot",
        description=(
            "Exact computations relating Seifert manifolds, cyclic "
            "presentations, (1,1)-knots in lens spaces, and glued "
            "sphere-tessellation diagrams."
        ),
    )
    parser.add_argument(
        "--json", action="store_true", help="emit stable JSON instead of text"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for randomized checks"
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="enumeration budget for homomorphism counting",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    present = commands.add_parser(
        "present", help="print the cyclic and standard presentations"
    )
    _add_seifert_args(present)
    present.add_argument(
        "--form", choices=("cyclic", "standard", "both"), default="both"
    )
    present.set_defaults(func=cmd_present)

    tietze = commands.add_parser(
        "tietze", help="verify the presentation-equivalence witnesses"
    )
    _add_seifert_args(tietze)
    tietze.set_defaults(func=cmd_tietze)

    homology = commands.add_parser("homology", help="abelianization invariants")
    hsub = homology.add_subparsers(dest="source", required=True)
    for source in ("cyclic", "standard"):
        h = hsub.add_parser(source, help=f"H1 from the {source} presentation")
        _add_seifert_args(h)
    hmatrix = hsub.add_parser("matrix", help="cokernel of a JSON integer matrix")
    hmatrix.add_argument("file", help="path to a JSON list of rows, or - for stdin")
    homology.set_defaults(func=cmd_homology)

    knot = commands.add_parser("knot", help="(1,1)-knot parameter operations")
    ksub = knot.add_subparsers(dest="action", required=True)
    kfrom = ksub.add_parser(
        "from-seifert", help="knot and ambient space for Seifert parameters"
    )
    _add_seifert_args(kfrom)
    kreduce = ksub.add_parser("reduce", help="reduce a diagram move by move")
    _add_knot_args(kreduce)
    kambient = ksub.add_parser("ambient", help="closed-form ambient lens space")
    _add_knot_args(kambient)
    knot.set_defaults(func=cmd_knot)

    dunwoody = commands.add_parser(
        "dunwoody", help="build and check glued tessellation diagrams"
    )
    dsub = dunwoody.add_subparsers(dest="action", required=True)
    dcheck = dsub.add_parser(
        "check", help="full diagram check for Seifert parameters"
    )
    _add_seifert_args(dcheck)
    dcheck.add_argument("--edges", action="store_true", help="list edge classes")
    draw = dsub.add_parser("raw", help="glue an arbitrary diagram")
    draw.add_argument("a", type=int)
    draw.add_argument("b", type=int)
    draw.add_argument("c", type=int)
    draw.add_argument("n", type=int)
    draw.add_argument("r", type=int)
    draw.add_argument("s", type=int, choices=(0, 1))
    draw.add_argument("--edges", action="store_true", help="list edge classes")
    dunwoody.set_defaults(func=cmd_dunwoody)

    alexander = commands.add_parser(
        "alexander", help="Alexander polynomial of a deficiency-one presentation"
    )
    source = alexander.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--example", action="store_true", help="use the built-in knot example"
    )
    source.add_argument(
        "--presentation",
        metavar="FILE",
        help="JSON file with generators and relators, or - for stdin",
    )
    alexander.set_defaults(func=cmd_alexander)

    verify = commands.add_parser("verify-all", help="run every built-in check")
    verify.add_argument("--fail-fast", action="store_true")
    verify.add_argument("--nmax", type=int, default=5)
    verify.add_argument("--pmax", type=int, default=7)
    verify.add_argument("--lmax", type=int, default=3)
    verify.set_defaults(func=cmd_verify_all)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
