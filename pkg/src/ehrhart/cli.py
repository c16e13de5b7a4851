"""Command-line interface.

One JSON document on stdout in json mode, human-readable text otherwise;
diagnostics go to stderr.  Exit codes: 0 success, 1 fatal inconsistency
(a lattice-dual polytope failing a guaranteed symmetry, or the two
delta-vector extraction routes disagreeing), 2 usage, parse, input, or
budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .counting import DEFAULT_BUDGET, count_points
from .errors import EhrhartError, InternalInconsistency
from .generators import GeneratorConfig, catalog, instances
from .geometry import (
    Polytope,
    denominator,
    dual,
    is_lattice,
    origin_interior,
)
from .quasipoly import delta_vector, delta_vector_series, fit_qp
from .serialization import dumps_polytope, load_polytope
from .verify import check_palindrome, full_report, render_text, report_to_json_dict


def _resolve_input(name: str) -> tuple[str, Polytope]:
    """Resolve a catalog name or a file path; ambiguity is an error."""
    named = catalog()
    path = Path(name)
    if name in named:
        if path.exists():
            raise EhrhartError(
                f"{name!r} is both a catalog entry and an existing file; "
                "rename the file or use an explicit path like ./" + name)
        return name, named[name]
    if path.exists():
        return name, load_polytope(path)
    raise EhrhartError(f"{name!r} is neither a catalog entry nor an existing file "
                       f"(catalog: {', '.join(sorted(named))})")


def _emit(doc: dict, text: str, fmt: str) -> None:
    print(json.dumps(doc, indent=2) if fmt == "json" else text)


def _cmd_info(args: argparse.Namespace) -> int:
    name, P = _resolve_input(args.input)
    doc = {
        "polytope": name,
        "dim": P.ambient_dim,
        "vertex_count": len(P.vertices),
        "denominator": str(denominator(P)),
        "lattice": is_lattice(P),
        "origin_interior": origin_interior(P),
        "facet_count": len(P.facets),
    }
    text = "\n".join([
        f"polytope: {name}",
        f"dim: {P.ambient_dim}",
        f"vertices: {len(P.vertices)}",
        f"denominator: {denominator(P)}",
        f"lattice: {'yes' if is_lattice(P) else 'no'}",
        f"origin interior: {'yes' if origin_interior(P) else 'no'}",
        f"facets: {len(P.facets)}",
    ])
    _emit(doc, text, args.format)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    name, P = _resolve_input(args.input)
    closed = count_points(P, args.m, budget=args.budget)
    interior = count_points(P, args.m, strict=True, budget=args.budget)
    doc = {"polytope": name, "m": args.m,
           "closed": str(closed), "interior": str(interior)}
    text = f"{name}: |{args.m}P| = {closed} lattice points, interior {interior}"
    _emit(doc, text, args.format)
    return 0


def _cmd_delta(args: argparse.Namespace) -> int:
    name, P = _resolve_input(args.input)
    qp = fit_qp(P, budget=args.budget)
    fitted = delta_vector(qp)
    series = delta_vector_series(P, budget=args.budget)
    if fitted != series:
        raise InternalInconsistency(
            f"fit gives {fitted.entries}, series gives {series.entries}")
    palindromic = check_palindrome(fitted).passed
    doc = {
        "polytope": name,
        "n": qp.n,
        "k": str(qp.k),
        "delta": [str(v) for v in fitted],
        "residue_table": [[str(v) for v in row] for row in qp.table.delta],
        "palindromic": palindromic,
    }
    lines = [
        f"polytope: {name}",
        f"n = {qp.n}, k = {qp.k}",
        "delta-vector: (" + ", ".join(str(v) for v in fitted) + ")",
        "residue table (row i, column r):",
    ]
    for i, row in enumerate(qp.table.delta):
        lines.append(f"  i={i}: " + " ".join(str(v) for v in row))
    lines.append(f"palindromic: {'yes' if palindromic else 'no'}")
    _emit(doc, "\n".join(lines), args.format)
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    name, P = _resolve_input(args.input)
    D = dual(P)
    if args.format == "json":
        print(dumps_polytope(D))
    else:
        pts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in D.vertices)
        print(f"dual of {name}: dim {D.ambient_dim}, vertices {pts}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    name, P = _resolve_input(args.input)
    report = full_report(P, polytope_id=name, m_max=args.m_max, budget=args.budget)
    _emit(report_to_json_dict(report), render_text(report), args.format)
    return 1 if report.fatal else 0


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(seed=args.seed, dim=args.dim,
                          coordinate_bound=args.bound,
                          denominator_bound=args.denominator_bound)
    P = instances(cfg, 1, kind=args.kind)[0]
    if args.format == "json":
        print(dumps_polytope(P))
    else:
        pts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in P.vertices)
        print(f"generated ({args.kind}, seed {args.seed}): dim {P.ambient_dim}, "
              f"vertices {pts}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrhart",
        description="Exact Ehrhart quasi-polynomials, delta-vectors, and "
                    "polytope duality for rational convex polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum bounding-box cells per enumeration")

    p = sub.add_parser("info", help="basic facts about a polytope")
    p.add_argument("input", help="catalog name or JSON file")
    common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("count", help="lattice points of a dilation")
    p.add_argument("input")
    p.add_argument("--m", type=int, default=1, help="dilation factor")
    common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("delta", help="delta-vector and residue table")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("dual", help="polar dual polytope")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("verify", help="run all consistency checks")
    p.add_argument("input")
    p.add_argument("--m-max", type=int, default=6,
                   help="largest dilation for reciprocity and interior-shift")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded test polytope")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--kind", choices=("lattice", "dual-of-lattice", "rational"),
                   default="dual-of-lattice")
    p.add_argument("--bound", type=int, default=2,
                   help="coordinate bound of the underlying lattice draw")
    p.add_argument("--denominator-bound", type=int, default=3)
    common(p)
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"ehrhart: FATAL: {exc}", file=sys.stderr)
        return 1
    except (EhrhartError, ValueError, OSError) as exc:
        print(f"ehrhart: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
