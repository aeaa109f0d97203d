"""Command-line front door: factor, perp, points, commute, count, graph, verify.

Every command prints to stdout in a deterministic, locale-independent way, so
identical invocations are byte-identical.  Exit codes: 0 success or all checks
passed, 1 a verification or cross-check failed, 2 malformed input or usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import oracle, pauli, projline, symplectic
from .pauli import PauliOp
from .ring import Modulus, make_modulus, unit_count


def _print(text: str) -> None:
    sys.stdout.write(text + "\n")


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def _csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _vec(v: tuple[int, int]) -> str:
    return f"({v[0]},{v[1]})"


def _factors_text(m: Modulus) -> str:
    return " * ".join(f"{p}^{mult}" if mult > 1 else str(p) for p, mult in m.factors)


def cmd_factor(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    phi = unit_count(m)
    if args.format == "json":
        obj = m.to_json_dict()
        obj["unit_count"] = phi
        _print(_json(obj))
    elif args.format == "csv":
        idem = " ".join(str(e) for e in m.idempotents) if m.idempotents else ""
        factors = " ".join(f"{p}^{mult}" if mult > 1 else str(p) for p, mult in m.factors)
        _print(_csv(
            ["d", "factors", "square_free", "unit_count", "idempotents"],
            [[m.d, factors, _bool(m.square_free), phi, idem]],
        ))
    else:
        lines = [
            f"d = {m.d}",
            f"factors = {_factors_text(m)}",
            f"square_free = {_bool(m.square_free)}",
            f"unit_count = {phi}",
        ]
        if m.idempotents is not None:
            lines.append("idempotents = " + " ".join(str(e) for e in m.idempotents))
        _print("\n".join(lines))
    return 0


def cmd_perp(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    v = (args.b % m.d, args.c % m.d)
    ps = symplectic.perp_set(v, m)
    points = size_formula = count_formula = union_ok = None
    if m.square_free:
        points = projline.points_containing(v, m)
        size_formula = projline.perp_size_formula(v, m)
        count_formula = projline.point_count_formula(v, m)
        union_ok = projline.perp_as_point_union(v, m) == ps.members
    if args.format == "json":
        obj: dict[str, Any] = {
            "d": m.d,
            "vector": list(v),
            "perp": ps.to_json_dict(),
            "perp_size_formula": size_formula,
            "points_count": len(points) if points is not None else None,
            "points_count_formula": count_formula,
            "points": [p.to_json_dict() for p in points] if points is not None else None,
            "union_equals_perp": union_ok,
        }
        _print(_json(obj))
    elif args.format == "csv":
        _print(_csv(["b", "c"], [[b, c] for b, c in ps.sorted_members()]))
    else:
        lines = [
            f"d = {m.d}",
            f"vector = ({v[0]}, {v[1]})",
            f"perp_size = {ps.size}",
        ]
        if m.square_free:
            lines.append(f"perp_size_formula = {size_formula}")
        lines.append("members = " + " ".join(_vec(w) for w in ps.sorted_members()))
        if m.square_free:
            assert points is not None
            lines.append(f"points_containing = {len(points)}")
            lines.append(f"points_formula = {count_formula}")
            for p in points:
                lines.append(
                    f"point {p.label(m.d)} = " + " ".join(_vec(w) for w in p.sorted_members())
                )
            lines.append(f"union_equals_perp = {_bool(bool(union_ok))}")
        _print("\n".join(lines))
    return 0


def cmd_points(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    pts = projline.enumerate_points(m)
    formula = projline.line_size_formula(m) if m.square_free else None
    if args.format == "json":
        obj = {
            "d": m.d,
            "count": len(pts),
            "count_formula": formula,
            "points": [p.to_json_dict() for p in pts],
        }
        _print(_json(obj))
    elif args.format == "csv":
        rows = [
            [p.generator[0], p.generator[1], " ".join(f"{b}:{c}" for b, c in p.sorted_members())]
            for p in pts
        ]
        _print(_csv(["generator_b", "generator_c", "members"], rows))
    else:
        lines = [f"d = {m.d}", f"points = {len(pts)}"]
        if formula is not None:
            lines.append(f"points_formula = {formula}")
        for p in pts:
            lines.append(f"point {p.label(m.d)} = " + " ".join(_vec(w) for w in p.sorted_members()))
        _print("\n".join(lines))
    return 0


def cmd_commute(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    w1 = pauli.reduce_op(PauliOp(args.a, args.b, args.c), m)
    w2 = pauli.reduce_op(PauliOp(args.a2, args.b2, args.c2), m)
    exponent = pauli.commutator(w1, w2, m).a
    commuting = exponent == 0
    matrix_agrees = None
    if args.matrix:
        m1, m2 = pauli.to_matrix(w1, m), pauli.to_matrix(w2, m)
        matrix_agrees = (m1 @ m2 == m2 @ m1) == commuting
    if args.format == "json":
        obj = {
            "d": m.d,
            "w1": pauli.pauli_json_dict(w1, m),
            "w2": pauli.pauli_json_dict(w2, m),
            "commutator_exponent": exponent,
            "commutes": commuting,
            "w1_pretty": pauli.format_pauli(w1),
            "w2_pretty": pauli.format_pauli(w2),
            "matrix_agrees": matrix_agrees,
        }
        _print(_json(obj))
    elif args.format == "csv":
        cell = "" if matrix_agrees is None else _bool(matrix_agrees)
        _print(_csv(
            ["commutator_exponent", "commutes", "matrix_agrees"],
            [[exponent, _bool(commuting), cell]],
        ))
    else:
        lines = [
            f"d = {m.d}",
            f"w1 = ({w1.a}, {w1.b}, {w1.c})",
            f"w2 = ({w2.a}, {w2.b}, {w2.c})",
        ]
        if args.pretty:
            lines.append(f"w1_pretty = {pauli.format_pauli(w1)}")
            lines.append(f"w2_pretty = {pauli.format_pauli(w2)}")
        lines.append(f"commutator_exponent = {exponent}")
        lines.append(f"commutes = {_bool(commuting)}")
        if matrix_agrees is not None:
            lines.append(f"matrix_agrees = {_bool(matrix_agrees)}")
        _print("\n".join(lines))
    if matrix_agrees is False:
        return 1
    return 0


def _brute_commutant(v: tuple[int, int], m: Modulus) -> int:
    # commutation never sees the omega-exponent, so counting orthogonal
    # (b', c') classes and scaling by d is the exact operator count
    d = m.d
    orthogonal = sum(
        1 for b in range(d) for c in range(d) if symplectic.form(v, (b, c), m) == 0
    )
    return d * orthogonal


def cmd_count(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    if not m.square_free:
        raise ValueError(
            f"count requires square-free d (the commutant formula is proved only there), got d={m.d}"
        )
    v = (args.b % m.d, args.c % m.d)
    size_formula = projline.perp_size_formula(v, m)
    formula = m.d * size_formula
    brute = None
    if args.brute:
        if m.d > pauli.CLOSURE_LIMIT:
            raise ValueError(f"--brute is bounded to d <= {pauli.CLOSURE_LIMIT}, got d={m.d}")
        brute = _brute_commutant(v, m)
    if args.format == "json":
        obj = {
            "d": m.d,
            "vector": list(v),
            "perp_size_formula": size_formula,
            "commutant_formula": formula,
            "commutant_brute": brute,
        }
        _print(_json(obj))
    elif args.format == "csv":
        _print(_csv(
            ["perp_size_formula", "commutant_formula", "commutant_brute"],
            [[size_formula, formula, "" if brute is None else brute]],
        ))
    else:
        lines = [
            f"d = {m.d}",
            f"vector = ({v[0]}, {v[1]})",
            f"perp_size_formula = {size_formula}",
            f"commutant_formula = {formula}",
        ]
        if brute is not None:
            lines.append(f"commutant_brute = {brute}")
        _print("\n".join(lines))
    if brute is not None and brute != formula:
        return 1
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    graph = projline.neighbour_graph(m)
    if args.format == "json":
        _print(_json(graph.to_json_dict()))
    else:
        _print(graph.to_dot())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    m = make_modulus(args.d)
    names = args.checks.split(",") if args.checks else None
    report = oracle.verify_all(m, checks=names)
    if args.format == "json":
        _print(_json(report.to_json_dict(include_elapsed=args.timings)))
    elif args.format == "csv":
        rows = [[c.name, c.status, c.scope] for c in report.checks]
        _print(_csv(["name", "status", "scope"], rows))
    else:
        lines = [f"d = {m.d}"]
        for c in report.checks:
            line = f"{c.status.upper():4s} {c.name}  {c.scope}"
            if args.timings:
                line += f"  ({c.elapsed:.3f}s)"
            if c.counterexample is not None:
                line += "\n  counterexample: " + json.dumps(c.counterexample)
            lines.append(line)
        lines.append(f"all_passed = {_bool(report.all_passed)}")
        _print("\n".join(lines))
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringline",
        description="Exact commutation algebra of the single-qudit shift/clock group, "
        "computed through the projective line over Z_d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, choices: Sequence[str], default: str) -> None:
        p.add_argument("--format", choices=list(choices), default=default,
                       help=f"output format (default {default})")

    p = sub.add_parser("factor", help="factor d, report units and CRT idempotents")
    p.add_argument("d", type=int)
    add_format(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("perp", help="perp-set of a vector, with its point decomposition")
    p.add_argument("d", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    add_format(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=cmd_perp)

    p = sub.add_parser("points", help="enumerate the points of the line over Z_d")
    p.add_argument("d", type=int)
    add_format(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("commute", help="commutation verdict for two operators (a b c triples)")
    p.add_argument("d", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("b2", type=int)
    p.add_argument("c2", type=int)
    p.add_argument("--matrix", action="store_true",
                   help="cross-check against the exact matrix model")
    p.add_argument("--pretty", action="store_true",
                   help="also render operators symbolically, like 'w^2 X Z^3'")
    add_format(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=cmd_commute)

    p = sub.add_parser("count", help="number of operators commuting with omega^a X^b Z^c")
    p.add_argument("d", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--brute", action="store_true",
                   help="also count exhaustively (d <= 32)")
    add_format(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("graph", help="neighbour graph of the line (DOT or JSON adjacency)")
    p.add_argument("d", type=int)
    add_format(p, ("dot", "json"), "dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the exhaustive verification checks")
    p.add_argument("d", type=int)
    p.add_argument("--checks", type=str, default=None,
                   help="comma-separated subset of: " + ",".join(oracle.CHECK_NAMES))
    p.add_argument("--timings", action="store_true",
                   help="include per-check timings (makes output run-dependent)")
    add_format(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
