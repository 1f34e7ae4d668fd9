"""Command-line front end.

Subcommands: graph, weights, molien, group, charpoly, verify. Output formats
are json / text / latex (dot for graphs only). --out writes atomically via a
temp file and rename, so failures never leave partial files.

Exit status: 0 on success, 1 when verification reports a failure, 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .errors import InvalidParameter
from .graphs import (DynkinType, build_graph, char_poly, charpoly_report,
                     parse_type_selector)
from .poly import Polynomial, series_coefficients
from .verify import (DEFAULT_SUITE, FaultSpec, build_bundle, report_json,
                     report_text, run_suite)
from .weights import (common_denominator, numerators_latex, solve_semiaffine,
                      to_q_numerators)

USAGE_ERROR = 2


def _grouped(items: list[str]) -> str:
    """Run-length render: "q^2+q^4 (×3)" for repeated consecutive entries."""
    out = []
    i = 0
    while i < len(items):
        j = i
        while j < len(items) and items[j] == items[i]:
            j += 1
        out.append(items[i] if j - i == 1 else f"{items[i]} (×{j - i})")
        i = j
    return "; ".join(out)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".adeweights-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _types_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", "--types", dest="types", required=True,
                        help='type selector, e.g. "D4", "E6,E7,E8", "A1..A12"')


def _sections(types, render) -> str:
    parts = []
    for dt in types:
        body = render(dt)
        parts.append(body if len(types) == 1 else f"== {dt} ==\n{body}")
    return "\n".join(parts)


def _cmd_graph(args) -> tuple[str, int]:
    types = parse_type_selector(args.types)
    if args.format == "dot":
        if len(types) != 1:
            raise InvalidParameter("dot output requires a single type")
        g = build_graph(types[0], args.form)
        return g.to_dot(f"{types[0]}_{args.form}"), 0
    if args.format == "json":
        payload = [build_graph(dt, args.form).to_json() for dt in types]
        return _dump(payload[0] if len(types) == 1 else payload), 0

    def render(dt):
        g = build_graph(dt, args.form)
        lines = [f"{dt} {args.form}: {g.n} nodes, affine index {g.affine_index}"]
        lines += [f"  {i} -> {j}  (x{g.mult[i][j]})"
                  for i in range(g.n) for j in range(g.n) if g.mult[i][j]]
        return "\n".join(lines) + "\n"
    return _sections(types, render), 0


def _cmd_weights(args) -> tuple[str, int]:
    types = parse_type_selector(args.types)
    if args.basis == "t":
        if args.format == "json":
            payload = [solve_semiaffine(build_graph(dt, "semiaffine")).to_json()
                       for dt in types]
            return _dump(payload[0] if len(types) == 1 else payload), 0

        def render(dt):
            w = solve_semiaffine(build_graph(dt, "semiaffine"))
            if args.format == "latex":
                entries = [f"\\frac{{{v.num}}}{{{v.den}}}"
                           if not v.is_polynomial() else str(v.num)
                           for v in w.values]
                return ",".join(entries) + "\n"
            return _grouped([str(v) for v in w.values]) + "\n"
        return _sections(types, render), 0

    # basis q and molien both emit the standard-form numerators
    if args.format == "json":
        payload = []
        for dt in types:
            b = build_bundle(dt)
            payload.append(b.numerators.to_json())
        return _dump(payload[0] if len(types) == 1 else payload), 0

    def render(dt):
        b = build_bundle(dt)
        if args.format == "latex":
            return numerators_latex(b.numerators) + "\n"
        text = _grouped([str(p) for p in b.numerators.N])
        if args.basis == "molien":
            text += f"   over (1-q^{b.numerators.a})(1-q^{b.numerators.b})"
        return text + "\n"
    return _sections(types, render), 0


def _cmd_molien(args) -> tuple[str, int]:
    types = parse_type_selector(args.types)
    if args.format == "json":
        payload = []
        for dt in types:
            b = build_bundle(dt)
            obj = b.molien.to_json()
            obj["classes"] = b.group.classes_to_json()
            obj["char_table"] = b.table.to_json()
            if args.series_terms:
                obj["series_coefficients"] = [
                    [str(c) for c in series_coefficients(s, args.series_terms)]
                    for s in b.molien.series]
            payload.append(obj)
        return _dump(payload[0] if len(types) == 1 else payload), 0

    def render(dt):
        b = build_bundle(dt)
        ms = b.molien
        lines = [f"{dt}: |G|={b.group.order}, h={ms.h}, "
                 f"denominator (1-q^{ms.a})(1-q^{ms.b})"]
        for i, (d, num) in enumerate(zip(ms.degrees, ms.numerators)):
            line = f"  chi_{i} (degree {d}): N = {num}"
            if args.series_terms:
                coeffs = series_coefficients(ms.series[i], args.series_terms)
                line += "   series " + " ".join(str(c) for c in coeffs)
            lines.append(line)
        return "\n".join(lines) + "\n"
    return _sections(types, render), 0


def _cmd_group(args) -> tuple[str, int]:
    types = parse_type_selector(args.types)
    if args.format == "json":
        payload = []
        for dt in types:
            b = build_bundle(dt)
            payload.append({"type": str(dt), "order": b.group.order,
                            "conductor": b.group.conductor,
                            "classes": b.group.classes_to_json(),
                            "char_table": b.table.to_json()})
        return _dump(payload[0] if len(types) == 1 else payload), 0

    def render(dt):
        b = build_bundle(dt)
        lines = [f"{dt}: order {b.group.order}, conductor {b.group.conductor}, "
                 f"{len(b.group.classes)} classes"]
        for i, c in enumerate(b.group.classes):
            lines.append(f"  class {i}: size {c.size}, element order {c.order}, "
                         f"trace {c.trace}")
        return "\n".join(lines) + "\n"
    return _sections(types, render), 0


def _cmd_charpoly(args) -> tuple[str, int]:
    types = parse_type_selector(args.types)
    if args.format == "json":
        payload = [charpoly_report(dt).to_json() for dt in types]
        return _dump(payload[0] if len(types) == 1 else payload), 0

    def render(dt):
        rep = charpoly_report(dt)
        return (f"{dt}: char(semiaffine) = {rep.char_semiaffine} "
                f"= t^{rep.d} * ({rep.cofactor}); cox(h) = {rep.cox}; "
                f"claim {'holds' if rep.claim_holds else 'does not hold'}\n")
    return _sections(types, render), 0


def _cmd_verify(args) -> tuple[str, int]:
    types = parse_type_selector(args.types) if args.types else list(DEFAULT_SUITE)
    fault = None
    if args.inject_fault is not None:
        fault = FaultSpec.from_seed(args.inject_fault, sorted(set(types)))
    report = run_suite(types, fault=fault)
    text = report_json(report) if args.format == "json" else report_text(report)
    return text, 0 if report.ok() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adeweights",
        description="Exact semi-affine ADE weight systems and SU(2) Molien series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="emit a graph in dot/json/text form")
    _types_arg(p)
    p.add_argument("--form", choices=("finite", "affine", "semiaffine"),
                   default="semiaffine")
    p.add_argument("--format", choices=("json", "text", "dot"), default="text")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("weights", help="solve the weight system")
    _types_arg(p)
    p.add_argument("--basis", choices=("t", "q", "molien"), default="q")
    p.add_argument("--format", choices=("json", "text", "latex"), default="text")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("molien", help="group-side Molien series per character")
    _types_arg(p)
    p.add_argument("--series-terms", type=int, default=0,
                   help="also print the first N series coefficients")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_molien)

    p = sub.add_parser("group", help="group enumeration / class data summary")
    _types_arg(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("charpoly", help="semi-affine characteristic polynomial report")
    _types_arg(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--types", default=None,
                   help="type selector (default: A1..A12,D4..D12,E6,E7,E8)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--inject-fault", type=int, default=None, metavar="SEED",
                   help="flip one numerator coefficient (self-test of the "
                        "cross-match; must produce exactly one failure)")
    p.set_defaults(func=_cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--out", default=None, help="write output to a file "
                        "atomically instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        text, status = args.func(args)
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _write_output(text, args.out)
    return status


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
