"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error.  Domain errors print
the structured error name on stderr.  All output is deterministic for a
fixed command line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .autgroup import automorphisms
from .diagram_core import build_affine
from .errors import LieDiagramError, ParseError
from .marking import Marking, classify_inner, invariant
from .outer import outer_semisimple, outer_simple, parse_spec, theta_class
from .painted import (
    CompactDiagram,
    RealFormName,
    construct,
    enumerate_paintings,
    identify,
)
from .render import ascii_diagram, to_dot
from .verify import DEFAULT_MAX_RANK, DEFAULT_SEED, run_all


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paintedlie",
        description="Outer automorphism groups of real semisimple Lie algebras "
        "from painted diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="painted diagram, Aut(P) and Out for one real form")
    p.add_argument("name", help="real form name, e.g. 'su(2,2)' or 'compact(D4)'")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")

    p = sub.add_parser("enumerate", help="painting classes of one affine scheme")
    p.add_argument("family", choices=list("ABCDEFG"))
    p.add_argument("rank", type=int)
    p.add_argument("r", type=int, choices=[1, 2], help="twist order of the scheme")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("out", help="outer group of a semisimple sum")
    p.add_argument("spec", help="e.g. 'sl(3,C) + su(2,1) + su(2,1)'")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("classify", help="inner/outer class of a marking file")
    p.add_argument("file", help="JSON file {form, d, t}")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("export", help="emit one real form diagram")
    p.add_argument("name")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    return parser


def _diagram_lines(diagram) -> list[str]:
    if isinstance(diagram, CompactDiagram):
        scheme = diagram.scheme
        lines = [f"scheme: finite {scheme.series}, {scheme.n} nodes, all white"]
        lines += ["  " + row for row in ascii_diagram(scheme).splitlines()]
        return lines
    scheme = diagram.scheme
    lines = [f"scheme: affine {scheme.series}, {scheme.n} nodes, r = {diagram.r}"]
    art = ascii_diagram(scheme, diagram.color, diagram.marks)
    lines += ["  " + row for row in art.splitlines()]
    blacks = ", ".join(str(v) for v in diagram.black_nodes)
    lines.append(f"black nodes: {{{blacks}}}")
    marks = " ".join(f"{v}:{diagram.marks.of(v)}" for v in scheme.nodes)
    lines.append(f"marks: {marks}")
    return lines


def _aut_group(diagram):
    if isinstance(diagram, CompactDiagram):
        return automorphisms(diagram.scheme)
    return automorphisms(diagram.scheme, diagram.color)


def cmd_info(args) -> int:
    name = RealFormName.parse(args.name).normalized()
    diagram = construct(name)
    group = _aut_group(diagram)
    desc = outer_simple(name)
    if args.format == "dot":
        print(to_dot(diagram))
        return 0
    if args.format == "json":
        payload = {
            "name": str(name),
            "diagram": diagram.to_dict(),
            "aut": group.to_dict(),
            "theta_class": theta_class(name),
            "out": desc.to_dict(),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"name: {name}")
    for line in _diagram_lines(diagram):
        print(line)
    gens = "; ".join(
        " ".join(f"({' '.join(str(v) for v in cyc)})" for cyc in g.cycles() if len(cyc) > 1)
        or "id"
        for g in group.generators
    )
    print(f"Aut(P): order {group.order}, label {group.label}" + (f", generators: {gens}" if gens else ""))
    print(f"theta class: {theta_class(name)}")
    print(f"Out: {desc.label} (order {desc.order})")
    return 0


def cmd_enumerate(args) -> int:
    scheme = build_affine(args.family, args.rank, args.r)
    classes = enumerate_paintings(scheme, args.r)
    rows = []
    for painting in classes:
        named = str(identify(painting))
        rows.append(
            {
                "name": named,
                "black": list(painting.black_nodes),
                "color": list(painting.color),
            }
        )
    if args.format == "json":
        print(json.dumps({"scheme": scheme.to_dict(), "classes": rows}, indent=2))
        return 0
    print(f"scheme {scheme.series}: {len(rows)} painting class(es)")
    for row in rows:
        blacks = ", ".join(str(v) for v in row["black"])
        print(f"  {row['name']}: black = {{{blacks}}}")
    return 0


def cmd_out(args) -> int:
    spec = parse_spec(args.spec)
    desc = outer_semisimple(spec)
    if args.format == "json":
        print(json.dumps(desc.to_dict(), indent=2))
        return 0
    print(f"Out: {desc.label} (order {desc.order})")
    factors = desc.factors
    for f in factors.complex:
        print(f"  complex {f.family}{f.rank}: |Aut(D)| = {f.aut_order}, x Z2")
    for f in factors.real:
        theta = "order2" if f.theta_order == 2 else "trivial"
        print(f"  real {f.name}: |Aut(P)| = {f.aut_order}, theta {theta}")
    print(f"  gamma order: {factors.gamma_order}")
    return 0


def cmd_classify(args) -> int:
    with open(args.file, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(f"marking file is not valid JSON: {exc}") from exc
    try:
        name = RealFormName.parse(data["form"])
        diagram = construct(name)
        if isinstance(diagram, CompactDiagram):
            raise ParseError("markings are defined on noncompact (painted) forms")
        m = Marking.from_dict(diagram, data)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"malformed marking file: {exc}") from exc
    result = classify_inner(m)
    cls = result.outer_class
    if args.format == "json":
        payload = {
            "form": str(name.normalized()),
            "inner": result.inner,
            "d_trivial": cls.aut.is_identity,
            "sign": cls.sign,
            "invariant": str(invariant(m)),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print("inner" if result.inner else "outer")
    d_text = "identity" if cls.aut.is_identity else "nontrivial"
    print(f"  d: {d_text}; sign: {cls.sign:+d}; invariant: {invariant(m)}")
    return 0


def cmd_verify(args) -> int:
    results = run_all(max_rank=args.max_rank, seed=args.seed)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def cmd_export(args) -> int:
    name = RealFormName.parse(args.name).normalized()
    diagram = construct(name)
    if args.format == "dot":
        print(to_dot(diagram))
    else:
        print(json.dumps(diagram.to_dict(), indent=2))
    return 0


_HANDLERS = {
    "info": cmd_info,
    "enumerate": cmd_enumerate,
    "out": cmd_out,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return 2
    except LieDiagramError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
