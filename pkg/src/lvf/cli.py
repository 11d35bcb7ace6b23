"""Command-line front end.

Subcommands: bracket, rank, verify, centralizer, solve, structure,
g2-check, catalog.  Exit status 0 on success or pass, 1 on a
verification failure, 2 on usage or expression errors.  All numbers
print as exact rationals; output is deterministic.

``LVF_CATALOG`` in the environment points the catalog-consuming
subcommands at a catalog file instead of the builtin one.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from lvf import catalog as catmod
from lvf import verify as vermod
from lvf.errors import LvfError, ParseError
from lvf.fields import format_field, generic_rank
from lvf.obstruction import b2_sanity_control, g2_obstruction
from lvf.parsing import parse_field
from lvf.roots import (
    ROOT_SYSTEMS,
    b2_sl4_model,
    build_chevalley,
    format_constants_table,
    get_root_system,
)
from lvf.solve import AnsatzSpace, BracketConstraint, centralizer, solve


def _load_catalog() -> List[catmod.Realization]:
    path = os.environ.get("LVF_CATALOG")
    if path:
        return catmod.read(path, verify=False)
    return catmod.load_builtin()


def _parse_params(pairs: Optional[List[str]]) -> Dict[str, Fraction]:
    out: Dict[str, Fraction] = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise LvfError(f"bad --param '{pair}', expected name=p/q")
        name, _, value = pair.partition("=")
        out[name.strip()] = Fraction(value.strip())
    return out


def _cmd_bracket(args) -> int:
    params = tuple(_parse_params(args.param))
    x = parse_field(args.x, args.dim, params)
    y = parse_field(args.y, args.dim, params)
    print(format_field(x.bracket(y)))
    return 0


def _cmd_rank(args) -> int:
    params = tuple(_parse_params(args.param))
    fields = [parse_field(text, args.dim, params) for text in args.fields]
    print(generic_rank(fields))
    return 0


def _cmd_verify(args) -> int:
    entries = _load_catalog()
    if args.form:
        entries = [e for e in entries if e.id == args.form]
        if not entries:
            print(f"unknown catalog id '{args.form}'", file=sys.stderr)
            return 2
    params = _parse_params(args.param)
    summary = vermod.verify_all(entries, params or None)
    if args.format == "records":
        for line in summary.to_records():
            print(line)
    else:
        print(summary.to_text())
    return 0 if summary.passed else 1


def _cmd_centralizer(args) -> int:
    entries = {e.id: e for e in _load_catalog()}
    if args.form not in entries:
        print(f"unknown catalog id '{args.form}'", file=sys.stderr)
        return 2
    entry = entries[args.form]
    assignment = entry.default_assignment()
    assignment.update(_parse_params(args.param))
    gens = list(entry.generators_at(assignment).values())
    ansatz = AnsatzSpace(entry.dim, max_degree=args.max_degree)
    result = centralizer(gens, ansatz)
    rank = generic_rank(result.basis) if result.basis else 0
    print(f"centralizer of {entry.id} at degree {args.max_degree}:")
    for b in result.basis:
        print(f"  {format_field(b)}")
    print(f"dimension {result.dimension}, generic rank {rank}")
    return 0


def _read_solve_file(path: str):
    dim = 3
    params: Dict[str, Fraction] = {}
    exponents = []
    degree = 2
    components = None
    constraints = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            try:
                if head == "dim":
                    dim = int(rest)
                elif head == "params":
                    for chunk in rest.split():
                        name, _, value = chunk.partition("=")
                        params[name] = Fraction(value)
                elif head == "exponents":
                    for chunk in rest.replace("(", " ").replace(")", " ").split():
                        vec = tuple(Fraction(q) for q in chunk.split(","))
                        exponents.append(vec)
                elif head == "degree":
                    degree = int(rest)
                elif head == "components":
                    names = {"x": 0, "y": 1, "z": 2, "w": 3}
                    components = [
                        names[c] if c in names else int(c) - 1 for c in rest.split()
                    ]
                elif head == "eigen":
                    value, _, expr = rest.partition(":")
                    constraints.append(("eigen", Fraction(value.strip()), expr.strip()))
                elif head == "zero":
                    expr = rest.lstrip(": ").strip()
                    constraints.append(("zero", None, expr))
                elif head == "equals":
                    known, _, target = rest.partition("->")
                    constraints.append(("equals", target.strip(), known.strip()))
                else:
                    raise LvfError(f"unknown directive '{head}'")
            except (ValueError, LvfError) as exc:
                raise LvfError(f"{path}:{lineno}: {exc}") from exc
    if not exponents:
        exponents = [tuple(Fraction(0) for _ in range(dim))]
    pnames = tuple(params)
    built = []
    for kind, extra, expr in constraints:
        known = parse_field(expr, dim, pnames)
        if params:
            known = known.subst_params(params)
        if kind == "eigen":
            built.append(BracketConstraint.eigen(known, extra))
        elif kind == "zero":
            built.append(BracketConstraint.commutes(known))
        else:
            target = parse_field(extra, dim, pnames)
            if params:
                target = target.subst_params(params)
            built.append(BracketConstraint.equals(known, target))
    ansatz = AnsatzSpace(dim, exponents, degree, components)
    return built, ansatz


def _cmd_solve(args) -> int:
    constraints, ansatz = _read_solve_file(args.file)
    result = solve(constraints, ansatz)
    print(f"ansatz dimension {result.ansatz_dim}, matrix rank {result.matrix_rank}")
    if result.inconsistency:
        print(f"inconsistent: {result.inconsistency}")
        return 1
    if result.particular is not None:
        print(f"particular: {format_field(result.particular)}")
    print(f"solution dimension {result.dimension}")
    for b in result.basis:
        print(f"  {format_field(b)}")
    return 0


def _cmd_structure(args) -> int:
    system = get_root_system(args.type)
    lines = [f"root system {system.label}"]
    cm = system.cartan_matrix()
    lines.append(f"cartan matrix [[{cm[0][0]}, {cm[0][1]}], [{cm[1][0]}, {cm[1][1]}]]")
    names = ", ".join(system.root_name(r) for r in system.positive_roots())
    lines.append(f"positive roots: {names}")
    chev = None
    if args.model:
        if args.model == "sl4":
            if system.label != "B2":
                print("the sl4 model realizes B2 only", file=sys.stderr)
                return 2
            chev = build_chevalley(system, b2_sl4_model())
        else:
            entries = {e.id: e for e in _load_catalog()}
            if args.model not in entries:
                print(f"unknown model '{args.model}'", file=sys.stderr)
                return 2
            entry = entries[args.model]
            expected = {"a2": "A2", "b2": "B2"}.get(entry.family)
            if expected != system.label:
                print(
                    f"catalog entry {entry.id} realizes {expected}, not "
                    f"{system.label}",
                    file=sys.stderr,
                )
                return 2
            gens = entry.generators_at(entry.default_assignment())
            simple = {
                (1, 0): gens["X_alpha"],
                (-1, 0): gens["X_malpha"],
                (0, 1): gens["X_beta"],
                (0, -1): gens["X_mbeta"],
            }
            chev = build_chevalley(system, simple)
    if args.format == "records":
        print(f"record kind=rootsystem type={system.label} "
              f"cartan={cm[0][0]},{cm[0][1]},{cm[1][0]},{cm[1][1]}")
        for r in system.positive_roots():
            print(f"record kind=root name={system.root_name(r)} coords={r[0]},{r[1]}")
        if chev is not None:
            for r, s, n in chev.constants_table():
                print(
                    f"record kind=constant r={system.root_name(r)} "
                    f"s={system.root_name(s)} n={n}"
                )
    else:
        print("\n".join(lines))
        if chev is not None:
            scaled = {
                system.root_name(r): s for r, s in sorted(chev.scalings.items()) if s != 1
            }
            if scaled:
                joined = ", ".join(f"X_{n} by {s}" for n, s in scaled.items())
                print(f"(negative simple vectors rescaled: {joined})")
            print(format_constants_table(chev))
    return 0


def _cmd_g2_check(args) -> int:
    ansatz = AnsatzSpace(3, max_degree=args.max_degree)
    report = g2_obstruction(args.form, ansatz)
    control_line = None
    if args.control:
        control = b2_sanity_control()
        control_line = control.to_text()
        control_ok = control.validated
    else:
        control_ok = True
    if args.format == "records":
        for line in report.to_records():
            print(line)
        if control_line:
            print(f"record kind=control validated={'true' if control_ok else 'false'}")
    else:
        if args.verbose:
            print(report.to_text())
        else:
            if report.verdict == "obstructed":
                vanished = " or ".join(f"{v} = 0" for v in report.vanished_vectors)
                print(f"OBSTRUCTED: {vanished}")
            else:
                print("COUNTEREXAMPLE-CANDIDATE (see --verbose output)")
        if control_line:
            print(control_line)
    if report.verdict != "obstructed" or not control_ok:
        return 1
    return 0


def _cmd_catalog(args) -> int:
    entries = _load_catalog()
    if args.action == "list":
        for entry in entries:
            print(f"{entry.id}  dim {entry.dim}  rank {entry.expected_rank}  {entry.source}")
        return 0
    if args.action == "show":
        if not args.target:
            print("catalog show needs an entry id", file=sys.stderr)
            return 2
        for entry in entries:
            if entry.id == args.target:
                print(catmod.dumps([entry]), end="")
                return 0
        print(f"unknown catalog id '{args.target}'", file=sys.stderr)
        return 2
    if args.action == "export":
        if not args.target:
            print("catalog export needs a path", file=sys.stderr)
            return 2
        catmod.write(args.target, entries)
        print(f"wrote {len(entries)} realizations to {args.target}")
        return 0
    print(f"unknown catalog action '{args.action}'", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lvf",
        description="exact toolkit for Lie algebras of vector fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="Lie bracket of two vector fields")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--param", action="append", metavar="name=p/q")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("rank", help="generic rank of a family of fields")
    p.add_argument("fields", nargs="+")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--param", action="append", metavar="name=p/q")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("verify", help="verify catalog realizations")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true")
    group.add_argument("--form", metavar="ID")
    p.add_argument("--param", action="append", metavar="name=p/q")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("centralizer", help="centralizer inside a bounded ansatz")
    p.add_argument("--form", required=True, metavar="ID")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--param", action="append", metavar="name=p/q")
    p.set_defaults(func=_cmd_centralizer)

    p = sub.add_parser("solve", help="solve bracket constraints from a file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("structure", help="root system data and constants")
    p.add_argument("--type", required=True, choices=sorted(ROOT_SYSTEMS))
    p.add_argument("--model", metavar="sl4|CATALOG_ID")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("g2-check", help="short-root extension obstruction")
    p.add_argument("--form", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--control", action="store_true", help="also run the B2 control")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=_cmd_g2_check)

    p = sub.add_parser("catalog", help="list, show or export the catalog")
    p.add_argument("action", choices=("list", "show", "export"))
    p.add_argument("target", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"expression error: {exc}", file=sys.stderr)
        return 2
    except (LvfError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
