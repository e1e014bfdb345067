"""Command-line front end.

Subcommands cover the whole pipeline: field inspection, guaranteed
constructions, MDS checks, Schur-square analysis, distance computation,
the RS/CTRS distinguishers, file export/import, and a reproduction
harness for the built-in worked examples.

Exit codes: 0 on success, 1 on analysis failure (a reproduction
mismatch, a method disagreement, or an --expect gate that does not
hold), 2 on usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codes import generator_matrix
from .errors import MethodDisagreementError
from .gf import Field
from .golden import GOLDEN_KEYS, check_case, golden_cases
from .linalg import matrix_from_text, matrix_to_text, rank
from .mds import check_mds, min_distance
from .report import analyze, distance_budget
from .schur import schur_report
from .specfile import codespec_from_text, codespec_to_text
from .construct import (
    SubgroupConstructionParams,
    build_subfield_chain_code,
    build_subgroup_code,
)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _tri(value) -> str:
    return "undetermined" if value is None else ("true" if value else "false")


def _read_spec(path: str):
    return codespec_from_text(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_constructed(code, out: str | None) -> None:
    lines = [f"# construction {code.construction}"]
    lines.extend(f"# guarantee {p}" for p in code.provenance())
    lines.extend(f"# warning {w}" for w in code.warnings)
    _emit("\n".join(lines) + "\n" + codespec_to_text(code.spec), out)


def cmd_field_info(args) -> int:
    f = Field.from_descriptor(args.field)
    g = f.primitive_element()
    print(f"field={f.descriptor()}")
    print(f"p={f.p}")
    print(f"m={f.m}")
    print(f"q={f.q}")
    print(f"primitive={g.index} order={f.q - 1}")
    for d in range(1, f.m):
        if f.m % d:
            continue
        view = f.subfield(d)
        print(f"subfield degree={d} order={view.order} primitive={view.primitive_element().index}")
    return 0


def cmd_construct_subfield_chain(args) -> int:
    f = Field.from_descriptor(args.field)
    code = build_subfield_chain_code(
        f, args.q0_degree, args.q1_degree, args.alphas,
        args.b, args.c, args.lam, args.eta, args.k, extended=args.extended,
    )
    _emit_constructed(code, args.output)
    return 0


def cmd_construct_subgroup(args) -> int:
    f = Field.from_descriptor(args.field)
    params = SubgroupConstructionParams(
        f, args.subfield_degree, args.order, args.b, args.c,
        args.lam, args.eta, h=args.hook, k=args.k, extended=args.extended,
    )
    code = build_subgroup_code(params, unguaranteed=args.unguaranteed)
    _emit_constructed(code, args.output)
    return 0


def cmd_check_mds(args) -> int:
    spec = _read_spec(args.spec)
    gen = generator_matrix(spec)
    verdict = check_mds(spec, method=args.method, gen=gen)
    print(verdict.render())
    if args.verbose:
        sys.stdout.write(matrix_to_text(gen.matrix))
    if args.expect is not None and verdict.is_mds != (args.expect == "true"):
        print(f"error: expected mds={args.expect}", file=sys.stderr)
        return 1
    return 0


def cmd_schur_dim(args) -> int:
    spec = _read_spec(args.spec)
    gen = generator_matrix(spec)
    verdict = check_mds(spec, gen=gen)
    print(schur_report(gen, verdict).render())
    return 0


def cmd_distance(args) -> int:
    spec = _read_spec(args.spec)
    gen = generator_matrix(spec)
    result = min_distance(gen, distance_budget(args.budget))
    if result.value is None:
        bound = gen.ncols - gen.nrows + 1
        print(f"distance_method=budget-exceeded distance_upper_bound={bound}")
    else:
        line = f"distance={result.value} distance_method={result.method}"
        if result.method == "enumeration":
            line += f" codewords_enumerated={result.enumerated}"
        print(line)
    return 0


def cmd_distinguish(args) -> int:
    spec = _read_spec(args.spec)
    gen = generator_matrix(spec)
    verdict = check_mds(spec, gen=gen)
    rep = schur_report(gen, verdict)
    print(f"schur_dim={rep.dim}")
    if args.target == "rs":
        print(f"non_rs={_tri(rep.non_rs)}")
    else:
        print(f"ctrs_incompatible={_tri(rep.ctrs_incompatible)}")
    return 0


def cmd_reproduce(args) -> int:
    keys = GOLDEN_KEYS if args.example == "all" else (args.example,)
    failures = 0
    total = 0
    for key in keys:
        for case in golden_cases(key):
            total += 1
            report, problems = check_case(case)
            print(f"example={case.label}")
            for line in report.lines():
                print(line)
            if args.verbose:
                sys.stdout.write(matrix_to_text(generator_matrix(case.code.spec).matrix))
            for problem in problems:
                print(f"mismatch={problem}")
            print(f"result={'PASS' if not problems else 'FAIL'}")
            print()
            failures += bool(problems)
    print(f"reproduce={'PASS' if not failures else 'FAIL'} cases={total - failures}/{total}")
    return 1 if failures else 0


def cmd_export(args) -> int:
    spec = _read_spec(args.spec)
    if args.format == "matrix":
        text = matrix_to_text(generator_matrix(spec).matrix)
    else:
        text = codespec_to_text(spec)
    _emit(text, args.output)
    return 0


def cmd_import(args) -> int:
    text = Path(args.file).read_text()
    first = next(
        (ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")),
        "",
    )
    if first.startswith("field"):
        spec = codespec_from_text(text)
        print("kind=codespec")
        sys.stdout.write(codespec_to_text(spec))
    else:
        m = matrix_from_text(text)
        print("kind=matrix")
        print(f"field={m.field.descriptor()}")
        print(f"rows={m.nrows} cols={m.ncols} rank={rank(m)}")
    return 0


def cmd_analyze(args) -> int:
    spec = _read_spec(args.spec)
    report = analyze(spec, method=args.method, budget=args.budget)
    sys.stdout.write(report.render())
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rctrs",
        description="Construct and analyze twisted Reed-Solomon family codes.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe a finite field")
    p.add_argument("field", help="descriptor such as 17, 7^4 or 7^4/1,0,0,1,1")
    p.set_defaults(func=cmd_field_info)

    build = sub.add_parser("construct", help="emit a guaranteed code spec")
    bsub = build.add_subparsers(dest="recipe", required=True)

    p = bsub.add_parser("subfield-chain", help="hook-0 code from a subfield chain")
    p.add_argument("--field", required=True)
    p.add_argument("--q0-degree", type=int, required=True)
    p.add_argument("--q1-degree", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--eta", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--extended", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct_subfield_chain)

    p = bsub.add_parser("subgroup", help="code from a multiplicative subgroup")
    p.add_argument("--field", required=True)
    p.add_argument("--subfield-degree", type=int, default=1)
    p.add_argument("--order", type=int, required=True, help="subgroup order = code length n")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--eta", type=int, default=0)
    p.add_argument("--hook", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--unguaranteed", action="store_true",
                   help="skip the lambda/eta membership gates and set no flags")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct_subgroup)

    p = sub.add_parser("check-mds", help="verify the MDS property of a spec file")
    p.add_argument("spec")
    p.add_argument("--method", choices=("minors", "closed", "both"), default="both")
    p.add_argument("--expect", choices=("true", "false"))
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check_mds)

    p = sub.add_parser("schur-dim", help="Schur-square dimension and distinguishers")
    p.add_argument("spec")
    p.set_defaults(func=cmd_schur_dim)

    p = sub.add_parser("distance", help="minimum distance, enumerated within budget")
    p.add_argument("spec")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("distinguish", help="test inequivalence to RS or CTRS codes")
    p.add_argument("spec")
    p.add_argument("--target", choices=("rs", "ctrs"), required=True)
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("reproduce", help="run the built-in worked examples")
    p.add_argument("--example", choices=GOLDEN_KEYS + ("all",), default="all")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("analyze", help="full report for a spec file")
    p.add_argument("spec")
    p.add_argument("--method", choices=("minors", "both"), default="both")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", help="write the generator matrix or canonical spec")
    p.add_argument("spec")
    p.add_argument("--format", choices=("matrix", "spec"), default="matrix")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("import", help="validate and summarize a spec or matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_import)

    return top


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MethodDisagreementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
