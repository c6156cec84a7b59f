"""Command line interface: ``qja expand|matrix|nullspace|verify|report``.

Exit codes: 0 when every check passes, 1 when a mathematical assertion
fails, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from qja import formats
from qja.checks import full_report
from qja.expansion import build_expansion_matrix, qj_expand
from qja.identities import REGISTRY, verify_identity
from qja.trees import Mode, parse_tree

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _add_matrix_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--degree", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--mode", choices=("raw", "rc-reduced", "commutative"), default="rc-reduced",
                   help="column basis (default: rc-reduced)")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", type=Path, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qja",
        description="Polynomial identities of the quasi-Jordan product in free dialgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a nonassociative monomial into normal-form dialgebra terms")
    p.add_argument("expr", help="monomial such as '((ab)c)d'")

    p = sub.add_parser("matrix", help="emit the expansion matrix")
    _add_matrix_args(p)

    p = sub.add_parser("nullspace", help="emit the row canonical form and canonical nullspace basis")
    _add_matrix_args(p)

    p = sub.add_parser("verify", help="check a named identity, or run every check with --all")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("name", nargs="?", choices=sorted(REGISTRY), help="registered identity")
    g.add_argument("--all", action="store_true", help="run the full verification suite")

    p = sub.add_parser("report", help="run the full pipeline and render the report")
    p.add_argument("--out", type=Path, help="directory for report.txt and report.json (default: print text)")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def cmd_expand(args) -> int:
    try:
        tree = parse_tree(args.expr)
    except ValueError as exc:
        print(f"qja expand: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(qj_expand(tree))
    return EXIT_OK


def _expansion(args, parser):
    mode = Mode.parse(args.mode)
    if mode is Mode.COMM:
        parser.error("expansion matrices exist only for --mode raw or rc-reduced")
    return build_expansion_matrix(args.degree, mode)


def cmd_matrix(args, parser) -> int:
    e = _expansion(args, parser)
    if args.format == "csv":
        text = formats.matrix_to_csv(e.row_labels(), e.col_labels(), e.matrix)
    elif args.format == "json":
        text = formats.expansion_to_json(e)
    else:
        text = formats.expansion_to_text(e)
    _emit(text, args.out)
    return EXIT_OK


def cmd_nullspace(args, parser) -> int:
    n = formats.nullspace_result(_expansion(args, parser))
    render = {"csv": formats.nullspace_to_csv, "json": formats.nullspace_to_json, "text": formats.nullspace_to_text}
    _emit(render[args.format](n), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.all:
        report = full_report()
        sys.stdout.write(report.render_text())
        return EXIT_OK if report.passed else EXIT_FAILED
    identity = REGISTRY[args.name]
    ok, witness = verify_identity(identity)
    print(f"{args.name}: {identity}")
    print(f"{'PASS' if ok else 'FAIL'}: expansion = {witness}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_report(args) -> int:
    if args.out is None:
        report = full_report()
        sys.stdout.write(report.render_text())
    else:
        try:
            # fail on an unusable target before spending time on the checks
            args.out.mkdir(parents=True, exist_ok=True)
            report = full_report()
            (args.out / "report.txt").write_text(report.render_text(), encoding="utf-8")
            (args.out / "report.json").write_text(report.render_json(), encoding="utf-8")
        except OSError as exc:
            print(f"qja report: cannot write to {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK if report.passed else EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "expand":
        return cmd_expand(args)
    if args.command == "matrix":
        return cmd_matrix(args, parser)
    if args.command == "nullspace":
        return cmd_nullspace(args, parser)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_report(args)


if __name__ == "__main__":
    sys.exit(main())
