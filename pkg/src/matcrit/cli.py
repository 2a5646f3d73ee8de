"""Command-line interface: ``matcrit <command> ...``.

Exit codes: 0 success, 1 not coverable or a failed verification,
2 usage error, 3 unreadable or invalid matroid input.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from fractions import Fraction

from .constructions import catalog, lookup
from .covering import Cover, covering_number, is_coverable
from .criticality import max_proper_minor_density
from .fileformat import ParseError, SemanticError, read
from .matroid import Matroid, format_set, popcount
from .verify import VERIFIERS

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer."""
    num, slash, den = text.partition("/")
    try:
        if slash:
            if not den.strip().isdigit():
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected p/q or an integer, got {text!r}") from None


def load(target: str) -> tuple[str, Matroid]:
    """A path that exists is read as a matroid file, anything else is a catalog name."""
    if os.path.exists(target):
        try:
            parsed = read(target)
        except (ParseError, SemanticError) as exc:
            raise InputError(f"{target}: {exc}") from exc
        except OSError as exc:
            raise InputError(f"{target}: {exc.strerror}") from exc
        return parsed.name, parsed.matroid
    try:
        return target, lookup(target)
    except (KeyError, ValueError) as exc:
        raise InputError(f"{target}: not a file and not a catalog name") from exc


def _show(args, out) -> int:
    name, M = load(args.matroid)
    sizes = Counter(popcount(c) for c in M.circuits())
    histogram = " ".join(f"{k}:{v}" for k, v in sorted(sizes.items())) or "none"
    print(f"name {name}", file=out)
    print(f"size {M.n}", file=out)
    print(f"rank {M.r}", file=out)
    print(f"bases {M.num_bases}", file=out)
    print(f"epsilon {M.epsilon()}", file=out)
    print(f"density {M.density()}", file=out)
    print(f"circuits {histogram}", file=out)
    print(f"connected {'yes' if M.n and M.is_connected() else 'no'}", file=out)
    return EXIT_OK


def _cover(args, out) -> int:
    _, M = load(args.matroid)
    result = is_coverable(M, args.k)
    print(result, file=out)
    return EXIT_OK if isinstance(result, Cover) else EXIT_NO


def _covering_number(args, out) -> int:
    _, M = load(args.matroid)
    if M.loops():
        raise InputError(f"covering number undefined: loops {format_set(M.loops())}")
    print(covering_number(M), file=out)
    return EXIT_OK


def _density(args, out) -> int:
    _, M = load(args.matroid)
    print(M.density(), file=out)
    return EXIT_OK


def _require_rank(M: Matroid) -> None:
    if M.r < 1:
        raise InputError("criticality needs a matroid of positive rank")


def _critical(args, out) -> int:
    name, M = load(args.matroid)
    _require_rank(M)
    d = M.density()
    found = max_proper_minor_density(M)
    print(f"name {name}", file=out)
    print(f"density {d}", file=out)
    print(f"max_minor_density {found.max_density}", file=out)
    print(f"density_critical {'yes' if found.max_density < d else 'no'}", file=out)
    top = found.max_density
    if args.strict is not None:
        flag = d > args.strict and top <= args.strict
        print(f"strictly_critical_at {args.strict} {'yes' if flag else 'no'}", file=out)
    if args.at is not None:
        flag = d >= args.at and top < args.at
        print(f"critical_at {args.at} {'yes' if flag else 'no'}", file=out)
    return EXIT_OK


def _minors(args, out) -> int:
    _, M = load(args.matroid)
    _require_rank(M)
    found = max_proper_minor_density(M)
    print(f"max_density {found.max_density}", file=out)
    if found.witness is None:
        print("witness none", file=out)
    else:
        print(f"witness delete {format_set(found.delete)} contract {format_set(found.contract)}", file=out)
    print(f"states_explored {found.states_explored}", file=out)
    return EXIT_OK


_MAX_N_PARAM = {"thm1.6": "max_chain", "prop1.2": "max_k", "lemma2.2": "exhaustive_limit"}


def _verify(args, out) -> int:
    verifier = VERIFIERS[args.statement]
    kwargs = {}
    if args.m18_depth is not None:
        if args.statement != "thm1.6":
            raise UsageError("--m18-depth only applies to thm1.6")
        kwargs["m18_depth"] = args.m18_depth
    if args.max_n is not None:
        if args.statement not in ("thm1.6", "prop1.2", "lemma2.2"):
            raise UsageError(f"--max-n does not apply to {args.statement}")
        kwargs[_MAX_N_PARAM[args.statement]] = args.max_n
    try:
        report = verifier(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(report.text())
    return EXIT_OK if report.passed else EXIT_NO


def _catalog(args, out) -> int:
    for entry in catalog():
        tags = ",".join(sorted(entry.families)) or "-"
        print(f"{entry.name} rank={entry.rank} size={entry.size} density={entry.density} "
              f"lists={tags}", file=out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matcrit", description="Exact matroid covering and density-criticality checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("show", help="basic statistics")
    p.add_argument("matroid", help="catalog name or matroid file")
    p.set_defaults(run=_show)

    p = sub.add_parser("cover", help="cover by k independent sets, or a violating set")
    p.add_argument("k", type=int)
    p.add_argument("matroid")
    p.set_defaults(run=_cover)

    p = sub.add_parser("covering-number", help="least k with a cover by k independent sets")
    p.add_argument("matroid")
    p.set_defaults(run=_covering_number)

    p = sub.add_parser("density", help="epsilon / rank as an exact fraction")
    p.add_argument("matroid")
    p.set_defaults(run=_density)

    p = sub.add_parser("critical", help="density-criticality flags")
    p.add_argument("matroid")
    p.add_argument("--strict", type=rational, metavar="P/Q", help="test strict t-criticality")
    p.add_argument("--at", type=rational, metavar="P/Q", help="test t-criticality")
    p.set_defaults(run=_critical)

    p = sub.add_parser("minors", help="densest proper minor")
    p.add_argument("matroid")
    p.add_argument("--max-density", action="store_true", required=True)
    p.set_defaults(run=_minors)

    p = sub.add_parser("verify", help="run a verification report")
    p.add_argument("statement", choices=sorted(VERIFIERS))
    p.add_argument("--max-n", type=int, metavar="K",
                   help="largest chain (thm1.6), largest k (prop1.2) or exhaustive size limit (lemma2.2)")
    p.add_argument("--m18-depth", type=int, metavar="D",
                   help="thm1.6 only: limit the M18 search to D delete/contract steps")
    p.set_defaults(run=_verify)

    p = sub.add_parser("catalog", help="list named matroids")
    p.set_defaults(run=_catalog)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"matcrit: usage error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return args.run(args, out)
    except UsageError as exc:
        print(f"matcrit: usage error: {exc}", file=err)
        return EXIT_USAGE
    except InputError as exc:
        print(f"matcrit: {exc}", file=err)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"matcrit: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
