"""Command-line interface: generate, verify, search and tabulate.

Text output is round-trip safe: every informational line starts with '#'
and the pair blocks parse back with the same reader the verify command
uses.  --json switches any subcommand to a single JSON envelope on stdout.

Exit codes: 0 success, 1 internal self-check failure, 2 bad usage or
precondition, 3 verified property does not hold, 4 search ceiling refusal.
"""

import argparse
import json
import sys

from . import __version__
from .construction import (
    BetaChoice,
    ConstructionError,
    build_strong_skolem,
    build_strong_starter,
    construction_primes,
)
from .residues import smallest_qr_generator
from .search import (
    CeilingExceededError,
    SearchConfig,
    SearchMode,
    search_skolem_starters,
)
from .starters import (
    PairSet,
    full_report,
    iter_pair_sets_text,
    pair_set_from_obj,
    pair_set_to_obj,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_SELF_CHECK = 1
EXIT_USAGE = 2
EXIT_PROPERTY = 3
EXIT_CEILING = 4


def _envelope(command: str, parameters: dict, results: dict) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
    }
    return json.dumps(doc, indent=2)


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _cmd_generate(args) -> int:
    try:
        choice, ps = _resolve_beta_with_alpha(args.q, args.beta, args.alpha)
    except ValueError as exc:
        _error(str(exc))
        return EXIT_USAGE
    report = full_report(ps)
    # Self-check: the construction must deliver what it promises.
    expected_skolem = choice is not None
    if not report.is_starter or not report.is_strong or (
        expected_skolem and not report.is_skolem
    ):
        _error(
            f"self-check failed for q={args.q}: construction output does "
            f"not verify; this is a bug"
        )
        return EXIT_SELF_CHECK
    beta = _beta_value(args.q, args.beta, choice)
    alpha = args.alpha if args.alpha is not None else smallest_qr_generator(args.q)
    if args.json:
        print(
            _envelope(
                "generate",
                {
                    "q": args.q,
                    "alpha": alpha,
                    "beta": beta,
                    "beta_choice": choice.value if choice else None,
                },
                {"pair_set": pair_set_to_obj(ps), "report": report.to_obj()},
            )
        )
    else:
        sys.stdout.write(ps.to_text())
        print(f"# q={args.q} alpha={alpha} beta={beta}")
        for line in report.lines():
            print(f"# {line}")
    return EXIT_OK


def _resolve_beta_with_alpha(q: int, raw: str, alpha):
    if raw in ("2", "half"):
        choice = BetaChoice(raw)
        return choice, build_strong_skolem(q, choice, alpha)
    try:
        beta = int(raw)
    except ValueError:
        raise ConstructionError(
            f"--beta must be '2', 'half' or an integer, got {raw!r}"
        ) from None
    return None, build_strong_starter(q, beta, alpha)


def _beta_value(q: int, raw: str, choice) -> int:
    if choice is not None:
        return choice.beta(q)
    return int(raw) % q


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_any(text: str) -> PairSet:
    """Accept either the text format or a JSON pair-set object."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return pair_set_from_obj(json.loads(stripped))
    sets = list(iter_pair_sets_text(text))
    if len(sets) != 1:
        raise ValueError(f"expected exactly one pair set record, found {len(sets)}")
    return sets[0]


_REQUIREMENTS = ("starter", "strong", "skolem", "strong-skolem")


def _requirement_holds(report, requirement: str) -> bool:
    if requirement == "starter":
        return report.is_starter
    if requirement == "strong":
        return report.is_strong
    if requirement == "skolem":
        return report.is_skolem
    return report.is_strong and report.is_skolem


def _cmd_verify(args) -> int:
    try:
        ps = _parse_any(_read_input(args.input))
    except (ValueError, OSError) as exc:
        _error(str(exc))
        return EXIT_USAGE
    report = full_report(ps)
    holds = _requirement_holds(report, args.require)
    if args.json:
        print(
            _envelope(
                "verify",
                {"input": args.input, "require": args.require},
                {
                    "report": report.to_obj(),
                    "required_holds": holds,
                },
            )
        )
    else:
        print(f"# n={ps.n} pairs={len(ps)}")
        for line in report.lines():
            print(f"# {line}")
        print(f"# required: {args.require}")
        print(f"# required holds: {'yes' if holds else 'no'}")
    return EXIT_OK if holds else EXIT_PROPERTY


def _cmd_search(args) -> int:
    if args.first:
        mode = SearchMode.FIRST_WITNESS
    elif args.enumerate:
        mode = SearchMode.ENUMERATE_ALL
    else:
        mode = SearchMode.COUNT_ALL
    if args.limit is not None and mode is not SearchMode.ENUMERATE_ALL:
        _error("--limit only applies to --enumerate")
        return EXIT_USAGE
    try:
        config = SearchConfig(
            n=args.n,
            mode=mode,
            require_strong=not args.no_strong,
            limit=args.limit,
            workers=args.workers,
            force=args.force,
        )
        result = search_skolem_starters(config)
    except CeilingExceededError as exc:
        _error(str(exc))
        return EXIT_CEILING
    except (ValueError, RuntimeError) as exc:
        _error(str(exc))
        return EXIT_USAGE
    if args.json:
        print(
            _envelope(
                "search",
                {
                    "n": args.n,
                    "mode": mode.value,
                    "require_strong": not args.no_strong,
                    "limit": args.limit,
                    "workers": result.workers,
                },
                {
                    "count": result.count,
                    "nodes_explored": result.nodes_explored,
                    "complete": result.complete,
                    "wall_time": result.wall_time,
                    "backend": result.backend,
                    "witnesses": [pair_set_to_obj(ps) for ps in result.witnesses],
                },
            )
        )
    else:
        kind = "strong skolem" if result.require_strong else "skolem"
        print(
            f"# search n={result.n} kind={kind} mode={mode.value} "
            f"backend={result.backend} workers={result.workers}"
        )
        for ps in result.witnesses:
            print()
            sys.stdout.write(ps.to_text())
        print(f"# count={result.count}")
        print(f"# nodes={result.nodes_explored}")
        print(f"# complete={'yes' if result.complete else 'no'}")
        print(f"# wall_time={result.wall_time:.3f}s")
    return EXIT_OK


def _cmd_tabulate(args) -> int:
    if args.beta == "both":
        choices = (BetaChoice.TWO, BetaChoice.HALF)
    else:
        choices = (BetaChoice(args.beta),)
    entries = []
    try:
        for q in construction_primes(args.q_max):
            for choice in choices:
                ps = build_strong_skolem(q, choice)
                report = full_report(ps)
                if not all(report.verdicts):
                    _error(
                        f"self-check failed for q={q} beta={choice.value}; "
                        f"this is a bug"
                    )
                    return EXIT_SELF_CHECK
                entries.append((q, smallest_qr_generator(q), choice, ps))
    except ValueError as exc:
        _error(str(exc))
        return EXIT_USAGE
    if args.json:
        print(
            _envelope(
                "tabulate",
                {"q_max": args.q_max, "beta": args.beta},
                {
                    "entries": [
                        {
                            "q": q,
                            "alpha": alpha,
                            "beta": choice.beta(q),
                            "beta_choice": choice.value,
                            "pair_set": pair_set_to_obj(ps),
                        }
                        for q, alpha, choice, ps in entries
                    ]
                },
            )
        )
    else:
        print(
            f"# strong skolem starters from the quadratic-residue "
            f"construction, q <= {args.q_max}"
        )
        for q, alpha, choice, ps in entries:
            print()
            print(f"# q={q} alpha={alpha} beta={choice.beta(q)}")
            sys.stdout.write(ps.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skolem",
        description="Construct, verify and exhaustively search strong "
        "Skolem starters for Z_n.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "generate",
        help="build a strong (Skolem) starter from the residue construction",
    )
    gen.add_argument(
        "q", type=int, help="odd prime modulus; must be 3 mod 8 for Skolem output"
    )
    gen.add_argument(
        "--beta",
        default="2",
        help="'2' or 'half' for the Skolem construction, or any "
        "non-residue integer for a plain strong starter (default: 2)",
    )
    gen.add_argument(
        "--alpha",
        type=int,
        default=None,
        help="generator of the residue group; changes nothing observable, "
        "the pair set is generator-independent (default: smallest)",
    )
    gen.add_argument("--json", action="store_true", help="emit a JSON envelope")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="check the three starter properties")
    ver.add_argument(
        "input",
        nargs="?",
        default="-",
        help="path to a text record or JSON pair-set object; '-' for stdin",
    )
    ver.add_argument(
        "--require",
        choices=_REQUIREMENTS,
        default="strong-skolem",
        help="property that must hold for exit code 0 (default: strong-skolem)",
    )
    ver.add_argument("--json", action="store_true", help="emit a JSON envelope")
    ver.set_defaults(func=_cmd_verify)

    sea = sub.add_parser("search", help="exhaustive backtracking search")
    sea.add_argument("n", type=int, help="odd order of Z_n")
    mode = sea.add_mutually_exclusive_group()
    mode.add_argument(
        "--count", action="store_true", help="count all starters (default)"
    )
    mode.add_argument(
        "--first", action="store_true", help="stop at the first starter found"
    )
    mode.add_argument(
        "--enumerate", action="store_true", help="count and list the starters"
    )
    sea.add_argument(
        "--limit", type=int, default=None, help="cap listed witnesses (--enumerate)"
    )
    sea.add_argument(
        "--no-strong",
        action="store_true",
        help="search plain Skolem starters instead of strong ones",
    )
    sea.add_argument("--workers", type=int, default=1, help="parallel processes")
    sea.add_argument(
        "--force",
        action="store_true",
        help="bypass the search ceiling (default 27, env SKOLEM_CEILING)",
    )
    sea.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sea.set_defaults(func=_cmd_search)

    tab = sub.add_parser(
        "tabulate",
        help="construction output for every applicable prime up to a bound",
    )
    tab.add_argument("--q-max", type=int, default=100, help="largest q (default: 100)")
    tab.add_argument(
        "--beta",
        choices=("2", "half", "both"),
        default="both",
        help="which construction to tabulate (default: both)",
    )
    tab.add_argument("--json", action="store_true", help="emit a JSON envelope")
    tab.set_defaults(func=_cmd_tabulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)
