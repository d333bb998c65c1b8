"""Command-line interface.

Subcommands: ``outcome``, ``reduce``, ``advise``, ``verify``, and
``distinguish G -- H``.  Positions use the grammar in :mod:`sprigs.grammar`.
Exit codes: 0 success, 1 verification failure (or a closed-form/oracle
disagreement, which would mean this implementation is broken), 2 parse or
usage error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Union

from . import games
from .errors import BudgetExceededError, ClassifierError, ParseError, SprigsError
from .games import Convention, Game, outcome
from .grammar import parse_position, render_position
from .monoid import render_word, to_word
from .positions import (
    Player,
    SprigSum,
    advantage,
    best_move,
    edge,
    misere_outcome_closed,
    normal_outcome_closed,
    reduce,
    to_game,
)
from .universe import default_contexts, distinguish
from .verify import SUITE_NAMES, Caps, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class Query:
    """One parsed request: what to compute, about which position, how to print it."""

    subcommand: str
    position: Union[SprigSum, Game, None]
    convention: Convention = Convention.MISERE
    method: Optional[str] = None
    fmt: str = "text"
    text: str = ""

    def position_text(self) -> str:
        if isinstance(self.position, SprigSum):
            return render_position(self.position)
        return " ".join(self.text.split())


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {'-' if value is None else value}")


def _require_sprig_sum(position: Union[SprigSum, Game], what: str) -> SprigSum:
    if isinstance(position, SprigSum):
        return position
    raise ClassifierError(
        f"{what} needs a sum of sprigs and stars; positions with heap terms "
        "are oracle-only (use 'outcome --method oracle')"
    )


def _closed_outcome(s: SprigSum, convention: Convention):
    if convention is Convention.MISERE:
        return misere_outcome_closed(s)
    return normal_outcome_closed(s)


def cmd_outcome(q: Query) -> int:
    position = q.position
    is_sum = isinstance(position, SprigSum)
    method = q.method or ("both" if is_sum else "oracle")
    if not is_sum and method in ("closed", "both"):
        if q.method is None:
            method = "oracle"
        else:
            raise ClassifierError(
                "closed-form classification is only defined for sums of sprigs and stars"
            )

    closed = oracle = None
    if method in ("closed", "both"):
        closed = _closed_outcome(position, q.convention)
    if method in ("oracle", "both"):
        game = to_game(position) if is_sum else position
        oracle = outcome(game, q.convention)
    if method == "both" and closed is not oracle:
        print(
            f"fatal: closed form says {closed.value} but the oracle says "
            f"{oracle.value}; this is an implementation bug",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED

    final = closed if closed is not None else oracle
    payload = {
        "position": q.position_text(),
        "convention": q.convention.value,
        "method": method,
        "outcome": final.value,
        "delta": advantage(position) if is_sum else None,
        "epsilon": str(edge(position)) if is_sum else None,
        "word": render_word(to_word(position)) if is_sum else None,
    }
    _emit(payload, q.fmt)
    return EXIT_OK


def cmd_reduce(q: Query) -> int:
    s = _require_sprig_sum(q.position, "reduce")
    r = reduce(s)
    payload = {
        "position": render_position(s),
        "reduced": render_position(r),
        "reduced_lefts": [str(v) for v in r.lefts],
        "reduced_rights": [str(v) for v in r.rights],
        "star": r.star,
        "delta": advantage(s),
        "epsilon": str(edge(s)),
        "word": render_word(to_word(s)),
    }
    _emit(payload, q.fmt)
    return EXIT_OK


def cmd_advise(q: Query, mover: Player) -> int:
    s = _require_sprig_sum(q.position, "advise")
    out = misere_outcome_closed(s)
    wins = out in ((games.Outcome.L, games.Outcome.N) if mover is Player.LEFT else (games.Outcome.R, games.Outcome.N))
    move = best_move(s, mover)
    payload = {
        "position": render_position(s),
        "mover": mover.value,
        "outcome": out.value,
        "mover_wins": wins,
        "move": None if move is None else move.description,
        "result": None if move is None else render_position(move.position),
        "note": "no moves: the mover wins at once under misere" if move is None else None,
    }
    _emit(payload, q.fmt)
    return EXIT_OK


def cmd_distinguish(g_text: str, h_text: str, caps: Caps, fmt: str) -> int:
    ctx = default_contexts(caps.ctx_sprigs, caps.ctx_len, caps.ctx_birthday)

    def as_game(text: str) -> Game:
        position = parse_position(text)
        return to_game(position) if isinstance(position, SprigSum) else position

    witness = distinguish(as_game(g_text), as_game(h_text), ctx)
    payload = {
        "g": g_text.strip(),
        "h": h_text.strip(),
        "contexts": len(ctx),
        "context_set": ctx.descriptor,
        "witness": None if witness is None else ctx.label_of(witness),
        "verdict": (
            f"indistinguishable over {len(ctx)} contexts"
            if witness is None
            else "distinguishable"
        ),
    }
    _emit(payload, fmt)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    caps = Caps(
        sprigs=args.sprigs,
        length=args.length,
        ctx_sprigs=args.ctx_sprigs,
        ctx_len=args.ctx_len,
        ctx_birthday=args.ctx_birthday,
        birthday=args.birthday,
        samples=args.samples,
        seed=args.seed,
    )
    results = run_suites([args.suite], caps, inject_fault=args.inject_fault)

    report_paths = []
    if args.report_dir:
        from . import report

        for result in results:
            report_paths.extend(report.write_suite_report(result, args.report_dir))

    ok = all(r.passed for r in results)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "passed": ok,
                    "suites": [
                        {
                            "suite": r.suite,
                            "passed": r.passed,
                            "checked": r.total_checked,
                            "checks": [
                                {
                                    "claim": c.claim,
                                    "description": c.description,
                                    "checked": c.checked,
                                    "passed": c.passed,
                                    "witness": c.witness,
                                }
                                for c in r.checks
                            ],
                        }
                        for r in results
                    ],
                    "report_files": [str(p) for p in report_paths],
                },
                indent=2,
            )
        )
    else:
        for r in results:
            for c in r.checks:
                tag = "PASS" if c.passed else "FAIL"
                line = f"[{tag}] {r.suite}/{c.claim}: {c.description} ({c.checked} checked)"
                if c.witness:
                    line += f"; witness: {c.witness}"
                print(line)
        total = sum(r.total_checked for r in results)
        print(f"{'all checks passed' if ok else 'CHECKS FAILED'}; {total} instances checked")
        for p in report_paths:
            print(f"wrote {p}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-nodes", type=int, default=None, help="interned game node budget")


def _add_ctx_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ctx-sprigs", type=int, default=3, metavar="K")
    p.add_argument("--ctx-len", type=int, default=3, metavar="N")
    p.add_argument("--ctx-birthday", type=int, default=2, metavar="B")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sprigs",
        description="Exact solver for sums of Hackenbush sprigs under misere and normal play.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_out = sub.add_parser("outcome", help="classify a position")
    _add_common(p_out)
    p_out.add_argument("--convention", choices=("misere", "normal"), default="misere")
    p_out.add_argument("--method", choices=("closed", "oracle", "both"), default=None)
    p_out.add_argument("position", nargs="+", help="position in the grammar")

    p_red = sub.add_parser("reduce", help="cancel mirror pairs; show advantage, edge, word")
    _add_common(p_red)
    p_red.add_argument("position", nargs="+")

    p_adv = sub.add_parser("advise", help="optimal misere move for the mover")
    _add_common(p_adv)
    p_adv.add_argument("--mover", choices=("left", "right"), default="left")
    p_adv.add_argument("position", nargs="+")

    p_ver = sub.add_parser("verify", help="run a verification sweep")
    _add_common(p_ver)
    _add_ctx_caps(p_ver)
    p_ver.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES + ("all",))
    p_ver.add_argument("--sprigs", type=int, default=3, help="max sprigs per classified sum")
    p_ver.add_argument("--len", dest="length", type=int, default=4, help="max color-string length")
    p_ver.add_argument("--birthday", type=int, default=3, help="dicot bound for the starcolon suite")
    p_ver.add_argument("--samples", type=int, default=10_000)
    p_ver.add_argument("--seed", type=int, default=2718281)
    p_ver.add_argument("--inject-fault", action="store_true", help="equivzero harness self-test")
    p_ver.add_argument("--report-dir", default=None, help="write CSV and figure files here")

    p_dis = sub.add_parser(
        "distinguish", help="search for a context separating two positions: G -- H"
    )
    _add_common(p_dis)
    _add_ctx_caps(p_dis)
    p_dis.add_argument("terms", nargs=argparse.REMAINDER, help="G -- H")

    return parser


def _join_position(parts: list[str]) -> str:
    return " ".join(parts)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        if args.max_nodes is not None:
            games.set_node_budget(args.max_nodes)

        if args.subcommand == "verify":
            return cmd_verify(args)

        if args.subcommand == "distinguish":
            terms = args.terms
            if "--" in terms:
                cut = terms.index("--")
                g_text = _join_position(terms[:cut])
                h_text = _join_position(terms[cut + 1 :])
            elif len(terms) == 2:
                g_text, h_text = terms
            else:
                print("usage: sprigs distinguish G -- H", file=sys.stderr)
                return EXIT_USAGE
            if not g_text.strip() or not h_text.strip():
                print("usage: sprigs distinguish G -- H", file=sys.stderr)
                return EXIT_USAGE
            caps = Caps(
                ctx_sprigs=args.ctx_sprigs,
                ctx_len=args.ctx_len,
                ctx_birthday=args.ctx_birthday,
            )
            return cmd_distinguish(g_text, h_text, caps, args.format)

        text = _join_position(args.position)
        position = parse_position(text)
        query = Query(
            subcommand=args.subcommand,
            position=position,
            convention=Convention(getattr(args, "convention", "misere")),
            method=getattr(args, "method", None),
            fmt=args.format,
            text=text,
        )
        if args.subcommand == "outcome":
            return cmd_outcome(query)
        if args.subcommand == "reduce":
            return cmd_reduce(query)
        if args.subcommand == "advise":
            return cmd_advise(query, Player(args.mover))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClassifierError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
