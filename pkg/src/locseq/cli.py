"""Command-line front end.

Exit status is 0 when the query holds, 1 on a semantic negative (countermodel,
no proof, failed claim) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import logic, paperlab
from .calculus import (ProofSearch, check_derivation, derivation_from_json, generate_rules)
from .errors import CheckError, LogicError
from .semantics import consequence, is_valid
from .syntax import parse_sequent

OK, NEGATIVE, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="locseq", description="Located-sequent logics: validity, rules, proofs.")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", choices=logic.BUILTIN_NAMES, help="builtin logic")
    src.add_argument("--logic", type=Path, help="JSON logic definition file")
    p.add_argument("--n", type=int, help="value count for post / nlogic")
    p.add_argument("--machine", action="store_true", help="one stable line per result")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("valid", help="decide validity of a sequent")
    c.add_argument("sequent")
    c = sub.add_parser("consequence", help="decide whether premises entail a sequent")
    c.add_argument("sequent")
    c.add_argument("--premise", action="append", default=[])
    c = sub.add_parser("rules", help="list generated rule schemas")
    c.add_argument("connective", nargs="?")
    c = sub.add_parser("check-proof", help="check a derivation JSON file")
    c.add_argument("path", type=Path)
    c.add_argument("--hypothesis", action="append", default=[],
                   help="sequent a 'hyp' leaf may cite (repeatable)")
    c = sub.add_parser("search", help="search for a cut-free proof")
    c.add_argument("sequent")
    c.add_argument("--depth", type=int, default=10)
    c.add_argument("--out", type=Path)
    sub.add_parser("paper-suite", help="run every verification claim")
    return p


def _signature(args) -> logic.LogicSignature:
    if args.logic is not None:
        if args.n is not None:
            raise LogicError("--n only applies to --builtin")
        return logic.load_logic(args.logic)
    if args.builtin is None:
        raise LogicError("choose a logic with --builtin NAME [--n K] or --logic FILE")
    return logic.builtin_logic(args.builtin, args.n)


def _say(text: str = "") -> None:
    print(text)


def cmd_valid(args, sig) -> int:
    seq = parse_sequent(args.sequent, sig)
    verdict = is_valid(sig, seq)
    return _report(args, verdict)


def cmd_consequence(args, sig) -> int:
    premises = [parse_sequent(t, sig) for t in args.premise]
    verdict = consequence(sig, premises, parse_sequent(args.sequent, sig))
    return _report(args, verdict)


def _report(args, verdict) -> int:
    if verdict:
        _say("VALID")
        return OK
    cm = verdict.countermodel
    if args.machine:
        _say("INVALID " + " ".join(f"{a}=v{v}" for a, v in cm.valuation.items()))
    else:
        _say("COUNTERMODEL")
        _say(cm.render())
    return NEGATIVE


def cmd_rules(args, sig) -> int:
    rules = generate_rules(sig)
    if args.connective is not None:
        if args.connective not in sig.connectives:
            raise LogicError(f"unknown connective {args.connective!r}; "
                             f"{sig.name} has {', '.join(sig.connectives)}")
        prefix = f"{args.connective}-"
        chosen = [s for s in rules if s.kind in ("I", "E") and s.name.startswith(prefix)]
    else:
        chosen = list(rules)
    counts = {"I": 0, "E": 0, "structural": 0}
    for s in chosen:
        counts[s.kind] += 1
        _say(s.name if args.machine else f"{s.name}: {s.shape()}")
    _say(f"I: {counts['I']}, E: {counts['E']}, structural: {counts['structural']}")
    return OK


def cmd_check_proof(args, sig) -> int:
    try:
        text = args.path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LogicError(f"cannot read {args.path}: {exc.strerror}") from None
    d = derivation_from_json(text, sig)
    hyps = [parse_sequent(t, sig) for t in args.hypothesis]
    try:
        check_derivation(sig, generate_rules(sig), d, hyps)
    except CheckError as exc:
        _say(f"FAIL {exc.path} {exc.rule}: {exc.reason}")
        return NEGATIVE
    _say("OK")
    return OK


def cmd_search(args, sig) -> int:
    if args.depth < 1:
        raise LogicError(f"--depth must be at least 1, got {args.depth}")
    goal = parse_sequent(args.sequent, sig)
    d = ProofSearch(sig, generate_rules(sig)).search(goal, args.depth)
    if d is None:
        verdict = is_valid(sig, goal)
        why = "invalid" if not verdict else f"no proof within depth {args.depth}"
        _say(f"NOT FOUND ({why})")
        return NEGATIVE
    if args.out is not None:
        args.out.write_text(d.to_json() + "\n", encoding="utf-8")
        _say(f"FOUND depth={d.depth} size={d.size} -> {args.out}")
    else:
        _say(d.to_json())
    return OK


def cmd_paper_suite(args) -> int:
    reports = paperlab.run_paper_suite()
    for r in reports:
        _say(r.line() if args.machine else r.render())
    failed = [r.claim_id for r in reports if not r.passed]
    if not args.machine:
        _say(f"{len(reports) - len(failed)}/{len(reports)} claims pass"
             + (f"; failing: {', '.join(failed)}" if failed else ""))
    return NEGATIVE if failed else OK


COMMANDS = {
    "valid": cmd_valid,
    "consequence": cmd_consequence,
    "rules": cmd_rules,
    "check-proof": cmd_check_proof,
    "search": cmd_search,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code in (OK, USAGE) else USAGE
    try:
        if args.command == "paper-suite":
            return cmd_paper_suite(args)
        sig = _signature(args)
        return COMMANDS[args.command](args, sig)
    except LogicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def entry() -> None:
    sys.exit(main())
