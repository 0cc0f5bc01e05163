"""Command-line interface.

Exit codes: 0 affirmative / no counterexample, 1 negative / counterexample,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import properties as props
from .core import ParseError, format_word, parse_identity, parse_word
from .identities import SearchBounds, check_identity, shortest_identity_search
from .monoid import ALL_MONOIDS, equivalent, monoid_id, psymbol
from .report import dumps, render_search, render_verdict, verdict_record

SUITES = (
    "left-cancel",
    "right-cancel",
    "sameeval",
    "refinement",
    "congruence",
    "evaluation",
    "freeness",
    "rps-rank",
    "plactic-adian",
    "plac3-pq",
)


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    record: object
    text: str
    code: int


def _bounds(args) -> SearchBounds:
    return SearchBounds(args.rank, args.maxlen, not args.no_empty)


def _verdict_outcome(monoid, task, verdict, args, identity=None, bounds=None, title=None, **extra) -> Outcome:
    rec = verdict_record(monoid, task, verdict, identity, bounds, **extra)
    title = title or f"{task} in {monoid}" + (f": {identity}" if identity is not None else "")
    return Outcome(rec, render_verdict(verdict, title, bounds), int(verdict.found))


def cmd_psymbol(args) -> Outcome:
    m = monoid_id(args.monoid)
    w = parse_word(args.word)
    obj = psymbol(m, w)
    rec = {"monoid": m.value, "task": "psymbol", "word": format_word(w), "object": obj.to_record()}
    return Outcome(rec, obj.render(), 0)


def cmd_equiv(args) -> Outcome:
    m = monoid_id(args.monoid)
    u, v = parse_word(args.word1), parse_word(args.word2)
    same = equivalent(m, u, v)
    rec = {"monoid": m.value, "task": "equiv", "u": format_word(u), "v": format_word(v), "equivalent": same}
    return Outcome(rec, "true" if same else "false", 0 if same else 1)


def cmd_check(args) -> Outcome:
    m = monoid_id(args.monoid)
    ident = parse_identity(args.identity)
    if ident.trivial:
        raise UsageError(f"{ident} is trivial: both sides are the same word")
    b = _bounds(args)
    verdict = check_identity(m, ident, b, jobs=args.jobs)
    return _verdict_outcome(m.value, "check", verdict, args, ident, b)


def cmd_search(args) -> Outcome:
    m = monoid_id(args.monoid)
    result = shortest_identity_search(m, args.max_length, _bounds(args), jobs=args.jobs)
    found = any(result.survivors.values())
    return Outcome(result.to_record(), render_search(result), 0 if found else 1)


def _generators(text: str) -> list:
    return [parse_word(tok) for tok in text.split(",")]


def cmd_properties(args) -> Outcome:
    m = monoid_id(args.monoid)
    suite = args.suite
    b = _bounds(args)
    if suite == "left-cancel":
        return _verdict_outcome(m.value, suite, props.check_left_cancellative(m, b), args, bounds=b)
    if suite == "right-cancel":
        return _verdict_outcome(m.value, suite, props.check_right_cancellative(m, b), args, bounds=b)
    if suite == "sameeval":
        if m not in props.SAMEEVAL_SIDES:
            raise UsageError(f"sameeval is defined for sylv, sylvsharp and baxt, not {m}")
        side = args.side or props.SAMEEVAL_SIDES[m]
        verdict = props.check_sameeval_lemma(m, side, b)
        return _verdict_outcome(m.value, suite, verdict, args, bounds=b, side=side)
    if suite == "congruence":
        return _verdict_outcome(m.value, suite, props.check_congruence(m, b), args, bounds=b)
    if suite == "evaluation":
        return _verdict_outcome(m.value, suite, props.check_evaluation_invariance(m, b), args, bounds=b)
    if suite == "refinement":
        if m not in props.REFINEMENTS:
            raise UsageError(f"no refinement map is recorded for {m}")
        parts = []
        for target in props.REFINEMENTS[m]:
            parts.append(_verdict_outcome(m.value, suite, props.check_refinement(m, target, b), args,
                                          bounds=b, title=f"refinement {m} -> {target}", image=target.value))
        return Outcome([p.record for p in parts], "\n".join(p.text for p in parts), max(p.code for p in parts))
    if suite == "freeness":
        gens = _generators(args.generators)
        verdict = props.check_free_submonoid(m, gens, args.max_blocks)
        return _verdict_outcome(m.value, suite, verdict, args, generators=[format_word(g) for g in gens],
                                max_blocks=args.max_blocks)
    if suite == "rps-rank":
        if m.value != "rps":
            raise UsageError("rps-rank applies to the rps monoid only")
        n = args.n if args.n is not None else args.rank
        rb = SearchBounds(n, args.maxlen, not args.no_empty)
        k = n if args.exponent is None else args.exponent
        verdict = props.check_rps_rank_identity(n, rb, k)
        return _verdict_outcome(m.value, suite, verdict, args, props.rps_rank_identity(k), rb)
    if suite == "plactic-adian":
        if m.value != "plac":
            raise UsageError("plactic-adian applies to the plac monoid only")
        verdict = props.check_plactic_adian(args.variant, b)
        rb = SearchBounds(2 if args.variant == "plac2" else 3, b.max_word_len, b.include_empty)
        return _verdict_outcome(m.value, suite, verdict, args, props.adian_identity(), rb, variant=args.variant)
    if suite == "plac3-pq":
        if m.value != "plac":
            raise UsageError("plac3-pq applies to the plac monoid only")
        verdict = props.check_plac3_pq_identity(b)
        return _verdict_outcome(m.value, suite, verdict, args, props.plac3_pq_identity(), b)
    raise UsageError(f"unknown suite {suite!r}")


def cmd_batch(args) -> Outcome:
    records, texts, code = [], [], 0
    with open(args.manifest, encoding="utf-8") as fh:
        lines = fh.readlines()
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        sub = build_parser().parse_args(shlex.split(line), namespace=_inherit(args))
        if sub.command == "batch":
            raise UsageError(f"{args.manifest}:{lineno}: nested batch is not allowed")
        out = _dispatch(sub)
        records.append(out.record)
        texts.append(out.text)
        code = max(code, out.code)
    return Outcome(records, "\n\n".join(texts), code)


def _inherit(args) -> argparse.Namespace:
    """Manifest lines start from the batch invocation's global flags."""
    ns = argparse.Namespace()
    for name in ("rank", "maxlen", "no_empty", "jobs", "format", "timing"):
        setattr(ns, name, getattr(args, name))
    return ns


COMMANDS = {
    "psymbol": cmd_psymbol,
    "equiv": cmd_equiv,
    "check": cmd_check,
    "search": cmd_search,
    "properties": cmd_properties,
    "batch": cmd_batch,
}


def _dispatch(args) -> Outcome:
    start = time.perf_counter()
    out = COMMANDS[args.command](args)
    if args.timing and isinstance(out.record, dict):
        out.record["elapsed"] = round(time.perf_counter() - start, 6)
    return out


GLOBAL_DEFAULTS = {"format": "ascii", "rank": 3, "maxlen": 4, "no_empty": False, "jobs": 1, "timing": False}


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    # a fresh parser each time: argparse parents share action objects, so one
    # set of defaults would leak into every subcommand and override earlier flags
    kw = {} if defaults else {"argument_default": argparse.SUPPRESS}
    p = argparse.ArgumentParser(add_help=False, **kw)
    p.add_argument("--format", choices=("ascii", "structured"))
    p.add_argument("--rank", type=int, help="alphabet size for substitutions")
    p.add_argument("--maxlen", type=int, help="longest substituted word")
    p.add_argument("--no-empty", action="store_true", help="never substitute the empty word")
    p.add_argument("--jobs", type=int, help="worker processes for identity checks")
    p.add_argument("--timing", action="store_true", help="add elapsed seconds to structured reports")
    if defaults:
        p.set_defaults(**GLOBAL_DEFAULTS)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plactic", description=__doc__.splitlines()[0],
                                     parents=[_global_flags(True)])
    common = _global_flags(False)
    sub = parser.add_subparsers(dest="command", required=True)
    monoids = [m.value for m in ALL_MONOIDS]

    p = sub.add_parser("psymbol", parents=[common], help="compute a P-symbol")
    p.add_argument("monoid", choices=monoids)
    p.add_argument("word")

    p = sub.add_parser("equiv", parents=[common], help="decide u ≡ v")
    p.add_argument("monoid", choices=monoids)
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("check", parents=[common], help="search for a counterexample to an identity")
    p.add_argument("monoid", choices=monoids)
    p.add_argument("identity")

    p = sub.add_parser("search", parents=[common], help="shortest two-variable identity search")
    p.add_argument("monoid", choices=monoids)
    p.add_argument("--max-length", type=int, default=4)

    p = sub.add_parser("properties", parents=[common], help="run a structural property suite")
    p.add_argument("monoid", choices=monoids)
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--side", choices=("left", "right", "both"))
    p.add_argument("--generators", default="21,1")
    p.add_argument("--max-blocks", type=int, default=8)
    p.add_argument("--n", type=int)
    p.add_argument("--exponent", type=int)
    p.add_argument("--variant", choices=("plac2", "plac3"), default="plac2")

    p = sub.add_parser("batch", parents=[common], help="run tasks from a manifest file")
    p.add_argument("manifest")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        out = _dispatch(args)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "structured":
        if args.command == "batch":
            for rec in out.record:
                print(json.dumps(rec, ensure_ascii=False, sort_keys=False))
        else:
            print(dumps(out.record))
    else:
        print(out.text)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
