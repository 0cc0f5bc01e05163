"""Structured (JSON) and ASCII renderings of results."""

from __future__ import annotations

import json
from typing import Optional

from .core import Identity, format_word
from .identities import SearchBounds, SearchResult, Verdict


def dumps(record) -> str:
    return json.dumps(record, ensure_ascii=False, indent=2)


def verdict_record(monoid: str, task: str, verdict: Verdict, identity: Optional[Identity] = None,
                   bounds: Optional[SearchBounds] = None, **extra) -> dict:
    rec: dict = {"monoid": str(monoid), "task": task}
    if identity is not None:
        rec["identity"] = str(identity)
    rec.update(extra)
    body = verdict.to_record()
    body_bounds = body.pop("bounds", None)
    if bounds is not None:
        rec["bounds"] = bounds.to_record()
    elif body_bounds is not None:
        rec["bounds"] = body_bounds
    rec.update(body)
    return rec


def _word(w) -> str:
    return format_word(w, compact=True) or "ε"


def _bounds_text(b: SearchBounds) -> str:
    empty = "ε included" if b.include_empty else "ε excluded"
    return f"rank {b.rank}, word length <= {b.max_word_len}, {empty}"


def render_verdict(verdict: Verdict, title: str, bounds: Optional[SearchBounds] = None) -> str:
    lines = [title]
    if bounds is not None:
        lines.append(f"  bounds: {_bounds_text(bounds)}")
    if not verdict.found:
        lines.append(f"  no counterexample within bounds ({verdict.substitutions_tested} cases tested)")
        return "\n".join(lines)
    assignment = ", ".join(f"{k} = {_word(v)}" for k, v in verdict.assignment.items())
    lines.append(f"  counterexample after {verdict.substitutions_tested} cases: {assignment}")
    if verdict.note:
        lines.append(f"  {verdict.note}")
    for side, w, obj in (("lhs", verdict.lhs_word, verdict.lhs_object), ("rhs", verdict.rhs_word, verdict.rhs_object)):
        lines.append(f"  {side} {_word(w)}:")
        lines.extend("    " + row for row in obj.render().splitlines())
    return "\n".join(lines)


def search_record(result: SearchResult) -> dict:
    return result.to_record()


def render_search(result: SearchResult) -> str:
    lines = [f"shortest identity search in {result.monoid} ({_bounds_text(result.bounds)})"]
    for n in sorted(result.survivors):
        surv = result.survivors[n]
        refuted = result.refuted.get(n, [])
        if not surv and not refuted:
            continue
        lines.append(f"length {n}: {len(surv)} unrefuted, {len(refuted)} refuted")
        for ident in surv:
            lines.append(f"  unrefuted  {ident}")
        for ident, cx in refuted:
            assignment = ", ".join(f"{k}={_word(v)}" for k, v in cx.assignment.items())
            lines.append(f"  refuted    {ident}  by {assignment}")
    return "\n".join(lines)
