"""Bounded checks of structural facts: cancellativity, same-evaluation lemmas,
congruence compatibility, refinement maps, freeness, and specific identities."""

from __future__ import annotations

from dataclasses import replace
from itertools import product
from typing import Optional, Sequence, Union

from . import kernels
from .core import Identity, Word, evaluation, parse_identity, substitute
from .identities import (
    ADIAN_LHS,
    ADIAN_RHS,
    Counterexample,
    NoCounterexample,
    SearchBounds,
    Verdict,
    check_identity,
    is_balanced,
)
from .monoid import MonoidId, monoid_id, psymbol

Monoid = Union[str, MonoidId]


class UnsupportedCheck(ValueError):
    pass


def keys(m: Monoid, words: Sequence[Word], rank: int, backend: Optional[str] = None) -> list[bytes]:
    """Hashable canonical key per word, computed in one batch."""
    if not words:
        return []
    arr = kernels.pack(words)
    if arr.shape[1] == 0:
        return [b""] * len(words)
    k = kernels.batch_keys(monoid_id(m).value, arr, rank, backend)
    return [row.tobytes() for row in k]


def _classes(ks: Sequence[bytes]) -> list[list[int]]:
    groups: dict[bytes, list[int]] = {}
    for i, k in enumerate(ks):
        groups.setdefault(k, []).append(i)
    return list(groups.values())


def _pair(m: MonoidId, assignment: dict, lhs: Word, rhs: Word, tested: int, note: str) -> Counterexample:
    return Counterexample(assignment, lhs, rhs, psymbol(m, lhs), psymbol(m, rhs), tested, note)


def _first_split(classes: list[list[int]], inner: Sequence[bytes]) -> Optional[tuple[int, int]]:
    """Least (i, j) with i, j in one class and inner[i] != inner[j]."""
    best = None
    for cls in classes:
        i = cls[0]
        for j in cls[1:]:
            if inner[j] != inner[i]:
                if best is None or (i, j) < best:
                    best = (i, j)
                break
    return best


def _cancellative(m: Monoid, bounds: SearchBounds, side: str) -> Verdict:
    m = monoid_id(m)
    words = bounds.words()
    base = keys(m, words, bounds.rank)
    tested = 0
    for a in range(1, bounds.rank + 1):
        if side == "left":
            ext = [(a,) + w for w in words]
        else:
            ext = [w + (a,) for w in words]
        tested += len(words) ** 2
        hit = _first_split(_classes(keys(m, ext, bounds.rank)), base)
        if hit:
            u, v = words[hit[0]], words[hit[1]]
            rel = "a·u ≡ a·v" if side == "left" else "u·a ≡ v·a"
            return _pair(m, {"a": (a,), "u": u, "v": v}, u, v, tested, f"{rel} but u ≢ v")
    return NoCounterexample(bounds, tested)


def check_left_cancellative(m: Monoid, bounds: SearchBounds = SearchBounds(2, 3)) -> Verdict:
    """Search (a, u, v) with au ≡ av but u ≢ v."""
    return _cancellative(m, bounds, "left")


def check_right_cancellative(m: Monoid, bounds: SearchBounds = SearchBounds(2, 3)) -> Verdict:
    return _cancellative(m, bounds, "right")


SAMEEVAL_SIDES = {MonoidId.SYLV: "right", MonoidId.SYLVSHARP: "left", MonoidId.BAXT: "both"}


def check_sameeval_lemma(m: Monoid, side: Optional[str] = None, bounds: SearchBounds = SearchBounds(2, 3)) -> Verdict:
    """For evaluation-equal words test pr = qr (right), sp = sq (left) or spr = sqr (both)."""
    m = monoid_id(m)
    if m not in SAMEEVAL_SIDES:
        raise UnsupportedCheck(f"same-evaluation lemma is not defined for {m}")
    side = side or SAMEEVAL_SIDES[m]
    if side not in ("left", "right", "both"):
        raise ValueError(f"side must be left, right or both, got {side!r}")
    groups: dict[tuple, list[Word]] = {}
    for w in bounds.words():
        groups.setdefault(tuple(evaluation(w).items()), []).append(w)
    tested = 0
    for group in groups.values():
        contexts: list[tuple[Word, Word]]
        if side == "right":
            contexts = [((), r) for r in group]
        elif side == "left":
            contexts = [(s, ()) for s in group]
        else:
            contexts = list(product(group, group))
        for s, r in contexts:
            prods = [s + p + r for p in group]
            tested += len(group) ** 2
            ks = keys(m, prods, bounds.rank)
            for j in range(1, len(group)):
                if ks[j] != ks[0]:
                    names = {"p": group[0], "q": group[j]}
                    if s:
                        names["s"] = s
                    if r:
                        names["r"] = r
                    return _pair(m, names, prods[0], prods[j], tested, f"{side} same-evaluation product differs")
    return NoCounterexample(bounds, tested)


def check_congruence(m: Monoid, bounds: SearchBounds = SearchBounds(3, 3)) -> Verdict:
    """u ≡ v must imply au ≡ av and ua ≡ va for every letter a."""
    m = monoid_id(m)
    words = bounds.words()
    classes = _classes(keys(m, words, bounds.rank))
    tested = 0
    for a in range(1, bounds.rank + 1):
        for side in ("left", "right"):
            ext = [((a,) + w if side == "left" else w + (a,)) for w in words]
            ext_keys = keys(m, ext, bounds.rank)
            tested += sum(len(c) for c in classes)
            hit = _first_split(classes, ext_keys)
            if hit:
                u, v = words[hit[0]], words[hit[1]]
                return _pair(m, {"a": (a,), "u": u, "v": v}, ext[hit[0]], ext[hit[1]], tested,
                             f"u ≡ v but the {side} products by a differ")
    return NoCounterexample(bounds, tested)


def check_evaluation_invariance(m: Monoid, bounds: SearchBounds = SearchBounds(3, 3)) -> Verdict:
    m = monoid_id(m)
    words = bounds.words()
    evs = [repr(sorted(evaluation(w).items())).encode() for w in words]
    hit = _first_split(_classes(keys(m, words, bounds.rank)), evs)
    if hit:
        u, v = words[hit[0]], words[hit[1]]
        return _pair(m, {"u": u, "v": v}, u, v, len(words), "equivalent words with different evaluations")
    return NoCounterexample(bounds, len(words))


REFINEMENTS: dict[MonoidId, tuple[MonoidId, ...]] = {
    MonoidId.SYLV: (MonoidId.HYPO,),
    MonoidId.SYLVSHARP: (MonoidId.HYPO,),
    MonoidId.STAL: (MonoidId.TAIG,),
    MonoidId.BAXT: (MonoidId.SYLV, MonoidId.SYLVSHARP),
}


def check_refinement(finer: Monoid, coarser: Monoid, bounds: SearchBounds = SearchBounds(3, 3)) -> Verdict:
    """Equivalence in ``finer`` must imply equivalence in ``coarser``."""
    finer, coarser = monoid_id(finer), monoid_id(coarser)
    words = bounds.words()
    hit = _first_split(_classes(keys(finer, words, bounds.rank)), keys(coarser, words, bounds.rank))
    if hit:
        u, v = words[hit[0]], words[hit[1]]
        return Counterexample({"u": u, "v": v}, u, v, psymbol(coarser, u), psymbol(coarser, v), len(words),
                              f"equivalent in {finer} but not in {coarser}")
    return NoCounterexample(bounds, len(words))


def check_baxter_factorization(bounds: SearchBounds = SearchBounds(3, 3)) -> Verdict:
    """baxt-equivalence coincides with joint sylv- and sylv#-equivalence."""
    words = bounds.words()
    joint = [a + b"|" + b for a, b in zip(keys("sylvsharp", words, bounds.rank), keys("sylv", words, bounds.rank))]
    bax = keys("baxt", words, bounds.rank)
    for outer, inner in ((bax, joint), (joint, bax)):
        hit = _first_split(_classes(outer), inner)
        if hit:
            u, v = words[hit[0]], words[hit[1]]
            return _pair(MonoidId.BAXT, {"u": u, "v": v}, u, v, len(words), "baxt and sylv×sylv# disagree")
    return NoCounterexample(bounds, len(words))


FAMILY_SUBSTITUTION = {MonoidId.SYLV: ((2,), (1,)), MonoidId.SYLVSHARP: ((1,), (2,))}


def uxx_vyx_family(m: Monoid, max_prefix_len: int) -> list[Identity]:
    """Balanced uxx = vyx (sylv) or xxu = xyv (sylv#) with |u|, |v| <= max_prefix_len."""
    m = monoid_id(m)
    if m not in FAMILY_SUBSTITUTION:
        raise UnsupportedCheck(f"the uxx = vyx family applies to sylv and sylvsharp, not {m}")
    prefixes = [p for n in range(max_prefix_len + 1) for p in product((1, 2), repeat=n)]
    out = []
    for u in prefixes:
        for v in prefixes:
            if m is MonoidId.SYLV:
                lhs, rhs = u + (1, 1), v + (2, 1)
            else:
                lhs, rhs = (1, 1) + u, (1, 2) + v
            ident = Identity(lhs, rhs)
            if is_balanced(ident):
                out.append(ident)
    return out


def check_uxx_vyx_family(m: Monoid, max_prefix_len: int = 2) -> Verdict:
    """Every member of the family must be refuted by the fixed two-letter substitution."""
    m = monoid_id(m)
    family = uxx_vyx_family(m, max_prefix_len)
    x, y = FAMILY_SUBSTITUTION[m]
    for i, ident in enumerate(family):
        lhs, rhs = substitute(ident, [x, y])
        lo, ro = psymbol(m, lhs), psymbol(m, rhs)
        if lo.key() == ro.key():
            return Counterexample({"x": x, "y": y}, lhs, rhs, lo, ro, i + 1, f"{ident} is not refuted")
    return NoCounterexample(None, len(family))


def check_free_submonoid(m: Monoid, generators: Sequence[Word], max_blocks: int) -> Verdict:
    """Distinct block sequences of at most ``max_blocks`` generators must give distinct elements."""
    m = monoid_id(m)
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required")
    seqs = [s for n in range(max_blocks + 1) for s in product(range(len(gens)), repeat=n)]
    words = [tuple(a for i in s for a in gens[i]) for s in seqs]
    rank = max((max(w) for w in words if w), default=1)
    seen: dict[bytes, int] = {}
    for j, k in enumerate(keys(m, words, rank)):
        if k in seen:
            i = seen[k]
            fmt = lambda s: "·".join(str(b + 1) for b in s) or "ε"
            return Counterexample(
                {"first": words[i], "second": words[j]}, words[i], words[j],
                psymbol(m, words[i]), psymbol(m, words[j]), j + 1,
                f"block sequences {fmt(seqs[i])} and {fmt(seqs[j])} give the same element",
            )
        seen[k] = j
    return NoCounterexample(None, len(seqs))


def rps_rank_identity(exponent: int) -> Identity:
    """(xy)^(k+1) = (xy)^k yx."""
    return parse_identity(f"(xy)^{exponent + 1}=(xy)^{exponent}yx")


def check_rps_rank_identity(n: int, bounds: Optional[SearchBounds] = None, exponent: Optional[int] = None) -> Verdict:
    if n < 1:
        raise ValueError("n must be at least 1")
    bounds = bounds or SearchBounds(n, 3)
    if bounds.rank != n:
        raise ValueError(f"bounds.rank must equal n={n}")
    return check_identity(MonoidId.RPS, rps_rank_identity(n if exponent is None else exponent), bounds)


def adian_identity() -> Identity:
    return parse_identity(f"{ADIAN_LHS}={ADIAN_RHS}")


def plac3_pq_identity() -> Identity:
    p, q = ADIAN_LHS, ADIAN_RHS
    return parse_identity(f"{p}{q}{p}{p}{q}={p}{q}{q}{p}{q}")


def check_plactic_adian(variant: str, bounds: SearchBounds = SearchBounds(2, 3)) -> Verdict:
    ranks = {"plac2": 2, "plac3": 3}
    if variant not in ranks:
        raise ValueError(f"variant must be plac2 or plac3, got {variant!r}")
    return check_identity(MonoidId.PLAC, adian_identity(), replace(bounds, rank=ranks[variant]))


def check_plac3_pq_identity(bounds: SearchBounds = SearchBounds(3, 2)) -> Verdict:
    return check_identity(MonoidId.PLAC, plac3_pq_identity(), bounds)

