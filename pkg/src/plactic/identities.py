"""Identity enumeration and bounded counterexample search.

A search never proves an identity: ``NoCounterexample`` only says that every
substitution within the stated bounds was tried and none separated the sides.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional, Sequence, Union

import numpy as np

from . import kernels
from .core import Identity, Word, format_word, substitute, var_name, words_up_to
from .monoid import MonoidId, monoid_id, psymbol

ADIAN_LHS = "xyyxxyxyyx"
ADIAN_RHS = "xyyxyxxyyx"

_FIRST_CHUNK = 256
_MAX_CHUNK = 1 << 15
# below this many substitutions, process start-up costs more than the scan
_PARALLEL_MIN = 1 << 16


@dataclass(frozen=True)
class SearchBounds:
    rank: int = 3
    max_word_len: int = 4
    include_empty: bool = True

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.max_word_len < 0:
            raise ValueError("max_word_len must be non-negative")

    def words(self) -> list[Word]:
        return list(words_up_to(self.rank, self.max_word_len, self.include_empty))

    def num_words(self) -> int:
        return sum(self.rank**i for i in range(1, self.max_word_len + 1)) + int(self.include_empty)

    def to_record(self) -> dict:
        return {"rank": self.rank, "max_word_len": self.max_word_len, "include_empty": self.include_empty}


@dataclass(frozen=True)
class NoCounterexample:
    bounds: Optional[SearchBounds]
    substitutions_tested: int
    found = False

    def to_record(self) -> dict:
        rec = {"verdict": "no_counterexample", "substitutions_tested": self.substitutions_tested}
        if self.bounds is not None:
            rec["bounds"] = self.bounds.to_record()
        return rec


@dataclass(frozen=True)
class Counterexample:
    """A witness. For identity checks the two words have different P-symbols."""

    assignment: dict[str, Word]
    lhs_word: Word
    rhs_word: Word
    lhs_object: object = field(compare=False)
    rhs_object: object = field(compare=False)
    substitutions_tested: int = 0
    note: str = ""
    found = True

    def to_record(self) -> dict:
        rec = {
            "verdict": "counterexample",
            "substitutions_tested": self.substitutions_tested,
            "witness": {
                "assignment": {k: format_word(v) for k, v in self.assignment.items()},
                "lhs_word": format_word(self.lhs_word),
                "rhs_word": format_word(self.rhs_word),
                "lhs_object": self.lhs_object.to_record(),
                "rhs_object": self.rhs_object.to_record(),
            },
        }
        if self.note:
            rec["witness"]["note"] = self.note
        return rec


Verdict = Union[NoCounterexample, Counterexample]


# -- identities as combinatorial objects ---------------------------------------


def is_balanced(ident: Identity) -> bool:
    if len(ident.lhs) != len(ident.rhs):
        return False
    return all(ident.lhs.count(v) == ident.rhs.count(v) for v in range(1, ident.arity + 1))


def orbit(ident: Identity) -> set[Identity]:
    """All identities reachable by renaming variables and swapping sides."""
    k = ident.arity
    out = set()
    for perm in permutations(range(1, k + 1)):
        rename = dict(zip(range(1, k + 1), perm))
        lhs = tuple(rename[v] for v in ident.lhs)
        rhs = tuple(rename[v] for v in ident.rhs)
        out.add(Identity(lhs, rhs))
        out.add(Identity(rhs, lhs))
    return out


def canonical_identity(ident: Identity) -> Identity:
    return min(orbit(ident), key=lambda i: (i.lhs, i.rhs))


def enumerate_candidates(length: int, num_vars: int = 2) -> list[Identity]:
    """Non-trivial balanced identities of one length, one canonical form per class, sorted."""
    if length < 1:
        raise ValueError("length must be at least 1")
    reps = set()
    letters = range(1, num_vars + 1)
    for lhs in product(letters, repeat=length):
        if len(set(lhs)) != num_vars:
            continue
        for rhs in product(letters, repeat=length):
            if lhs == rhs:
                continue
            ident = Identity(lhs, rhs)
            if is_balanced(ident):
                reps.add(canonical_identity(ident))
    return sorted(reps, key=lambda i: (i.lhs, i.rhs))


# -- substitution search -------------------------------------------------------


def substitute_batch(term: Sequence[int], digits: Sequence[np.ndarray], table: np.ndarray, lens: np.ndarray) -> np.ndarray:
    """Concatenate ``table[digits[v-1]]`` blocks for each variable ``v`` of ``term``."""
    B = len(digits[0]) if digits else 1
    L = table.shape[1]
    total = np.zeros(B, dtype=np.int64)
    for v in term:
        total += lens[digits[v - 1]]
    width = int(total.max()) if B else 0
    out = np.zeros((B, width), dtype=np.int64)
    offset = np.zeros(B, dtype=np.int64)
    cols = np.arange(L)
    for v in term:
        sel = digits[v - 1]
        blen = lens[sel]
        r, c = np.nonzero(cols[None, :] < blen[:, None])
        out[r, offset[r] + c] = table[sel[r], c]
        offset += blen
    return out


def _scan(task) -> Optional[int]:
    """First index in [start, stop) whose substitution separates the sides, or None."""
    name, lhs, rhs, arity, table, lens, rank, start, stop, backend = task
    n_words = len(table)
    shape = (n_words,) * arity
    pos = start
    chunk = _FIRST_CHUNK
    while pos < stop:
        end = min(stop, pos + chunk)
        digits = np.unravel_index(np.arange(pos, end), shape) if arity else ()
        if arity == 0:
            return None
        left = substitute_batch(lhs, digits, table, lens)
        right = substitute_batch(rhs, digits, table, lens)
        bad = kernels.differing(name, left, right, rank, backend)
        if bad.any():
            return pos + int(np.argmax(bad))
        pos = end
        chunk = min(chunk * 2, _MAX_CHUNK)
    return None


def witness(m: MonoidId, ident: Identity, assignment: Sequence[Word], tested: int = 0, note: str = "") -> Counterexample:
    lhs, rhs = substitute(ident, assignment)
    lo, ro = psymbol(m, lhs), psymbol(m, rhs)
    if lo.key() == ro.key():
        raise AssertionError(f"unsound witness for {ident} in {m}: {assignment}")
    names = {var_name(i + 1, ident.arity): w for i, w in enumerate(assignment)}
    return Counterexample(names, lhs, rhs, lo, ro, tested, note)


def check_identity(
    m: Union[str, MonoidId],
    ident: Identity,
    bounds: SearchBounds = SearchBounds(),
    jobs: int = 1,
    backend: Optional[str] = None,
) -> Verdict:
    """Exhaustive substitution search; returns the enumeration-least counterexample.

    Words are ordered by length then lexicographically; variable tuples run in
    odometer order with the last variable fastest.
    """
    m = monoid_id(m)
    words = bounds.words()
    k = ident.arity
    total = len(words) ** k
    if not words or ident.trivial:
        return NoCounterexample(bounds, total)
    table = kernels.pack(words, bounds.max_word_len)
    lens = np.array([len(w) for w in words], dtype=np.int64)
    backend = backend or kernels.default_backend()
    args = (m.value, ident.lhs, ident.rhs, k, table, lens, bounds.rank)

    if jobs <= 1 or total < _PARALLEL_MIN:
        first = _scan(args + (0, total, backend))
    else:
        step = -(-total // jobs)
        tasks = [args + (s, min(total, s + step), backend) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [h for h in pool.map(_scan, tasks) if h is not None]
        first = min(hits) if hits else None

    if first is None:
        return NoCounterexample(bounds, total)
    digits = np.unravel_index(first, (len(words),) * k)
    assignment = [words[int(d)] for d in digits]
    return witness(m, ident, assignment, first + 1)


@dataclass
class SearchResult:
    monoid: MonoidId
    bounds: SearchBounds
    survivors: dict[int, list[Identity]] = field(default_factory=dict)
    refuted: dict[int, list[tuple[Identity, Counterexample]]] = field(default_factory=dict)

    def shortest(self) -> Optional[int]:
        return min((n for n, ids in self.survivors.items() if ids), default=None)

    def to_record(self) -> dict:
        lengths = sorted(set(self.survivors) | set(self.refuted))
        return {
            "monoid": self.monoid.value,
            "task": "search",
            "bounds": self.bounds.to_record(),
            "lengths": [
                {
                    "length": n,
                    "survivors": [str(i) for i in self.survivors.get(n, [])],
                    "refuted": [
                        {"identity": str(i), **cx.to_record()} for i, cx in self.refuted.get(n, [])
                    ],
                }
                for n in lengths
            ],
        }


def shortest_identity_search(
    m: Union[str, MonoidId],
    max_length: int,
    bounds: SearchBounds = SearchBounds(),
    jobs: int = 1,
    backend: Optional[str] = None,
) -> SearchResult:
    """Test every two-variable candidate of length <= ``max_length``."""
    m = monoid_id(m)
    result = SearchResult(m, bounds)
    for n in range(1, max_length + 1):
        result.survivors[n] = []
        result.refuted[n] = []
        for cand in enumerate_candidates(n):
            verdict = check_identity(m, cand, bounds, jobs, backend)
            if verdict.found:
                result.refuted[n].append((cand, verdict))
            else:
                result.survivors[n].append(cand)
    return result
