"""Words over the ordered alphabet {1 < 2 < ...}, evaluations, and identity terms."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple[int, ...]
Evaluation = dict[int, int]

EMPTY: Word = ()

_NAMES = "xyz"


class ParseError(ValueError):
    """Raised for malformed word, term or identity text."""


def word(symbols: Iterable[int]) -> Word:
    w = tuple(int(a) for a in symbols)
    for a in w:
        if a < 1:
            raise ValueError(f"symbols must be positive integers, got {a}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"3613151265"`` or ``"3,6,13,1"``; the empty string is the empty word.

    Any comma selects the comma form, so ``"12,"`` is the one-symbol word (12,).
    """
    text = text.strip()
    if text in ("", "e", "ε"):
        return EMPTY
    try:
        if "," in text:
            toks = text.split(",")
            if len(toks) == 2 and toks[1] == "":
                toks = toks[:1]
            return word(int(tok) for tok in toks)
        if not text.isdigit():
            raise ValueError(text)
        return word(int(ch) for ch in text)
    except ValueError as exc:
        raise ParseError(f"cannot parse word {text!r}") from exc


def format_word(w: Sequence[int], compact: bool = False) -> str:
    """Comma-separated form; ``compact`` uses the digit shorthand when every symbol is at most 9."""
    if all(a <= 9 for a in w):
        if compact:
            return "".join(map(str, w))
    elif len(w) == 1:
        return f"{w[0]},"  # "12" alone would read back as the digits 1, 2
    return ",".join(map(str, w))


def evaluation(w: Sequence[int]) -> Evaluation:
    return dict(sorted(Counter(w).items()))


def count(w: Sequence[int], a: int) -> int:
    """|w|_a, the number of occurrences of ``a`` in ``w``."""
    return sum(1 for b in w if b == a)


def words_up_to(rank: int, max_len: int, include_empty: bool = True) -> Iterator[Word]:
    """Words over A_rank ordered by length, then lexicographically."""
    start = 0 if include_empty else 1
    for n in range(start, max_len + 1):
        for w in product(range(1, rank + 1), repeat=n):
            yield w


# -- terms and identities ------------------------------------------------------

Term = tuple[int, ...]


def var_name(index: int, arity: int) -> str:
    if arity <= len(_NAMES):
        return _NAMES[index - 1]
    return f"x{index}"


def format_term(t: Sequence[int], arity: int) -> str:
    return "".join(var_name(v, arity) for v in t)


@dataclass(frozen=True, order=True)
class Identity:
    lhs: Term
    rhs: Term

    def __post_init__(self) -> None:
        used = set(self.lhs) | set(self.rhs)
        if used and used != set(range(1, max(used) + 1)):
            raise ValueError(f"variables must be numbered 1..arity, got {sorted(used)}")

    @property
    def arity(self) -> int:
        return max(self.lhs + self.rhs, default=0)

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def swapped(self) -> Identity:
        return Identity(self.rhs, self.lhs)

    def __str__(self) -> str:
        k = self.arity
        return f"{format_term(self.lhs, k)}={format_term(self.rhs, k)}"


_TOKEN = re.compile(r"\s*(?:(x\d+)|([xyz])|(\()|(\))|\^(\d+))")


def _parse_term(text: str) -> list[str]:
    """Expand a term with optional ``(...)^k`` powers into a list of variable names."""
    pos = 0
    stack: list[list[str]] = [[]]
    last: list[str] | None = None
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character in term {text!r} at {pos}")
        pos = m.end()
        indexed, plain, opening, closing, power = m.groups()
        if indexed or plain:
            last = [indexed or plain]
            stack[-1].extend(last)
        elif opening:
            stack.append([])
            last = None
        elif closing:
            if len(stack) == 1:
                raise ParseError(f"unbalanced ')' in {text!r}")
            last = stack.pop()
            stack[-1].extend(last)
        else:
            if last is None:
                raise ParseError(f"'^' without operand in {text!r}")
            stack[-1].extend(last * (int(power) - 1))
            last = None
    if len(stack) != 1:
        raise ParseError(f"unbalanced '(' in {text!r}")
    return stack[0]


def _name_key(name: str) -> tuple[int, int]:
    if name in _NAMES:
        return (_NAMES.index(name) + 1, 0)
    return (int(name[1:]), 1)


def parse_identity(text: str) -> Identity:
    """Parse ``"LHS=RHS"`` over x, y, z or x1, x2, ...; powers like ``(xy)^3`` are expanded.

    Variables are renumbered 1..arity in the order x < y < z (or by index).
    """
    parts = text.split("=")
    if len(parts) != 2:
        raise ParseError(f"identity must have the form LHS=RHS, got {text!r}")
    lhs, rhs = (_parse_term(p) for p in parts)
    names = sorted(set(lhs) | set(rhs), key=_name_key)
    index = {n: i + 1 for i, n in enumerate(names)}
    return Identity(tuple(index[n] for n in lhs), tuple(index[n] for n in rhs))


def substitute_term(t: Sequence[int], assignment: Sequence[Word]) -> Word:
    out: list[int] = []
    for v in t:
        if v < 1 or v > len(assignment):
            raise KeyError(f"no word assigned to variable {v}")
        out.extend(assignment[v - 1])
    return tuple(out)


def substitute(ident: Identity, assignment: Sequence[Word] | Mapping[int, Word]) -> tuple[Word, Word]:
    """Apply the homomorphism variable ``i`` -> ``assignment[i-1]`` to both sides."""
    if isinstance(assignment, Mapping):
        try:
            assignment = [assignment[i] for i in range(1, ident.arity + 1)]
        except KeyError as exc:
            raise KeyError(f"no word assigned to variable {exc.args[0]}") from None
    if len(assignment) < ident.arity:
        raise KeyError(f"no word assigned to variable {len(assignment) + 1}")
    return substitute_term(ident.lhs, assignment), substitute_term(ident.rhs, assignment)
