"""P-symbol dispatch, the congruence test, and element arithmetic for the nine monoids."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence, Union

from .bst import BinaryTree, MultiplicityTree, TwinPair, pbaxt, psylv, psylvsharp, ptaig
from .core import Evaluation, Word, evaluation
from .rowlike import PSTableau, StalacticTableau, plps, prps, pstal
from .tableaux import QuasiRibbonTableau, YoungTableau, phypo, pplac

CombinatorialObject = Union[
    YoungTableau, QuasiRibbonTableau, BinaryTree, TwinPair, StalacticTableau, MultiplicityTree, PSTableau
]


class MonoidId(str, Enum):
    PLAC = "plac"
    HYPO = "hypo"
    SYLV = "sylv"
    SYLVSHARP = "sylvsharp"
    BAXT = "baxt"
    STAL = "stal"
    TAIG = "taig"
    LPS = "lps"
    RPS = "rps"

    def __str__(self) -> str:
        return self.value


ALL_MONOIDS: tuple[MonoidId, ...] = tuple(MonoidId)

# (object kind, insertion direction); baxt combines the two sylvester directions
OBJECT_TABLE: dict[MonoidId, tuple[str, str]] = {
    MonoidId.PLAC: ("Young tableau", "L-to-R"),
    MonoidId.HYPO: ("quasi-ribbon tableau", "L-to-R"),
    MonoidId.SYLV: ("right strict binary search tree", "R-to-L"),
    MonoidId.SYLVSHARP: ("left strict binary search tree", "L-to-R"),
    MonoidId.BAXT: ("pair of twin binary search trees", "---"),
    MonoidId.STAL: ("stalactic tableau", "R-to-L"),
    MonoidId.TAIG: ("binary search tree with multiplicities", "R-to-L"),
    MonoidId.LPS: ("lPS tableau", "L-to-R"),
    MonoidId.RPS: ("rPS tableau", "L-to-R"),
}

_PSYMBOL: dict[MonoidId, Callable[[Sequence[int]], CombinatorialObject]] = {
    MonoidId.PLAC: pplac,
    MonoidId.HYPO: phypo,
    MonoidId.SYLV: psylv,
    MonoidId.SYLVSHARP: psylvsharp,
    MonoidId.BAXT: pbaxt,
    MonoidId.STAL: pstal,
    MonoidId.TAIG: ptaig,
    MonoidId.LPS: plps,
    MonoidId.RPS: prps,
}


def monoid_id(m: Union[str, MonoidId]) -> MonoidId:
    try:
        return MonoidId(str(m).lower().replace("#", "sharp"))
    except ValueError:
        names = ", ".join(x.value for x in MonoidId)
        raise ValueError(f"unknown monoid {m!r}; expected one of {names}") from None


def psymbol(m: Union[str, MonoidId], w: Sequence[int]) -> CombinatorialObject:
    return _PSYMBOL[monoid_id(m)](w)


def canonical_key(m: Union[str, MonoidId], w: Sequence[int]) -> tuple:
    return psymbol(m, w).key()


def equivalent(m: Union[str, MonoidId], u: Sequence[int], v: Sequence[int]) -> bool:
    """u and v represent the same element iff their P-symbols coincide."""
    if len(u) != len(v):
        return False
    return canonical_key(m, u) == canonical_key(m, v)


class MonoidMismatch(ValueError):
    pass


@dataclass(frozen=True)
class MonoidElement:
    monoid: MonoidId
    representative: Word
    canonical: CombinatorialObject = field(compare=False, repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonoidElement):
            return NotImplemented
        return self.monoid == other.monoid and self.canonical.key() == other.canonical.key()

    def __hash__(self) -> int:
        return hash((self.monoid, self.canonical.key()))

    def __mul__(self, other: MonoidElement) -> MonoidElement:
        return multiply(self, other)


def element(m: Union[str, MonoidId], w: Sequence[int]) -> MonoidElement:
    mid = monoid_id(m)
    w = tuple(w)
    return MonoidElement(mid, w, psymbol(mid, w))


def identity_element(m: Union[str, MonoidId]) -> MonoidElement:
    return element(m, ())


def multiply(a: MonoidElement, b: MonoidElement) -> MonoidElement:
    if a.monoid != b.monoid:
        raise MonoidMismatch(f"cannot multiply elements of {a.monoid} and {b.monoid}")
    return element(a.monoid, a.representative + b.representative)


def element_evaluation(e: MonoidElement) -> Evaluation:
    return evaluation(e.representative)
