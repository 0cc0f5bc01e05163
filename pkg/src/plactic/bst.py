"""Binary search trees for the sylvester, #-sylvester, Baxter and taiga monoids.

Trees are immutable; insertion copies the path from the root to the new leaf.
A right-strict tree keeps duplicates in the left subtree (sylvester), a
left-strict tree keeps them in the right subtree (#-sylvester).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from functools import reduce
from typing import Callable, Iterator, Optional, Sequence


@dataclass(frozen=True)
class Node:
    label: int
    left: Optional["Node"] = None
    right: Optional["Node"] = None


@dataclass(frozen=True)
class MNode:
    label: int
    multiplicity: int = 1
    left: Optional["MNode"] = None
    right: Optional["MNode"] = None


def _path_insert(root, make_leaf, step: Callable):
    """Walk from ``root`` using ``step(node) -> 'left' | 'right' | None`` and rebuild the path.

    ``None`` means the walk stops at ``node`` and ``make_leaf(node)`` replaces it.
    """
    path = []
    node = root
    while node is not None:
        side = step(node)
        if side is None:
            break
        path.append((node, side))
        node = getattr(node, side)
    new = make_leaf(node)
    for parent, side in reversed(path):
        new = replace(parent, **{side: new})
    return new


def _walk(root) -> Iterator:
    """Pre-order stream of nodes, with ``None`` for every empty subtree."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        if node is not None:
            stack.append(node.right)
            stack.append(node.left)


def _in_order(root) -> Iterator:
    stack = []
    node = root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        yield node
        node = node.right


def _render(root, fmt: Callable) -> str:
    if root is None:
        return "(empty)"
    lines = [fmt(root)]

    def visit(node, prefix: str) -> None:
        if node.left is None and node.right is None:
            return
        for child, last in ((node.left, False), (node.right, True)):
            branch = "└─ " if last else "├─ "
            lines.append(prefix + branch + ("·" if child is None else fmt(child)))
            if child is not None:
                visit(child, prefix + ("   " if last else "│  "))

    visit(root, "")
    return "\n".join(lines)


def _text(node, fmt: Callable) -> str:
    if node is None:
        return "."
    if node.left is None and node.right is None:
        return fmt(node)
    return f"{fmt(node)}({_text(node.left, fmt)},{_text(node.right, fmt)})"


def _node_record(node) -> Optional[dict]:
    if node is None:
        return None
    rec = {"label": node.label}
    if isinstance(node, MNode):
        rec["multiplicity"] = node.multiplicity
    rec["left"] = _node_record(node.left)
    rec["right"] = _node_record(node.right)
    return rec


def _node_key(root) -> tuple:
    out = []
    for node in _walk(root):
        if node is None:
            out.append(0)
        elif isinstance(node, MNode):
            out.extend((node.label, node.multiplicity))
        else:
            out.append(node.label)
    return tuple(out)


@dataclass(frozen=True)
class BinaryTree:
    root: Optional[Node] = None
    strict: str = "right"  # "right": duplicates go left; "left": duplicates go right

    def labels(self) -> list[int]:
        return [n.label for n in _in_order(self.root)]

    def size(self) -> int:
        return sum(1 for _ in _in_order(self.root))

    def is_valid(self) -> bool:
        """Check the right-/left-strict search-tree ordering."""
        # in-order labels must be sorted, and duplicates must hang on the correct side
        labels = self.labels()
        if labels != sorted(labels):
            return False
        for node in _in_order(self.root):
            if self.strict == "right":
                if node.right is not None and min(n.label for n in _in_order(node.right)) <= node.label:
                    return False
            elif node.left is not None and max(n.label for n in _in_order(node.left)) >= node.label:
                return False
        return True

    def leaves(self) -> list[Node]:
        return [n for n in _in_order(self.root) if n.left is None and n.right is None]

    def key(self) -> tuple:
        return ("bst", self.strict, _node_key(self.root))

    def to_record(self) -> dict:
        kind = "right_strict_bst" if self.strict == "right" else "left_strict_bst"
        return {"kind": kind, "root": _node_record(self.root)}

    def to_text(self) -> str:
        return _text(self.root, lambda n: str(n.label))

    def render(self) -> str:
        return _render(self.root, lambda n: str(n.label))


def canopy(tree: BinaryTree) -> str:
    """0/1 word of the interior empty subtrees, left to right: empty left -> 1, empty right -> 0."""
    bits = []
    for node in _in_order(tree.root):
        # an empty left subtree sits just before its node in in-order, an empty right one just after
        if node.left is None:
            bits.append("1")
        if node.right is None:
            bits.append("0")
    return "".join(bits[1:-1])


def sylv_insert(tree: BinaryTree, a: int) -> BinaryTree:
    root = _path_insert(tree.root, lambda _: Node(a), lambda n: "left" if a <= n.label else "right")
    return BinaryTree(root, "right")


def sylvsharp_insert(tree: BinaryTree, a: int) -> BinaryTree:
    root = _path_insert(tree.root, lambda _: Node(a), lambda n: "left" if a < n.label else "right")
    return BinaryTree(root, "left")


def psylv(w: Sequence[int]) -> BinaryTree:
    """Right-strict tree: insert the symbols of ``w`` from right to left."""
    return reduce(sylv_insert, reversed(w), BinaryTree(None, "right"))


def psylvsharp(w: Sequence[int]) -> BinaryTree:
    """Left-strict tree: insert the symbols of ``w`` from left to right."""
    return reduce(sylvsharp_insert, w, BinaryTree(None, "left"))


@dataclass(frozen=True)
class TwinPair:
    left_tree: BinaryTree
    right_tree: BinaryTree

    def is_valid(self) -> bool:
        if self.left_tree.strict != "left" or self.right_tree.strict != "right":
            return False
        if not (self.left_tree.is_valid() and self.right_tree.is_valid()):
            return False
        if Counter(self.left_tree.labels()) != Counter(self.right_tree.labels()):
            return False
        return complementary(canopy(self.left_tree), canopy(self.right_tree))

    def key(self) -> tuple:
        return ("baxt", self.left_tree.key(), self.right_tree.key())

    def to_record(self) -> dict:
        return {
            "kind": "twin_bst_pair",
            "left_tree": self.left_tree.to_record(),
            "right_tree": self.right_tree.to_record(),
            "canopies": [canopy(self.left_tree), canopy(self.right_tree)],
        }

    def render(self) -> str:
        return (
            f"left (canopy {canopy(self.left_tree) or 'ε'}):\n{self.left_tree.render()}\n"
            f"right (canopy {canopy(self.right_tree) or 'ε'}):\n{self.right_tree.render()}"
        )


def complementary(c1: str, c2: str) -> bool:
    return len(c1) == len(c2) and all(p != q for p, q in zip(c1, c2))


class TwinPairError(AssertionError):
    pass


def pbaxt(w: Sequence[int]) -> TwinPair:
    pair = TwinPair(psylvsharp(w), psylv(w))
    if not complementary(canopy(pair.left_tree), canopy(pair.right_tree)):
        raise TwinPairError(f"canopies of the twin trees for {tuple(w)} are not complementary")
    return pair


@dataclass(frozen=True)
class MultiplicityTree:
    root: Optional[MNode] = None

    def items(self) -> list[tuple[int, int]]:
        return [(n.label, n.multiplicity) for n in _in_order(self.root)]

    def is_valid(self) -> bool:
        items = self.items()
        labels = [a for a, _ in items]
        return all(m >= 1 for _, m in items) and all(p < q for p, q in zip(labels, labels[1:]))

    def key(self) -> tuple:
        return ("taig", _node_key(self.root))

    def to_record(self) -> dict:
        return {"kind": "multiplicity_bst", "root": _node_record(self.root)}

    def to_text(self) -> str:
        return _text(self.root, lambda n: f"{n.label}^{n.multiplicity}")

    def render(self) -> str:
        return _render(self.root, lambda n: f"{n.label}^{n.multiplicity}")


def taig_insert(tree: MultiplicityTree, a: int) -> MultiplicityTree:
    def step(n: MNode):
        if a == n.label:
            return None
        return "left" if a < n.label else "right"

    def leaf(n: Optional[MNode]) -> MNode:
        return MNode(a) if n is None else replace(n, multiplicity=n.multiplicity + 1)

    return MultiplicityTree(_path_insert(tree.root, leaf, step))


def ptaig(w: Sequence[int]) -> MultiplicityTree:
    return reduce(taig_insert, reversed(w), MultiplicityTree())
