"""Labeled plane binary trees and their labeled-Dyck-path conversions.

Trees are immutable nodes with a label and optional left/right children;
equality is structural.  Deleting every edge from a node to its right child
splits a tree into maximal left paths; conversely a tree is determined by
those paths plus, for each non-root path, the node whose right child is the
path's top.

The conversion from a labeled Dyck path reads the maximal down-step blocks
right to left; each block becomes a left path whose labels, root to leaf, are
the block's labels right to left.  The first path is the root path, and each
later path hangs as the right subtree of the node named by the up-step label
immediately following the block's last down-step.  The inverse conversion
replays the tree as a push/pop process: push a left path root to leaf, pop
the minimum pushed-but-unpopped label, and after popping a node with a right
child, push that child's left path.  Reading the operations in reverse, a
push is a labeled down-step and a pop a labeled up-step.

Edges are classified by comparing labels: a right child larger than its
parent is a right ascent, smaller a right descent, and likewise on the left.
"""

from __future__ import annotations

import heapq
import random
from collections.abc import Iterator
from dataclasses import dataclass

from .dyck import LabeledDyckPath, labeled_dyck_word

__all__ = [
    "Node",
    "LeftPath",
    "node_count",
    "tree_labels",
    "check_ltree",
    "mlpd",
    "edge_stats",
    "ldyck_to_ltree",
    "ltree_to_ldyck",
    "push_pop_trace",
    "enumerate_ltrees",
    "random_ltree",
    "tree_to_json",
    "tree_from_json",
    "tree_dot",
]


@dataclass(frozen=True)
class Node:
    label: int
    left: "Node | None" = None
    right: "Node | None" = None


def _collect_labels(t: Node, out: list[int]) -> None:
    out.append(t.label)
    if t.left:
        _collect_labels(t.left, out)
    if t.right:
        _collect_labels(t.right, out)


def tree_labels(t: Node) -> tuple[int, ...]:
    """All labels in preorder (node, left, right)."""
    out: list[int] = []
    _collect_labels(t, out)
    return tuple(out)


def node_count(t: Node) -> int:
    return len(tree_labels(t))


def check_ltree(t: Node) -> int:
    """Validate that labels are exactly 1..n; return n."""
    labels = tree_labels(t)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise ValueError(f"labels must be exactly 1..{len(labels)}: {labels}")
    return len(labels)


@dataclass(frozen=True)
class LeftPath:
    """One maximal left path: labels root to leaf, and the label of the node
    whose right child starts the path (None for the path holding the root)."""

    labels: tuple[int, ...]
    parent: int | None


def mlpd(t: Node) -> tuple[LeftPath, ...]:
    """Maximal left path decomposition; the root path comes first, then the
    paths hanging off it in root-to-leaf order, recursively.

    >>> mlpd(Node(2, Node(1), Node(3)))
    (LeftPath(labels=(2, 1), parent=None), LeftPath(labels=(3,), parent=2))
    """
    out: list[LeftPath] = []

    def walk(top: Node, parent: int | None) -> None:
        chain: list[Node] = []
        node: Node | None = top
        while node:
            chain.append(node)
            node = node.left
        out.append(LeftPath(tuple(v.label for v in chain), parent))
        for v in chain:
            if v.right:
                walk(v.right, v.label)

    walk(t, None)
    return tuple(out)


def edge_stats(t: Node) -> tuple[int, int, int, int]:
    """(left ascents, left descents, right ascents, right descents).

    >>> edge_stats(Node(2, Node(1), Node(3)))
    (0, 1, 1, 0)
    """
    lasc = ldes = rasc = rdes = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node.left:
            if node.left.label > node.label:
                lasc += 1
            else:
                ldes += 1
            stack.append(node.left)
        if node.right:
            if node.right.label > node.label:
                rasc += 1
            else:
                rdes += 1
            stack.append(node.right)
    return (lasc, ldes, rasc, rdes)


def ldyck_to_ltree(d: LabeledDyckPath) -> Node:
    """Assemble the tree from the down-step blocks of a canonical path.

    >>> ldyck_to_ltree(LabeledDyckPath(("U", "D3", "U", "U", "D1", "D2")))
    Node(label=2, left=Node(label=1, left=None, right=None), right=Node(label=3, left=None, right=None))
    """
    if not d.canonical:
        raise ValueError(f"labels must be exactly 1..{d.semi_length}")
    word = labeled_dyck_word(d)
    blocks: list[list[int]] = []  # down blocks left to right, with end positions
    ends: list[int] = []
    current: list[int] = []
    for k, token in enumerate(word):
        if token.startswith("D"):
            current.append(int(token[1:]))
        elif current:
            blocks.append(current)
            ends.append(k - 1)
            current = []
    if current:
        blocks.append(current)
        ends.append(len(word) - 1)
    run_blocks = list(reversed(blocks))
    run_ends = list(reversed(ends))

    # functional nodes are frozen, so build with child tables and materialize
    left_of: dict[int, int | None] = {}
    right_of: dict[int, int | None] = {}
    tops: list[int] = []
    for block in run_blocks:
        top = block[-1]
        below = None
        for label in block:
            left_of[label] = below
            right_of[label] = None
            below = label
        tops.append(top)

    attached = set(run_blocks[0])
    for i in range(1, len(run_blocks)):
        after = word[run_ends[i] + 1]
        if not after.startswith("U"):  # impossible: a later block follows
            raise AssertionError(f"down block not followed by an up-step: {after}")
        j = int(after[1:])
        if j not in attached:  # impossible on a valid word
            raise AssertionError(f"attachment point {j} not in the tree yet")
        right_of[j] = tops[i]
        attached.update(run_blocks[i])

    def build(label: int) -> Node:
        left = left_of[label]
        right = right_of[label]
        return Node(
            label,
            build(left) if left is not None else None,
            build(right) if right is not None else None,
        )

    return build(tops[0])


def push_pop_trace(t: Node) -> tuple[tuple[str, int], ...]:
    """The push/pop operation sequence replaying the tree.

    Push the root's left path root to leaf; repeatedly pop the smallest
    pushed-but-unpopped label, and after popping a node with a right child,
    push that child's left path before popping again.
    """
    n = check_ltree(t)
    by_label: dict[int, Node] = {}
    stack = [t]
    while stack:
        node = stack.pop()
        by_label[node.label] = node
        if node.left:
            stack.append(node.left)
        if node.right:
            stack.append(node.right)

    trace: list[tuple[str, int]] = []
    heap: list[int] = []

    def push_chain(top: Node) -> None:
        node: Node | None = top
        while node:
            trace.append(("push", node.label))
            heapq.heappush(heap, node.label)
            node = node.left

    push_chain(t)
    while heap:
        m = heapq.heappop(heap)
        trace.append(("pop", m))
        right = by_label[m].right
        if right:
            push_chain(right)
    if len(trace) != 2 * n:  # impossible: every node pushed and popped once
        raise AssertionError(f"trace has {len(trace)} operations, wanted {2 * n}")
    return tuple(trace)


def ltree_to_ldyck(t: Node) -> LabeledDyckPath:
    """Run the push/pop replay and read it backwards: a push becomes a
    labeled down-step, a pop an up-step.

    >>> ltree_to_ldyck(Node(2, Node(1), Node(3))).steps
    ('U', 'D3', 'U', 'U', 'D1', 'D2')
    """
    trace = push_pop_trace(t)
    steps = tuple(
        f"D{label}" if op == "push" else "U"
        for op, label in reversed(trace)
    )
    return LabeledDyckPath(steps)


def _shapes(n: int) -> Iterator[tuple | None]:
    # a shape is None or a pair (left shape, right shape)
    if n == 0:
        yield None
        return
    for k in range(n):
        for left in _shapes(k):
            for right in _shapes(n - 1 - k):
                yield (left, right)


def _materialize(shape: tuple | None, labels: Iterator[int]) -> Node | None:
    if shape is None:
        return None
    label = next(labels)  # preorder: node, then left, then right
    left = _materialize(shape[0], labels)
    right = _materialize(shape[1], labels)
    return Node(label, left, right)


def enumerate_ltrees(n: int) -> Iterator[Node]:
    """All labeled trees on n nodes: every shape with every labeling."""
    from itertools import permutations

    if n < 1:
        raise ValueError(f"need at least one node: {n}")
    for shape in _shapes(n):
        for labels in permutations(range(1, n + 1)):
            tree = _materialize(shape, iter(labels))
            assert tree is not None
            yield tree


def random_ltree(n: int, rng: random.Random) -> Node:
    """One labeled tree, uniform over shapes and labelings independently."""
    shapes = list(_shapes(n))
    shape = rng.choice(shapes)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    tree = _materialize(shape, iter(labels))
    assert tree is not None
    return tree


def tree_to_json(t: Node) -> dict:
    out: dict = {"label": t.label}
    if t.left:
        out["left"] = tree_to_json(t.left)
    if t.right:
        out["right"] = tree_to_json(t.right)
    return out


def tree_from_json(data: dict) -> Node:
    if not isinstance(data, dict) or "label" not in data:
        raise ValueError('expected an object with a "label" key')
    label = data["label"]
    if not isinstance(label, int):
        raise ValueError(f"label must be an integer: {label!r}")
    left = tree_from_json(data["left"]) if "left" in data else None
    right = tree_from_json(data["right"]) if "right" in data else None
    return Node(label, left, right)


def tree_dot(t: Node) -> str:
    """DOT digraph; edges tagged L/R, descent edges drawn bold."""
    lines = ["digraph tree {"]
    stack = [t]
    while stack:
        node = stack.pop()
        lines.append(f"  n{node.label} [label=\"{node.label}\"];")
        for side, child in (("L", node.left), ("R", node.right)):
            if child:
                bold = ", penwidth=2" if child.label < node.label else ""
                lines.append(
                    f'  n{node.label} -> n{child.label} [label="{side}"{bold}];'
                )
                stack.append(child)
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
