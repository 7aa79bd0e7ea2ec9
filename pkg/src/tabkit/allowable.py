"""Allowable permutation pairs and graph realization of standard tableaux.

A pair (a, b) of permutations of [n] is allowable when it avoids two
patterns simultaneously: no positions i < j with a(i) > a(j) and b(i) < b(j)
(equivalently a is below b in the left weak order), and no positions
i < j < k where the a-values increase while the b-values form the pattern
312.  The number of allowable pairs in the symmetric group on n letters is
(n+1)^(n-1).

An allowable sequence (s_1, ..., s_k) determines a directed graph on the
grid of nodes (i, j) with 1 <= i <= n rows and 1 <= j <= k columns:

- horizontal edges (i, j) -> (i, j+1);
- vertical edges (p, j) -> (i, j) whenever s_j(i) < s_j(p);
- diagonal edges (p, j) -> (i, j-1) whenever i < p and s_j(i) < s_j(p).

The graph is acyclic, and labeling its nodes 1..kn so that every edge points
from a larger label to a smaller one produces a standard tableau of
rectangle shape (k, ..., k) whose j-th column standardizes to s_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import Perm, check_permutation, maximal_chain_to
from .tableaux import Tableau, st_column, validate_pct

__all__ = [
    "PermGraph",
    "is_2112_avoiding",
    "is_123312_avoiding",
    "is_allowable_pair",
    "is_allowable_sequence",
    "allowable_pairs",
    "build_graph",
    "build_graph_permissive",
    "is_acyclic",
    "topological_spct",
    "realize_sct",
    "graph_dot",
]

Node = tuple[int, int]  # (row, column), both 1-indexed
Edge = tuple[Node, Node, str]  # (source, target, kind)


def is_2112_avoiding(a: Perm, b: Perm) -> bool:
    """True iff no i < j has a(i) > a(j) while b(i) < b(j).

    Equivalent to a lying below b in the left weak order.

    >>> is_2112_avoiding((2, 1), (1, 2))
    False
    >>> is_2112_avoiding((1, 2), (2, 1))
    True
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j] and b[i] < b[j]:
                return False
    return True


def is_123312_avoiding(a: Perm, b: Perm) -> bool:
    """True iff no i < j < k has increasing a-values and b-values in the
    pattern 312 (middle smallest, first largest).

    >>> is_123312_avoiding((1, 2, 3), (3, 1, 2))
    False
    >>> is_123312_avoiding((3, 2, 1), (3, 1, 2))
    True
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if a[i] < a[j] < a[k] and b[j] < b[k] < b[i]:
                    return False
    return True


def is_allowable_pair(a: Perm, b: Perm) -> bool:
    """True iff (a, b) avoids both patterns."""
    return is_2112_avoiding(a, b) and is_123312_avoiding(a, b)


def is_allowable_sequence(seq: tuple[Perm, ...]) -> bool:
    """True iff every consecutive pair of the sequence is allowable."""
    if not seq:
        raise ValueError("empty sequence")
    n = len(seq[0])
    for p in seq:
        check_permutation(p)
        if len(p) != n:
            raise ValueError(f"size mismatch: {len(p)} vs {n}")
    return all(is_allowable_pair(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def allowable_pairs(n: int):
    """All allowable pairs in the symmetric group on n letters, in
    lexicographic order; there are (n+1)^(n-1) of them."""
    perms = list(permutations(range(1, n + 1)))
    for a in perms:
        for b in perms:
            if is_allowable_pair(a, b):
                yield (a, b)


@dataclass(frozen=True)
class PermGraph:
    """Directed graph on an n-row, k-column grid of nodes with tagged edges.

    ``sigmas`` records the defining permutation sequence when the graph was
    built from one; hand-assembled graphs may leave it None.
    """

    n: int
    k: int
    edges: frozenset[Edge]
    sigmas: tuple[Perm, ...] | None = None

    def __post_init__(self) -> None:
        for src, dst, kind in self.edges:
            for i, j in (src, dst):
                if not (1 <= i <= self.n and 1 <= j <= self.k):
                    raise ValueError(f"node {(i, j)} outside the {self.n}x{self.k} grid")
            if kind not in ("horizontal", "vertical", "diagonal"):
                raise ValueError(f"unknown edge kind: {kind}")

    @property
    def nodes(self) -> list[Node]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.k + 1)]


def build_graph_permissive(seq: tuple[Perm, ...]) -> PermGraph:
    """The grid graph of any permutation sequence, allowable or not."""
    if len(seq) < 2:
        raise ValueError(f"need at least two permutations: {len(seq)}")
    n = len(seq[0])
    for p in seq:
        check_permutation(p)
        if len(p) != n:
            raise ValueError(f"size mismatch: {len(p)} vs {n}")
    k = len(seq)
    edges: set[Edge] = set()
    for j in range(1, k + 1):
        sigma = seq[j - 1]
        for i in range(1, n + 1):
            if j < k:
                edges.add(((i, j), (i, j + 1), "horizontal"))
            for p in range(1, n + 1):
                if p != i and sigma[i - 1] < sigma[p - 1]:
                    edges.add(((p, j), (i, j), "vertical"))
                if j >= 2 and i < p and sigma[i - 1] < sigma[p - 1]:
                    edges.add(((p, j), (i, j - 1), "diagonal"))
    return PermGraph(n, k, frozenset(edges), tuple(seq))


def build_graph(seq: tuple[Perm, ...]) -> PermGraph:
    """The grid graph of an allowable sequence; rejects anything else."""
    if not is_allowable_sequence(tuple(seq)):
        raise ValueError(f"sequence is not allowable: {seq}")
    return build_graph_permissive(tuple(seq))


def is_acyclic(g: PermGraph) -> bool:
    """Standard in-degree peeling."""
    indeg = {v: 0 for v in g.nodes}
    out: dict[Node, list[Node]] = {v: [] for v in g.nodes}
    for src, dst, _ in g.edges:
        out[src].append(dst)
        indeg[dst] += 1
    ready = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == len(indeg)


def topological_spct(g: PermGraph) -> Tableau:
    """Label the nodes 1..kn, every edge pointing larger -> smaller, and read
    rows off the grid.

    Canonical rule: repeatedly give the smallest unused label to the node all
    of whose out-neighbors are labeled, breaking ties by smallest (column,
    row).  The result is a standard filling of shape (k, ..., k); when the
    graph came from a permutation sequence, column j standardizes to the j-th
    permutation.
    """
    out: dict[Node, set[Node]] = {v: set() for v in g.nodes}
    for src, dst, _ in g.edges:
        out[src].add(dst)
    label: dict[Node, int] = {}
    for next_label in range(1, g.n * g.k + 1):
        candidates = [
            v for v in g.nodes
            if v not in label and all(w in label for w in out[v])
        ]
        if not candidates:
            raise ValueError("graph has a cycle; no labeling exists")
        i, j = min(candidates, key=lambda v: (v[1], v[0]))
        label[(i, j)] = next_label
    t = Tableau.from_rows(
        [[label[(i, j)] for j in range(1, g.k + 1)] for i in range(1, g.n + 1)]
    )
    check = validate_pct(t)
    if not check.valid:  # impossible for a graph built from an allowable sequence
        raise AssertionError(f"labeling is not a valid filling: {check.violations}")
    if g.sigmas is not None:
        for j, sigma in enumerate(g.sigmas, start=1):
            got = st_column(t, j)
            if got != sigma:  # impossible: the edge rules force this
                raise AssertionError(f"column {j} standardizes to {got}, wanted {sigma}")
    return t


def realize_sct(a: Perm, b: Perm) -> Tableau:
    """A standard tableau of rectangle shape whose last two columns
    standardize to a and b, built by extending a maximal left-weak-order
    chain from the identity to a by the single extra column b.

    >>> realize_sct((1, 2), (1, 2)).rows
    ((2, 1), (4, 3))
    """
    a = check_permutation(a)
    b = check_permutation(b)
    if not is_allowable_pair(a, b):
        raise ValueError(f"pair is not allowable: {a}, {b}")
    seq = maximal_chain_to(a) + (b,)
    return topological_spct(build_graph(seq))


_EDGE_COLORS = {"horizontal": "black", "vertical": "blue", "diagonal": "red"}


def graph_dot(g: PermGraph) -> str:
    """DOT digraph with one color per edge class."""
    lines = ["digraph grid {"]
    for i, j in g.nodes:
        lines.append(f'  n{i}_{j} [label="({i},{j})"];')
    for (si, sj), (di, dj), kind in sorted(g.edges):
        lines.append(
            f'  n{si}_{sj} -> n{di}_{dj} [color={_EDGE_COLORS[kind]}];'
        )
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
