"""Descent operators on standard composition tableaux.

For a standard tableau and 1 <= i < n, the entries i and i+1 are attacking
when they share a column, or sit in adjacent columns with i+1 strictly
southeast of i.  The operator pi_i fixes the tableau when i is not a descent,
kills it (a formal zero) when i is an attacking descent, and otherwise swaps
the entries i and i+1.  These operators are idempotent, commute at distance
two or more, and satisfy the braid relation, with zero absorbing.

Tableaux sharing all standardized column words form an equivalence class;
every class contains exactly one source (each non-descent i < n has i+1
immediately to its left) and exactly one sink (every descent attacking).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .core import Perm, check_composition
from .tableaux import (
    Tableau,
    descent_set,
    enumerate_spct,
    positions,
    st_column,
    st_word,
    validate_pct,
)

__all__ = [
    "DescentClass",
    "HeckeResult",
    "EquivalenceClass",
    "RelationReport",
    "classify",
    "swap_entries",
    "pi",
    "apply_word",
    "verify_hecke_relations",
    "is_source",
    "is_sink",
    "equivalence_classes",
    "class_report_json",
    "orbit_dot",
]


class DescentClass(Enum):
    NOT_DESCENT = "not-descent"
    ATTACKING = "attacking-descent"
    NONATTACKING = "nonattacking-descent"


@dataclass(frozen=True)
class HeckeResult:
    """Outcome of one operator application: fixed, zero, or a new tableau."""

    kind: str  # "fixed" | "zero" | "moved"
    tableau: Tableau | None  # the input if fixed, the image if moved, else None


def _attacking(pos: dict[int, tuple[int, int]], i: int) -> bool:
    # same column, or adjacent columns with i+1 strictly southeast of i
    (r1, c1), (r2, c2) = pos[i], pos[i + 1]
    return c1 == c2 or (c2 == c1 + 1 and r2 > r1)


def classify(t: Tableau, i: int) -> DescentClass:
    """Is i a descent of t, and if so, are i and i+1 attacking?"""
    pos = positions(t)
    if not 1 <= i <= t.size - 1:
        raise ValueError(f"index out of range: {i}")
    if pos[i + 1][1] < pos[i][1]:
        return DescentClass.NOT_DESCENT
    if _attacking(pos, i):
        return DescentClass.ATTACKING
    return DescentClass.NONATTACKING


def swap_entries(t: Tableau, i: int) -> Tableau:
    """The filling with entries i and i+1 interchanged."""
    return Tableau(
        tuple(
            tuple(i + 1 if x == i else i if x == i + 1 else x for x in row)
            for row in t.rows
        )
    )


def pi(t: Tableau, i: int) -> HeckeResult:
    """Apply the i-th descent operator.

    A moved result is revalidated: it must be a valid standard tableau of the
    same shape and type, so a failure here signals a library bug, not bad
    input.
    """
    kind = classify(t, i)
    if kind is DescentClass.NOT_DESCENT:
        return HeckeResult("fixed", t)
    if kind is DescentClass.ATTACKING:
        return HeckeResult("zero", None)
    moved = swap_entries(t, i)
    check = validate_pct(moved)
    if not check.valid or check.sigma != st_column(t, 1):
        raise AssertionError(
            f"swap of {i}, {i + 1} broke validity on {t.rows}"
        )
    return HeckeResult("moved", moved)


def apply_word(t: Tableau, word: Sequence[int]) -> Tableau | None:
    """Apply operators right to left, None standing for the absorbing zero."""
    state: Tableau | None = t
    for i in reversed(word):
        if state is None:
            return None
        result = pi(state, i)
        state = result.tableau
    return state


@dataclass(frozen=True)
class RelationReport:
    passed: bool
    shape: tuple[int, ...]
    tableaux: int
    checks: int
    counterexample: str | None


def verify_hecke_relations(shape: Sequence[int]) -> RelationReport:
    """Check idempotence, distant commutation, and the braid relation
    pointwise on every standard tableau of the given shape."""
    shape = check_composition(shape)
    n = sum(shape)
    tableaux = list(enumerate_spct(shape))
    checks = 0
    for t in tableaux:
        for i in range(1, n):
            checks += 1
            if apply_word(t, (i, i)) != apply_word(t, (i,)):
                return RelationReport(
                    False, shape, len(tableaux), checks,
                    f"pi_{i}^2 != pi_{i} on {t.rows}",
                )
        for i, j in combinations(range(1, n), 2):
            if j - i < 2:
                continue
            checks += 1
            if apply_word(t, (i, j)) != apply_word(t, (j, i)):
                return RelationReport(
                    False, shape, len(tableaux), checks,
                    f"pi_{i} pi_{j} != pi_{j} pi_{i} on {t.rows}",
                )
        for i in range(1, n - 1):
            checks += 1
            if apply_word(t, (i, i + 1, i)) != apply_word(t, (i + 1, i, i + 1)):
                return RelationReport(
                    False, shape, len(tableaux), checks,
                    f"braid relation fails at i={i} on {t.rows}",
                )
    return RelationReport(True, shape, len(tableaux), checks, None)


def is_source(t: Tableau) -> bool:
    """Every non-descent i < n has i+1 in the cell immediately to its left."""
    pos = positions(t)
    des = descent_set(t)
    for i in range(1, t.size):
        if i in des:
            continue
        (r1, c1), (r2, c2) = pos[i], pos[i + 1]
        if not (r2 == r1 and c2 == c1 - 1):
            return False
    return True


def is_sink(t: Tableau) -> bool:
    """Every descent is attacking."""
    pos = positions(t)
    des = descent_set(t)
    return all(_attacking(pos, i) for i in des)


@dataclass(frozen=True)
class EquivalenceClass:
    """All tableaux of one shape sharing every standardized column word."""

    signature: tuple[Perm, ...]
    members: tuple[Tableau, ...]
    source: Tableau
    sink: Tableau
    moved_connected: bool  # observed, not a guaranteed invariant


def equivalence_classes(shape: Sequence[int]) -> tuple[EquivalenceClass, ...]:
    """Partition the standard tableaux of a shape by standardized column word.

    Classes are sorted by signature; members by their rows.  Each class
    records its unique source and sink, and whether its members are connected
    by moved transitions (reported as observed; connectivity is checked, not
    assumed).
    """
    shape = check_composition(shape)
    by_signature: dict[tuple[Perm, ...], list[Tableau]] = {}
    for t in enumerate_spct(shape):
        by_signature.setdefault(st_word(t), []).append(t)
    classes = []
    for signature in sorted(by_signature):
        members = sorted(by_signature[signature], key=lambda t: t.rows)
        sources = [t for t in members if is_source(t)]
        sinks = [t for t in members if is_sink(t)]
        if len(sources) != 1 or len(sinks) != 1:
            raise AssertionError(
                f"class {signature} has {len(sources)} sources and "
                f"{len(sinks)} sinks"
            )
        classes.append(
            EquivalenceClass(
                signature,
                tuple(members),
                sources[0],
                sinks[0],
                _moved_connected(members),
            )
        )
    return tuple(classes)


def _moved_connected(members: list[Tableau]) -> bool:
    # undirected reachability over moved transitions within the class
    if len(members) == 1:
        return True
    n = members[0].size
    index = {t: k for k, t in enumerate(members)}
    adjacency: dict[int, set[int]] = {k: set() for k in index.values()}
    for t, k in index.items():
        for i in range(1, n):
            result = pi(t, i)
            if result.kind == "moved":
                other = index[result.tableau]
                adjacency[k].add(other)
                adjacency[other].add(k)
    seen = {0}
    stack = [0]
    while stack:
        for neighbor in adjacency[stack.pop()]:
            if neighbor not in seen:
                seen.add(neighbor)
                stack.append(neighbor)
    return len(seen) == len(members)


def class_report_json(classes: Sequence[EquivalenceClass]) -> list[dict]:
    return [
        {
            "signature": [list(p) for p in c.signature],
            "size": len(c.members),
            "source": c.source.to_json(),
            "sink": c.sink.to_json(),
            "moved_connected": c.moved_connected,
        }
        for c in classes
    ]


def orbit_dot(shape: Sequence[int]) -> str:
    """DOT digraph of all moved transitions on the tableaux of one shape."""
    shape = check_composition(shape)
    tableaux = sorted(enumerate_spct(shape), key=lambda t: t.rows)
    index = {t: k for k, t in enumerate(tableaux)}
    lines = ["digraph orbits {"]
    for t, k in index.items():
        label = "/".join(",".join(map(str, row)) for row in t.rows)
        lines.append(f'  t{k} [label="{label}"];')
    n = sum(shape)
    for t, k in index.items():
        for i in range(1, n):
            result = pi(t, i)
            if result.kind == "moved":
                lines.append(f'  t{k} -> t{index[result.tableau]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
