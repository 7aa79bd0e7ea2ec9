"""Dyck paths, labeled Dyck paths, and their two-column tableau bijection.

A Dyck path is a balanced sequence of up- and down-steps with every prefix
having at least as many ups as downs.  A labeled path carries distinct
positive labels on its down-steps; a path of semi-length n is canonical when
those labels are exactly 1..n (factors of a longer path keep their original
labels, so they are valid paths without being canonical).

Up-step labels are never stored.  They are recomputed by the labeling rule:
scanning up-steps right to left, each receives the smallest down-step label
occurring later in the path that no later up-step has already taken.  The
fully labeled word lists tokens like ``U7`` and ``D3`` left to right.

A canonical labeled path corresponds to a standard tableau with n rows of
length two: step i is an up-step when i sits in the second column, and
otherwise a down-step labeled by the row of i.
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .tableaux import ReverseTableau, Tableau, is_standard, positions, validate_pct

__all__ = [
    "DyckPath",
    "LabeledDyckPath",
    "prime_factors",
    "runs",
    "up_step_labels",
    "labeled_dyck_word",
    "format_word",
    "spct_to_ldyck",
    "ldyck_to_spct",
    "srt_to_dyck",
    "enumerate_dyck",
    "enumerate_ldyck",
    "random_ldyck",
    "catalan",
    "ldyck_from_json",
]

_DOWN_TOKEN = re.compile(r"^D([1-9][0-9]*)$")


def _check_balance(ups_downs: Sequence[str], what: str) -> None:
    height = 0
    for step in ups_downs:
        height += 1 if step == "U" else -1
        if height < 0:
            raise ValueError(f"{what} dips below the ground")
    if height != 0:
        raise ValueError(f"{what} does not return to the ground")


@dataclass(frozen=True)
class DyckPath:
    """Steps 'U' and 'D', balanced, prefixes never below the ground."""

    steps: tuple[str, ...]

    def __post_init__(self) -> None:
        if any(s not in ("U", "D") for s in self.steps):
            raise ValueError(f"steps must be 'U' or 'D': {self.steps}")
        _check_balance(self.steps, "path")

    @property
    def semi_length(self) -> int:
        return len(self.steps) // 2

    @property
    def word(self) -> str:
        return "".join(self.steps)

    def to_json(self) -> dict:
        return {"n": self.semi_length, "steps": list(self.steps)}


@dataclass(frozen=True)
class LabeledDyckPath:
    """Steps 'U' and 'D<label>'; down labels distinct positive integers."""

    steps: tuple[str, ...]

    def __post_init__(self) -> None:
        shape = []
        labels = []
        for s in self.steps:
            if s == "U":
                shape.append("U")
                continue
            m = _DOWN_TOKEN.match(s)
            if not m:
                raise ValueError(f"bad step token: {s!r}")
            shape.append("D")
            labels.append(int(m.group(1)))
        _check_balance(shape, "path")
        if len(set(labels)) != len(labels):
            raise ValueError(f"down-step labels repeat: {labels}")

    @property
    def semi_length(self) -> int:
        return len(self.steps) // 2

    @property
    def down_labels(self) -> tuple[int, ...]:
        """Down-step labels, left to right."""
        return tuple(
            int(s[1:]) for s in self.steps if s != "U"
        )

    @property
    def canonical(self) -> bool:
        """True iff the labels are exactly 1..n."""
        return sorted(self.down_labels) == list(range(1, self.semi_length + 1))

    @property
    def unlabeled(self) -> DyckPath:
        return DyckPath(tuple("U" if s == "U" else "D" for s in self.steps))

    def to_json(self) -> dict:
        return {"n": self.semi_length, "steps": list(self.steps)}


def _require_canonical(d: LabeledDyckPath) -> None:
    if not d.canonical:
        raise ValueError(f"labels must be exactly 1..{d.semi_length}")


def prime_factors(
    d: DyckPath | LabeledDyckPath,
) -> tuple[DyckPath | LabeledDyckPath, ...]:
    """Split at every return to the ground; concatenation restores the input."""
    factors = []
    height = 0
    start = 0
    for k, s in enumerate(d.steps):
        height += 1 if s == "U" else -1
        if height == 0:
            factors.append(type(d)(d.steps[start : k + 1]))
            start = k + 1
    return tuple(factors)


def runs(d: LabeledDyckPath) -> tuple[tuple[int, ...], ...]:
    """Maximal down-step blocks, rightmost block first, labels left to right."""
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    for s in d.steps:
        if s == "U":
            if current:
                blocks.append(tuple(current))
                current = []
        else:
            current.append(int(s[1:]))
    if current:
        blocks.append(tuple(current))
    return tuple(reversed(blocks))


def up_step_labels(d: LabeledDyckPath) -> tuple[int, ...]:
    """Labels acquired by the up-steps, reported left to right.

    Scanning right to left, an up-step takes the smallest label among
    down-steps after it that no up-step after it has taken.
    """
    assigned: list[int] = []
    down_after: set[int] = set()
    up_after: set[int] = set()
    for s in reversed(d.steps):
        if s == "U":
            available = down_after - up_after
            if not available:  # impossible on a valid path
                raise AssertionError("no label available; path corrupt")
            label = min(available)
            assigned.append(label)
            up_after.add(label)
        else:
            down_after.add(int(s[1:]))
    return tuple(reversed(assigned))


def labeled_dyck_word(d: LabeledDyckPath) -> tuple[str, ...]:
    """Fully labeled word: tokens 'U<k>' and 'D<k>' left to right."""
    ups = iter(up_step_labels(d))
    return tuple(f"U{next(ups)}" if s == "U" else s for s in d.steps)


def format_word(tokens: Sequence[str]) -> str:
    return " ".join(tokens)


def spct_to_ldyck(t: Tableau) -> LabeledDyckPath:
    """Read a two-column standard tableau off as a labeled path.

    Step i is an up-step when i is in the second column, else a down-step
    labeled by the row containing i.
    """
    if any(len(row) != 2 for row in t.rows):
        raise ValueError(f"shape must be a two-column rectangle: {t.shape}")
    if not validate_pct(t).valid or not is_standard(t):
        raise ValueError("input is not a valid standard tableau")
    pos = positions(t)
    steps = tuple(
        "U" if pos[i][1] == 2 else f"D{pos[i][0]}" for i in range(1, t.size + 1)
    )
    return LabeledDyckPath(steps)


def ldyck_to_spct(d: LabeledDyckPath) -> Tableau:
    """Rebuild the two-column tableau: label i with its up-step at position p
    and down-step at position q gives row i the entries q then p."""
    _require_canonical(d)
    word = labeled_dyck_word(d)
    up_at: dict[int, int] = {}
    down_at: dict[int, int] = {}
    for position, token in enumerate(word, start=1):
        label = int(token[1:])
        if token.startswith("U"):
            up_at[label] = position
        else:
            down_at[label] = position
    return Tableau(
        tuple((down_at[i], up_at[i]) for i in range(1, d.semi_length + 1))
    )


def srt_to_dyck(T: ReverseTableau) -> DyckPath:
    """Two-column standard reverse tableaux to unlabeled paths: step i is an
    up-step exactly when i sits in the second column."""
    if any(len(row) != 2 for row in T.rows):
        raise ValueError(f"shape must be a two-column rectangle: {T.shape}")
    if not is_standard(T):
        raise ValueError("input is not standard")
    pos = positions(T)
    return DyckPath(
        tuple("U" if pos[i][1] == 2 else "D" for i in range(1, T.size + 1))
    )


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All paths of semi-length n, lexicographic with 'U' before 'D'."""
    if n < 0:
        raise ValueError(f"semi-length must be nonnegative: {n}")

    def extend(prefix: list[str], ups: int, downs: int) -> Iterator[DyckPath]:
        if ups == n and downs == n:
            yield DyckPath(tuple(prefix))
            return
        if ups < n:
            prefix.append("U")
            yield from extend(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            yield from extend(prefix, ups, downs + 1)
            prefix.pop()

    return extend([], 0, 0)


def enumerate_ldyck(n: int) -> Iterator[LabeledDyckPath]:
    """All n! Cat(n) canonical labeled paths of semi-length n."""
    from itertools import permutations

    for path in enumerate_dyck(n):
        down_positions = [k for k, s in enumerate(path.steps) if s == "D"]
        for labels in permutations(range(1, n + 1)):
            steps = list(path.steps)
            for k, label in zip(down_positions, labels):
                steps[k] = f"D{label}"
            yield LabeledDyckPath(tuple(steps))


def random_ldyck(n: int, rng: random.Random) -> LabeledDyckPath:
    """One canonical labeled path, uniform over the unlabeled paths and over
    the label orders independently."""
    paths = list(enumerate_dyck(n))
    path = rng.choice(paths)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    it = iter(labels)
    return LabeledDyckPath(
        tuple(s if s == "U" else f"D{next(it)}" for s in path.steps)
    )


def catalan(n: int) -> int:
    """The n-th Catalan number."""
    from math import comb

    return comb(2 * n, n) // (n + 1)


def ldyck_from_json(data: dict) -> LabeledDyckPath:
    if not isinstance(data, dict) or "steps" not in data:
        raise ValueError('expected an object with a "steps" key')
    steps = data["steps"]
    if not isinstance(steps, list) or not all(isinstance(s, str) for s in steps):
        raise ValueError('"steps" must be a list of step tokens')
    d = LabeledDyckPath(tuple(steps))
    if "n" in data and data["n"] != d.semi_length:
        raise ValueError(
            f'declared semi-length {data["n"]} does not match {d.semi_length}'
        )
    return d


if __name__ == "__main__":
    import doctest

    doctest.testmod()
