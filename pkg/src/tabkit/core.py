"""Permutations, compositions, standardization, and the left weak order.

Permutations are tuples in one-line notation, 1-indexed: ``p[i-1]`` is the
image of ``i``.  Compositions are tuples of positive parts.  Everything here
is a pure function on immutable values.

>>> standardize((3, 1, 2, 2))
(4, 1, 2, 3)
>>> sorted(inversions((2, 3, 1)))
[(1, 3), (2, 3)]
>>> weak_bruhat_leq((1, 2, 3), (3, 2, 1))
True
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

__all__ = [
    "Perm",
    "Composition",
    "identity",
    "is_permutation",
    "check_permutation",
    "standardize",
    "inversions",
    "weak_bruhat_leq",
    "left_cover_swaps",
    "apply_left_swap",
    "maximal_chain_to",
    "check_composition",
    "composition_size",
    "hat",
    "to_partition",
    "compositions_of",
    "parse_permutation",
    "format_permutation",
    "parse_composition",
    "format_composition",
]

Perm = tuple[int, ...]
Composition = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity permutation of [n]."""
    return tuple(range(1, n + 1))


def is_permutation(seq: Sequence[int]) -> bool:
    """True iff seq is a bijection of {1, ..., len(seq)} in one-line notation."""
    return sorted(seq) == list(range(1, len(seq) + 1))


def check_permutation(seq: Sequence[int]) -> Perm:
    """Return seq as a Perm, raising ValueError if it is not a permutation."""
    p = tuple(seq)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of [{len(p)}]: {p}")
    return p


def standardize(word: Sequence[int]) -> Perm:
    """The unique permutation s with s[i] > s[j] iff word[i] > word[j], i < j.

    Equal letters are ordered by position: the earlier occurrence gets the
    smaller image (forced by the strict iff).

    >>> standardize((3, 1, 2, 2))
    (4, 1, 2, 3)
    >>> standardize((5, 5, 5))
    (1, 2, 3)
    """
    if len(word) == 0:
        raise ValueError("empty input")
    # sort positions by (letter, position); rank = image
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    images = [0] * len(word)
    for rank, pos in enumerate(order, start=1):
        images[pos] = rank
    return tuple(images)


def inversions(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    """All position pairs (i, j), 1-indexed, i < j, with p(i) > p(j).

    >>> sorted(inversions((3, 2, 1)))
    [(1, 2), (1, 3), (2, 3)]
    """
    n = len(p)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]
    )


def weak_bruhat_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Left weak order: a <= b iff every inversion of a is an inversion of b."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    return inversions(a) <= inversions(b)


def apply_left_swap(p: Perm, v: int) -> Perm:
    """Left-multiply by the simple transposition of values v and v+1."""
    return tuple(v + 1 if x == v else v if x == v + 1 else x for x in p)


def left_cover_swaps(p: Perm) -> list[int]:
    """All v such that swapping values v, v+1 in p adds exactly one inversion.

    These are the v whose occurrence precedes that of v+1; each gives a cover
    of p in the left weak order.
    """
    pos = {x: i for i, x in enumerate(p)}
    return [v for v in range(1, len(p)) if pos[v] < pos[v + 1]]


def maximal_chain_to(target: Sequence[int]) -> tuple[Perm, ...]:
    """A saturated chain in the left weak order from the identity to target.

    Each step left-multiplies by one simple transposition and gains exactly
    one inversion, so the chain has 1 + |inversions(target)| elements.
    Deterministic: at every step the smallest valid swap value is chosen.

    >>> maximal_chain_to((2, 1, 3))
    ((1, 2, 3), (2, 1, 3))
    """
    t = check_permutation(target)
    inv_target = inversions(t)
    chain = [identity(len(t))]
    current = chain[0]
    while current != t:
        for v in left_cover_swaps(current):
            candidate = apply_left_swap(current, v)
            if inversions(candidate) <= inv_target:
                current = candidate
                chain.append(current)
                break
        else:  # unreachable: the weak order interval [current, t] is graded
            raise AssertionError(f"no cover step from {current} toward {t}")
    return tuple(chain)


def check_composition(parts: Sequence[int]) -> Composition:
    """Return parts as a Composition, raising ValueError on nonpositive parts."""
    c = tuple(parts)
    if any(x < 1 for x in c):
        raise ValueError(f"composition parts must be positive: {c}")
    return c


def composition_size(c: Composition) -> int:
    """Sum of the parts."""
    return sum(c)


def hat(c: Sequence[int]) -> Composition:
    """Increment every part, then pad with ones to length |c|.

    The result is a composition of 2|c| with exactly |c| parts.

    >>> hat((2, 1, 3))
    (3, 2, 4, 1, 1, 1)
    """
    c = check_composition(c)
    n = composition_size(c)
    return tuple(x + 1 for x in c) + (1,) * (n - len(c))


def to_partition(c: Sequence[int]) -> Composition:
    """Parts sorted weakly decreasing."""
    return tuple(sorted(check_composition(c), reverse=True))


def compositions_of(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n, each exactly once.

    Order: lexicographic in the break-set indicator b_1 ... b_(n-1), where
    b_i = 1 iff i is a partial sum.  So (n) comes first and (1, ..., 1) last.

    >>> list(compositions_of(3))
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    for mask in range(1 << (n - 1)):
        parts = []
        last = 0
        for i in range(1, n):
            if mask >> (n - 1 - i) & 1:
                parts.append(i - last)
                last = i
        parts.append(n - last)
        yield tuple(parts)


def parse_permutation(text: str) -> Perm:
    """Parse one-line notation, whitespace- or comma-separated."""
    return check_permutation(_parse_ints(text, "permutation"))


def format_permutation(p: Perm) -> str:
    return " ".join(map(str, p))


def parse_composition(text: str) -> Composition:
    """Parse a composition, whitespace- or comma-separated parts."""
    return check_composition(_parse_ints(text, "composition"))


def format_composition(c: Composition) -> str:
    return ",".join(map(str, c))


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError(f"empty {what}")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"malformed {what}: {text!r}") from None


if __name__ == "__main__":
    import doctest

    doctest.testmod()
