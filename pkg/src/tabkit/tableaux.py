"""Composition tableaux and reverse tableaux.

A tableau here is a left-justified filling of a composition diagram, rows
numbered from the top, cells addressed (row, column) 1-indexed.  A filling is
a valid PCT (permuted composition tableau) of type sigma when

  1. the first-column entries are distinct and standardize, read top to
     bottom, to sigma;
  2. every row weakly decreases left to right;
  3. the triple condition holds: for cells a = (i, j), b = (i, j+1) and
     c = (k, j+1) with i < k, a >= c forces b > c;

and every entry is at most the number of cells.  A reverse tableau is a
partition-shaped filling with weakly decreasing rows and strictly decreasing
columns.  Either kind is standard when its entries are exactly {1, ..., n}.

The two constructions ``pct_to_rt`` (sort each column) and ``rt_to_pct``
(place each column back, steered by a type permutation) are mutually inverse
bijections between valid PCTs of type sigma, over all shapes with a given
sorted shape, and reverse tableaux of that partition shape.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .core import (
    Composition,
    Perm,
    check_composition,
    check_permutation,
    composition_size,
    standardize,
    to_partition,
)

__all__ = [
    "Tableau",
    "ReverseTableau",
    "Violation",
    "ValidationResult",
    "validate_pct",
    "validate_pct_alt",
    "is_standard",
    "positions",
    "column_word",
    "st_column",
    "st_word",
    "descent_set",
    "descent_quadruple",
    "pct_to_rt",
    "rt_to_pct",
    "enumerate_spct",
    "enumerate_spct_sigma",
    "enumerate_srt",
    "from_json",
    "render",
]


def _check_rows(rows: tuple[tuple[int, ...], ...]) -> None:
    if not rows:
        raise ValueError("tableau must have at least one row")
    for r, row in enumerate(rows, start=1):
        if not row:
            raise ValueError(f"row {r} is empty")
        for entry in row:
            if not isinstance(entry, int) or entry < 1:
                raise ValueError(f"row {r} has a non-positive entry: {entry}")


@dataclass(frozen=True)
class Tableau:
    """A filling of a composition diagram; validity is checked separately."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_rows(self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def shape(self) -> Composition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, row: int, col: int) -> int:
        """Entry at 1-indexed (row, col)."""
        return self.rows[row - 1][col - 1]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class ReverseTableau:
    """Partition shape, rows weakly decreasing, columns strictly decreasing.

    Entries are positive and at most the number of cells.  Unlike Tableau,
    the defining conditions are enforced at construction.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_rows(self.rows)
        shape = self.shape
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError(f"shape must be a partition: {shape}")
        n = self.size
        for r, row in enumerate(self.rows, start=1):
            if any(row[j] < row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {r} does not weakly decrease: {row}")
            if any(x > n for x in row):
                raise ValueError(f"row {r} has an entry exceeding {n}")
        for r in range(1, len(self.rows)):
            upper, lower = self.rows[r - 1], self.rows[r]
            for j in range(len(lower)):
                if upper[j] <= lower[j]:
                    raise ValueError(
                        f"column {j + 1} does not strictly decrease at row {r + 1}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ReverseTableau":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def shape(self) -> Composition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - 1]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [list(r) for r in self.rows],
            "reverse": True,
        }


@dataclass(frozen=True)
class Violation:
    """One broken validity condition, located by its cells (1-indexed)."""

    kind: str  # first-column-repeat | row-increase | triple | entry-range
    cells: tuple[tuple[int, int], ...]
    message: str


@dataclass(frozen=True)
class ValidationResult:
    sigma: Perm | None  # the type, when valid
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_pct(t: Tableau) -> ValidationResult:
    """Check the PCT conditions, reporting every violation with its cells.

    On success the result carries the type: the standardization of the first
    column read top to bottom.
    """
    violations: list[Violation] = []
    n = t.size

    for r, row in enumerate(t.rows, start=1):
        for c, x in enumerate(row, start=1):
            if x > n:
                violations.append(
                    Violation(
                        "entry-range",
                        ((r, c),),
                        f"entry {x} at ({r},{c}) exceeds the cell count {n}",
                    )
                )

    first_col = [row[0] for row in t.rows]
    seen: dict[int, int] = {}
    for r, x in enumerate(first_col, start=1):
        if x in seen:
            violations.append(
                Violation(
                    "first-column-repeat",
                    ((seen[x], 1), (r, 1)),
                    f"first column repeats {x} at rows {seen[x]} and {r}",
                )
            )
        else:
            seen[x] = r

    for r, row in enumerate(t.rows, start=1):
        for c in range(1, len(row)):
            if row[c - 1] < row[c]:
                violations.append(
                    Violation(
                        "row-increase",
                        ((r, c), (r, c + 1)),
                        f"row {r} increases from column {c} to {c + 1}",
                    )
                )

    # triple condition, every configuration by triple loop; an absent cell
    # (i, j+1) counts as zero, so a >= c with no b at all is a violation
    ell = len(t.rows)
    for i in range(ell):
        for k in range(i + 1, ell):
            for j in range(min(len(t.rows[i]), len(t.rows[k]) - 1)):
                a = t.rows[i][j]
                b = t.rows[i][j + 1] if j + 1 < len(t.rows[i]) else None
                c = t.rows[k][j + 1]
                if a >= c and (b is None or b <= c):
                    detail = (
                        f"({i + 1},{j + 2})={b}" if b is not None
                        else f"({i + 1},{j + 2}) empty"
                    )
                    violations.append(
                        Violation(
                            "triple",
                            ((i + 1, j + 1), (i + 1, j + 2), (k + 1, j + 2)),
                            f"cells ({i + 1},{j + 1})={a}, {detail}, "
                            f"({k + 1},{j + 2})={c}: {a} >= {c} needs a larger "
                            "entry above",
                        )
                    )

    sigma = None
    if not violations:
        sigma = standardize(first_col)
    return ValidationResult(sigma, tuple(violations))


def validate_pct_alt(t: Tableau) -> bool:
    """Equivalent validity test in a different formulation; cross-check only.

    Replaces the triple condition by: column entries are distinct; for cells
    (i, j) above (k, j) in any column j >= 2, if the upper entry is smaller
    then the lower entry exceeds the upper entry's left neighbor; and any
    entry in column j >= 2 exceeds every entry of a shorter row above it
    whose cells stop just left of column j.
    """
    n = t.size
    if any(x > n for row in t.rows for x in row):
        return False
    first_col = [row[0] for row in t.rows]
    if len(set(first_col)) != len(first_col):
        return False
    for row in t.rows:
        if any(row[c - 1] < row[c] for c in range(1, len(row))):
            return False
    ncols = max(len(row) for row in t.rows)
    for j in range(1, ncols):  # 0-indexed column j, i.e. column j+1 >= 2
        cells = [(i, row[j]) for i, row in enumerate(t.rows) if len(row) > j]
        values = [x for _, x in cells]
        if len(set(values)) != len(values):
            return False
        for a in range(len(cells)):
            for b in range(a + 1, len(cells)):
                (i, upper), (k, lower) = cells[a], cells[b]
                if upper < lower and not lower > t.rows[i][j - 1]:
                    return False
        for k, lower in cells:
            for i in range(k):
                if len(t.rows[i]) == j and not t.rows[i][j - 1] < lower:
                    return False
    return True


def is_standard(t: Tableau | ReverseTableau) -> bool:
    """True iff the entries are exactly 1 through the number of cells."""
    entries = sorted(x for row in t.rows for x in row)
    return entries == list(range(1, t.size + 1))


def _require_standard(t: Tableau | ReverseTableau) -> None:
    if not is_standard(t):
        raise ValueError("tableau is not standard")


def positions(t: Tableau | ReverseTableau) -> dict[int, tuple[int, int]]:
    """Map each entry of a standard tableau to its 1-indexed (row, column)."""
    _require_standard(t)
    return {
        x: (r, c)
        for r, row in enumerate(t.rows, start=1)
        for c, x in enumerate(row, start=1)
    }


def column_word(t: Tableau | ReverseTableau, col: int) -> tuple[int, ...]:
    """Column col read top to bottom."""
    if not 1 <= col <= max(len(row) for row in t.rows):
        raise ValueError(f"column index out of range: {col}")
    return tuple(row[col - 1] for row in t.rows if len(row) >= col)


def st_column(t: Tableau | ReverseTableau, col: int) -> Perm:
    """Standardization of column col read top to bottom."""
    return standardize(column_word(t, col))


def st_word(t: Tableau | ReverseTableau) -> tuple[Perm, ...]:
    """The standardized column words, first column to last."""
    ncols = max(len(row) for row in t.rows)
    return tuple(st_column(t, j) for j in range(1, ncols + 1))


def descent_set(t: Tableau) -> frozenset[int]:
    """All i with i+1 weakly right of i (column index of i+1 >= that of i)."""
    pos = positions(t)
    return frozenset(
        i for i in range(1, t.size) if pos[i + 1][1] >= pos[i][1]
    )


def descent_quadruple(t: Tableau) -> tuple[int, int, int, int]:
    """Classify first-column descents of a two-column rectangle.

    For each first-column entry i (other than the largest), i+1 sits either
    in the first column (north or south of i) or in the second column
    (northeast or southeast).  Returns the four counts in that order; they
    sum to one less than the number of rows.
    """
    if any(len(row) != 2 for row in t.rows):
        raise ValueError(f"shape must be a two-column rectangle: {t.shape}")
    pos = positions(t)
    north = south = northeast = southeast = 0
    for i in range(1, t.size):
        (r1, c1), (r2, c2) = pos[i], pos[i + 1]
        if c1 != 1:
            continue
        if c2 == 1:
            if r2 < r1:
                north += 1
            else:
                south += 1
        else:
            if r2 < r1:
                northeast += 1
            else:
                southeast += 1
    return (north, south, northeast, southeast)


def pct_to_rt(t: Tableau) -> ReverseTableau:
    """Sort each column into the partition shape, top to bottom decreasing."""
    result = validate_pct(t)
    if not result.valid:
        raise ValueError(
            "not a valid PCT: " + "; ".join(v.message for v in result.violations)
        )
    lam = to_partition(t.shape)
    ncols = lam[0]
    cols = [
        sorted((row[j] for row in t.rows if len(row) > j), reverse=True)
        for j in range(ncols)
    ]
    rows = tuple(
        tuple(cols[j][i] for j in range(lam[i])) for i in range(len(lam))
    )
    return ReverseTableau(rows)


def rt_to_pct(T: ReverseTableau, sigma: Sequence[int]) -> Tableau:
    """Rebuild the tableau of type sigma whose sorted columns give T.

    The first column of T is distributed over the rows so that it
    standardizes to sigma; each later column's entries are then placed in
    decreasing order, each into the smallest-index row that has exactly the
    preceding columns filled and keeps the row weakly decreasing.
    """
    sigma = check_permutation(sigma)
    if len(sigma) != len(T.rows):
        raise ValueError(
            f"type length {len(sigma)} does not match {len(T.rows)} rows"
        )
    first = sorted(row[0] for row in T.rows)
    built: list[list[int]] = [[first[sigma[r] - 1]] for r in range(len(T.rows))]
    ncols = len(T.rows[0])
    for k in range(1, ncols):
        entries = sorted((row[k] for row in T.rows if len(row) > k), reverse=True)
        for v in entries:
            for row in built:
                if len(row) == k and row[-1] >= v:
                    row.append(v)
                    break
            else:  # impossible for a reverse tableau input: signals a bug
                raise AssertionError(
                    f"no row accepts {v} in column {k + 1}; input corrupt"
                )
    return Tableau.from_rows(built)


def enumerate_spct(shape: Sequence[int]) -> Iterator[Tableau]:
    """All standard PCTs of the given shape, each exactly once.

    Entries n, n-1, ..., 1 are placed into the leftmost empty cell of some
    row, trying rows top to bottom (fixing the output order).  Placing into
    column c >= 2 of row r is illegal exactly when some earlier row is
    currently filled to length c-1: that row's cell in column c is either
    absent or destined for a smaller entry, and either way the new entry
    would complete a forbidden triple with the earlier row's column c-1.
    """
    shape = check_composition(shape)
    if not shape:
        raise ValueError("shape must be nonempty")
    n = composition_size(shape)
    ell = len(shape)
    rows: list[list[int]] = [[] for _ in range(ell)]
    lengths = [0] * ell

    def place(v: int) -> Iterator[Tableau]:
        if v == 0:
            yield Tableau.from_rows(rows)
            return
        for r in range(ell):
            c = lengths[r]
            if c >= shape[r]:
                continue
            if c >= 1 and any(lengths[i] == c for i in range(r)):
                continue
            rows[r].append(v)
            lengths[r] += 1
            yield from place(v - 1)
            rows[r].pop()
            lengths[r] -= 1

    return place(n)


def enumerate_spct_sigma(
    shape: Sequence[int], sigma: Sequence[int]
) -> Iterator[Tableau]:
    """All standard PCTs of the given shape and type."""
    shape = check_composition(shape)
    sigma = check_permutation(sigma)
    if len(sigma) != len(shape):
        raise ValueError(
            f"type length {len(sigma)} does not match {len(shape)} rows"
        )
    return (t for t in enumerate_spct(shape) if st_column(t, 1) == sigma)


def enumerate_srt(partition: Sequence[int]) -> Iterator[ReverseTableau]:
    """All standard reverse tableaux of the given partition shape."""
    lam = check_composition(partition)
    if not lam:
        raise ValueError("shape must be nonempty")
    if lam != to_partition(lam):
        raise ValueError(f"shape must be a partition: {lam}")
    n = composition_size(lam)
    for increasing in _enumerate_syt(lam):
        yield ReverseTableau(
            tuple(tuple(n + 1 - x for x in row) for row in increasing)
        )


def _enumerate_syt(lam: Composition) -> Iterator[tuple[tuple[int, ...], ...]]:
    # standard fillings with increasing rows and columns, built by removing
    # the corner holding the largest entry
    n = sum(lam)
    if n == 0:
        yield ()
        return
    for r in range(len(lam)):
        if r + 1 < len(lam) and lam[r] == lam[r + 1]:
            continue
        child = list(lam)
        child[r] -= 1
        if child[r] == 0:
            child.pop(r)
        for smaller in _enumerate_syt(tuple(child)):
            rows = [list(row) for row in smaller]
            if r == len(rows):
                rows.append([])
            rows[r].append(n)
            yield tuple(tuple(row) for row in rows)


def from_json(data: dict) -> Tableau | ReverseTableau:
    """Load a tableau from its JSON form; a "reverse" marker picks the kind."""
    if not isinstance(data, dict) or "rows" not in data:
        raise ValueError('expected an object with a "rows" key')
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError('"rows" must be a list of lists')
    cls = ReverseTableau if data.get("reverse") else Tableau
    t = cls.from_rows(rows)
    if "shape" in data and tuple(data["shape"]) != t.shape:
        raise ValueError(
            f'declared shape {data["shape"]} does not match rows {list(t.shape)}'
        )
    return t


def render(t: Tableau | ReverseTableau) -> str:
    """Left-justified text diagram, one line per row."""
    width = max(len(str(x)) for row in t.rows for x in row)
    return "\n".join(
        " ".join(str(x).rjust(width) for x in row) for row in t.rows
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
