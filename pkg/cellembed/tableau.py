"""
Standard Young tableaux, column insertion and the Robinson-Schensted symbols.

P(w) is built by column inserting w(n), w(n-1), ..., w(1) into the empty
tableau; Q(w) records, with label i, the cell added by the i-th insertion.

>>> pair = rsk(Permutation((3, 1, 4, 2)))
>>> pair.P.rows, pair.Q.rows
(((1, 2), (3, 4)), ((1, 3), (2, 4)))
>>> pair.P.slash()
'(12/34)'
"""
from __future__ import annotations

import bisect
import dataclasses
import functools
import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import TableauError
from .perm import COMPACT_DIGITS, MAX_COMPACT, Permutation

Shape = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class StandardTableau:
    """Rows increase left to right, columns top to bottom, shape is a partition."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        seen = set()
        for r, row in enumerate(rows):
            if not row:
                raise TableauError(f"row {r + 1} is empty")
            if r and len(row) > len(rows[r - 1]):
                raise TableauError(f"row {r + 1} is longer than the row above it")
            for c, entry in enumerate(row):
                if not isinstance(entry, int) or entry < 1:
                    raise TableauError(f"entry {entry!r} is not a positive integer")
                if entry in seen:
                    raise TableauError(f"duplicate entry {entry}")
                seen.add(entry)
                if c and row[c - 1] >= entry:
                    raise TableauError(f"row {r + 1} is not increasing at {entry}")
                if r and rows[r - 1][c] >= entry:
                    raise TableauError(f"column {c + 1} is not increasing at {entry}")

    @classmethod
    def empty(cls) -> StandardTableau:
        return cls(())

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> StandardTableau:
        height = len(columns[0]) if columns else 0
        return cls(tuple(tuple(col[r] for col in columns if len(col) > r) for r in range(height)))

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(row[c] for row in self.rows if len(row) > c) for c in range(width))

    @functools.cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """Entry -> (row, column), both 1-based."""
        return {entry: (r, c) for r, row in enumerate(self.rows, 1) for c, entry in enumerate(row, 1)}

    @property
    def entries(self) -> frozenset[int]:
        return frozenset(self.positions)

    def __contains__(self, entry: int) -> bool:
        return entry in self.positions

    def render(self, offset: int = 1) -> str:
        """One row per line, entries separated by spaces; ``offset`` is the smallest letter shown."""
        return "\n".join(" ".join(str(entry - 1 + offset) for entry in row) for row in self.rows)

    def slash(self, offset: int = 1) -> str:
        """Rows separated by slashes, as in (12/34); letters past 9 when entries allow."""
        if all(entry <= MAX_COMPACT for entry in self.positions):
            rows = ("".join(COMPACT_DIGITS[entry - 1 + offset] for entry in row) for row in self.rows)
        else:
            rows = (" ".join(str(entry - 1 + offset) for entry in row) for row in self.rows)
        return "(" + "/".join(rows) + ")"

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclasses.dataclass(frozen=True)
class RskPair:
    P: StandardTableau
    Q: StandardTableau

    def __post_init__(self):
        if self.P.shape != self.Q.shape:
            raise TableauError(f"P has shape {self.P.shape} but Q has shape {self.Q.shape}")
        if self.Q.entries != frozenset(range(1, self.Q.size + 1)):
            raise TableauError("Q must hold exactly 1..n")

    @property
    def shape(self) -> Shape:
        return self.P.shape


def _insert_into_columns(columns: list[list[int]], value: int) -> tuple[int, int]:
    """Column insert in place; returns the 0-based (row, column) of the new cell."""
    c = 0
    while True:
        if c == len(columns):
            columns.append([value])
            return 0, c
        column = columns[c]
        index = bisect.bisect_right(column, value)
        if index == len(column):
            column.append(value)
            return index, c
        column[index], value = value, column[index]
        c += 1


def column_insert(tableau: StandardTableau, value: int) -> StandardTableau:
    """
    Insert ``value`` into column 1; it displaces the smallest larger entry, which
    moves on to the next column, and so on until an entry lands at the bottom of
    a column.

    >>> column_insert(StandardTableau.empty(), 2).rows
    ((2,),)
    """
    if value in tableau:
        raise TableauError(f"{value} is already in the tableau")
    columns = [list(col) for col in tableau.columns]
    _insert_into_columns(columns, value)
    return StandardTableau.from_columns(columns)


def multi_column_insert(tableau: StandardTableau, values: Sequence[int]) -> StandardTableau:
    """Column insert a strictly decreasing sequence, first to last."""
    values = list(values)
    if any(a <= b for a, b in zip(values, values[1:])):
        raise TableauError(f"values must be strictly decreasing, got {values}")
    clash = set(values) & tableau.entries
    if clash:
        raise TableauError(f"{sorted(clash)} already in the tableau")
    columns = [list(col) for col in tableau.columns]
    for value in values:
        _insert_into_columns(columns, value)
    return StandardTableau.from_columns(columns)


@functools.lru_cache(maxsize=65536)
def rsk(w: Permutation) -> RskPair:
    """P and Q symbols of ``w``; see the module docstring for the conventions."""
    columns: list[list[int]] = []
    recording: list[list[int]] = []
    for label, value in enumerate(reversed(w.word), start=1):
        r, _ = _insert_into_columns(columns, value)
        if r == len(recording):
            recording.append([])
        recording[r].append(label)
    return RskPair(StandardTableau.from_columns(columns), StandardTableau(tuple(map(tuple, recording))))


def p_symbol(w: Permutation) -> StandardTableau:
    return rsk(w).P


def q_symbol(w: Permutation) -> StandardTableau:
    """
    The recording tableau. Insertions run from the right end of w, so this is
    P of the reverse complement of w⁻¹ rather than P(w⁻¹); the two agree on
    which permutations share a Q symbol.
    """
    return rsk(w).Q


def column_index(tableau: StandardTableau, entry: int) -> int:
    """The 1-based column of ``entry``."""
    try:
        return tableau.positions[entry][1]
    except KeyError:
        raise TableauError(f"{entry} is not an entry of the tableau") from None


# --- shapes and enumeration -------------------------------------------------------

@functools.cache
def partitions(n: int) -> tuple[Shape, ...]:
    """Partitions of n, largest first in reverse lexicographic order."""
    def parts(remaining: int, largest: int) -> Iterator[Shape]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first, *rest)
    return tuple(parts(n, n))


def _corners(shape: Shape) -> list[int]:
    """Rows whose last cell can be removed."""
    return [i for i, part in enumerate(shape) if part > (shape[i + 1] if i + 1 < len(shape) else 0)]


def standard_tableaux(shape: Shape) -> list[StandardTableau]:
    """All standard tableaux of a shape, filled with 1..n, by removing the largest entry."""
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(part <= 0 for part in shape):
        raise TableauError(f"{shape} is not a partition")

    children: dict[Shape, list[tuple[int, Shape]]] = {}
    queue = deque([shape])
    while queue:
        current = queue.popleft()
        if current in children:
            continue
        children[current] = []
        for row in _corners(current):
            child = list(current)
            child[row] -= 1
            child = tuple(part for part in child if part)
            children[current].append((row, child))
            queue.append(child)

    def fill(current: Shape) -> Iterator[list[list[int]]]:
        n = sum(current)
        if n == 0:
            yield []
            return
        for row, child in children[current]:
            for rows in fill(child):
                rows = [r[:] for r in rows]
                if row == len(rows):
                    rows.append([])
                rows[row].append(n)
                yield rows

    return [StandardTableau(tuple(map(tuple, rows))) for rows in fill(shape)]


def count_standard_tableaux(shape: Shape) -> int:
    """Hook length formula."""
    n = sum(shape)
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            below = sum(1 for lower in shape[i + 1:] if lower > j)
            hooks *= part - j + below
    return math.factorial(n) // hooks


def is_standard(rows: Iterable[Iterable[int]]) -> bool:
    try:
        StandardTableau(tuple(tuple(row) for row in rows))
    except TableauError:
        return False
    return True
