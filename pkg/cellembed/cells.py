"""
Kazhdan-Lusztig cells of S_n through the Robinson-Schensted correspondence.

Right cells are the fibres of the P symbol, left cells the fibres of the Q
symbol, two-sided cells the fibres of the common shape.
"""
from __future__ import annotations

import enum
import logging
from collections import defaultdict
from collections.abc import Hashable

from .errors import GuardExceededError, SizeMismatchError
from .perm import Permutation, symmetric_group
from .tableau import rsk

logger = logging.getLogger(__name__)

MAX_PARTITION_N = 7

Cell = list[Permutation]


class CellKind(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    TWO_SIDED = "twosided"


def cell_symbol(kind: CellKind, w: Permutation) -> Hashable:
    """The invariant that defines the cell of ``w``: P, Q or the shape."""
    pair = rsk(w)
    if kind is CellKind.RIGHT:
        return pair.P
    if kind is CellKind.LEFT:
        return pair.Q
    return pair.shape


def render_symbol(kind: CellKind, symbol, offset: int = 1) -> str:
    if kind is CellKind.TWO_SIDED:
        return "(" + ",".join(str(part) for part in symbol) + ")"
    return symbol.slash(offset)


def same_cell(kind: CellKind | str, x: Permutation, y: Permutation) -> bool:
    """
    >>> same_cell("right", Permutation((3, 1, 4, 2)), Permutation((3, 4, 1, 2)))
    True
    """
    kind = CellKind(kind)
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    return cell_symbol(kind, x) == cell_symbol(kind, y)


def canonical_partition(blocks) -> list[Cell]:
    """Members by (length, word); blocks by their first member."""
    cells = [sorted(block, key=lambda w: w.sort_key) for block in blocks]
    cells.sort(key=lambda cell: cell[0].sort_key)
    return cells


def cell_partition(n: int, kind: CellKind | str = CellKind.RIGHT, max_n: int = MAX_PARTITION_N) -> list[Cell]:
    """Partition S_n into cells of the given kind, in canonical order."""
    kind = CellKind(kind)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise GuardExceededError("cell_partition_n", max_n, f"S_{n} is too large to partition")
    groups: dict[Hashable, Cell] = defaultdict(list)
    for w in symmetric_group(n):
        groups[cell_symbol(kind, w)].append(w)
    logger.debug("S_%d has %d %s cells", n, len(groups), kind.value)
    return canonical_partition(groups.values())


def keyed_partition(
    n: int, kind: CellKind | str = CellKind.RIGHT, max_n: int = MAX_PARTITION_N, offset: int = 1
) -> dict[str, Cell]:
    """The partition keyed by the rendered defining symbol."""
    kind = CellKind(kind)
    return {render_symbol(kind, cell_symbol(kind, cell[0]), offset): cell for cell in cell_partition(n, kind, max_n)}
