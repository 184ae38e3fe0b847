import itertools

import pytest

from cellembed.cells import CellKind, cell_partition, keyed_partition, same_cell
from cellembed.errors import GuardExceededError, SizeMismatchError
from cellembed.perm import Permutation, identity, inverse, parse
from cellembed.tableau import count_standard_tableaux, p_symbol, partitions


def test_same_cell_basics():
    w = Permutation((3, 1, 4, 2))
    for kind in CellKind:
        assert same_cell(kind, w, w)
    assert same_cell("right", parse("[895621a743cb]"), parse("[8956a2c471b3]"))
    with pytest.raises(SizeMismatchError):
        same_cell(CellKind.RIGHT, identity(2), identity(3))


def test_right_cell_of_3142_has_two_members():
    w = Permutation((3, 1, 4, 2))
    cell = next(cell for cell in cell_partition(4) if w in cell)
    assert cell == [Permutation((3, 1, 4, 2)), Permutation((3, 4, 1, 2))]


@pytest.mark.parametrize("n, cells", [(1, 1), (2, 2), (3, 4), (4, 10)])
def test_number_of_right_cells(n, cells):
    assert len(cell_partition(n, CellKind.RIGHT)) == cells


def test_partition_covers_the_group():
    for kind in CellKind:
        partition = cell_partition(5, kind)
        members = [w for cell in partition for w in cell]
        assert len(members) == len(set(members)) == 120


def test_right_cell_sizes_count_tableaux():
    for cell in cell_partition(5, CellKind.RIGHT):
        assert len(cell) == count_standard_tableaux(p_symbol(cell[0]).shape)
    assert len(cell_partition(5, CellKind.TWO_SIDED)) == len(partitions(5))


@pytest.mark.slow
def test_left_cells_are_inverse_right_cells(s5):
    for x, y in itertools.product(s5, repeat=2):
        assert same_cell(CellKind.LEFT, x, y) == same_cell(CellKind.RIGHT, inverse(x), inverse(y))
        if same_cell(CellKind.LEFT, x, y) or same_cell(CellKind.RIGHT, x, y):
            assert same_cell(CellKind.TWO_SIDED, x, y)


def test_canonical_order():
    partition = cell_partition(3)
    assert partition[0] == [identity(3)]
    for cell in partition:
        assert cell == sorted(cell, key=lambda w: w.sort_key)


def test_keyed_partition():
    keyed = keyed_partition(4)
    assert keyed["(12/34)"] == [Permutation((3, 1, 4, 2)), Permutation((3, 4, 1, 2))]
    assert set(keyed_partition(3, "twosided")) == {"(3)", "(2,1)", "(1,1,1)"}
    assert "(01/23)" in keyed_partition(4, offset=0)


def test_partition_guard():
    with pytest.raises(GuardExceededError):
        cell_partition(8)
    with pytest.raises(ValueError):
        cell_partition(0)
