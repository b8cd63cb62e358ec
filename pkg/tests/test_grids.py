import pytest
from hypothesis import given
from hypothesis import strategies as st

from arc_objects import (
    GridShapeError,
    dims,
    freeze,
    nonblack_cells,
    reflectx,
    reflecty,
    rotate_ccw,
    rotate_cw,
    thaw,
    transpose,
)
from oracles import (
    reflectx_oracle,
    reflecty_oracle,
    rotate_ccw_oracle,
    rotate_cw_oracle,
    transpose_oracle,
)

grids = st.integers(1, 6).flatmap(
    lambda rows: st.integers(1, 6).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(0, 9), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
).map(freeze)


def test_freeze_basics():
    g = freeze([[1, 2], [3, 4]])
    assert g == ((1, 2), (3, 4))
    assert dims(g) == (2, 2)
    assert thaw(g) == [[1, 2], [3, 4]]
    assert nonblack_cells(freeze([[0, 5], [0, 0]])) == frozenset({(0, 1)})


@pytest.mark.parametrize(
    "cells",
    [
        [],
        [[]],
        [[1, 2], [3]],
        [[10]],
        [[-1]],
        [[1.0]],
        [[True]],
        [["2"]],
        "nope",
        [[1], "nope"],
    ],
)
def test_freeze_rejects(cells):
    with pytest.raises(GridShapeError):
        freeze(cells)


@given(grids)
def test_ops_match_index_oracles(g):
    assert transpose(g) == transpose_oracle(g)
    assert rotate_cw(g) == rotate_cw_oracle(g)
    assert rotate_ccw(g) == rotate_ccw_oracle(g)
    assert reflectx(g) == reflectx_oracle(g)
    assert reflecty(g) == reflecty_oracle(g)


@given(grids)
def test_involutions_and_inverses(g):
    assert reflectx(reflectx(g)) == g
    assert reflecty(reflecty(g)) == g
    assert transpose(transpose(g)) == g
    assert rotate_ccw(rotate_cw(g)) == g
    assert rotate_cw(rotate_ccw(g)) == g


@given(grids)
def test_dihedral_identities(g):
    # the two factorizations of the transpose used by the flip-task traces
    assert rotate_cw(reflectx(g)) == transpose(g)
    assert reflecty(rotate_cw(g)) == transpose(g)
    # full turn
    assert rotate_cw(rotate_cw(rotate_cw(rotate_cw(g)))) == g
    # half turn two ways
    assert rotate_cw(rotate_cw(g)) == reflectx(reflecty(g))


@given(grids)
def test_ops_preserve_cell_multiset(g):
    flat = sorted(v for row in g for v in row)
    for op in (transpose, rotate_cw, rotate_ccw, reflectx, reflecty):
        assert sorted(v for row in op(g) for v in row) == flat
