import pytest
from hypothesis import given
from hypothesis import strategies as st

from arc_objects import (
    BY_ID,
    BY_NAME,
    DELIMITERS,
    GridShapeError,
    MissingArgument,
    MoveCollision,
    MoveOffGrid,
    OutOfBounds,
    UnknownAction,
    apply_action,
    freeze,
    reflectx,
    reflecty,
    resolve,
    rotate_ccw,
    rotate_cw,
)

G = freeze(
    [
        [1, 0, 0, 0, 0],
        [0, 2, 2, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 3],
    ]
)


def test_catalogue_shape():
    assert len(BY_ID) == 14
    assert sorted(BY_ID) == list(range(14))
    assert BY_ID[0].name == "start" and BY_ID[13].name == "end"
    assert BY_ID[12].name == "submit"
    assert set(DELIMITERS) == {"start", "end", "submit"}
    for a in BY_NAME.values():
        assert resolve(a.id) is a
        assert resolve(a.name) is a


def test_resolve_alias_and_errors():
    assert resolve("rotate").name == "rotate_cw"
    with pytest.raises(UnknownAction):
        resolve("warp")
    with pytest.raises(UnknownAction):
        resolve(14)
    with pytest.raises(UnknownAction):
        resolve(True)
    with pytest.raises(UnknownAction):
        resolve(None)


def test_delimiters_are_identity():
    for name in DELIMITERS:
        assert apply_action(G, name) == G


def test_geometry_ops_delegate():
    assert apply_action(G, "rotate_cw") == rotate_cw(G)
    assert apply_action(G, "rotate") == rotate_cw(G)
    assert apply_action(G, "rotate_ccw") == rotate_ccw(G)
    assert apply_action(G, "reflectx") == reflectx(G)
    assert apply_action(G, "reflecty") == reflecty(G)


def test_copy_from_input():
    src = freeze([[9] * 5] * 5)
    assert apply_action(G, "copyFromInput", source=src) == src
    with pytest.raises(MissingArgument):
        apply_action(G, "copyFromInput")


def test_edit():
    out = apply_action(G, "edit", selection={(2, 2)}, color=7)
    assert out[2][2] == 7
    assert G[2][2] == 0  # input untouched
    with pytest.raises(MissingArgument):
        apply_action(G, "edit", selection={(0, 0), (1, 1)}, color=7)
    with pytest.raises(MissingArgument):
        apply_action(G, "edit", selection={(0, 0)})
    with pytest.raises(GridShapeError):
        apply_action(G, "edit", selection={(0, 0)}, color=11)
    with pytest.raises(GridShapeError):
        apply_action(G, "edit", selection={(0, 0)}, color=True)


def test_coloring():
    out = apply_action(G, "coloring", selection={(0, 0), (4, 4)}, color=5)
    assert out[0][0] == 5 and out[4][4] == 5
    assert out[1][1] == 2


def test_move_semantics():
    out = apply_action(G, "move_down", selection={(0, 0)})
    assert out[0][0] == 0 and out[1][0] == 1
    # a block moves as one: internal overlaps are fine
    out = apply_action(G, "move_right", selection={(1, 1), (1, 2)})
    assert out[1][1] == 0 and out[1][2] == 2 and out[1][3] == 2


def test_move_collision_and_off_grid():
    with pytest.raises(MoveCollision):
        apply_action(freeze([[1, 0], [2, 0]]), "move_down", selection={(0, 0)})
    # even an empty selected cell may not overwrite a stationary colored one
    with pytest.raises(MoveCollision):
        apply_action(G, "move_right", selection={(1, 0)})
    with pytest.raises(MoveOffGrid):
        apply_action(G, "move_up", selection={(0, 0)})
    with pytest.raises(MoveOffGrid):
        apply_action(G, "move_right", selection={(4, 4)})


def test_selection_validation():
    with pytest.raises(OutOfBounds):
        apply_action(G, "coloring", selection={(9, 9)}, color=1)
    with pytest.raises(OutOfBounds):
        apply_action(G, "coloring", selection={"x"}, color=1)


def test_strict_arity():
    with pytest.raises(MissingArgument):
        apply_action(G, "move_up")  # missing selection
    with pytest.raises(MissingArgument):
        apply_action(G, "rotate_cw", selection={(0, 0)})  # surplus selection
    with pytest.raises(MissingArgument):
        apply_action(G, "rotate_cw", color=3)  # surplus color
    with pytest.raises(MissingArgument):
        apply_action(G, "coloring", selection={(0, 0)})  # missing color
    with pytest.raises(MissingArgument):
        apply_action(G, "start", selection={(0, 0)})


single_object_grids = st.tuples(
    st.integers(1, 3), st.integers(1, 3), st.integers(1, 9)
).map(
    lambda t: freeze(
        [
            [t[2] if (r, c) in {(t[0], t[1]), (t[0], t[1] - 1)} else 0 for c in range(5)]
            for r in range(5)
        ]
    )
)


@given(single_object_grids)
def test_move_then_inverse_restores(g):
    sel = frozenset((r, c) for r in range(5) for c in range(5) if g[r][c] != 0)
    moved = apply_action(g, "move_down", selection=sel)
    back = apply_action(moved, "move_up", selection=frozenset((r + 1, c) for r, c in sel))
    assert back == g


@given(single_object_grids, st.sampled_from(["move_up", "move_down", "move_left", "move_right"]))
def test_move_preserves_nonblack_count(g, name):
    sel = frozenset((r, c) for r in range(5) for c in range(5) if g[r][c] != 0)
    try:
        out = apply_action(g, name, selection=sel)
    except MoveOffGrid:
        return
    assert sum(v != 0 for row in out for v in row) == sum(v != 0 for row in g for v in row)
