import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arc_objects import (
    DoubleEncodingError,
    GridShapeError,
    MalformedJson,
    SchemaError,
    Trace,
    TraceStep,
    UnknownAction,
    parse_o2arc,
    serialize_trace,
    transpose,
)
from arc_objects.o2arc import ActionRecord, SelectedCell


def make_doc(steps, **outer_overrides):
    outer = {
        "id": 1,
        "task_id": "t",
        "user_id": "u",
        "action_sequence": json.dumps({"action_sequence": steps}),
    }
    outer.update(outer_overrides)
    return json.dumps(outer)


ZERO = [[0] * 5 for _ in range(5)]


def step(tool, grid=None, **kw):
    return {"action": {"tool": tool}, "grid": grid if grid is not None else ZERO, **kw}


# ---- the recorded sample -----------------------------------------------------

def test_wild_sample_parses(wild_trace_bytes):
    t = parse_o2arc(wild_trace_bytes)
    assert t.id == 1779
    assert t.task_id == "Reflection_l6ab2g1dkofxrxht5h"
    assert t.user_id == "le3k5gb6biqmr9u1nww_ds"
    assert [s.action.tool for s in t.steps] == ["start", "copyFromInput", "reflectx"]
    assert t.steps[0].submit == 0 and t.steps[0].time == 8
    assert t.steps[2].submit == 1 and t.steps[2].time == 3811


def test_wild_sample_grids_are_normalized(wild_trace_bytes):
    t = parse_o2arc(wild_trace_bytes)
    for s in t.steps:
        for row in s.grid:
            assert all(type(v) is int for v in row)
    # the copy step's grid holds the task input; reflectx mirrors rows 0-1 to 3-4
    copied = t.steps[1].grid
    assert copied[0] == (2, 0, 2, 0, 2) and copied[1] == (0, 2, 0, 2, 0)
    flipped = t.steps[2].grid
    assert flipped[3] == (0, 2, 0, 2, 0) and flipped[4] == (2, 0, 2, 0, 2)
    assert flipped == tuple(reversed(copied))


def test_wild_sample_selected_cells(wild_trace_bytes):
    t = parse_o2arc(wild_trace_bytes)
    cells = t.steps[2].action.selected_cells
    assert len(cells) == 25
    assert all(isinstance(c, SelectedCell) for c in cells)
    assert all(type(c.row) is int and type(c.col) is int and type(c.val) is int for c in cells)
    assert sum(c.val == 2 for c in cells) == 5
    assert t.steps[0].action.selected_cells is None


def test_wild_sample_survives_replay_identity(wild_trace_bytes):
    # reflectx on the copied grid reproduces the recorded third grid
    from arc_objects import apply_action

    t = parse_o2arc(wild_trace_bytes)
    assert apply_action(t.steps[1].grid, "reflectx") == t.steps[2].grid


# ---- round trip ---------------------------------------------------------------

def test_round_trip_wild(wild_trace_bytes):
    t = parse_o2arc(wild_trace_bytes)
    assert parse_o2arc(serialize_trace(t)) == t


def test_round_trip_synthesized():
    t = Trace(
        7,
        "task",
        "user",
        (
            TraceStep(ActionRecord("start"), transpose(((1, 2), (3, 4)))),
            TraceStep(
                ActionRecord("coloring", (SelectedCell(0, 0, 1, True),)),
                ((5, 2), (3, 4)),
                submit=1,
                time=12,
            ),
        ),
    )
    assert parse_o2arc(serialize_trace(t)) == t


def test_serialize_one_step_trace_mentions_start():
    t = Trace(0, "a", "b", (TraceStep(ActionRecord("start"), ((0,),)),))
    doc = serialize_trace(t).decode()
    # the step list lives in the embedded JSON string, so quotes are escaped
    assert '\\"tool\\":\\"start\\"' in doc


# ---- error taxonomy -----------------------------------------------------------

def test_not_json():
    with pytest.raises(MalformedJson):
        parse_o2arc("{nope")
    with pytest.raises(MalformedJson):
        parse_o2arc(b"\xff\xfe\x00")


def test_double_encoding_errors():
    doc = json.dumps({"id": 1, "task_id": "t", "user_id": "u", "action_sequence": "{broken"})
    with pytest.raises(DoubleEncodingError):
        parse_o2arc(doc)
    # a nested object instead of a string is a schema problem, not double encoding
    doc = json.dumps({"id": 1, "task_id": "t", "user_id": "u", "action_sequence": {"action_sequence": []}})
    with pytest.raises(SchemaError):
        parse_o2arc(doc)


def test_missing_fields():
    with pytest.raises(SchemaError):
        parse_o2arc(json.dumps({"id": 1}))
    with pytest.raises(SchemaError):
        parse_o2arc(json.dumps([1, 2]))
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([]))  # empty steps


def test_first_step_must_be_start():
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([step("rotate")]))


def test_grid_dim_change_rejected():
    doc = make_doc([step("start"), step("rotate", grid=[[0] * 4 for _ in range(5)])])
    with pytest.raises(GridShapeError):
        parse_o2arc(doc)


def test_bad_cells_and_flags():
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([step("start", grid=[["x"] * 5] * 5)]))
    with pytest.raises(GridShapeError):
        parse_o2arc(make_doc([step("start", grid="nope")]))
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([step("start", submit=2)]))
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([step("start", time=-1)]))
    bad = step("start")
    bad["action"]["selected_cells"] = [{"row": 0, "col": 0, "val": 0, "selected": "yes"}]
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([bad]))
    bad = step("start")
    bad["action"]["selected_cells"] = [{"row": 9, "col": 0, "val": 0, "selected": True}]
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([bad]))


def test_unknown_tool_parses_but_does_not_resolve():
    t = parse_o2arc(make_doc([step("start"), step("hyperwarp")]))
    assert t.steps[1].action.tool == "hyperwarp"
    with pytest.raises(UnknownAction):
        t.steps[1].action.to_action_kind()


def test_layer_bookkeeping_validated_and_dropped():
    ok = step("start", currentLayer=0, layer_list=[ZERO])
    t = parse_o2arc(make_doc([ok]))
    assert not hasattr(t.steps[0], "layer_list")
    bad = step("start", layer_list="nope")
    with pytest.raises(SchemaError):
        parse_o2arc(make_doc([bad]))


# ---- fuzzing: typed errors only ------------------------------------------------

@given(st.binary(max_size=400))
def test_fuzz_binary_never_crashes(data):
    try:
        parse_o2arc(data)
    except (MalformedJson, SchemaError, DoubleEncodingError, GridShapeError):
        pass


@given(st.recursive(
    st.none() | st.booleans() | st.integers() | st.floats(allow_nan=False) | st.text(max_size=8),
    lambda children: st.lists(children, max_size=4)
    | st.dictionaries(st.text(max_size=8), children, max_size=4),
    max_leaves=12,
))
def test_fuzz_json_shapes_never_crash(obj):
    try:
        parse_o2arc(json.dumps(obj))
    except (MalformedJson, SchemaError, DoubleEncodingError, GridShapeError):
        pass
