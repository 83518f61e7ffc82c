"""States, moves, legality rules, and the mirror transform."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hanoilab.model import (
    IllegalMoveError,
    MalformedStateError,
    Model,
    Move,
    MoveGraph,
    State,
    apply,
    apply_all,
    can_place,
    is_legal_state,
    legal_moves,
    mirror_move,
    mirror_sequence,
    mirror_state,
    remove_disc,
    stack_is_legal,
    standard_state,
    third_peg,
)
from strategies import legal_states

CLASSICAL = Model.classical()
CYCLE = MoveGraph.parse("1>2,2>3,3>1")


def test_standard_state():
    assert standard_state(3, 1).stacks == ((3, 2, 1), (), ())
    assert standard_state(0, 2).stacks == ((), (), ())
    assert standard_state(8, 1).stack(1) == tuple(range(8, 0, -1))


def test_standard_state_rejects_bad_args():
    with pytest.raises(ValueError):
        standard_state(-1, 1)
    with pytest.raises(ValueError):
        standard_state(3, 4)


def test_stack_legality_under_distance():
    assert stack_is_legal((3, 4), 1)  # one size larger may sit on top
    assert not stack_is_legal((2, 4), 1)
    assert stack_is_legal((5, 4, 3, 2, 1), 0)
    # pairwise, not adjacent-only: 4 is within 1 of 3 but not of 2
    assert not stack_is_legal((3, 4, 2, 1, 5), 1)
    assert stack_is_legal((3, 4, 2, 1), 1)


def test_is_legal_state():
    assert is_legal_state(Model.relaxed(1), State(((3, 4), (2, 1), ())))
    assert not is_legal_state(CLASSICAL, State(((3, 4), (2, 1), ())))
    assert is_legal_state(CLASSICAL, standard_state(5, 2))


def test_malformed_state_is_an_error_not_false():
    with pytest.raises(MalformedStateError):
        is_legal_state(CLASSICAL, State(((1, 1), (), ())))
    with pytest.raises(MalformedStateError):
        is_legal_state(CLASSICAL, State(((3, 1), (), ())))  # disc 2 missing


def test_legal_moves_classical():
    assert legal_moves(CLASSICAL, standard_state(2, 1)) == [Move(1, 2), Move(1, 3)]


def test_legal_moves_cycle_digraph():
    # single outgoing edge from peg 1; enumeration cross-check
    model = Model.digraph(CYCLE)
    state = standard_state(2, 1)
    assert legal_moves(model, state) == [Move(1, 2)]
    brute = [
        Move(i, j)
        for i in (1, 2, 3)
        for j in (1, 2, 3)
        if i != j
        and CYCLE.has_edge(i, j)
        and state.stack(i)
        and can_place(state.stack(i)[-1], state.stack(j), 0)
    ]
    assert brute == [Move(1, 2)]


def test_legal_moves_distance_one():
    state = State(((2,), (1,), ()))
    moves = legal_moves(Model.relaxed(1), state)
    assert Move(1, 2) in moves  # disc 2 onto disc 1, distance exactly 1


def test_apply_moves_top_disc():
    after = apply(CLASSICAL, standard_state(3, 1), Move(1, 2))
    assert after.stacks == ((3, 2), (1,), ())


def test_apply_empty_source():
    with pytest.raises(IllegalMoveError) as err:
        apply(CLASSICAL, standard_state(3, 1), Move(2, 1))
    assert err.value.reason == "empty-source"


def test_apply_missing_edge():
    with pytest.raises(IllegalMoveError) as err:
        apply(Model.digraph(CYCLE), standard_state(1, 2), Move(2, 1))
    assert err.value.reason == "missing-edge"


def test_apply_distance_violation():
    with pytest.raises(IllegalMoveError) as err:
        apply(CLASSICAL, State(((1,), (2,), ())), Move(2, 1))
    assert err.value.reason == "distance-violation"


def test_apply_distance_one_placement():
    # disc exactly one size larger may land on the stack
    after = apply(Model.relaxed(1), State(((3,), (4,), ())), Move(2, 1))
    assert after.stacks == ((3, 4), (), ())


def test_apply_is_pure():
    state = standard_state(3, 1)
    apply(CLASSICAL, state, Move(1, 2))
    assert state == standard_state(3, 1)


def test_apply_all():
    assert apply_all(CLASSICAL, standard_state(1, 1), [Move(1, 2)]) == standard_state(
        1, 2
    )


def test_apply_all_reports_first_bad_index():
    with pytest.raises(IllegalMoveError) as err:
        apply_all(CLASSICAL, standard_state(2, 1), [Move(1, 2), Move(1, 2)])
    assert err.value.index == 2
    assert err.value.reason == "distance-violation"


# the symmetric 9-move transfer of 4 discs at distance 1, src=1 tgt=2
SYMMETRIC_4 = [
    Move(1, 2),
    Move(1, 3),
    Move(1, 3),
    Move(2, 3),
    Move(1, 2),
    Move(3, 1),
    Move(3, 2),
    Move(3, 2),
    Move(1, 2),
]


def test_apply_all_nine_move_transfer():
    final = apply_all(Model.relaxed(1), standard_state(4, 1), SYMMETRIC_4)
    assert final == standard_state(4, 2)


def test_mirror_state_swaps_stacks():
    for n in range(5):
        assert mirror_state(standard_state(n, 1), 1, 2) == standard_state(n, 2)
    state = State(((2,), (1,), (3,)))
    assert mirror_state(state, 1, 2).stacks == ((1,), (2,), (3,))
    # all discs on the aux peg: fixed point
    aux_only = State(((), (), (3, 2, 1)))
    assert mirror_state(aux_only, 1, 2) == aux_only


def test_mirror_move_cases():
    # src=1, tgt=2, aux=3
    assert mirror_move(Move(3, 2), 1, 2) == Move(1, 3)  # aux>tgt -> src>aux
    assert mirror_move(Move(1, 2), 1, 2) == Move(1, 2)  # src>tgt -> src>tgt
    assert mirror_move(Move(3, 1), 1, 2) == Move(2, 3)  # aux>src -> tgt>aux
    assert mirror_move(Move(2, 1), 1, 2) == Move(2, 1)  # tgt>src -> tgt>src


def test_mirror_requires_distinct_pegs():
    with pytest.raises(ValueError):
        mirror_move(Move(1, 2), 2, 2)
    with pytest.raises(ValueError):
        mirror_state(standard_state(1, 1), 3, 3)


def test_move_graph_parse_roundtrip():
    graph = MoveGraph.parse(" 1>2, 2>3 ,3>1,1>3 ")
    assert graph.format() == "1>2,1>3,2>3,3>1"


@pytest.mark.parametrize("text", ["", "1>1", "1>2,1>2", "4>1", "1-2", "1>2>3"])
def test_move_graph_parse_rejects(text):
    with pytest.raises(ValueError):
        MoveGraph.parse(text)


def test_strong_connectivity():
    assert CYCLE.is_strongly_connected()
    assert MoveGraph.complete().is_strongly_connected()
    assert not MoveGraph.parse("1>2,2>1").is_strongly_connected()
    assert not MoveGraph.parse("1>2,2>3,1>3").is_strongly_connected()


def test_model_validation():
    with pytest.raises(ValueError):
        Model(MoveGraph.complete(), -1)


def test_remove_disc():
    assert remove_disc(standard_state(3, 1), 3).stacks == ((2, 1), (), ())
    with pytest.raises(ValueError):
        remove_disc(standard_state(1, 1), 5)


# ---------------------------------------------------------------------------
# properties


@given(legal_states())
def test_generated_states_are_legal(pair):
    model, state = pair
    assert is_legal_state(model, state)


@given(legal_states())
def test_disc_conservation(pair):
    model, state = pair
    before = sorted(d for s in state.stacks for d in s)
    for move in legal_moves(model, state):
        after = apply(model, state, move)
        assert sorted(d for s in after.stacks for d in s) == before


@given(legal_states())
def test_apply_succeeds_exactly_on_legal_moves(pair):
    model, state = pair
    allowed = set(legal_moves(model, state))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            move = Move(i, j)
            if move in allowed:
                assert is_legal_state(model, apply(model, state, move))
            else:
                with pytest.raises(IllegalMoveError):
                    apply(model, state, move)


@given(legal_states())
def test_distance_monotonicity(pair):
    model, state = pair
    looser = Model(model.graph, model.distance + 1)
    assert is_legal_state(looser, state)


@given(legal_states(distances=(0,)))
def test_classical_stacks_strictly_decrease(pair):
    _, state = pair
    for stack in state.stacks:
        assert all(a > b for a, b in zip(stack, stack[1:]))


@given(legal_states(), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_mirror_state_is_an_involution(pair, pegs):
    _, state = pair
    src, tgt = pegs
    assert mirror_state(mirror_state(state, src, tgt), src, tgt) == state


@given(legal_states(), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_mirror_commutation(pair, pegs):
    """A mirrored move undoes the mirrored image of the original move:
    apply(mirror(apply(s, mv)), mirror(mv)) == mirror(s)."""
    model, state = pair
    src, tgt = pegs
    for move in legal_moves(model, state):
        stepped = apply(model, state, move)
        back = apply(model, mirror_state(stepped, src, tgt), mirror_move(move, src, tgt))
        assert back == mirror_state(state, src, tgt)


@given(legal_states(), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_mirror_sequence_is_an_involution(pair, pegs):
    model, state = pair
    src, tgt = pegs
    seq = legal_moves(model, state)
    assert mirror_sequence(mirror_sequence(seq, src, tgt), src, tgt) == list(seq)
