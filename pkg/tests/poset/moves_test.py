import pytest

from lrpoles._combinatorics import Column, PoleDecomposition, ShapeMismatch, validate_lr
from lrpoles._engine import InvalidContext, certify_move
from lrpoles._poset import (BoxMove, box_move_context, box_move_successors, box_move_witnesses,
                            dominance_leq_tableaux, is_increasing_box_move)


def _witness(g, h, data):
    return next(w for w in box_move_witnesses(g, h) if w.data == data)


# ---------------------------------------------------------------------------
# Box moves
# ---------------------------------------------------------------------------

def test_move_exchanges_two_columns(intro):
    move = _witness(intro["G2"], intro["G3a"], (3, 2, 1, 1, 2, 2))
    assert move.source_cols == (Column(3, 1, 1), Column(2, 2, 2))
    assert move.target_cols == (Column(3, 2, 2), Column(2, 1, 1))
    assert move.to_dict()["source_cols"] == ["C(1,1)_3", "C(2,2)_2"]


def test_box_edges_of_the_five_tableaux(intro):
    want = {("G1", "G2"), ("G1", "G4"), ("G2", "G3a"), ("G2", "G3b"), ("G3a", "G4"), ("G3b", "G4")}
    found = {(a, b) for a in intro for b in intro
             if a != b and is_increasing_box_move(intro[a], intro[b]) is not None}
    assert found == want


def test_move_between_three_column_tableaux():
    g = validate_lr([(3, 2), (4, 2, 1), (5, 2, 2), (5, 3, 2), (5, 4, 2)])
    h = validate_lr([(3, 2), (3, 3, 1), (4, 3, 2), (4, 4, 2), (5, 4, 2)])
    assert is_increasing_box_move(g, h) is not None
    assert is_increasing_box_move(h, g) is None
    move = _witness(g, h, (5, 4, 1, 2, 3, 4))
    assert move.source_cols == (Column(5, 1, 2), Column(4, 3, 4))
    assert move.common == (Column(2, 1, 2),)
    assert dominance_leq_tableaux(g, h)


def test_no_move_to_itself(intro):
    assert is_increasing_box_move(intro["G2"], intro["G2"]) is None


def test_successors(intro):
    moves = box_move_successors(intro["G2"], intro.values())
    assert sorted(m.target.reading_word() for m in moves) == sorted(
        [intro["G3a"].reading_word(), intro["G3b"].reading_word()])
    assert all(isinstance(m, BoxMove) for m in moves)


def test_moves_need_one_shape(intro):
    other = validate_lr([(1,), (2,)])
    with pytest.raises(ShapeMismatch):
        is_increasing_box_move(intro["G2"], other)
    with pytest.raises(ShapeMismatch):
        dominance_leq_tableaux(other, intro["G2"])


# ---------------------------------------------------------------------------
# Dominance
# ---------------------------------------------------------------------------

def test_dominance(intro):
    assert dominance_leq_tableaux(intro["G1"], intro["G2"])
    assert not dominance_leq_tableaux(intro["G2"], intro["G1"])
    assert dominance_leq_tableaux(intro["G1"], intro["G4"])
    assert dominance_leq_tableaux(intro["G3a"], intro["G3a"])


def test_middle_pair_is_incomparable(intro):
    assert not dominance_leq_tableaux(intro["G3a"], intro["G3b"])
    assert not dominance_leq_tableaux(intro["G3b"], intro["G3a"])


# ---------------------------------------------------------------------------
# Pole contexts
# ---------------------------------------------------------------------------

def test_context_of_a_move(intro):
    move = _witness(intro["G2"], intro["G3a"], (3, 2, 1, 1, 2, 2))
    ctx = box_move_context(move)
    assert ctx.data == move.data
    assert (ctx.pole, ctx.pole_prime) == ((2, 4), (0, 1, 3))
    assert (ctx.pole_tilde, ctx.pole_tilde_prime) == ((1, 4), (0, 2, 3))
    assert ctx.common == PoleDecomposition(())


def test_context_certifies(intro):
    move = _witness(intro["G2"], intro["G3a"], (3, 2, 1, 1, 2, 2))
    cert = certify_move(box_move_context(move), 3)
    assert cert.family[0] == intro["G3a"]


def test_context_needs_a_decomposition(intro):
    move = _witness(intro["G2"], intro["G3a"], (3, 2, 1, 1, 2, 2))
    bogus = BoxMove(move.target, move.source, *move.data)
    with pytest.raises(InvalidContext, match="no simultaneous pole decomposition"):
        box_move_context(bogus)
