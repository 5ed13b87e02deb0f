import itertools
import random

import pytest

from quoridor_hardness.board import ParseError
from quoridor_hardness.formula import (
    I_WINS,
    I_WINS_ALREADY,
    II_WINS,
    II_WINS_ALREADY,
    PLAYER_I,
    PLAYER_II,
    SCHAEFER_EXAMPLE,
    UNDECIDED,
    Formula,
    FormulaState,
    NegativeLiteralError,
    best_line_variable,
    endphase_winner,
    gpos_solve,
    is_decided,
    make_formula,
    parse_formula,
    serialize_formula,
)

EX = SCHAEFER_EXAMPLE  # x AND (y OR z) AND (y OR w)


# --- parsing ---------------------------------------------------------------

def test_parse_example():
    f = parse_formula("p pcnf 4 3\n1 0\n2 3 0\n2 4 0\n")
    assert f == EX
    assert f.v == 4 and f.c == 3


def test_negative_literal_rejected():
    with pytest.raises(NegativeLiteralError):
        parse_formula("p pcnf 2 1\n-2 0\n")


def test_single_variable_single_clause():
    f = parse_formula("p pcnf 1 1\n1 0\n")
    assert f.v == 1 and f.clauses == (frozenset({1}),)


def test_comments_and_duplicates():
    f = parse_formula("c a comment\np pcnf 3 1\n2 2 3 0\n")
    assert f.clauses == (frozenset({2, 3}),)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_formula("1 0\n")
    with pytest.raises(ParseError):
        parse_formula("p pcnf 2 2\n1 0\n")
    with pytest.raises(ParseError):
        parse_formula("p pcnf 2 1\n1 2\n")
    with pytest.raises(ParseError):
        parse_formula("p pcnf 2 1\n3 0\n")


def test_serialize_roundtrip():
    assert parse_formula(serialize_formula(EX)) == EX


# --- is_decided ------------------------------------------------------------

def test_is_decided_cases():
    assert is_decided(FormulaState(EX, chosen_false=frozenset({1}))) == II_WINS_ALREADY
    assert is_decided(FormulaState(EX, chosen_true=frozenset({1, 2}))) == I_WINS_ALREADY
    assert is_decided(FormulaState(EX, chosen_true=frozenset({1}))) == UNDECIDED


# --- endphase --------------------------------------------------------------

def test_endphase_cases():
    assert endphase_winner(EX, {2, 1}) == I_WINS
    assert endphase_winner(EX, {1, 3}) == II_WINS  # (y or w) all false
    assert endphase_winner(EX, set()) == II_WINS


def test_endphase_monotone():
    rng = random.Random(5)
    for _ in range(200):
        v = rng.randint(1, 6)
        c = rng.randint(1, 4)
        clauses = [frozenset(rng.sample(range(1, v + 1), rng.randint(1, v))) for _ in range(c)]
        f = make_formula(v, clauses)
        base = set(rng.sample(range(1, v + 1), rng.randint(0, v)))
        extra = rng.randint(1, v)
        if endphase_winner(f, base) == I_WINS:
            assert endphase_winner(f, base | {extra}) == I_WINS


# --- gpos_solve ------------------------------------------------------------

def test_schaefer_example_second_player_wins():
    assert gpos_solve(EX, PLAYER_I) == II_WINS


def test_single_clause_first_player_wins():
    assert gpos_solve(make_formula(1, [{1}]), PLAYER_I) == I_WINS


def test_two_conjuncts_second_player_wins():
    assert gpos_solve(make_formula(2, [{1}, {2}]), PLAYER_I) == II_WINS


def test_early_stop_equivalence_random():
    rng = random.Random(17)
    for _ in range(300):
        v = rng.randint(1, 6)
        c = rng.randint(1, 4)
        clauses = [frozenset(rng.sample(range(1, v + 1), rng.randint(1, v))) for _ in range(c)]
        f = make_formula(v, clauses)
        for first in (PLAYER_I, PLAYER_II):
            assert gpos_solve(f, first, early_stop=True) == gpos_solve(f, first, early_stop=False)


def _all_formulas(max_v, max_c):
    for v in range(1, max_v + 1):
        subsets = []
        for size in range(1, v + 1):
            subsets.extend(frozenset(s) for s in itertools.combinations(range(1, v + 1), size))
        for c in range(1, max_c + 1):
            for combo in itertools.combinations(subsets, c):
                yield make_formula(v, combo)


def test_formulation_equivalence_small_exhaustive():
    # Exhaustive check at a size small enough for an ordinary test run; the
    # acceptance suite runs the full v<=5, c<=4 sweep.
    for f in _all_formulas(3, 3):
        direct = gpos_solve(f, PLAYER_I)
        via_endphase = _solve_via_full_play(f, PLAYER_I)
        assert direct == via_endphase


def _solve_via_full_play(f, first):
    """Alternation played to completion, scored by the endphase formulation."""
    from functools import lru_cache

    all_vars = frozenset(range(1, f.v + 1))

    @lru_cache(maxsize=None)
    def value(true_set, false_set, player_i):
        free = all_vars - true_set - false_set
        if not free:
            return endphase_winner(f, true_set) == I_WINS
        if player_i:
            return any(value(true_set | {x}, false_set, False) for x in free)
        return all(value(true_set, false_set | {x}, True) for x in free)

    return I_WINS if value(frozenset(), frozenset(), first == PLAYER_I) else II_WINS


def test_invariance_under_clause_reorder_and_renaming():
    rng = random.Random(23)
    for _ in range(100):
        v = rng.randint(2, 6)
        c = rng.randint(1, 4)
        clauses = [frozenset(rng.sample(range(1, v + 1), rng.randint(1, v))) for _ in range(c)]
        f = make_formula(v, clauses)
        val = gpos_solve(f, PLAYER_I)

        shuffled = list(clauses)
        rng.shuffle(shuffled)
        assert gpos_solve(make_formula(v, shuffled), PLAYER_I) == val

        perm = list(range(1, v + 1))
        rng.shuffle(perm)
        mapping = {old: new for old, new in zip(range(1, v + 1), perm)}
        renamed = [frozenset(mapping[x] for x in cl) for cl in clauses]
        assert gpos_solve(make_formula(v, renamed), PLAYER_I) == val


def test_best_line_variable_deterministic():
    x = best_line_variable(EX, PLAYER_I)
    assert x == best_line_variable(EX, PLAYER_I)
    assert 1 <= x <= EX.v
