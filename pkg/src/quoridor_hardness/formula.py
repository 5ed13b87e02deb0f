"""Positive-CNF formulas and exact solving of the variable-claiming game.

Two players alternately claim unchosen variables.  Claims by Player I make
a variable true, claims by Player II make it false; I wins iff every clause
ends up containing a true variable.  An equivalent endgame formulation is
also provided: with the true set fixed, II picks one clause and I picks a
literal inside it, I winning iff that literal is true.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .board import ParseError, QuoridorError

PLAYER_I = "I"
PLAYER_II = "II"

I_WINS = "IWins"
II_WINS = "IIWins"

I_WINS_ALREADY = "IWinsAlready"
II_WINS_ALREADY = "IIWinsAlready"
UNDECIDED = "Undecided"


class NegativeLiteralError(QuoridorError):
    """A clause mentioned a negated variable; only positive CNF is supported."""


@dataclass(frozen=True)
class Formula:
    """Positive CNF: clauses are non-empty sets of 1-based variable indices."""

    v: int
    clauses: tuple[frozenset[int], ...]

    @property
    def c(self) -> int:
        return len(self.clauses)

    def __post_init__(self):
        if self.v < 0:
            raise ValueError(f"negative variable count {self.v}")
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause")
            for lit in cl:
                if not (1 <= lit <= self.v):
                    raise ValueError(f"variable {lit} outside 1..{self.v}")

    def memberships(self) -> list[tuple[int, int]]:
        """All (clause_index, variable) pairs, 1-based clause indices."""
        return [(i + 1, x) for i, cl in enumerate(self.clauses) for x in sorted(cl)]


def make_formula(v: int, clauses) -> Formula:
    return Formula(v=v, clauses=tuple(frozenset(cl) for cl in clauses))


# The worked example used throughout the tests: x AND (y OR z) AND (y OR w).
SCHAEFER_EXAMPLE = make_formula(4, [{1}, {2, 3}, {2, 4}])


@dataclass(frozen=True)
class FormulaState:
    formula: Formula
    chosen_true: frozenset[int] = frozenset()
    chosen_false: frozenset[int] = frozenset()
    to_move: str = PLAYER_I

    def __post_init__(self):
        if self.chosen_true & self.chosen_false:
            raise ValueError("chosen sets must be disjoint")
        for x in self.chosen_true | self.chosen_false:
            if not (1 <= x <= self.formula.v):
                raise ValueError(f"chosen variable {x} outside 1..{self.formula.v}")


def parse_formula(text: str) -> Formula:
    """Parse .pcnf text: 'p pcnf <v> <c>' then c zero-terminated clause lines."""
    v = c = None
    clauses: list[frozenset[int]] = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "pcnf":
                raise ParseError(f"bad header {line!r}", i)
            try:
                v, c = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"bad header {line!r}", i) from None
            continue
        if v is None:
            raise ParseError("clause before 'p pcnf' header", i)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"bad literal in {line!r}", i) from None
        if not lits or lits[-1] != 0:
            raise ParseError("clause line must end with 0", i)
        lits = lits[:-1]
        if any(l == 0 for l in lits):
            raise ParseError("0 inside clause", i)
        if any(l < 0 for l in lits):
            raise NegativeLiteralError(f"line {i}: negative literal in {line!r}")
        if not lits:
            raise ParseError("empty clause", i)
        if any(l > v for l in lits):
            raise ParseError(f"variable above declared count {v}", i)
        clauses.append(frozenset(lits))  # duplicates within a clause collapse here
    if v is None:
        raise ParseError("missing 'p pcnf' header", 0)
    if len(clauses) != c:
        raise ParseError(f"declared {c} clauses, found {len(clauses)}", 0)
    return Formula(v=v, clauses=tuple(clauses))


def serialize_formula(f: Formula) -> str:
    lines = [f"p pcnf {f.v} {f.c}"]
    for cl in f.clauses:
        lines.append(" ".join(str(x) for x in sorted(cl)) + " 0")
    return "\n".join(lines) + "\n"


def is_decided(state: FormulaState) -> str:
    """IIWinsAlready if some clause is all-false, IWinsAlready if every clause
    has a true variable, Undecided otherwise.  II's condition is checked first."""
    for cl in state.formula.clauses:
        if cl <= state.chosen_false:
            return II_WINS_ALREADY
    if all(cl & state.chosen_true for cl in state.formula.clauses):
        return I_WINS_ALREADY
    return UNDECIDED


def endphase_winner(f: Formula, chosen_true) -> str:
    """Clause-then-literal endgame: II picks a clause, I a literal inside it.

    Variables outside chosen_true count as false, so II wins exactly when
    some clause contains no true variable.
    """
    chosen_true = frozenset(chosen_true)
    for cl in f.clauses:
        if not (cl & chosen_true):
            return II_WINS
    return I_WINS


def gpos_solve(f: Formula, first: str = PLAYER_I, early_stop: bool = True) -> str:
    """Exact minimax over alternating variable claims.

    With early_stop the search stops as soon as is_decided resolves; without
    it, play continues until all variables are claimed and the endgame
    formulation scores the final true-set.  Both give the same value.
    """
    # Bitmask representation keeps the exhaustive sweeps fast.
    clause_masks = tuple(
        sum(1 << (x - 1) for x in cl) for cl in f.clauses
    )
    all_vars = (1 << f.v) - 1

    @lru_cache(maxsize=None)
    def value(true_mask: int, false_mask: int, player_i: bool) -> bool:
        """True iff Player I wins from here with optimal play."""
        if early_stop:
            for m in clause_masks:
                if m & ~false_mask == 0:
                    return False
            if all(m & true_mask for m in clause_masks):
                return True
        free = all_vars & ~(true_mask | false_mask)
        if free == 0:
            return all(m & true_mask for m in clause_masks)
        bits = []
        x = free
        while x:
            b = x & -x
            bits.append(b)
            x ^= b
        if player_i:
            return any(value(true_mask | b, false_mask, False) for b in bits)
        return all(value(true_mask, false_mask | b, True) for b in bits)

    result = value(0, 0, first == PLAYER_I)
    value.cache_clear()
    return I_WINS if result else II_WINS


def gpos_solve_state(state: FormulaState, early_stop: bool = True) -> str:
    """Solve from a mid-game state (used by tests and the CLI)."""
    f = state.formula
    clause_masks = tuple(sum(1 << (x - 1) for x in cl) for cl in f.clauses)
    all_vars = (1 << f.v) - 1
    t0 = sum(1 << (x - 1) for x in state.chosen_true)
    f0 = sum(1 << (x - 1) for x in state.chosen_false)

    @lru_cache(maxsize=None)
    def value(true_mask: int, false_mask: int, player_i: bool) -> bool:
        if early_stop:
            for m in clause_masks:
                if m & ~false_mask == 0:
                    return False
            if all(m & true_mask for m in clause_masks):
                return True
        free = all_vars & ~(true_mask | false_mask)
        if free == 0:
            return all(m & true_mask for m in clause_masks)
        bits = []
        x = free
        while x:
            b = x & -x
            bits.append(b)
            x ^= b
        if player_i:
            return any(value(true_mask | b, false_mask, False) for b in bits)
        return all(value(true_mask, false_mask | b, True) for b in bits)

    result = value(t0, f0, state.to_move == PLAYER_I)
    value.cache_clear()
    return I_WINS if result else II_WINS


def best_line_variable(f: Formula, first: str = PLAYER_I) -> int | None:
    """Lexicographically smallest optimal first variable, or None if no move.

    Optimal means: achieves the game value for the player to move.
    """
    if f.v == 0:
        return None
    target = gpos_solve(f, first)
    mover_wins_target = (target == I_WINS) == (first == PLAYER_I)
    for x in range(1, f.v + 1):
        if first == PLAYER_I:
            st = FormulaState(f, chosen_true=frozenset({x}), to_move=PLAYER_II)
        else:
            st = FormulaState(f, chosen_false=frozenset({x}), to_move=PLAYER_I)
        val = gpos_solve_state(st)
        child_good_for_mover = (val == I_WINS) == (first == PLAYER_I)
        if child_good_for_mover == mover_wins_target:
            return x
    return 1
