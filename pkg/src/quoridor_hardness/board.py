"""Generalized n-by-n Quoridor: positions, move generation, wall legality, pathfinding.

Coordinates are (col, row): col 0 is the west edge, row 0 the south edge.
White's goal is the north edge (row n-1), Black's goal is the south edge
(row 0).

Walls are stored sparsely as (orientation, x, y) slots anchored at interior
lattice vertices, with x and y in 1..n-1:

* ('H', x, y) blocks the two north-south steps between rows y-1 and y at
  columns x-1 and x.
* ('V', x, y) blocks the two east-west steps between columns x-1 and x at
  rows y-1 and y.

Two walls of the same orientation conflict ("overlap") when they share a
blocked step; an H and a V wall conflict ("plus") only when they share the
same vertex.  A wall may never leave either player without some path to
their goal row (pawns are ignored for that test, see has_victory_path).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional, Union

WHITE = "white"
BLACK = "black"

Square = tuple[int, int]          # (col, row)
Wall = tuple[str, int, int]       # ('H'|'V', x, y) at a lattice vertex

# Cardinal steps in a fixed, deterministic order: N, E, S, W.
DIRS = ((0, 1), (1, 0), (0, -1), (-1, 0))


class QuoridorError(Exception):
    """Base class for all errors raised by this package."""


class IllegalMove(QuoridorError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"illegal move ({reason})" + (f": {detail}" if detail else ""))


class ParseError(QuoridorError):
    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class ValidationError(QuoridorError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"invalid position ({reason})" + (f": {detail}" if detail else ""))


class Unreachable(QuoridorError):
    """Raised when a shortest-distance query has no wall-respecting path."""


@dataclass(frozen=True)
class PawnMove:
    target: Square


@dataclass(frozen=True)
class WallPlace:
    slot: Wall


MoveRec = Union[PawnMove, WallPlace]


@dataclass(frozen=True)
class Position:
    """Immutable full game state.  All operations on it are pure functions."""

    n: int
    white_pawn: Square
    black_pawn: Square
    walls: frozenset[Wall]
    white_walls_left: int
    black_walls_left: int
    to_move: str

    def pawn(self, player: str) -> Square:
        return self.white_pawn if player == WHITE else self.black_pawn

    def walls_left(self, player: str) -> int:
        return self.white_walls_left if player == WHITE else self.black_walls_left

    def opponent(self) -> str:
        return BLACK if self.to_move == WHITE else WHITE


def goal_row(player: str, n: int) -> int:
    return n - 1 if player == WHITE else 0


def other(player: str) -> str:
    return BLACK if player == WHITE else WHITE


def standard_start(n: int = 9) -> Position:
    """The conventional start: pawns centered on their back ranks, 10n^2/81 walls each."""
    budget = (10 * n * n) // 81
    return Position(
        n=n,
        white_pawn=(n // 2, 0),
        black_pawn=(n // 2, n - 1),
        walls=frozenset(),
        white_walls_left=budget,
        black_walls_left=budget,
        to_move=WHITE,
    )


# ---------------------------------------------------------------------------
# Wall geometry
# ---------------------------------------------------------------------------

def wall_conflict(a: Wall, b: Wall) -> Optional[str]:
    """Return 'overlap', 'plus', or None for a pair of wall slots."""
    ao, ax, ay = a
    bo, bx, by = b
    if ao == bo:
        if ao == "H":
            if ay == by and abs(ax - bx) <= 1:
                return "overlap"
        else:
            if ax == bx and abs(ay - by) <= 1:
                return "overlap"
        return None
    if ax == bx and ay == by:
        return "plus"
    return None


def slot_conflicts(walls: frozenset[Wall] | set[Wall], slot: Wall) -> Optional[str]:
    """O(1) conflict test of one candidate slot against a wall set."""
    o, x, y = slot
    if o == "H":
        if ("H", x, y) in walls or ("H", x - 1, y) in walls or ("H", x + 1, y) in walls:
            return "overlap"
        if ("V", x, y) in walls:
            return "plus"
    else:
        if ("V", x, y) in walls or ("V", x, y - 1) in walls or ("V", x, y + 1) in walls:
            return "overlap"
        if ("H", x, y) in walls:
            return "plus"
    return None


def wall_edges(slot: Wall) -> tuple[tuple[str, int, int], tuple[str, int, int]]:
    """The two unit steps a wall blocks.

    Edges are ('v', c, r) between (c, r) and (c, r+1), or ('h', c, r)
    between (c, r) and (c+1, r).
    """
    o, x, y = slot
    if o == "H":
        return (("v", x - 1, y - 1), ("v", x, y - 1))
    return (("h", x - 1, y - 1), ("h", x - 1, y))


def step_blocked(walls, c: int, r: int, dc: int, dr: int) -> bool:
    """True if the step from (c, r) by (dc, dr) is blocked by a wall."""
    if dr == 1:
        return ("H", c, r + 1) in walls or ("H", c + 1, r + 1) in walls
    if dr == -1:
        return ("H", c, r) in walls or ("H", c + 1, r) in walls
    if dc == 1:
        return ("V", c + 1, r) in walls or ("V", c + 1, r + 1) in walls
    return ("V", c, r) in walls or ("V", c, r + 1) in walls


def adjacent_open(walls, a: Square, b: Square) -> bool:
    """True if a and b are cardinally adjacent with no wall between them."""
    dc, dr = b[0] - a[0], b[1] - a[1]
    if abs(dc) + abs(dr) != 1:
        return False
    return not step_blocked(walls, a[0], a[1], dc, dr)


# ---------------------------------------------------------------------------
# Move generation
# ---------------------------------------------------------------------------

def pawn_moves(pos: Position) -> list[Square]:
    """Legal pawn destinations for the player to move.

    One-step cardinal moves not through walls and not onto the opponent.
    When the opponent stands cardinally adjacent with no wall between, the
    straight jump square behind it is the only jump option while that square
    is on-board and not wall-blocked; otherwise the two side-step squares
    next to the opponent are offered, each dropped if off-board or blocked.
    """
    n = pos.n
    mover = pos.pawn(pos.to_move)
    opp = pos.pawn(other(pos.to_move))
    walls = pos.walls
    out: list[Square] = []
    mc, mr = mover
    for dc, dr in DIRS:
        tc, tr = mc + dc, mr + dr
        if not (0 <= tc < n and 0 <= tr < n):
            continue
        if step_blocked(walls, mc, mr, dc, dr):
            continue
        if (tc, tr) != opp:
            out.append((tc, tr))
            continue
        # Jump over the adjacent opponent.
        bc, br = tc + dc, tr + dr
        if 0 <= bc < n and 0 <= br < n and not step_blocked(walls, tc, tr, dc, dr):
            out.append((bc, br))
        else:
            for sc, sr in ((dr, dc), (-dr, -dc)):
                jc, jr = tc + sc, tr + sr
                if 0 <= jc < n and 0 <= jr < n and not step_blocked(walls, tc, tr, sc, sr):
                    out.append((jc, jr))
    return out


def wall_slot_legal(pos: Position, slot: Wall, check_path: bool = True) -> Optional[str]:
    """Reason the slot is illegal in this position, or None if legal.

    Checks bounds, overlap/plus against placed walls, and (optionally) the
    rule that both players keep a path to their goal row.
    """
    o, x, y = slot
    if o not in ("H", "V") or not (1 <= x <= pos.n - 1 and 1 <= y <= pos.n - 1):
        return "off-board"
    conflict = slot_conflicts(pos.walls, slot)
    if conflict:
        return conflict
    if check_path:
        walls = set(pos.walls)
        walls.add(slot)
        for player in (WHITE, BLACK):
            if not _has_path(walls, pos.n, pos.pawn(player), goal_row(player, pos.n)):
                return "path-sealing"
    return None


def wall_placements(pos: Position) -> list[Wall]:
    """All legal wall slots for the player to move (empty if out of walls)."""
    if pos.walls_left(pos.to_move) <= 0:
        return []
    out = []
    for o in ("H", "V"):
        for x in range(1, pos.n):
            for y in range(1, pos.n):
                slot = (o, x, y)
                if wall_slot_legal(pos, slot) is None:
                    out.append(slot)
    return out


def legal_moves(pos: Position) -> list[MoveRec]:
    moves: list[MoveRec] = [PawnMove(t) for t in pawn_moves(pos)]
    moves.extend(WallPlace(s) for s in wall_placements(pos))
    return moves


def apply(pos: Position, move: MoveRec) -> Position:
    """Apply a legal move, returning the successor position.

    Raises IllegalMove with one of the reasons: off-board, wall-blocked,
    overlap, plus, path-sealing, no-budget, illegal-destination.
    """
    if isinstance(move, PawnMove):
        t = move.target
        if not (0 <= t[0] < pos.n and 0 <= t[1] < pos.n):
            raise IllegalMove("off-board", f"pawn to {t}")
        if t not in pawn_moves(pos):
            mc, mr = pos.pawn(pos.to_move)
            dc, dr = t[0] - mc, t[1] - mr
            if abs(dc) + abs(dr) == 1 and step_blocked(pos.walls, mc, mr, dc, dr):
                raise IllegalMove("wall-blocked", f"pawn to {t}")
            raise IllegalMove("illegal-destination", f"pawn to {t}")
        if pos.to_move == WHITE:
            return replace(pos, white_pawn=t, to_move=BLACK)
        return replace(pos, black_pawn=t, to_move=WHITE)

    if not isinstance(move, WallPlace):
        raise IllegalMove("illegal-destination", repr(move))
    if pos.walls_left(pos.to_move) <= 0:
        raise IllegalMove("no-budget")
    reason = wall_slot_legal(pos, move.slot)
    if reason:
        raise IllegalMove(reason, f"wall {move.slot}")
    walls = pos.walls | {move.slot}
    if pos.to_move == WHITE:
        return replace(pos, walls=walls, white_walls_left=pos.white_walls_left - 1, to_move=BLACK)
    return replace(pos, walls=walls, black_walls_left=pos.black_walls_left - 1, to_move=WHITE)


# ---------------------------------------------------------------------------
# Pathfinding (pawn-ignoring, per the path-to-victory rule)
# ---------------------------------------------------------------------------

def _has_path(walls, n: int, start: Square, target_row: int) -> bool:
    if start[1] == target_row:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        c, r = queue.popleft()
        for dc, dr in DIRS:
            tc, tr = c + dc, r + dr
            if not (0 <= tc < n and 0 <= tr < n) or (tc, tr) in seen:
                continue
            if step_blocked(walls, c, r, dc, dr):
                continue
            if tr == target_row:
                return True
            seen.add((tc, tr))
            queue.append((tc, tr))
    return False


def _bfs_distance(walls, n: int, start: Square, target_row: int) -> Optional[int]:
    if start[1] == target_row:
        return 0
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        (c, r), d = queue.popleft()
        for dc, dr in DIRS:
            tc, tr = c + dc, r + dr
            if not (0 <= tc < n and 0 <= tr < n) or (tc, tr) in seen:
                continue
            if step_blocked(walls, c, r, dc, dr):
                continue
            if tr == target_row:
                return d + 1
            seen.add((tc, tr))
            queue.append(((tc, tr), d + 1))
    return None


def has_victory_path(pos: Position, player: str) -> bool:
    """True iff a wall-respecting path (ignoring both pawns) reaches the goal row."""
    return _has_path(pos.walls, pos.n, pos.pawn(player), goal_row(player, pos.n))


def shortest_victory_distance(pos: Position, player: str) -> int:
    """Length of the shortest wall-respecting, pawn-ignoring path to the goal row."""
    d = _bfs_distance(pos.walls, pos.n, pos.pawn(player), goal_row(player, pos.n))
    if d is None:
        raise Unreachable(f"{player} has no path to row {goal_row(player, pos.n)}")
    return d


def bfs_distance_between(walls, n: int, start: Square, target: Square) -> Optional[int]:
    """Shortest wall-respecting walk between two squares, pawns ignored."""
    if start == target:
        return 0
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        (c, r), d = queue.popleft()
        for dc, dr in DIRS:
            tc, tr = c + dc, r + dr
            if not (0 <= tc < n and 0 <= tr < n) or (tc, tr) in seen:
                continue
            if step_blocked(walls, c, r, dc, dr):
                continue
            if (tc, tr) == target:
                return d + 1
            seen.add((tc, tr))
            queue.append(((tc, tr), d + 1))
    return None


# ---------------------------------------------------------------------------
# Serialization (.qpos)
# ---------------------------------------------------------------------------

def sorted_walls(walls: Iterable[Wall]) -> list[Wall]:
    """Canonical wall order: orientation H before V, then x, then y."""
    return sorted(walls, key=lambda w: (w[0], w[1], w[2]))


def serialize(pos: Position) -> str:
    lines = [
        "quoridor-position v1",
        f"n {pos.n}",
        f"to-move {pos.to_move}",
        f"pawn white {pos.white_pawn[0]} {pos.white_pawn[1]}",
        f"pawn black {pos.black_pawn[0]} {pos.black_pawn[1]}",
        f"walls-left white {pos.white_walls_left}",
        f"walls-left black {pos.black_walls_left}",
    ]
    for o, x, y in sorted_walls(pos.walls):
        lines.append(f"wall {o} {x} {y}")
    return "\n".join(lines) + "\n"


def validate(pos: Position) -> None:
    """Check every stored-position invariant, raising ValidationError on failure."""
    n = pos.n
    if n < 2:
        raise ValidationError("range", f"board side {n}")
    for name, (c, r) in (("white", pos.white_pawn), ("black", pos.black_pawn)):
        if not (0 <= c < n and 0 <= r < n):
            raise ValidationError("range", f"{name} pawn {(c, r)}")
    if pos.white_pawn == pos.black_pawn:
        raise ValidationError("pawn-overlap", str(pos.white_pawn))
    if pos.white_walls_left < 0 or pos.black_walls_left < 0:
        raise ValidationError("range", "negative wall budget")
    if pos.to_move not in (WHITE, BLACK):
        raise ValidationError("range", f"to-move {pos.to_move}")
    walls = list(pos.walls)
    by_vertex: dict[tuple[int, int], list[Wall]] = {}
    for w in walls:
        o, x, y = w
        if o not in ("H", "V") or not (1 <= x <= n - 1 and 1 <= y <= n - 1):
            raise ValidationError("range", f"wall {w}")
        by_vertex.setdefault((x, y), []).append(w)
    for w in walls:
        o, x, y = w
        rest = frozenset(pos.walls - {w})
        conflict = slot_conflicts(rest, w)
        if conflict:
            raise ValidationError(conflict, f"wall {w}")
    for player in (WHITE, BLACK):
        if not has_victory_path(pos, player):
            raise ValidationError("path", f"{player} has no path to victory")


def parse(text: str) -> Position:
    """Parse canonical or hand-written .qpos text; validates all invariants."""
    n = None
    to_move = None
    pawns: dict[str, Square] = {}
    budgets: dict[str, int] = {}
    walls: set[Wall] = set()
    saw_header = False
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != "quoridor-position v1":
                raise ParseError("expected header 'quoridor-position v1'", i)
            saw_header = True
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2:
                n = int(parts[1])
            elif parts[0] == "to-move" and len(parts) == 2 and parts[1] in (WHITE, BLACK):
                to_move = parts[1]
            elif parts[0] == "pawn" and len(parts) == 4 and parts[1] in (WHITE, BLACK):
                pawns[parts[1]] = (int(parts[2]), int(parts[3]))
            elif parts[0] == "walls-left" and len(parts) == 3 and parts[1] in (WHITE, BLACK):
                budgets[parts[1]] = int(parts[2])
            elif parts[0] == "wall" and len(parts) == 4 and parts[1] in ("H", "V"):
                slot = (parts[1], int(parts[2]), int(parts[3]))
                if slot in walls:
                    raise ParseError(f"duplicate wall {slot}", i)
                walls.add(slot)
            else:
                raise ParseError(f"unrecognized line: {line!r}", i)
        except ValueError:
            raise ParseError(f"bad integer in: {line!r}", i) from None
    if not saw_header:
        raise ParseError("empty input", 0)
    missing = [k for k, v in (("n", n), ("to-move", to_move)) if v is None]
    missing += [f"pawn {p}" for p in (WHITE, BLACK) if p not in pawns]
    missing += [f"walls-left {p}" for p in (WHITE, BLACK) if p not in budgets]
    if missing:
        raise ParseError("missing fields: " + ", ".join(missing), 0)
    pos = Position(
        n=n,
        white_pawn=pawns[WHITE],
        black_pawn=pawns[BLACK],
        walls=frozenset(walls),
        white_walls_left=budgets[WHITE],
        black_walls_left=budgets[BLACK],
        to_move=to_move,
    )
    validate(pos)
    return pos
