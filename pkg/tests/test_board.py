import random

import pytest

from quoridor_hardness.board import (
    BLACK,
    WHITE,
    IllegalMove,
    ParseError,
    PawnMove,
    Position,
    Unreachable,
    ValidationError,
    WallPlace,
    apply,
    has_victory_path,
    legal_moves,
    parse,
    pawn_moves,
    serialize,
    shortest_victory_distance,
    standard_start,
    validate,
    wall_placements,
)


def make(n, white, black, walls=(), wl=10, bl=10, to_move=WHITE):
    return Position(
        n=n,
        white_pawn=white,
        black_pawn=black,
        walls=frozenset(walls),
        white_walls_left=wl,
        black_walls_left=bl,
        to_move=to_move,
    )


# --- pawn moves -----------------------------------------------------------

def test_plain_cardinal_moves():
    pos = make(9, (4, 4), (0, 8))
    assert sorted(pawn_moves(pos)) == sorted([(3, 4), (5, 4), (4, 3), (4, 5)])


def test_straight_jump():
    pos = make(9, (4, 4), (4, 5))
    assert sorted(pawn_moves(pos)) == sorted([(3, 4), (5, 4), (4, 3), (4, 6)])


def test_side_steps_when_wall_behind():
    # H wall blocking the step (4,5)-(4,6): slots ('H',5,6) or ('H',4,6).
    pos = make(9, (4, 4), (4, 5), walls={("H", 5, 6)})
    assert sorted(pawn_moves(pos)) == sorted([(3, 4), (5, 4), (4, 3), (3, 5), (5, 5)])


def test_side_step_against_board_edge():
    pos = make(9, (4, 7), (4, 8))
    assert sorted(pawn_moves(pos)) == sorted([(3, 7), (5, 7), (4, 6), (3, 8), (5, 8)])


def test_one_side_step_blocked():
    # Wall behind and wall on one side of the opponent.
    pos = make(9, (4, 4), (4, 5), walls={("H", 5, 6), ("V", 4, 6)})
    assert sorted(pawn_moves(pos)) == sorted([(3, 4), (5, 4), (4, 3), (5, 5)])


def test_no_jump_through_wall_between_pawns():
    pos = make(9, (4, 4), (4, 5), walls={("H", 5, 5)})
    assert sorted(pawn_moves(pos)) == sorted([(3, 4), (5, 4), (4, 3)])


def test_jump_and_sidestep_exclusive_bound():
    rng = random.Random(7)
    for _ in range(300):
        n = 5
        squares = [(c, r) for c in range(n) for r in range(n)]
        w, b = rng.sample(squares, 2)
        walls = set()
        pos = make(n, w, b, walls, to_move=rng.choice([WHITE, BLACK]))
        moves = pawn_moves(pos)
        assert len(moves) <= 5
        assert len(set(moves)) == len(moves)


# --- wall placement -------------------------------------------------------

def test_empty_board_slot_count():
    pos = standard_start(9)
    assert len(wall_placements(pos)) == 128


def test_overlap_and_plus_exclusions():
    pos = make(9, (4, 0), (4, 8), walls={("H", 3, 3)})
    slots = wall_placements(pos)
    assert ("H", 4, 3) not in slots
    assert ("H", 2, 3) not in slots
    assert ("V", 3, 3) not in slots
    assert ("H", 5, 3) in slots
    assert ("V", 4, 3) in slots


def test_path_sealing_forbidden():
    # Box White into the SW corner except one gap, then the sealing slot is gone.
    walls = {("H", 1, 1), ("V", 2, 1)}
    pos = make(9, (0, 0), (4, 8), walls, to_move=BLACK)
    slots = wall_placements(pos)
    assert ("H", 2, 1) not in slots  # would seal White in completely


def test_no_budget_no_walls():
    pos = make(9, (4, 0), (4, 8), wl=0)
    assert wall_placements(pos) == []
    with pytest.raises(IllegalMove) as e:
        apply(pos, WallPlace(("H", 3, 3)))
    assert e.value.reason == "no-budget"


# --- apply ----------------------------------------------------------------

def test_apply_pawn_roundtrip():
    pos = make(9, (4, 4), (0, 8))
    one = apply(pos, PawnMove((4, 5)))
    assert one.to_move == BLACK and one.white_pawn == (4, 5)
    back = apply(apply(one, PawnMove((0, 7))), PawnMove((4, 4)))
    assert back.white_pawn == pos.white_pawn
    assert back.walls == pos.walls


def test_apply_wall_decrements_budget():
    pos = make(9, (4, 0), (4, 8))
    nxt = apply(pos, WallPlace(("H", 3, 3)))
    assert nxt.white_walls_left == 9 and nxt.black_walls_left == 10
    assert ("H", 3, 3) in nxt.walls


def test_apply_plus_rejected():
    pos = make(9, (4, 0), (4, 8), walls={("H", 3, 3)})
    with pytest.raises(IllegalMove) as e:
        apply(pos, WallPlace(("V", 3, 3)))
    assert e.value.reason == "plus"


def test_apply_offboard_pawn():
    pos = make(3, (0, 0), (2, 2))
    with pytest.raises(IllegalMove) as e:
        apply(pos, PawnMove((-1, 0)))
    assert e.value.reason == "off-board"


# --- pathfinding ----------------------------------------------------------

def test_paths_on_empty_board():
    pos = standard_start(9)
    assert has_victory_path(pos, WHITE)
    assert has_victory_path(pos, BLACK)
    assert shortest_victory_distance(pos, WHITE) == 8
    assert shortest_victory_distance(pos, BLACK) == 8


def test_goal_row_distance_zero():
    pos = make(9, (4, 8), (4, 0))
    assert shortest_victory_distance(pos, WHITE) == 0
    assert shortest_victory_distance(pos, BLACK) == 0


def test_fully_sealed_pocket():
    # Pocket (0,0)-(1,0): H(1,1) shuts the north of both columns, V(2,1) the east.
    walls = {("H", 1, 1), ("V", 2, 1)}
    pos = make(9, (0, 0), (4, 8), walls)
    assert not has_victory_path(pos, WHITE)
    with pytest.raises(Unreachable):
        shortest_victory_distance(pos, WHITE)


def test_wall_monotone_distance():
    rng = random.Random(3)
    for _ in range(50):
        pos = standard_start(9)
        placed = []
        for _ in range(6):
            slots = wall_placements(pos)
            if not slots:
                break
            slot = rng.choice(slots)
            pos = apply(pos, WallPlace(slot))
            placed.append(slot)
        base_w = shortest_victory_distance(pos, WHITE)
        base_b = shortest_victory_distance(pos, BLACK)
        for slot in placed:
            fewer = Position(
                n=pos.n,
                white_pawn=pos.white_pawn,
                black_pawn=pos.black_pawn,
                walls=pos.walls - {slot},
                white_walls_left=pos.white_walls_left,
                black_walls_left=pos.black_walls_left,
                to_move=pos.to_move,
            )
            assert shortest_victory_distance(fewer, WHITE) <= base_w
            assert shortest_victory_distance(fewer, BLACK) <= base_b


def test_random_play_keeps_paths():
    rng = random.Random(11)
    for _ in range(20):
        pos = standard_start(5)
        for _ in range(12):
            moves = legal_moves(pos)
            if not moves:
                break
            pos = apply(pos, rng.choice(moves))
            if pos.white_pawn[1] == pos.n - 1 or pos.black_pawn[1] == 0:
                break
            assert has_victory_path(pos, WHITE)
            assert has_victory_path(pos, BLACK)


# --- n=3 exhaustive move-generation cross-check ----------------------------

def _reference_moves(pos):
    """Independent re-derivation of the movement rule for the cross-check."""
    n = pos.n
    me = pos.pawn(pos.to_move)
    you = pos.black_pawn if pos.to_move == WHITE else pos.white_pawn
    res = set()

    def open_step(a, b):
        if not (0 <= b[0] < n and 0 <= b[1] < n):
            return False
        from quoridor_hardness.board import step_blocked

        return not step_blocked(pos.walls, a[0], a[1], b[0] - a[0], b[1] - a[1])

    for d in ((0, 1), (0, -1), (1, 0), (-1, 0)):
        t = (me[0] + d[0], me[1] + d[1])
        if not open_step(me, t):
            continue
        if t != you:
            res.add(t)
        else:
            behind = (you[0] + d[0], you[1] + d[1])
            if open_step(you, behind):
                res.add(behind)
            else:
                for s in (((d[1], d[0])), ((-d[1], -d[0]))):
                    side = (you[0] + s[0], you[1] + s[1])
                    if open_step(you, side):
                        res.add(side)
    return res


def test_exhaustive_n3_movegen():
    n = 3
    squares = [(c, r) for c in range(n) for r in range(n)]
    count = 0
    for w in squares:
        for b in squares:
            if w == b:
                continue
            for to_move in (WHITE, BLACK):
                pos = make(n, w, b, wl=0, bl=0, to_move=to_move)
                assert set(pawn_moves(pos)) == _reference_moves(pos)
                count += 1
    assert count == 9 * 8 * 2


def test_hand_table_adjacency_cases():
    # Hand-enumerated expectations for all pawn-adjacency shapes on n=3,
    # White at the center, Black adjacent north.
    pos = make(3, (1, 1), (1, 2))
    # straight jump north is off-board -> side-steps (0,2) and (2,2)
    assert sorted(pawn_moves(pos)) == sorted([(0, 1), (2, 1), (1, 0), (0, 2), (2, 2)])
    # Black adjacent east, jump lands on (3,1)? off-board -> side-steps
    pos = make(3, (1, 1), (2, 1))
    assert sorted(pawn_moves(pos)) == sorted([(0, 1), (1, 0), (1, 2), (2, 0), (2, 2)])
    # White at west edge, Black east of it: straight jump available
    pos = make(3, (0, 1), (1, 1))
    assert sorted(pawn_moves(pos)) == sorted([(0, 0), (0, 2), (2, 1)])


# --- serialization --------------------------------------------------------

def test_roundtrip_start():
    pos = standard_start(9)
    assert parse(serialize(pos)) == pos


def test_canonical_sorting():
    walls = [("V", 5, 5), ("H", 2, 7), ("H", 2, 3), ("V", 1, 1)]
    a = make(9, (4, 0), (4, 8), walls)
    b = make(9, (4, 0), (4, 8), list(reversed(walls)))
    assert serialize(a) == serialize(b)
    lines = [l for l in serialize(a).splitlines() if l.startswith("wall ")]
    assert lines == ["wall H 2 3", "wall H 2 7", "wall V 1 1", "wall V 5 5"]


def test_parse_rejects_plus():
    text = serialize(make(9, (4, 0), (4, 8))) + "wall H 3 3\nwall V 3 3\n"
    with pytest.raises(ValidationError) as e:
        parse(text)
    assert e.value.reason == "plus"


def test_parse_rejects_sealed_position():
    text = serialize(make(9, (0, 0), (4, 8), {("H", 1, 1), ("V", 2, 1)}))
    with pytest.raises(ValidationError) as e:
        parse(text)
    assert e.value.reason == "path"


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError):
        parse("not a header\n")
    with pytest.raises(ParseError) as e:
        parse("quoridor-position v1\nn nine\n")
    assert e.value.line == 2


def test_comments_ignored():
    text = serialize(standard_start(9))
    text = "# a comment\n" + text.replace("n 9", "n 9 # side")
    assert parse(text) == standard_start(9)


def test_validate_pawn_overlap():
    with pytest.raises(ValidationError) as e:
        validate(make(9, (4, 4), (4, 4)))
    assert e.value.reason == "pawn-overlap"
