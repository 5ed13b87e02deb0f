"""Exact outcome determination for small Quoridor positions.

Two solvers are provided and cross-checked against each other:

* solve: decomposes the game along wall placements.  Walls are never
  removed, so wall sets order the game into a DAG of "epochs"; inside one
  epoch only the pawns move, and at most n^4 pawn pairs exist, so each
  epoch is solved exactly by retrograde analysis, with already-solved child
  epochs supplying the values of wall moves.  Discarding pawn-move
  repetitions this way never changes the answer (a repetition is never the
  only winning try); the tests enforce agreement with the naive oracle.

* solve_naive: the oracle.  Builds the complete reachable state graph
  (pawns, walls, budgets, side to move) with no decomposition and runs one
  global win/loss propagation; states never labeled are cycles under best
  play and are reported as NoForcedWin.

Distances are minimax plies: the winner hurries, the loser delays.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .board import (
    BLACK,
    WHITE,
    Position,
    QuoridorError,
    Wall,
    goal_row,
    pawn_moves,
    slot_conflicts,
    step_blocked,
)

WHITE_WIN = "WhiteWin"
BLACK_WIN = "BlackWin"
NO_FORCED_WIN = "NoForcedWin"


class ResourceLimit(QuoridorError):
    """The configured node budget was exceeded."""


@dataclass(frozen=True)
class Outcome:
    result: str
    plies: Optional[int] = None

    def __str__(self) -> str:
        if self.plies is not None and self.result in (WHITE_WIN, BLACK_WIN):
            return f"{self.result} in {self.plies}"
        return self.result


@dataclass
class SearchStats:
    nodes: int = 0
    memo_hits: int = 0
    peak_epoch_pairs: int = 0
    epochs: int = 0
    max_win_plies: int = 0


def _win_label(player: str) -> str:
    return WHITE_WIN if player == WHITE else BLACK_WIN


def _reach_sets(walls, n: int) -> tuple[frozenset, frozenset]:
    """Squares from which each goal row is reachable (pawn-ignoring)."""
    out = []
    for player in (WHITE, BLACK):
        target = goal_row(player, n)
        seen = set((c, target) for c in range(n))
        queue = deque(seen)
        while queue:
            c, r = queue.popleft()
            for dc, dr in ((0, 1), (1, 0), (0, -1), (-1, 0)):
                tc, tr = c + dc, r + dr
                if not (0 <= tc < n and 0 <= tr < n) or (tc, tr) in seen:
                    continue
                if step_blocked(walls, tc, tr, -dc, -dr):
                    continue
                seen.add((tc, tr))
                queue.append((tc, tr))
        out.append(frozenset(seen))
    return out[0], out[1]


def _candidate_slots(walls, n: int) -> list[Wall]:
    """Slots with no overlap/plus conflict; path legality is judged per state."""
    out = []
    for o in ("H", "V"):
        for x in range(1, n):
            for y in range(1, n):
                if slot_conflicts(walls, (o, x, y)) is None:
                    out.append((o, x, y))
    return out


def _pawn_targets(n, walls, mover_sq, opp_sq):
    pos = Position(n, mover_sq, opp_sq, walls, 0, 0, WHITE)
    return pawn_moves(pos)


# ---------------------------------------------------------------------------
# Retrograde analysis core (shared by both solvers)
# ---------------------------------------------------------------------------

def _propagate(states, terminal, succs, ext):
    """Label a cyclic two-player game graph with (result, plies).

    states: iterable of (..., mover) tuples whose last element is the mover.
    terminal: {state: (result, 0)} for positions already won.
    succs: {state: [successor states]} inside the graph.
    ext: {state: [(result, plies)]} fixed-value successors outside the graph.

    A mover wins when some successor carries their win; they lose only when
    every successor carries the opponent's win; anything else cycles and is
    left unlabeled here (NoForcedWin).  Distances: wins take the minimum,
    losses the maximum, implemented with a monotone candidate heap.
    """
    values = dict(terminal)
    preds: dict = {}
    remaining: dict = {}
    maxd: dict = {}
    no_loss = set()
    win_pending = set()
    heap: list = []
    seq = 0

    def push(d, state, res):
        nonlocal seq
        heapq.heappush(heap, (d, seq, state, res))
        seq += 1

    for s, (res, d) in terminal.items():
        push(d, s, res)

    for s in states:
        if s in values:
            continue
        mover_win = _win_label(s[-1])
        cnt = 0
        best = None
        worst = -1
        for k in succs.get(s, ()):
            if k in terminal:
                res, d = terminal[k]
                if res == mover_win:
                    best = d if best is None else min(best, d)
                else:
                    worst = max(worst, d)
            else:
                preds.setdefault(k, []).append(s)
                cnt += 1
        for res, d in ext.get(s, ()):
            dd = 0 if d is None else d
            if res == mover_win:
                best = dd if best is None else min(best, dd)
            elif res == NO_FORCED_WIN:
                no_loss.add(s)
            else:
                worst = max(worst, dd)
        remaining[s] = cnt
        maxd[s] = worst
        has_any = bool(succs.get(s)) or bool(ext.get(s))
        if best is not None:
            push(best + 1, s, mover_win)
            win_pending.add(s)
        elif cnt == 0 and s not in no_loss and has_any:
            other_win = BLACK_WIN if mover_win == WHITE_WIN else WHITE_WIN
            push(worst + 1, s, other_win)

    while heap:
        d, _, s, res = heapq.heappop(heap)
        if s in values:
            if s not in terminal:
                continue
            if values[s] != (res, d):
                continue
        else:
            values[s] = (res, d)
        for p in preds.get(s, ()):
            if p in values:
                continue
            mover_win = _win_label(p[-1])
            if res == mover_win:
                push(d + 1, p, mover_win)
                win_pending.add(p)
            else:
                remaining[p] -= 1
                maxd[p] = max(maxd[p], d)
                if remaining[p] == 0 and p not in no_loss and p not in win_pending:
                    push(maxd[p] + 1, p, res)

    return values


# ---------------------------------------------------------------------------
# Epoch-decomposed exact solver
# ---------------------------------------------------------------------------

def _solve_epoch(n, walls, wl, bl, memo, caches, stats, max_nodes, rng):
    key = (walls, wl, bl)
    if key in memo:
        stats.memo_hits += 1
        return memo[key]

    stats.epochs += 1
    squares = [(c, r) for c in range(n) for r in range(n)]
    pairs = [(w, b) for w in squares for b in squares if w != b]
    stats.peak_epoch_pairs = max(stats.peak_epoch_pairs, len(pairs))
    states = [(w, b, t) for (w, b) in pairs for t in (WHITE, BLACK)]
    if rng is not None:
        rng.shuffle(states)
    stats.nodes += len(states)
    if max_nodes is not None and stats.nodes > max_nodes:
        raise ResourceLimit(f"node budget {max_nodes} exceeded")

    reach_cache, slots_cache = caches
    if walls not in slots_cache:
        slots_cache[walls] = _candidate_slots(walls, n)
    slots = list(slots_cache[walls])
    if rng is not None:
        rng.shuffle(slots)

    child_info = []
    for slot in slots:
        child_walls = walls | {slot}
        if child_walls not in reach_cache:
            reach_cache[child_walls] = _reach_sets(child_walls, n)
        wr, br = reach_cache[child_walls]
        white_child = (
            _solve_epoch(n, child_walls, wl - 1, bl, memo, caches, stats, max_nodes, rng)
            if wl > 0 else None
        )
        black_child = (
            _solve_epoch(n, child_walls, wl, bl - 1, memo, caches, stats, max_nodes, rng)
            if bl > 0 else None
        )
        child_info.append((slot, wr, br, white_child, black_child))

    terminal = {}
    succs = {}
    ext = {}
    pawn_cache: dict = {}
    for s in states:
        w, b, t = s
        if w[1] == n - 1:
            terminal[s] = (WHITE_WIN, 0)
            continue
        if b[1] == 0:
            terminal[s] = (BLACK_WIN, 0)
            continue
        mover_sq, opp_sq = (w, b) if t == WHITE else (b, w)
        ck = (mover_sq, opp_sq)
        if ck not in pawn_cache:
            pawn_cache[ck] = _pawn_targets(n, walls, mover_sq, opp_sq)
        kids = []
        for tgt in pawn_cache[ck]:
            kids.append((tgt, b, BLACK) if t == WHITE else (w, tgt, WHITE))
        succs[s] = kids
        budget = wl if t == WHITE else bl
        if budget > 0:
            evals = []
            nxt = BLACK if t == WHITE else WHITE
            for slot, wr, br, white_child, black_child in child_info:
                if w not in wr or b not in br:
                    continue
                table = white_child if t == WHITE else black_child
                evals.append(table[(w, b, nxt)])
            ext[s] = evals

    values = _propagate(states, terminal, succs, ext)
    for s in states:
        if s not in values:
            values[s] = (NO_FORCED_WIN, None)
        else:
            res, d = values[s]
            if d is not None:
                stats.max_win_plies = max(stats.max_win_plies, d)
    memo[key] = values
    return values


def solve(
    pos: Position,
    max_nodes: Optional[int] = None,
    move_order_seed: Optional[int] = None,
    memo: Optional[dict] = None,
) -> tuple[Outcome, SearchStats]:
    """Exact three-valued game value; cycles under best play are NoForcedWin.

    `memo` may be shared between calls on positions over a common wall
    universe.  `move_order_seed` shuffles internal move ordering; the
    returned Outcome never depends on it.
    """
    stats = SearchStats()
    rng = random.Random(move_order_seed) if move_order_seed is not None else None
    if memo is None:
        memo = {}
    caches = ({}, {})
    values = _solve_epoch(
        pos.n, pos.walls, pos.white_walls_left, pos.black_walls_left,
        memo, caches, stats, max_nodes, rng,
    )
    res, d = values[(pos.white_pawn, pos.black_pawn, pos.to_move)]
    return Outcome(res, d), stats


def white_wins(pos: Position, max_nodes: Optional[int] = None) -> bool:
    outcome, _ = solve(pos, max_nodes=max_nodes)
    return outcome.result == WHITE_WIN


# ---------------------------------------------------------------------------
# Naive oracle: one flat graph, one global propagation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=6)
def _universe_tables(n: int, walls: frozenset, wl: int, bl: int):
    """Values for every pawn state over every wall configuration reachable here."""
    squares = [(c, r) for c in range(n) for r in range(n)]
    pairs = [(w, b) for w in squares for b in squares if w != b]

    configs = {(walls, wl, bl)}
    queue = deque(configs)
    slots_cache: dict = {}
    reach_cache: dict = {}
    while queue:
        cw, cwl, cbl = queue.popleft()
        if cw not in slots_cache:
            slots_cache[cw] = _candidate_slots(cw, n)
        for slot in slots_cache[cw]:
            child_walls = cw | {slot}
            if child_walls not in reach_cache:
                reach_cache[child_walls] = _reach_sets(child_walls, n)
            for nxt in ((child_walls, cwl - 1, cbl) if cwl > 0 else None,
                        (child_walls, cwl, cbl - 1) if cbl > 0 else None):
                if nxt is not None and nxt not in configs:
                    configs.add(nxt)
                    queue.append(nxt)

    states = []
    terminal = {}
    succs = {}
    for cfg in configs:
        cw, cwl, cbl = cfg
        pawn_cache: dict = {}
        for (w, b) in pairs:
            for t in (WHITE, BLACK):
                s = (w, b, cfg, t)
                states.append(s)
                if w[1] == n - 1:
                    terminal[s] = (WHITE_WIN, 0)
                    continue
                if b[1] == 0:
                    terminal[s] = (BLACK_WIN, 0)
                    continue
                mover_sq, opp_sq = (w, b) if t == WHITE else (b, w)
                ck = (mover_sq, opp_sq)
                if ck not in pawn_cache:
                    pawn_cache[ck] = _pawn_targets(n, cw, mover_sq, opp_sq)
                kids = []
                for tgt in pawn_cache[ck]:
                    kids.append((tgt, b, cfg, BLACK) if t == WHITE else (w, tgt, cfg, WHITE))
                budget = cwl if t == WHITE else cbl
                if budget > 0:
                    for slot in slots_cache[cw]:
                        child_walls = cw | {slot}
                        wr, br = reach_cache[child_walls]
                        if w not in wr or b not in br:
                            continue
                        child_cfg = (
                            (child_walls, cwl - 1, cbl) if t == WHITE
                            else (child_walls, cwl, cbl - 1)
                        )
                        kids.append((w, b, child_cfg, BLACK if t == WHITE else WHITE))
                succs[s] = kids

    values = _propagate(states, terminal, succs, {})
    for s in states:
        if s not in values:
            values[s] = (NO_FORCED_WIN, None)
    return values


def solve_naive(pos: Position, max_nodes: Optional[int] = None) -> Outcome:
    """Oracle value via global win/loss propagation over the full state graph."""
    n = pos.n
    est = (n * n) * (n * n - 1) * 2
    if max_nodes is not None and est > max_nodes:
        raise ResourceLimit(f"estimated state count {est} exceeds {max_nodes}")
    values = _universe_tables(n, pos.walls, pos.white_walls_left, pos.black_walls_left)
    cfg = (pos.walls, pos.white_walls_left, pos.black_walls_left)
    res, d = values[(pos.white_pawn, pos.black_pawn, cfg, pos.to_move)]
    return Outcome(res, d)
