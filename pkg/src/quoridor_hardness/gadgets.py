"""Parametric wall-structure constructors and the wall-painting toolkit.

Every structure is built the same way: paint a set of open *channel*
squares, then call `enclose`, which

1. blocks every edge between a channel square and the outside (except the
   declared port edges) by pairing edges into length-2 wall slots,
2. adds perpendicular "anti-block" walls until no further wall placement
   could cut a channel edge or a port mouth (candidates on a whitelist,
   e.g. truth-box vertices and closure gaps, are deliberately left open),
3. audits the result: every remaining geometrically legal slot in the
   region is harmless.

Grid parity facts the painters rely on: a wall always blocks two adjacent
parallel edges, so wall runs cover an even number of edges (odd runs get
extended one step into dead space), and parallel channels are kept three
apart so the two-square dead strip between them hosts shared anti-blocks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .board import QuoridorError, Square, Wall, slot_conflicts, step_blocked, wall_conflict

Edge = tuple[str, int, int]  # ('v', c, r): (c,r)-(c,r+1);  ('h', c, r): (c,r)-(c+1,r)


class InvalidParam(QuoridorError):
    pass


class GeometryError(QuoridorError):
    pass


class OutOfBounds(QuoridorError):
    pass


class Conflict(QuoridorError):
    def __init__(self, kind: str, detail: str = ""):
        self.kind = kind
        super().__init__(f"wall conflict ({kind})" + (f": {detail}" if detail else ""))


def edge_squares(e: Edge) -> tuple[Square, Square]:
    kind, c, r = e
    if kind == "v":
        return (c, r), (c, r + 1)
    return (c, r), (c + 1, r)


def slot_edges(slot: Wall) -> tuple[Edge, Edge]:
    o, x, y = slot
    if o == "H":
        return ("v", x - 1, y - 1), ("v", x, y - 1)
    return ("h", x - 1, y - 1), ("h", x - 1, y)


def edge_blockers(e: Edge) -> tuple[Wall, Wall]:
    kind, c, r = e
    if kind == "v":
        return ("H", c, r + 1), ("H", c + 1, r + 1)
    return ("V", c + 1, r), ("V", c + 1, r + 1)


def square_edge(sq: Square, dc: int, dr: int) -> Edge:
    """The edge crossed when stepping from sq by (dc, dr)."""
    c, r = sq
    if dr == 1:
        return ("v", c, r)
    if dr == -1:
        return ("v", c, r - 1)
    if dc == 1:
        return ("h", c, r)
    return ("h", c - 1, r)


def _slot_on_board(slot: Wall, board_n: Optional[int]) -> bool:
    if board_n is None:
        return True
    _, x, y = slot
    return 1 <= x <= board_n - 1 and 1 <= y <= board_n - 1


def _edge_on_board(e: Edge, n: int) -> bool:
    a, b = edge_squares(e)
    return all(0 <= c < n and 0 <= r < n for c, r in (a, b))


# ---------------------------------------------------------------------------
# Edge pairing: boundary edges -> chain walls
# ---------------------------------------------------------------------------

def pair_edges(
    required: set[Edge],
    harmless: Callable[[Edge], bool],
    forbidden_vertices: frozenset[tuple[int, int]] = frozenset(),
    board_n: Optional[int] = None,
) -> set[Wall]:
    """Cover every required edge with length-2 wall slots.

    Edges on one lattice line group into runs of consecutive positions; odd
    runs are extended by one harmless edge, and runs whose natural pairing
    would sit on a forbidden vertex are re-phased by extending both ends.
    """
    lines: dict[tuple[str, int], set[int]] = {}
    for e in required:
        kind, c, r = e
        if kind == "v":
            lines.setdefault(("H", r + 1), set()).add(c)
        else:
            lines.setdefault(("V", c + 1), set()).add(r)

    def line_edge(o: str, line: int, pos: int) -> Edge:
        return ("v", pos, line - 1) if o == "H" else ("h", line - 1, pos)

    def slot_of(o: str, line: int, lo: int) -> Wall:
        # covers positions (lo, lo + 1)
        return (o, lo + 1, line) if o == "H" else (o, line, lo + 1)

    walls: set[Wall] = set()
    for (o, line), poss in sorted(lines.items()):
        positions = sorted(poss)
        runs: list[list[int]] = []
        for p in positions:
            if runs and p == runs[-1][-1] + 1:
                runs[-1].append(p)
            else:
                runs.append([p])
        for run in runs:
            if len(run) % 2 == 0:
                variants = [run, [run[0] - 1] + run + [run[-1] + 1]]
            else:
                variants = [run + [run[-1] + 1], [run[0] - 1] + run]
            placed = None
            for cand in variants:
                exts = [p for p in cand if p not in run]
                if any(p in poss for p in exts):
                    continue
                if not all(harmless(line_edge(o, line, p)) for p in exts):
                    continue
                slots = [slot_of(o, line, cand[i]) for i in range(0, len(cand), 2)]
                if any((s[1], s[2]) in forbidden_vertices for s in slots):
                    continue
                if not all(_slot_on_board(s, board_n) for s in slots):
                    continue
                placed = slots
                break
            if placed is None:
                raise GeometryError(
                    f"cannot pair edge run on line {o}{line}: positions {run}"
                )
            walls.update(placed)

    by_vertex: dict[tuple[int, int], str] = {}
    for o, x, y in sorted(walls):
        if (x, y) in by_vertex and by_vertex[(x, y)] != o:
            raise GeometryError(f"plus conflict at vertex {(x, y)} during pairing")
        by_vertex[(x, y)] = o
    return walls


# ---------------------------------------------------------------------------
# Threat analysis and anti-blocking
# ---------------------------------------------------------------------------

def _hull_vertices(channels: Iterable[Square], margin: int = 2):
    xs = [c for c, _ in channels]
    ys = [r for _, r in channels]
    return min(xs) - margin, max(xs) + 1 + margin, min(ys) - margin, max(ys) + 1 + margin


def live_threats(
    walls: set[Wall],
    channels: set[Square],
    open_edges: set[Edge],
    whitelist: frozenset[Wall] = frozenset(),
    board_n: Optional[int] = None,
) -> list[Wall]:
    """Geometrically legal slots that would cut a channel edge or port mouth."""
    x0, x1, y0, y1 = _hull_vertices(channels)
    threats = []
    for o in ("H", "V"):
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                slot = (o, x, y)
                if slot in whitelist or not _slot_on_board(slot, board_n):
                    continue
                if slot in walls or slot_conflicts(walls, slot):
                    continue
                for e in slot_edges(slot):
                    a, b = edge_squares(e)
                    if (a in channels and b in channels) or e in open_edges:
                        threats.append(slot)
                        break
    return threats


def protect(
    walls: set[Wall],
    channels: set[Square],
    open_edges: set[Edge],
    whitelist: frozenset[Wall] = frozenset(),
    board_n: Optional[int] = None,
) -> set[Wall]:
    """Add anti-block walls until no live threat remains.  Mutates and returns."""

    def harmless_slot(slot: Wall) -> bool:
        if not _slot_on_board(slot, board_n):
            return False
        for e in slot_edges(slot):
            if e in open_edges:
                return False
            a, b = edge_squares(e)
            if a in channels or b in channels:
                return False
        for w in whitelist:
            if wall_conflict(slot, w):
                return False
        return True

    for _ in range(4):
        threats = live_threats(walls, channels, open_edges, whitelist, board_n)
        if not threats:
            return walls
        progress = False
        for threat in sorted(threats):
            if slot_conflicts(walls, threat):
                continue  # killed by an addition earlier in this sweep
            o, x, y = threat
            kills = (
                [("H", x - 1, y), ("H", x + 1, y), ("V", x, y)]
                if o == "H"
                else [("V", x, y - 1), ("V", x, y + 1), ("H", x, y)]
            )
            for kill in kills:
                if slot_conflicts(walls, kill) or not harmless_slot(kill):
                    continue
                walls.add(kill)
                progress = True
                break
            else:
                raise GeometryError(f"unkillable threat {threat}")
        if not progress:
            break
    remaining = live_threats(walls, channels, open_edges, whitelist, board_n)
    if remaining:
        raise GeometryError(f"threats survived protection: {sorted(remaining)[:8]}")
    return walls


def audit(
    walls: set[Wall],
    channels: set[Square],
    open_edges: set[Edge],
    whitelist: frozenset[Wall] = frozenset(),
    board_n: Optional[int] = None,
) -> list[str]:
    """Independent re-check of the enclosure contract; returns violations."""
    issues = []
    wl = sorted(walls)
    for i, a in enumerate(wl):
        for b in wl[i + 1:]:
            kind = wall_conflict(a, b)
            if kind:
                issues.append(f"{kind} between {a} and {b}")
    for e in sorted(open_edges):
        for blocker in edge_blockers(e):
            if blocker in walls:
                issues.append(f"port edge {e} blocked by {blocker}")
    for sq in sorted(channels):
        for dc, dr in ((0, 1), (1, 0), (0, -1), (-1, 0)):
            nb = (sq[0] + dc, sq[1] + dr)
            e = square_edge(sq, dc, dr)
            blocked = any(bl in walls for bl in edge_blockers(e))
            if nb in channels:
                if blocked:
                    issues.append(f"internal edge {e} blocked")
            elif e not in open_edges:
                if not blocked and (board_n is None or _edge_on_board(e, board_n)):
                    issues.append(f"boundary edge {e} unblocked")
    for t in live_threats(set(walls), channels, open_edges, whitelist, board_n):
        issues.append(f"live threat {t}")
    for w in whitelist:
        if slot_conflicts(set(walls) - {w}, w):
            issues.append(f"whitelisted slot {w} not placeable")
    return issues


def enclose(
    channels: set[Square],
    open_edges: set[Edge],
    whitelist: frozenset[Wall] = frozenset(),
    board_n: Optional[int] = None,
    check: bool = True,
) -> set[Wall]:
    """Wall a channel system per the module contract.  Returns the wall set."""
    required: set[Edge] = set()
    for sq in channels:
        for dc, dr in ((0, 1), (1, 0), (0, -1), (-1, 0)):
            nb = (sq[0] + dc, sq[1] + dr)
            if nb in channels:
                continue
            e = square_edge(sq, dc, dr)
            if e in open_edges:
                continue
            if board_n is not None and not _edge_on_board(e, board_n):
                continue
            required.add(e)

    def harmless(e: Edge) -> bool:
        if e in open_edges or e in required:
            return False
        a, b = edge_squares(e)
        if a in channels or b in channels:
            return False
        if board_n is not None and not _edge_on_board(e, board_n):
            return False
        return True

    forbidden = frozenset((x, y) for (_, x, y) in whitelist)
    walls = pair_edges(required, harmless, forbidden, board_n)
    for w in whitelist:
        if slot_conflicts(walls, w):
            raise GeometryError(f"chains conflict with whitelisted slot {w}")
    protect(walls, channels, open_edges, whitelist, board_n)
    if check:
        issues = audit(walls, channels, open_edges, whitelist, board_n)
        if issues:
            raise GeometryError("; ".join(issues[:6]))
    return walls


def channel_distance(
    channels: set[Square], walls: set[Wall], a: Square, b: Square
) -> Optional[int]:
    """BFS within the channel squares, respecting walls."""
    if a == b:
        return 0
    seen = {a}
    queue = deque([(a, 0)])
    while queue:
        (c, r), d = queue.popleft()
        for dc, dr in ((0, 1), (1, 0), (0, -1), (-1, 0)):
            nb = (c + dc, r + dr)
            if nb not in channels or nb in seen:
                continue
            if step_blocked(walls, c, r, dc, dr):
                continue
            if nb == b:
                return d + 1
            seen.add(nb)
            queue.append((nb, d + 1))
    return None


# ---------------------------------------------------------------------------
# Blueprints and placement
# ---------------------------------------------------------------------------

FACING_STEPS = {"n": (0, 1), "e": (1, 0), "s": (0, -1), "w": (-1, 0)}
FACING_CCW = {"n": "w", "w": "s", "s": "e", "e": "n"}


def facing_edge(sq: Square, facing: str) -> Edge:
    dc, dr = FACING_STEPS[facing]
    return square_edge(sq, dc, dr)


@dataclass(frozen=True)
class GadgetBlueprint:
    walls: frozenset[Wall]
    width: int
    height: int
    ports: dict[str, Square]
    meta: dict[str, int]
    channels: frozenset[Square] = frozenset()
    whitelist: frozenset[Wall] = frozenset()
    facings: dict[str, str] = None  # port name -> outward side (n/e/s/w)

    def open_edges(self) -> set[Edge]:
        return {facing_edge(self.ports[k], f) for k, f in (self.facings or {}).items()}


@dataclass(frozen=True)
class Placement:
    dx: int = 0
    dy: int = 0
    rotation: int = 0  # quarter turns counterclockwise


def rot_square_ccw(sq: Square, height: int) -> Square:
    c, r = sq
    return (height - 1 - r, c)


def rot_slot_ccw(slot: Wall, height: int) -> Wall:
    o, x, y = slot
    return ("V" if o == "H" else "H", height - y, x)


def transform_blueprint(bp: GadgetBlueprint, placement: Placement) -> GadgetBlueprint:
    walls = set(bp.walls)
    channels = set(bp.channels)
    ports = dict(bp.ports)
    whitelist = set(bp.whitelist)
    facings = dict(bp.facings or {})
    w, h = bp.width, bp.height
    for _ in range(placement.rotation % 4):
        walls = {rot_slot_ccw(s, h) for s in walls}
        channels = {rot_square_ccw(s, h) for s in channels}
        ports = {k: rot_square_ccw(v, h) for k, v in ports.items()}
        whitelist = {rot_slot_ccw(s, h) for s in whitelist}
        facings = {k: FACING_CCW[f] for k, f in facings.items()}
        w, h = h, w
    dx, dy = placement.dx, placement.dy
    return GadgetBlueprint(
        walls=frozenset((o, x + dx, y + dy) for (o, x, y) in walls),
        width=w,
        height=h,
        ports={k: (c + dx, r + dy) for k, (c, r) in ports.items()},
        meta=dict(bp.meta),
        channels=frozenset((c + dx, r + dy) for (c, r) in channels),
        whitelist=frozenset((o, x + dx, y + dy) for (o, x, y) in whitelist),
        facings=facings,
    )


def place(
    bp: GadgetBlueprint,
    placement: Placement,
    board_walls: Iterable[Wall],
    n: int,
) -> frozenset[Wall]:
    """Transformed wall set of a blueprint; errors on bounds or conflicts."""
    moved = transform_blueprint(bp, placement)
    board_walls = frozenset(board_walls)
    for sq in moved.channels | frozenset(moved.ports.values()):
        c, r = sq
        if not (0 <= c < n and 0 <= r < n):
            raise OutOfBounds(f"square {sq} outside board of side {n}")
    for slot in sorted(moved.walls):
        if not _slot_on_board(slot, n):
            raise OutOfBounds(f"wall {slot} outside board of side {n}")
        if slot in board_walls:
            raise Conflict("overlap", f"{slot} already placed")
        kind = slot_conflicts(board_walls, slot)
        if kind:
            raise Conflict(kind, f"{slot}")
    return frozenset(moved.walls)


# ---------------------------------------------------------------------------
# Channel painters (shared between blueprints and the compiler)
# ---------------------------------------------------------------------------

def hchannel(x0: int, x1: int, row: int) -> set[Square]:
    return {(x, row) for x in range(min(x0, x1), max(x0, x1) + 1)}


def vchannel(col: int, y0: int, y1: int) -> set[Square]:
    return {(col, y) for y in range(min(y0, y1), max(y0, y1) + 1)}


def snake_teeth(span: int) -> int:
    """How many teeth fit in a base run of `span` steps (6 columns per tooth)."""
    return max(0, (span - 2) // 6)


def snake_max_excess(span: int, depth: int) -> int:
    return snake_teeth(span) * 2 * max(0, depth)


def snake_channels(
    x_in: int,
    x_out: int,
    row: int,
    depth: int,
    excess: int,
    direction: int = 1,
) -> set[Square]:
    """West-to-east channel from (x_in,row) to (x_out,row), `excess` steps long(er).

    Teeth rise north (direction=+1) or sink south (-1).  Each tooth is a
    pair of legs three apart joined at the far row; the base run under a
    tooth is interrupted, forcing the detour.  excess must be even and fit
    snake_max_excess(x_out - x_in, depth).
    """
    if excess % 2 != 0 or excess < 0:
        raise InvalidParam(f"excess must be even and non-negative, got {excess}")
    span = x_out - x_in
    if span < 2:
        raise InvalidParam("snake span too short")
    if excess > snake_max_excess(span, depth):
        raise InvalidParam(f"excess {excess} exceeds capacity {snake_max_excess(span, depth)}")
    channels: set[Square] = set()
    remaining = excess
    x = x_in
    first = True
    while remaining > 0:
        a = x + 1 if first else x + 3  # keep legs 3 apart across teeth
        first = False
        d = min(depth, remaining // 2)
        far = row + direction * d
        channels |= hchannel(x, a, row)
        channels |= vchannel(a, min(row, far), max(row, far))
        channels |= hchannel(a, a + 3, far)
        channels |= vchannel(a + 3, min(row, far), max(row, far))
        remaining -= 2 * d
        x = a + 3
    channels |= hchannel(x, x_out, row)
    return channels


def unblockable_t_channels(mirror: bool = False) -> tuple[set[Square], dict[str, Square]]:
    """Channel shape of the pass-anywhere T-junction (stem pointing south).

    The stem hangs off the bar both at a direct T and, via a bypass loop,
    through side attachments whose arrival direction turns the final move
    into a side-step, which a parked pawn cannot deny.  One pawn cannot
    cover both turn-in points; validated by the adversarial region check.
    `mirror` flips the bypass to the east side (same behavior by symmetry).
    """
    bar = hchannel(0, 6, 5)
    stem = vchannel(4, 0, 4)
    bypass = vchannel(1, 2, 4)
    leg = {(2, 2), (3, 2)}
    channels = bar | stem | bypass | leg
    ports = {"w": (0, 5), "e": (6, 5), "s": (4, 0)}
    if mirror:
        channels = {(6 - c, r) for (c, r) in channels}
        ports = {"w": (0, 5), "e": (6, 5), "s": (2, 0)}
    return channels, ports


def standard_t_channels() -> tuple[set[Square], dict[str, Square]]:
    bar = hchannel(0, 6, 3)
    stem = vchannel(3, 0, 3)
    return bar | stem, {"w": (0, 3), "e": (6, 3), "s": (3, 0)}


def cross_channels() -> tuple[set[Square], dict[str, Square]]:
    horiz = hchannel(0, 6, 3)
    vert = vchannel(3, 0, 6)
    return horiz | vert, {"w": (0, 3), "e": (6, 3), "s": (3, 0), "n": (3, 6)}


def truth_box_channels() -> tuple[set[Square], dict[str, Square], frozenset[Wall]]:
    """2x2 assignment box over the west column, stubs below and above."""
    stub_s = vchannel(1, 0, 2)
    box = {(1, 3), (2, 3), (1, 4), (2, 4)}
    stub_n = vchannel(1, 5, 7)
    channels = stub_s | box | stub_n
    ports = {"s": (1, 0), "n": (1, 7)}
    whitelist = frozenset({("H", 2, 4), ("V", 2, 4)})
    return channels, ports, whitelist


def victory_block_channels() -> tuple[set[Square], dict[str, Square], frozenset[Wall]]:
    """Width-3 bottom chamber of a victory corridor: 2x2 box, one closure slot."""
    top = vchannel(1, 4, 6)
    box = {(1, 2), (2, 2), (1, 3), (2, 3)}
    bottom = vchannel(1, 0, 1)
    channels = top | box | bottom
    ports = {"top": (1, 6), "goal": (1, 0)}
    whitelist = frozenset({("H", 2, 3)})
    return channels, ports, whitelist


T_SHAPE_W = 7   # squares, stem-south orientation
T_SHAPE_H = 6


def rot_cells_ccw(cells: Iterable[Square], height: int) -> set[Square]:
    return {rot_square_ccw(sq, height) for sq in cells}


def rot_cells_cw(cells: Iterable[Square], width: int) -> set[Square]:
    # CW = three CCW turns; directly: (c, r) -> (r, width - 1 - c)
    return {(r, width - 1 - c) for (c, r) in cells}


def chamber_channels(k: int, mid_len: int = 10) -> tuple[set[Square], dict[str, Square], frozenset[Wall], dict]:
    """Bank of k sealable corridors between two junction columns.

    Entrance and exit are the tops of the west and east columns; corridor q
    hangs at depth q (top-first), so the through-distance grows with q.
    Each corridor has one whitelisted gap where a single vertical wall
    seals it.  All column junctions are pass-anywhere T shapes; the east
    column uses the mirrored shape so both bypass loops point away from
    the corridors (mid_len = 2 mod 4 keeps the gap clear of chain walls).
    """
    if k < 2:
        raise InvalidParam(f"chamber needs at least 2 corridors, got {k}")
    if mid_len < 6 or mid_len % 4 != 2:
        raise InvalidParam("mid_len must be >= 6 and = 2 mod 4")
    t_cells, _ = unblockable_t_channels()
    t_cells_m, _ = unblockable_t_channels(mirror=True)
    west_t = rot_cells_ccw(t_cells, T_SHAPE_H)     # stem east, bar on local col 0
    east_t = rot_cells_cw(t_cells_m, T_SHAPE_W)    # stem west, bar on local col 5

    pitch = 7
    top = k * pitch + 1
    wx = 1                       # west column bar x
    ex0 = wx + 6 + mid_len       # east instance local origin x
    channels: set[Square] = set()
    corridor_rows = []
    whitelist = set()
    gap_x = wx + 6 + mid_len // 2
    for q in range(k):
        oy = top - (q + 1) * pitch
        channels |= {(wx + c, oy + r) for (c, r) in west_t}
        channels |= {(ex0 + c, oy + r) for (c, r) in east_t}
        row = oy + 4
        corridor_rows.append(row)
        channels |= hchannel(wx + 6, ex0 - 1, row)
        whitelist.add(("V", gap_x, row + 1))
    in_port = (wx, top)
    out_port = (ex0 + 5, top)
    channels.add(in_port)
    channels.add(out_port)
    ports = {"in": in_port, "out": out_port}
    meta = {
        "corridor_count": k,
        "corridor_rows": tuple(corridor_rows),
        "gap_x": gap_x,
        "in_col": wx,
        "out_col": ex0 + 5,
    }
    return channels, ports, frozenset(whitelist), meta


def port_open_edges(ports: dict[str, Square], facings: dict[str, str]) -> set[Edge]:
    """Each port square keeps exactly its declared outward edge open."""
    return {facing_edge(ports[k], f) for k, f in facings.items()}


def _normalize(channels, walls, ports, whitelist=frozenset()):
    """Shift so channel squares start at (1,1); return pieces plus the bbox."""
    minx = min(c for c, _ in channels)
    miny = min(r for _, r in channels)
    dx, dy = 1 - minx, 1 - miny
    channels2 = frozenset((c + dx, r + dy) for c, r in channels)
    walls2 = frozenset((o, x + dx, y + dy) for (o, x, y) in walls)
    ports2 = {k: (c + dx, r + dy) for k, (c, r) in ports.items()}
    wl2 = frozenset((o, x + dx, y + dy) for (o, x, y) in whitelist)
    width = max(c for c, _ in channels2) + 2
    height = max(r for _, r in channels2) + 2
    return channels2, walls2, ports2, wl2, width, height


def _blueprint_from_channels(
    channels: set[Square],
    ports: dict[str, Square],
    facings: dict[str, str],
    meta: dict,
    whitelist: frozenset[Wall] = frozenset(),
) -> GadgetBlueprint:
    open_edges = port_open_edges(ports, facings)
    walls = enclose(channels, open_edges, whitelist)
    channels2, walls2, ports2, wl2, width, height = _normalize(
        channels, walls, ports, whitelist
    )
    return GadgetBlueprint(
        walls=walls2,
        width=width,
        height=height,
        ports=ports2,
        meta=dict(meta),
        channels=channels2,
        whitelist=wl2,
        facings=dict(facings),
    )


def _rebase(bp: GadgetBlueprint) -> GadgetBlueprint:
    """Re-anchor a rotated blueprint so channels start at (1,1)."""
    minx = min(c for c, _ in bp.channels) - 1
    miny = min(r for _, r in bp.channels) - 1
    out = transform_blueprint(bp, Placement(dx=-minx, dy=-miny))
    width = max(c for c, _ in out.channels) + 2
    height = max(r for _, r in out.channels) + 2
    return GadgetBlueprint(
        walls=out.walls,
        width=width,
        height=height,
        ports=out.ports,
        meta=out.meta,
        channels=out.channels,
        whitelist=out.whitelist,
    )


# ---------------------------------------------------------------------------
# Public constructors
# ---------------------------------------------------------------------------

def build_corridor(length: int, axis: str = "horizontal") -> GadgetBlueprint:
    """Straight anti-blocked corridor whose ports lie `length` steps apart."""
    if length < 2:
        raise InvalidParam(f"corridor length must be >= 2, got {length}")
    channels = hchannel(1, 1 + length, 2)
    ports = {"a": (1, 2), "b": (1 + length, 2)}
    bp = _blueprint_from_channels(
        channels, ports, {"a": "w", "b": "e"}, {"dist:a:b": length}
    )
    if axis == "vertical":
        bp = _rebase(transform_blueprint(bp, Placement(rotation=1)))
    elif axis != "horizontal":
        raise InvalidParam(f"axis must be horizontal or vertical, got {axis!r}")
    return bp


def build_elongator(extra: int) -> GadgetBlueprint:
    """Zig-zag insert adding exactly `extra` (even, >= 2) steps between its ports."""
    if extra < 2 or extra % 2 != 0:
        raise InvalidParam(f"elongator excess must be even and >= 2, got {extra}")
    depth = min(extra // 2, 6)
    teeth = (extra // 2 + depth - 1) // depth
    span = max(6 * teeth + 2, 8)
    channels = snake_channels(1, 1 + span, 1, depth, extra)
    ports = {"a": (1, 1), "b": (1 + span, 1)}
    return _blueprint_from_channels(
        channels, ports, {"a": "w", "b": "e"},
        {"dist:a:b": span + extra, "excess": extra},
    )


def build_winding_road(
    L: int, span: Optional[int] = None, depth: Optional[int] = None
) -> GadgetBlueprint:
    """Horizontal corridor whose traversal exceeds the straight span by exactly L."""
    if L < 2 or L % 2 != 0:
        raise InvalidParam(f"winding excess must be even and >= 2, got {L}")
    if depth is None:
        depth = max(2, min(L // 2, 10))
    if span is None:
        span = 6 * ((L // 2 + depth - 1) // depth) + 4
    if snake_max_excess(span, depth) < L:
        raise InvalidParam(f"span {span} x depth {depth} cannot host excess {L}")
    channels = snake_channels(1, 1 + span, 1, depth, L)
    ports = {"a": (1, 1), "b": (1 + span, 1)}
    return _blueprint_from_channels(
        channels, ports, {"a": "w", "b": "e"}, {"dist:a:b": span + L, "excess": L}
    )


def build_long_winding_road(
    L: int, span: Optional[int] = None, depth: Optional[int] = None
) -> GadgetBlueprint:
    """Vertical corridor with excess exactly 3L (south and north ports)."""
    if L < 2 or L % 2 != 0:
        raise InvalidParam(f"winding excess must be even and >= 2, got {L}")
    excess = 3 * L
    if depth is None:
        depth = max(2, min(excess // 2, 14))
    if span is None:
        span = 6 * ((excess // 2 + depth - 1) // depth) + 4
    if snake_max_excess(span, depth) < excess:
        raise InvalidParam(f"span {span} x depth {depth} cannot host excess {excess}")
    channels = snake_channels(1, 1 + span, 1, depth, excess)
    ports = {"a": (1, 1), "b": (1 + span, 1)}
    flat = _blueprint_from_channels(
        channels, ports, {"a": "w", "b": "e"},
        {"dist:a:b": span + excess, "excess": excess},
    )
    return _rebase(transform_blueprint(flat, Placement(rotation=1)))


def build_t_junction_unblockable(rotation: int = 0) -> GadgetBlueprint:
    channels, ports = unblockable_t_channels()
    bp = _blueprint_from_channels(
        channels, ports, {"w": "w", "e": "e", "s": "s"},
        {"dist:w:e": 6, "dist:w:s": 10, "dist:e:s": 8},
    )
    if rotation % 4:
        bp = _rebase(transform_blueprint(bp, Placement(rotation=rotation % 4)))
    return bp


def build_t_junction_standard(rotation: int = 0) -> GadgetBlueprint:
    channels, ports = standard_t_channels()
    bp = _blueprint_from_channels(
        channels, ports, {"w": "w", "e": "e", "s": "s"},
        {"dist:w:e": 6, "dist:w:s": 6, "dist:e:s": 6},
    )
    if rotation % 4:
        bp = _rebase(transform_blueprint(bp, Placement(rotation=rotation % 4)))
    return bp


def build_cross_junction() -> GadgetBlueprint:
    channels, ports = cross_channels()
    return _blueprint_from_channels(
        channels, ports, {"w": "w", "e": "e", "s": "s", "n": "n"},
        {"dist:w:e": 6, "dist:n:s": 6, "dist:w:n": 6},
    )


def build_truth_box() -> GadgetBlueprint:
    channels, ports, whitelist = truth_box_channels()
    return _blueprint_from_channels(
        channels, ports, {"s": "s", "n": "n"}, {"dist:s:n": 7}, whitelist=whitelist
    )


def build_victory_block_chamber() -> GadgetBlueprint:
    channels, ports, whitelist = victory_block_channels()
    return _blueprint_from_channels(
        channels, ports, {"top": "n", "goal": "s"},
        {"dist:top:goal": 6}, whitelist=whitelist,
    )


def build_chamber(k: int) -> GadgetBlueprint:
    channels, ports, whitelist, meta = chamber_channels(k)
    return _blueprint_from_channels(
        channels, ports, {"in": "n", "out": "n"}, meta, whitelist=whitelist
    )
