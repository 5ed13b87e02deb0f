"""Background search for NoForcedWin positions (spec example witness hunt)."""
import random
import sys
import time

from quoridor_hardness.board import WHITE, BLACK, Position, validate, ValidationError
from quoridor_hardness.solver import _universe_tables, NO_FORCED_WIN

deadline = time.time() + float(sys.argv[1]) if len(sys.argv) > 1 else time.time() + 480
rng = random.Random(2024)
n = 6
squares = [(c, r) for c in range(n) for r in range(n)]
slots = [(o, x, y) for o in "HV" for x in range(1, n) for y in range(1, n)]
hslots = [s for s in slots if s[0] == "H"]
tried = 0
while time.time() < deadline:
    tried += 1
    style = rng.random()
    if style < 0.5:
        walls = frozenset(rng.sample(hslots, rng.randint(4, 7)))
    elif style < 0.8:
        walls = frozenset(rng.sample(slots, rng.randint(4, 8)))
    else:
        k = rng.randint(2, 4)
        walls = frozenset(rng.sample(hslots, k)) | frozenset(rng.sample(slots, 8 - k))
    pos0 = Position(n, (0, 1), (5, 4), walls, 0, 0, WHITE)
    try:
        validate(pos0)
    except ValidationError:
        continue
    try:
        vals = _universe_tables(n, walls, 0, 0)
    except Exception:
        continue
    _universe_tables.cache_clear()
    cfg = (walls, 0, 0)
    hits = []
    for w in squares:
        for b in squares:
            if w == b:
                continue
            for t in (WHITE, BLACK):
                v = vals.get((w, b, cfg, t))
                if v and v[0] == NO_FORCED_WIN:
                    pos = Position(n, w, b, walls, 0, 0, t)
                    try:
                        validate(pos)
                        hits.append((w, b, t))
                    except ValidationError:
                        pass
    if hits:
        print("FOUND", sorted(walls), hits[:5], flush=True)
        break
print("scan done; universes tried:", tried, flush=True)
