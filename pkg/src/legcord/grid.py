"""Grid diagrams (arc presentations): invariants, moves, and a
monotonic simplification search that recognizes split unlinks of unknots.

Conventions used throughout the package:

- columns are numbered 1..n left to right, rows 1..n bottom to top;
- ``xs[i-1]`` / ``os[i-1]`` give the row of the X / O marker in column i;
- each column's segment is oriented X -> O, each row's O -> X;
- vertical segments cross over horizontal ones;
- fronts are obtained by rotating 45 degrees counterclockwise, so
  northwest/southeast corners become right/left cusps and
  northeast/southwest corners smooth.
"""

from collections import deque

from .front import FrontWord


class GridError(ValueError):
    pass


class GridDiagram:
    """An n x n grid with one X and one O in each row and column."""

    __slots__ = ("n", "xs", "os")

    def __init__(self, n, xs, os):
        self.n = int(n)
        self.xs = tuple(int(v) for v in xs)
        self.os = tuple(int(v) for v in os)
        if len(self.xs) != self.n or len(self.os) != self.n:
            raise GridError("xs and os must each have length n")
        if sorted(self.xs) != list(range(1, self.n + 1)):
            raise GridError("xs is not a permutation of 1..n")
        if sorted(self.os) != list(range(1, self.n + 1)):
            raise GridError("os is not a permutation of 1..n")
        for i in range(self.n):
            if self.xs[i] == self.os[i]:
                raise GridError(f"column {i + 1} has X and O in the same cell")

    def __eq__(self, other):
        return (
            isinstance(other, GridDiagram)
            and (self.n, self.xs, self.os) == (other.n, other.xs, other.os)
        )

    def __hash__(self):
        return hash((self.n, self.xs, self.os))

    def __repr__(self):
        return f"GridDiagram({self.n}, {list(self.xs)}, {list(self.os)})"

    def key(self):
        return (self.xs, self.os)

    # row -> column lookups
    def xcol(self):
        out = [0] * (self.n + 1)
        for c, r in enumerate(self.xs, start=1):
            out[r] = c
        return out

    def ocol(self):
        out = [0] * (self.n + 1)
        for c, r in enumerate(self.os, start=1):
            out[r] = c
        return out

    def to_json(self):
        return {"size": self.n, "x": list(self.xs), "o": list(self.os)}

    @classmethod
    def from_json(cls, data):
        return cls(data["size"], data["x"], data["o"])

    def mirror(self):
        """Reflect across a horizontal axis (reverses all crossings)."""
        f = lambda r: self.n + 1 - r
        return GridDiagram(self.n, [f(r) for r in self.xs], [f(r) for r in self.os])


def grid_validate(g):
    """Trace the link and return its components as cyclic marker tours.

    Each component is a list of (column, row) marker coordinates visited
    in orientation order (X, O, X, O, ...).
    """
    xcol, ocol = g.xcol(), g.ocol()
    seen = set()
    components = []
    for c0 in range(1, g.n + 1):
        if c0 in seen:
            continue
        tour = []
        c = c0
        while c not in seen:
            seen.add(c)
            tour.append((c, g.xs[c - 1]))
            tour.append((c, g.os[c - 1]))
            c = xcol[g.os[c - 1]]
        components.append(tour)
    return components


def _crossings(g):
    """All transversal crossings (column, row, sign).

    Vertical segments are over; sign is +1 when the pair (over
    direction, under direction) is a positive basis.
    """
    xcol, ocol = g.xcol(), g.ocol()
    out = []
    for c in range(1, g.n + 1):
        rx, ro = g.xs[c - 1], g.os[c - 1]
        lo, hi = min(rx, ro), max(rx, ro)
        up = ro > rx  # oriented X -> O
        for r in range(lo + 1, hi):
            ca, cb = xcol[r], ocol[r]
            clo, chi = min(ca, cb), max(ca, cb)
            if clo < c < chi:
                right = xcol[r] > ocol[r]  # oriented O -> X
                sign = 1 if (up != right) else -1
                out.append((c, r, sign))
    return out


def _corners(g):
    """Marker corner classification.

    Returns a list of (col, row, quadrant, is_o) where quadrant is one of
    'NE', 'NW', 'SE', 'SW' (the direction the two arms point).
    """
    xcol, ocol = g.xcol(), g.ocol()
    out = []
    for c in range(1, g.n + 1):
        for r, is_o in ((g.xs[c - 1], False), (g.os[c - 1], True)):
            other_r = g.os[c - 1] if not is_o else g.xs[c - 1]
            other_c = ocol[r] if not is_o else xcol[r]
            vert_up = other_r > r
            horiz_right = other_c > c
            quad = ("N" if vert_up else "S") + ("E" if horiz_right else "W")
            out.append((c, r, quad, is_o))
    return out


def grid_classical_invariants(g):
    """tb, rotation number, and writhe, computed at the grid level.

    For links, tb/r are reported per component (tb of a component counts
    only its self-crossings) along with the total tb.
    """
    comps = grid_validate(g)
    comp_of_col = {}
    for k, tour in enumerate(comps):
        for c, _ in tour[::2]:
            comp_of_col[c] = k
    writhe = 0
    self_writhe = [0] * len(comps)
    xcol = g.xcol()
    for c, r, sign in _crossings(g):
        writhe += sign
        kv = comp_of_col[c]
        kh = comp_of_col[xcol[r]]
        if kv == kh:
            self_writhe[kv] += sign
    nw = [0] * len(comps)
    down = [0] * len(comps)
    up = [0] * len(comps)
    for c, r, quad, is_o in _corners(g):
        k = comp_of_col[c]
        if quad == "NW":
            nw[k] += 1
            if is_o:
                down[k] += 1
            else:
                up[k] += 1
        elif quad == "SE":
            if is_o:
                up[k] += 1
            else:
                down[k] += 1
    tb_comp = [self_writhe[k] - nw[k] for k in range(len(comps))]
    r_comp = [(down[k] - up[k]) // 2 for k in range(len(comps))]
    total_tb = writhe - sum(nw)
    if len(comps) == 1:
        return {"tb": total_tb, "r": r_comp[0], "writhe": writhe, "components": 1}
    return {
        "tb": total_tb,
        "r": r_comp,
        "writhe": writhe,
        "components": len(comps),
        "tb_per_component": tb_comp,
    }


def grid_to_front(g):
    """Convert to a front word by the 45-degree counterclockwise sweep.

    Work in rotated integer coordinates u = col - row (sweep direction)
    and v = col + row (height).  NW corners become right cusps, SE
    corners left cusps, NE/SW corners transparent bends, and grid
    crossings become front crossings.  Events sharing a sweep line are
    serialized top-down; positions are exact counts of curve points
    above the event on its line.
    """
    events = []  # (u, -v, kind)
    for c, r, quad, _ in _corners(g):
        if quad == "NW":
            events.append((c - r, -(c + r), "R"))
        elif quad == "SE":
            events.append((c - r, -(c + r), "L"))
    for c, r, _ in _crossings(g):
        events.append((c - r, -(c + r), "X"))
    events.sort()

    # segments in (u, v) coordinates and bend corners for counting
    verts = []  # (c, lo, hi): u in [c-hi, c-lo], v = 2c - u
    for c in range(1, g.n + 1):
        lo, hi = sorted((g.xs[c - 1], g.os[c - 1]))
        verts.append((c, lo, hi))
    horiz = []  # (r, lo, hi): u in [lo-r, hi-r], v = u + 2r
    xcol, ocol = g.xcol(), g.ocol()
    for r in range(1, g.n + 1):
        lo, hi = sorted((xcol[r], ocol[r]))
        horiz.append((r, lo, hi))
    bends = [
        (c - r, c + r) for c, r, quad, _ in _corners(g) if quad in ("NE", "SW")
    ]

    word = []
    processed = []  # cusp events already serialized on the current line
    cur_u = None
    for u0, neg_v, kind in events:
        v0 = -neg_v
        if u0 != cur_u:
            cur_u = u0
            processed = []
        above = 0
        for c, lo, hi in verts:
            if c - hi < u0 < c - lo and 2 * c - u0 > v0:
                above += 1
        for r, lo, hi in horiz:
            if lo - r < u0 < hi - r and u0 + 2 * r > v0:
                above += 1
        for ub, vb in bends:
            if ub == u0 and vb > v0:
                above += 1
        for vp, kp in processed:
            if vp > v0 and kp == "L":
                above += 2
        word.append((kind, above + 1))
        if kind != "X":
            processed.append((v0, kind))
    return FrontWord(word)


# -- moves ---------------------------------------------------------------


def _interleaved(a1, b1, a2, b2):
    """Strict transversal interleaving of closed intervals."""
    return (a1 < a2 < b1 < b2) or (a2 < a1 < b2 < b1)


def column_commutable(g, i):
    """Can columns i, i+1 (1-based) be exchanged?"""
    if not 1 <= i <= g.n - 1:
        return False
    a1, b1 = sorted((g.xs[i - 1], g.os[i - 1]))
    a2, b2 = sorted((g.xs[i], g.os[i]))
    return not _interleaved(a1, b1, a2, b2)


def row_commutable(g, r):
    if not 1 <= r <= g.n - 1:
        return False
    xcol, ocol = g.xcol(), g.ocol()
    a1, b1 = sorted((xcol[r], ocol[r]))
    a2, b2 = sorted((xcol[r + 1], ocol[r + 1]))
    return not _interleaved(a1, b1, a2, b2)


def apply_move(g, move):
    """Apply one move; raises GridError when inapplicable.

    Moves: ("commute_cols", i), ("commute_rows", r),
    ("translate", "left"|"right"|"up"|"down"),
    ("destabilize", c, r), ("stabilize", c, r, corner) with corner in
    {"XR", "XL", "OR", "OL"} encoding which marker type is doubled and
    whether the new column goes right or left of column c.
    """
    kind = move[0]
    if kind == "commute_cols":
        i = move[1]
        if not column_commutable(g, i):
            raise GridError(f"columns {i},{i + 1} do not commute")
        xs, os_ = list(g.xs), list(g.os)
        xs[i - 1], xs[i] = xs[i], xs[i - 1]
        os_[i - 1], os_[i] = os_[i], os_[i - 1]
        return GridDiagram(g.n, xs, os_)
    if kind == "commute_rows":
        r = move[1]
        if not row_commutable(g, r):
            raise GridError(f"rows {r},{r + 1} do not commute")
        swap = {r: r + 1, r + 1: r}
        return GridDiagram(
            g.n,
            [swap.get(v, v) for v in g.xs],
            [swap.get(v, v) for v in g.os],
        )
    if kind == "translate":
        d = move[1]
        if d == "left":  # first column moves to the far right
            return GridDiagram(g.n, g.xs[1:] + g.xs[:1], g.os[1:] + g.os[:1])
        if d == "right":
            return GridDiagram(g.n, g.xs[-1:] + g.xs[:-1], g.os[-1:] + g.os[:-1])
        if d in ("up", "down"):
            if d == "down":  # bottom row moves to the top
                f = lambda r: r - 1 if r > 1 else g.n
            else:
                f = lambda r: r + 1 if r < g.n else 1
            return GridDiagram(g.n, [f(v) for v in g.xs], [f(v) for v in g.os])
        raise GridError(f"unknown translation {d!r}")
    if kind == "destabilize":
        return _destabilize(g, move[1], move[2])
    if kind == "stabilize":
        return _stabilize(g, move[1], move[2], move[3])
    raise GridError(f"unknown move {move!r}")


def destabilizations(g):
    """All (c, r) such that the 2x2 square at columns c,c+1 and rows
    r,r+1 contains exactly three markers."""
    out = []
    if g.n <= 2:
        return out
    marks = {}
    for c in range(1, g.n + 1):
        marks[(c, g.xs[c - 1])] = "X"
        marks[(c, g.os[c - 1])] = "O"
    for c in range(1, g.n):
        for r in range(1, g.n):
            cnt = sum(
                1
                for cell in ((c, r), (c, r + 1), (c + 1, r), (c + 1, r + 1))
                if cell in marks
            )
            if cnt == 3:
                out.append((c, r))
    return out


def _destabilize(g, c, r):
    cells = [(c, r), (c, r + 1), (c + 1, r), (c + 1, r + 1)]
    marks = {}
    for cc in range(1, g.n + 1):
        marks[(cc, g.xs[cc - 1])] = "X"
        marks[(cc, g.os[cc - 1])] = "O"
    present = [cell for cell in cells if cell in marks]
    if len(present) != 3:
        raise GridError(f"no destabilization at ({c}, {r})")
    # the column (or row) of the square holding two markers is deleted
    if (c, r) in marks and (c, r + 1) in marks:
        dc = c
    elif (c + 1, r) in marks and (c + 1, r + 1) in marks:
        dc = c + 1
    else:
        dc = None
    if dc is not None:
        # delete column dc, merge rows r and r+1
        xs, os_ = [], []
        for cc in range(1, g.n + 1):
            if cc == dc:
                continue
            xs.append(g.xs[cc - 1])
            os_.append(g.os[cc - 1])
        merge = lambda v: r if v in (r, r + 1) else (v - 1 if v > r + 1 else v)
        return GridDiagram(g.n - 1, [merge(v) for v in xs], [merge(v) for v in os_])
    # row version: one row of the square holds two markers; delete that
    # row and merge columns c, c+1
    if (c, r) in marks and (c + 1, r) in marks:
        dr = r
    elif (c, r + 1) in marks and (c + 1, r + 1) in marks:
        dr = r + 1
    else:
        raise GridError(f"degenerate square at ({c}, {r})")
    xs2, os2 = [], []
    for cc in range(1, g.n + 1):
        if cc == c + 1:
            continue
        rx, ro = g.xs[cc - 1], g.os[cc - 1]
        if cc == c:
            # keep the surviving markers of columns c and c+1
            rx = g.xs[c] if rx == dr else rx
            ro = g.os[c] if ro == dr else ro
        xs2.append(rx)
        os2.append(ro)
    shrink = lambda v: v - 1 if v > dr else v
    return GridDiagram(g.n - 1, [shrink(v) for v in xs2], [shrink(v) for v in os2])


def _stabilize(g, c, r, corner):
    """Split the marker at (c, r) into an L-shape across a new row and a
    new column.

    ``corner`` is "X:NW", "O:SE", etc.: the marker type at (c, r) and
    the empty corner of the resulting 2x2 square.  Each stabilization is
    undone by destabilizing that square.
    """
    try:
        t, quad = corner.split(":")
    except (AttributeError, ValueError):
        raise GridError(f"bad stabilization corner {corner!r}")
    if t == "X" and g.xs[c - 1] != r:
        raise GridError(f"no X marker at ({c}, {r})")
    if t == "O" and g.os[c - 1] != r:
        raise GridError(f"no O marker at ({c}, {r})")
    if quad not in ("NW", "NE", "SW", "SE"):
        raise GridError(f"unknown stabilization corner {corner!r}")
    above = quad[0] == "S"  # empty corner south => new row on top of square
    side_right = quad[1] == "W"  # empty corner west => new column on the right
    lift_from = r + 1 if above else r
    lift = lambda v: v + 1 if v >= lift_from else v
    xs = [lift(v) for v in g.xs]
    os_ = [lift(v) for v in g.os]
    # old-column and new-column marker rows within the square
    if above:
        old_row, new_t_row, new_o_row = r + 1, r, r + 1
    else:
        old_row, new_t_row, new_o_row = r, r + 1, r
    if t == "X":
        xs[c - 1] = old_row
        new_x, new_o = new_t_row, new_o_row
    else:
        os_[c - 1] = old_row
        new_o, new_x = new_t_row, new_o_row
    at = c if side_right else c - 1
    xs.insert(at, new_x)
    os_.insert(at, new_o)
    return GridDiagram(g.n + 1, xs, os_)


# -- split detection and simplification ----------------------------------


def split_blocks(g):
    """Decompose into split blocks if possible.

    Returns a list of GridDiagrams (length 1 when not split).  A grid is
    split when, after a cyclic column translation, the columns partition
    into consecutive blocks whose row sets are disjoint.
    """
    n = g.n
    for shift in range(n):
        xs = g.xs[shift:] + g.xs[:shift]
        os_ = g.os[shift:] + g.os[:shift]
        rows_seen = set()
        for cut in range(1, n):
            rows_seen.add(xs[cut - 1])
            rows_seen.add(os_[cut - 1])
            if len(rows_seen) == 2 * cut:
                # prefix columns use exactly their own rows: split found
                left = _subgrid(xs[:cut], os_[:cut])
                right = _subgrid(xs[cut:], os_[cut:])
                return split_blocks(left) + split_blocks(right)
    return [g]


def _subgrid(xs, os_):
    rows = sorted(set(xs) | set(os_))
    remap = {r: i + 1 for i, r in enumerate(rows)}
    return GridDiagram(len(xs), [remap[v] for v in xs], [remap[v] for v in os_])


class SimplificationReport:
    """Outcome of a monotonic simplification search."""

    __slots__ = ("initial", "moves", "final", "blocks", "outcome", "states")

    def __init__(self, initial, moves, final, blocks, outcome, states):
        self.initial = initial
        self.moves = moves
        self.final = final
        self.blocks = blocks
        self.outcome = outcome
        self.states = states

    def replay(self):
        g = self.initial
        for m in self.moves:
            g = apply_move(g, m)
        return g

    def to_json(self):
        return {
            "outcome": self.outcome,
            "moves": [list(m) for m in self.moves],
            "final": self.final.to_json(),
            "components": len(self.blocks) if self.outcome == "split-unlink-of-unknots" else None,
            "states": self.states,
        }


def _is_unlink_form(g):
    blocks = split_blocks(g)
    return all(b.n == 2 for b in blocks), blocks


def grid_simplify(g, budget=10 ** 6):
    """Greedy-first monotonic simplification.

    Destabilizations are taken eagerly; between them a breadth-first
    search over commutations and cyclic translations looks for the next
    destabilizable diagram.  The outcome is ``split-unlink-of-unknots``
    exactly when the diagram decomposes into disjoint blocks each
    reduced to the 2x2 unknot grid.
    """
    moves = []
    states = 0
    cur = g
    while True:
        done, blocks = _is_unlink_form(cur)
        if done:
            return SimplificationReport(g, moves, cur, blocks, "split-unlink-of-unknots", states)
        ds = destabilizations(cur)
        if ds:
            moves.append(("destabilize",) + ds[0])
            cur = _destabilize(cur, *ds[0])
            continue
        # breadth-first over size-preserving moves
        found = None
        visited = {cur.key(): None}
        queue = deque([cur])
        exhausted = True
        while queue:
            states += 1
            if states > budget:
                return SimplificationReport(g, moves, cur, [cur], "budget-exhausted", states)
            h = queue.popleft()
            for mv, nb in _size_preserving_neighbors(h):
                k = nb.key()
                if k in visited:
                    continue
                visited[k] = (h.key(), mv)
                done, _ = _is_unlink_form(nb)
                if destabilizations(nb) or done:
                    found = nb
                    break
                queue.append(nb)
            if found:
                break
        if not found:
            return SimplificationReport(g, moves, cur, [cur], "reduced", states)
        # reconstruct path of moves
        path = []
        k = found.key()
        while visited[k] is not None:
            pk, mv = visited[k]
            path.append(mv)
            k = pk
        moves.extend(reversed(path))
        cur = found


def _size_preserving_neighbors(g):
    out = []
    for d in ("left", "right", "up", "down"):
        out.append((("translate", d), apply_move(g, ("translate", d))))
    for i in range(1, g.n):
        if column_commutable(g, i):
            out.append((("commute_cols", i), apply_move(g, ("commute_cols", i))))
    for r in range(1, g.n):
        if row_commutable(g, r):
            out.append((("commute_rows", r), apply_move(g, ("commute_rows", r))))
    return out
