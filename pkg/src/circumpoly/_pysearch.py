"""Pure-Python backtracking kernel for the circumscribing-polygon search.

Index-based and table-driven so the compiled extension (_fastsearch.pyx)
can mirror it statement for statement.  All geometry is reduced to lookups
in a precomputed orientation-sign table plus integer coordinate compares.

Search contract: depth-first extension of a vertex path anchored at vertex 0
(the lexicographically smallest endpoint, always a hull corner).  With the
hull-order prune enabled the boundary points of conv(V) must be consumed in
CCW boundary order, which both enforces the circular-order necessary
condition and quotients away rotations and reflections of the cycle.
"""

from __future__ import annotations

import time

STATUS_INFEASIBLE = 0
STATUS_FEASIBLE = 1
STATUS_NODE_LIMIT = 2
STATUS_TIME_LIMIT = 3

_TIME_CHECK_MASK = 0x1FFF


def _orient(table, n: int, i: int, j: int, k: int) -> int:
    return table[(i * n + j) * n + k]


def _between(xs, ys, w: int, u: int, v: int) -> bool:
    """w strictly inside segment uv, assuming u, v, w collinear."""
    if min(xs[u], xs[v]) <= xs[w] <= max(xs[u], xs[v]) and \
            min(ys[u], ys[v]) <= ys[w] <= max(ys[u], ys[v]):
        return w != u and w != v
    return False


def _edge_ok(table, n, xs, ys, path, depth, u, v, seg_flat, nseg,
             prune_edge, prune_seg, pruned):
    """Checks for appending edge u->v to path[0:depth] (u == path[depth-1])."""
    if prune_edge:
        # Through-vertex: the new edge may not pass through any other vertex.
        for w in range(n):
            if w != u and w != v and _orient(table, n, u, v, w) == 0 \
                    and _between(xs, ys, w, u, v):
                pruned[1] += 1
                return False
        # Proper crossing against committed edges (the edge ending at u is
        # adjacent and cannot properly cross; overlaps reduce to the
        # through-vertex case).
        for i in range(depth - 2):
            a, b = path[i], path[i + 1]
            d1 = _orient(table, n, a, b, u)
            d2 = _orient(table, n, a, b, v)
            if d1 * d2 < 0:
                d3 = _orient(table, n, u, v, a)
                d4 = _orient(table, n, u, v, b)
                if d3 * d4 < 0:
                    pruned[1] += 1
                    return False
    if prune_seg:
        for s in range(nseg):
            g = seg_flat[2 * s]
            h = seg_flat[2 * s + 1]
            if g == u or g == v or h == u or h == v:
                continue
            d1 = _orient(table, n, g, h, u)
            d2 = _orient(table, n, g, h, v)
            if d1 * d2 < 0:
                d3 = _orient(table, n, u, v, g)
                d4 = _orient(table, n, u, v, h)
                if d3 * d4 < 0:
                    pruned[2] += 1
                    return False
    return True


def _closing_edge_ok(table, n, xs, ys, path, u, seg_flat, nseg):
    """Exact checks for the closing edge u -> path[0], prune-independent."""
    v = path[0]
    for w in range(n):
        if w != u and w != v and _orient(table, n, u, v, w) == 0 \
                and _between(xs, ys, w, u, v):
            return False
    for i in range(1, n - 2):
        a, b = path[i], path[i + 1]
        d1 = _orient(table, n, a, b, u)
        d2 = _orient(table, n, a, b, v)
        if d1 * d2 < 0:
            d3 = _orient(table, n, u, v, a)
            d4 = _orient(table, n, u, v, b)
            if d3 * d4 < 0:
                return False
    for s in range(nseg):
        g = seg_flat[2 * s]
        h = seg_flat[2 * s + 1]
        if g == u or g == v or h == u or h == v:
            continue
        d1 = _orient(table, n, g, h, u)
        d2 = _orient(table, n, g, h, v)
        if d1 * d2 < 0:
            d3 = _orient(table, n, u, v, g)
            d4 = _orient(table, n, u, v, h)
            if d3 * d4 < 0:
                return False
    return True


def _cycle_is_simple(table, n, xs, ys, path):
    """Full exact simplicity check of the completed cycle."""
    for i in range(n):
        a, b = path[i], path[(i + 1) % n]
        # No vertex in the relative interior of any edge.
        for w in range(n):
            if w != a and w != b and _orient(table, n, a, b, w) == 0 \
                    and _between(xs, ys, w, a, b):
                return False
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            c, d = path[j], path[(j + 1) % n]
            d1 = _orient(table, n, a, b, c)
            d2 = _orient(table, n, a, b, d)
            if d1 * d2 < 0:
                d3 = _orient(table, n, c, d, a)
                d4 = _orient(table, n, c, d, b)
                if d3 * d4 < 0:
                    return False
    return True


def _point_in_cycle_2x(xs, ys, path, n, px2, py2) -> int:
    """Locate (px2, py2) against the cycle scaled by 2.

    Returns 1 inside, 0 boundary, -1 outside.  Coordinates are doubled so
    chord midpoints stay integral.
    """
    for i in range(n):
        a, b = path[i], path[(i + 1) % n]
        ax, ay, bx, by = 2 * xs[a], 2 * ys[a], 2 * xs[b], 2 * ys[b]
        crs = (bx - ax) * (py2 - ay) - (by - ay) * (px2 - ax)
        if crs == 0 and min(ax, bx) <= px2 <= max(ax, bx) \
                and min(ay, by) <= py2 <= max(ay, by):
            return 0
    inside = False
    for i in range(n):
        a, b = path[i], path[(i + 1) % n]
        ax, ay, bx, by = 2 * xs[a], 2 * ys[a], 2 * xs[b], 2 * ys[b]
        if (ay > py2) != (by > py2):
            t = (bx - ax) * (py2 - ay) - (by - ay) * (px2 - ax)
            if (t > 0) if by > ay else (t < 0):
                inside = not inside
    return 1 if inside else -1


def _cycle_circumscribes(table, n, xs, ys, path, seg_flat, nseg, pos_in_path):
    """Final verification of a completed cycle, independent of the prunes."""
    if not _cycle_is_simple(table, n, xs, ys, path):
        return False
    for s in range(nseg):
        g = seg_flat[2 * s]
        h = seg_flat[2 * s + 1]
        ig, ih = pos_in_path[g], pos_in_path[h]
        if (ig + 1) % n == ih or (ih + 1) % n == ig:
            continue  # polygon edge
        # Chord: must not touch the boundary besides its endpoints ...
        for i in range(n):
            a, b = path[i], path[(i + 1) % n]
            if a == g or a == h or b == g or b == h:
                continue
            d1 = _orient(table, n, a, b, g)
            d2 = _orient(table, n, a, b, h)
            if d1 * d2 < 0:
                d3 = _orient(table, n, g, h, a)
                d4 = _orient(table, n, g, h, b)
                if d3 * d4 < 0:
                    return False
        # ... and its midpoint must lie strictly inside.
        if _point_in_cycle_2x(xs, ys, path, n,
                              xs[g] + xs[h], ys[g] + ys[h]) != 1:
            return False
    return True


def run_search(n, xs, ys, seg_flat, table, hull_pos, hull_n, forced_after,
               order, prune_hull, prune_seg, prune_edge,
               node_limit, time_limit):
    """Exhaustive DFS from vertex 0.  Returns (status, cycle, stats_tuple).

    stats_tuple = (nodes, pruned_hull, pruned_edge, pruned_seg, peak_depth).
    """
    start_time = time.monotonic()
    deadline = start_time + time_limit
    path = [0] * n
    path[0] = 0
    pos_in_path = [-1] * n
    pos_in_path[0] = 0
    used = 1
    depth = 1
    # iter_state[d]: index into order[path[d-1]] to resume from
    iter_state = [0] * (n + 1)
    hull_seen = [0] * (n + 1)
    hull_seen[1] = 1 if hull_pos[0] == 0 else 0
    nodes = 0
    pruned = [0, 0, 0]  # hull, edge, seg
    peak_depth = 1
    status = STATUS_INFEASIBLE
    found = None

    while depth >= 1:
        if depth == n:
            u = path[n - 1]
            if _closing_edge_ok(table, n, xs, ys, path, u, seg_flat,
                                len(seg_flat) // 2) and \
                    _cycle_circumscribes(table, n, xs, ys, path, seg_flat,
                                         len(seg_flat) // 2, pos_in_path):
                status = STATUS_FEASIBLE
                found = list(path)
                break
            depth -= 1
            used &= ~(1 << path[depth])
            pos_in_path[path[depth]] = -1
            continue

        u = path[depth - 1]
        cand = order[u]
        forced = forced_after[u] if prune_hull else -1
        if forced >= 0 and depth >= 2 and path[depth - 2] == forced:
            forced = -1  # forced hull edge already realized by the previous step
        advanced = False
        i = iter_state[depth]
        while i < len(cand):
            v = cand[i]
            i += 1
            if used >> v & 1:
                continue
            if forced >= 0 and v != forced:
                pruned[0] += 1
                continue
            hp = hull_pos[v]
            if prune_hull and hp >= 0 and hp != hull_seen[depth]:
                pruned[0] += 1
                continue
            if not _edge_ok(table, n, xs, ys, path, depth, u, v, seg_flat,
                            len(seg_flat) // 2, prune_edge, prune_seg,
                            pruned):
                continue
            # accept
            iter_state[depth] = i
            path[depth] = v
            pos_in_path[v] = depth
            used |= 1 << v
            depth += 1
            iter_state[depth] = 0
            hull_seen[depth] = hull_seen[depth - 1] + (1 if hp >= 0 else 0)
            if depth > peak_depth:
                peak_depth = depth
            nodes += 1
            if nodes >= node_limit:
                status = STATUS_NODE_LIMIT
                break
            if nodes & _TIME_CHECK_MASK == 0 and time.monotonic() > deadline:
                status = STATUS_TIME_LIMIT
                break
            advanced = True
            break
        if status in (STATUS_NODE_LIMIT, STATUS_TIME_LIMIT):
            break
        if not advanced:
            if i >= len(cand):
                # exhausted this frame
                depth -= 1
                if depth >= 1:
                    used &= ~(1 << path[depth])
                    pos_in_path[path[depth]] = -1

    elapsed = time.monotonic() - start_time
    stats = (nodes, pruned[0], pruned[1], pruned[2], peak_depth, elapsed)
    return status, found, stats
