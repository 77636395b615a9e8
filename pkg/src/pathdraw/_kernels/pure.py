"""Pure-Python kernels for the performance-critical inner loops.

The compiled twin in ``_native.pyx`` implements the same algorithms with the
same tie-breaking, step for step, so results never depend on which backend is
active. Keep the two files in sync.
"""

from __future__ import annotations

BACKEND = "pure"


def hopcroft_karp(
    n_left: int,
    n_right: int,
    indptr: list[int],
    targets: list[int],
) -> tuple[list[int], list[int]]:
    """Maximum-cardinality bipartite matching over a CSR adjacency.

    ``targets[indptr[u]:indptr[u+1]]`` must be sorted ascending; BFS and DFS
    visit neighbors in that order and free left vertices in ascending id, so
    the matching returned is deterministic. Returns (match_left, match_right)
    with -1 marking unmatched vertices.
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + n_right + 1
    dist = [0] * n_left
    while True:
        # BFS phase: layer left vertices, stop at the first free-right layer
        queue: list[int] = []
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = inf
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if du >= found:
                continue
            for j in range(indptr[u], indptr[u + 1]):
                w = match_r[targets[j]]
                if w == -1:
                    if found == inf:
                        found = du + 1
                elif dist[w] == inf:
                    dist[w] = du + 1
                    queue.append(w)
        if found == inf:
            return match_l, match_r
        # DFS phase: vertex-disjoint shortest augmenting paths, current-arc
        ptr = list(indptr[:n_left])
        for s in range(n_left):
            if match_l[s] != -1:
                continue
            stack = [s]
            varc: list[int] = []
            while stack:
                u = stack[-1]
                du = dist[u]
                progressed = False
                while ptr[u] < indptr[u + 1]:
                    v = targets[ptr[u]]
                    ptr[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if du + 1 == found:
                            varc.append(v)
                            for t in range(len(stack) - 1, -1, -1):
                                match_l[stack[t]] = varc[t]
                                match_r[varc[t]] = stack[t]
                            stack = []
                            progressed = True
                            break
                    elif dist[w] == du + 1:
                        varc.append(v)
                        stack.append(w)
                        progressed = True
                        break
                if not progressed:
                    dist[u] = inf
                    stack.pop()
                    if varc:
                        varc.pop()


def compact_levels(
    order: list[int],
    in_indptr: list[int],
    in_sources: list[int],
) -> list[int]:
    """Level DP: 0 for vertices with no incoming edge, else 1 + max over sources.

    ``order`` must list every vertex after all of its predecessors.
    """
    levels = [0] * len(order)
    for v in order:
        best = -1
        for j in range(in_indptr[v], in_indptr[v + 1]):
            w = in_sources[j]
            if levels[w] > best:
                best = levels[w]
        levels[v] = best + 1
    return levels


def count_segment_crossings(
    x1: list[int],
    y1: list[int],
    x2: list[int],
    y2: list[int],
    owner: list[int],
    kind: list[int],
    vertex_points: set[tuple[int, int]],
) -> tuple[int, int, int, int, int, int]:
    """Count crossing pairs among integer segments, bucketed by kind pair.

    A pair of segments from distinct owners crosses when it shares at least
    one point that is not a vertex grid position (edges meeting at a common
    vertex, and segments brushing a vertex, are not crossings; collinear
    overlaps count once per pair). Kinds are 0=cross edge, 1=path edge,
    2=interval geometry; the result is (c00, c01, c02, c11, c12, c22).
    """
    n = len(x1)
    ymin = [0] * n
    ymax = [0] * n
    xmin = [0] * n
    xmax = [0] * n
    for i in range(n):
        a, b = y1[i], y2[i]
        ymin[i], ymax[i] = (a, b) if a <= b else (b, a)
        a, b = x1[i], x2[i]
        xmin[i], xmax[i] = (a, b) if a <= b else (b, a)
    order = sorted(range(n), key=lambda i: ymin[i])
    counts = [0] * 6  # indexed by _PAIR_SLOT
    for oi in range(n):
        i = order[oi]
        top = ymax[i]
        for oj in range(oi + 1, n):
            j = order[oj]
            if ymin[j] > top:
                break
            if owner[i] == owner[j]:
                continue
            if xmin[j] > xmax[i] or xmax[j] < xmin[i]:
                continue
            if _pair_crosses(
                x1[i], y1[i], x2[i], y2[i],
                x1[j], y1[j], x2[j], y2[j],
                vertex_points,
            ):
                a, b = kind[i], kind[j]
                if a > b:
                    a, b = b, a
                counts[_PAIR_SLOT[a][b]] += 1
    return tuple(counts)  # type: ignore[return-value]


_PAIR_SLOT = [[0, 1, 2], [1, 3, 4], [2, 4, 5]]


def _orient(ax: int, ay: int, bx: int, by: int, cx: int, cy: int) -> int:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _on_segment(ax: int, ay: int, bx: int, by: int, px: int, py: int) -> bool:
    # collinearity already established by the caller
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def _pair_crosses(
    ax1: int, ay1: int, ax2: int, ay2: int,
    bx1: int, by1: int, bx2: int, by2: int,
    vertex_points: set[tuple[int, int]],
) -> bool:
    d1 = _orient(bx1, by1, bx2, by2, ax1, ay1)
    d2 = _orient(bx1, by1, bx2, by2, ax2, ay2)
    d3 = _orient(ax1, ay1, ax2, ay2, bx1, by1)
    d4 = _orient(ax1, ay1, ax2, ay2, bx2, by2)
    if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0:
        # proper interior crossing; excluded only when it lands exactly on a vertex
        rx, ry = ax2 - ax1, ay2 - ay1
        sx, sy = bx2 - bx1, by2 - by1
        den = rx * sy - ry * sx
        tnum = (bx1 - ax1) * sy - (by1 - ay1) * sx
        pxn = ax1 * den + tnum * rx
        pyn = ay1 * den + tnum * ry
        if pxn % den == 0 and pyn % den == 0:
            return (pxn // den, pyn // den) not in vertex_points
        return True
    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        # collinear: measure 1-D overlap along the longer-varying axis
        if ax1 != ax2 or bx1 != bx2:
            lo = max(min(ax1, ax2), min(bx1, bx2))
            hi = min(max(ax1, ax2), max(bx1, bx2))
        else:
            lo = max(min(ay1, ay2), min(by1, by2))
            hi = min(max(ay1, ay2), max(by1, by2))
        if hi < lo:
            return False
        if hi > lo:
            return True  # positive-length overlap is always visible ink
        # single touching point: it is an endpoint of one segment on the other
        for px, py in ((ax1, ay1), (ax2, ay2), (bx1, by1), (bx2, by2)):
            if _on_segment(ax1, ay1, ax2, ay2, px, py) and _on_segment(bx1, by1, bx2, by2, px, py):
                return (px, py) not in vertex_points
        return False
    # non-collinear touch: at most one shared point, an endpoint on the other segment
    if d1 == 0 and _on_segment(bx1, by1, bx2, by2, ax1, ay1):
        return (ax1, ay1) not in vertex_points
    if d2 == 0 and _on_segment(bx1, by1, bx2, by2, ax2, ay2):
        return (ax2, ay2) not in vertex_points
    if d3 == 0 and _on_segment(ax1, ay1, ax2, ay2, bx1, by1):
        return (bx1, by1) not in vertex_points
    if d4 == 0 and _on_segment(ax1, ay1, ax2, ay2, bx2, by2):
        return (bx2, by2) not in vertex_points
    return False
