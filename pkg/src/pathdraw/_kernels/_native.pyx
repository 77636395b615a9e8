# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; algorithmic twin of ``pure.py`` (same tie-breaking)."""

from cpython cimport array
import array

from libc.stdlib cimport malloc, free

BACKEND = "native"

ctypedef long long i64


cdef array.array _as_ints(data):
    cdef array.array arr = array.array("q", data)
    return arr


def hopcroft_karp(int n_left, int n_right, indptr, targets):
    """Maximum bipartite matching over CSR adjacency; see the pure twin."""
    cdef array.array indptr_a = _as_ints(indptr)
    cdef array.array targets_a = _as_ints(targets)
    cdef i64[::1] ip = indptr_a
    cdef i64[::1] tg = targets_a

    cdef array.array ml_a = array.array("q", bytes(8 * n_left)) if n_left else array.array("q")
    cdef array.array mr_a = array.array("q", bytes(8 * n_right)) if n_right else array.array("q")
    cdef i64[::1] match_l = ml_a
    cdef i64[::1] match_r = mr_a

    cdef i64 inf = n_left + n_right + 1
    cdef i64 *dist = <i64 *> malloc(sizeof(i64) * (n_left if n_left else 1))
    cdef i64 *queue = <i64 *> malloc(sizeof(i64) * (n_left if n_left else 1))
    cdef i64 *ptr = <i64 *> malloc(sizeof(i64) * (n_left if n_left else 1))
    cdef i64 *stack = <i64 *> malloc(sizeof(i64) * (n_left + 1))
    cdef i64 *varc = <i64 *> malloc(sizeof(i64) * (n_left + 1))
    if dist == NULL or queue == NULL or ptr == NULL or stack == NULL or varc == NULL:
        free(dist); free(queue); free(ptr); free(stack); free(varc)
        raise MemoryError()

    cdef i64 u, v, w, du, found, j, s, t
    cdef Py_ssize_t head, tail, depth
    cdef bint progressed

    cdef Py_ssize_t i
    for i in range(n_left):
        match_l[i] = -1
    for i in range(n_right):
        match_r[i] = -1

    try:
        while True:
            head = 0
            tail = 0
            for u in range(n_left):
                if match_l[u] == -1:
                    dist[u] = 0
                    queue[tail] = u
                    tail += 1
                else:
                    dist[u] = inf
            found = inf
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u]
                if du >= found:
                    continue
                for j in range(ip[u], ip[u + 1]):
                    w = match_r[tg[j]]
                    if w == -1:
                        if found == inf:
                            found = du + 1
                    elif dist[w] == inf:
                        dist[w] = du + 1
                        queue[tail] = w
                        tail += 1
            if found == inf:
                break
            for u in range(n_left):
                ptr[u] = ip[u]
            for s in range(n_left):
                if match_l[s] != -1:
                    continue
                stack[0] = s
                depth = 1
                while depth > 0:
                    u = stack[depth - 1]
                    du = dist[u]
                    progressed = False
                    while ptr[u] < ip[u + 1]:
                        v = tg[ptr[u]]
                        ptr[u] += 1
                        w = match_r[v]
                        if w == -1:
                            if du + 1 == found:
                                varc[depth - 1] = v
                                for t in range(depth - 1, -1, -1):
                                    match_l[stack[t]] = varc[t]
                                    match_r[varc[t]] = stack[t]
                                depth = 0
                                progressed = True
                                break
                        elif dist[w] == du + 1:
                            varc[depth - 1] = v
                            stack[depth] = w
                            depth += 1
                            progressed = True
                            break
                    if not progressed:
                        dist[u] = inf
                        depth -= 1
    finally:
        free(dist); free(queue); free(ptr); free(stack); free(varc)

    return list(ml_a), list(mr_a)


def compact_levels(order, in_indptr, in_sources):
    """Level DP over a predecessor-closed visit order; see the pure twin."""
    cdef array.array order_a = _as_ints(order)
    cdef array.array ip_a = _as_ints(in_indptr)
    cdef array.array src_a = _as_ints(in_sources)
    cdef i64[::1] ord_v = order_a
    cdef i64[::1] ip = ip_a
    cdef i64[::1] src = src_a
    cdef Py_ssize_t n = len(order)
    cdef array.array levels_a = array.array("q", bytes(8 * n)) if n else array.array("q")
    cdef i64[::1] levels = levels_a
    cdef i64 v, w, best, j
    cdef Py_ssize_t idx
    for idx in range(n):
        v = ord_v[idx]
        best = -1
        for j in range(ip[v], ip[v + 1]):
            w = src[j]
            if levels[w] > best:
                best = levels[w]
        levels[v] = best + 1
    return list(levels_a)


cdef inline i64 _orient(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy) nogil:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


cdef inline bint _on_segment(i64 ax, i64 ay, i64 bx, i64 by, i64 px, i64 py) nogil:
    cdef i64 lo, hi
    lo = ax if ax < bx else bx
    hi = ax if ax > bx else bx
    if px < lo or px > hi:
        return False
    lo = ay if ay < by else by
    hi = ay if ay > by else by
    return lo <= py <= hi


cdef i64 _VKEY_SHIFT = 32


cdef inline bint _is_vertex(i64 px, i64 py, i64 *vkeys, Py_ssize_t nv) nogil:
    cdef i64 key = (px << _VKEY_SHIFT) | py
    cdef Py_ssize_t lo = 0, hi = nv, mid
    while lo < hi:
        mid = (lo + hi) // 2
        if vkeys[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo < nv and vkeys[lo] == key


cdef bint _pair_crosses(i64 ax1, i64 ay1, i64 ax2, i64 ay2,
                        i64 bx1, i64 by1, i64 bx2, i64 by2,
                        i64 *vkeys, Py_ssize_t nv) nogil:
    cdef i64 d1 = _orient(bx1, by1, bx2, by2, ax1, ay1)
    cdef i64 d2 = _orient(bx1, by1, bx2, by2, ax2, ay2)
    cdef i64 d3 = _orient(ax1, ay1, ax2, ay2, bx1, by1)
    cdef i64 d4 = _orient(ax1, ay1, ax2, ay2, bx2, by2)
    cdef i64 rx, ry, sx, sy, den, tnum, pxn, pyn, lo, hi
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        rx = ax2 - ax1; ry = ay2 - ay1
        sx = bx2 - bx1; sy = by2 - by1
        den = rx * sy - ry * sx
        tnum = (bx1 - ax1) * sy - (by1 - ay1) * sx
        pxn = ax1 * den + tnum * rx
        pyn = ay1 * den + tnum * ry
        if pxn % den == 0 and pyn % den == 0:
            return not _is_vertex(pxn // den, pyn // den, vkeys, nv)
        return True
    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        if ax1 != ax2 or bx1 != bx2:
            lo = max(min(ax1, ax2), min(bx1, bx2))
            hi = min(max(ax1, ax2), max(bx1, bx2))
        else:
            lo = max(min(ay1, ay2), min(by1, by2))
            hi = min(max(ay1, ay2), max(by1, by2))
        if hi < lo:
            return False
        if hi > lo:
            return True
        if _on_segment(ax1, ay1, ax2, ay2, ax1, ay1) and _on_segment(bx1, by1, bx2, by2, ax1, ay1):
            return not _is_vertex(ax1, ay1, vkeys, nv)
        if _on_segment(ax1, ay1, ax2, ay2, ax2, ay2) and _on_segment(bx1, by1, bx2, by2, ax2, ay2):
            return not _is_vertex(ax2, ay2, vkeys, nv)
        if _on_segment(ax1, ay1, ax2, ay2, bx1, by1) and _on_segment(bx1, by1, bx2, by2, bx1, by1):
            return not _is_vertex(bx1, by1, vkeys, nv)
        if _on_segment(ax1, ay1, ax2, ay2, bx2, by2) and _on_segment(bx1, by1, bx2, by2, bx2, by2):
            return not _is_vertex(bx2, by2, vkeys, nv)
        return False
    if d1 == 0 and _on_segment(bx1, by1, bx2, by2, ax1, ay1):
        return not _is_vertex(ax1, ay1, vkeys, nv)
    if d2 == 0 and _on_segment(bx1, by1, bx2, by2, ax2, ay2):
        return not _is_vertex(ax2, ay2, vkeys, nv)
    if d3 == 0 and _on_segment(ax1, ay1, ax2, ay2, bx1, by1):
        return not _is_vertex(bx1, by1, vkeys, nv)
    if d4 == 0 and _on_segment(ax1, ay1, ax2, ay2, bx2, by2):
        return not _is_vertex(bx2, by2, vkeys, nv)
    return False


def count_segment_crossings(x1, y1, x2, y2, owner, kind, vertex_points):
    """Crossing pair counts bucketed by kind pair; see the pure twin."""
    cdef Py_ssize_t n = len(x1)
    cdef array.array x1a = _as_ints(x1), y1a = _as_ints(y1)
    cdef array.array x2a = _as_ints(x2), y2a = _as_ints(y2)
    cdef array.array owner_a = _as_ints(owner), kind_a = _as_ints(kind)
    cdef i64[::1] sx1 = x1a, sy1 = y1a, sx2 = x2a, sy2 = y2a
    cdef i64[::1] own = owner_a, knd = kind_a

    vkeys_list = sorted((px << 32) | py for px, py in vertex_points)
    cdef array.array vkeys_a = _as_ints(vkeys_list)
    cdef i64[::1] vk = vkeys_a if len(vkeys_list) else _as_ints([0])
    cdef Py_ssize_t nv = len(vkeys_list)
    cdef i64 *vkeys = &vk[0] if nv else NULL

    cdef i64 *ymin = <i64 *> malloc(sizeof(i64) * (n if n else 1))
    cdef i64 *ymax = <i64 *> malloc(sizeof(i64) * (n if n else 1))
    cdef i64 *xmin = <i64 *> malloc(sizeof(i64) * (n if n else 1))
    cdef i64 *xmax = <i64 *> malloc(sizeof(i64) * (n if n else 1))
    if ymin == NULL or ymax == NULL or xmin == NULL or xmax == NULL:
        free(ymin); free(ymax); free(xmin); free(xmax)
        raise MemoryError()

    cdef Py_ssize_t i, oi, oj
    for i in range(n):
        ymin[i] = sy1[i] if sy1[i] <= sy2[i] else sy2[i]
        ymax[i] = sy1[i] if sy1[i] > sy2[i] else sy2[i]
        xmin[i] = sx1[i] if sx1[i] <= sx2[i] else sx2[i]
        xmax[i] = sx1[i] if sx1[i] > sx2[i] else sx2[i]

    mins = [a if a <= b else b for a, b in zip(y1, y2)]
    order_list = sorted(range(n), key=mins.__getitem__)
    cdef array.array order_a = _as_ints(order_list)
    cdef i64[::1] order = order_a if n else _as_ints([0])

    cdef i64 counts[3][3]
    for oi in range(3):
        for oj in range(3):
            counts[oi][oj] = 0

    cdef i64 top, a, b
    cdef Py_ssize_t si, sj
    with nogil:
        for oi in range(n):
            si = <Py_ssize_t> order[oi]
            top = ymax[si]
            for oj in range(oi + 1, n):
                sj = <Py_ssize_t> order[oj]
                if ymin[sj] > top:
                    break
                if own[si] == own[sj]:
                    continue
                if xmin[sj] > xmax[si] or xmax[sj] < xmin[si]:
                    continue
                if _pair_crosses(sx1[si], sy1[si], sx2[si], sy2[si],
                                 sx1[sj], sy1[sj], sx2[sj], sy2[sj],
                                 vkeys, nv):
                    a = knd[si]; b = knd[sj]
                    if a > b:
                        a, b = b, a
                    counts[a][b] += 1
    free(ymin); free(ymax); free(xmin); free(xmax)
    return (counts[0][0], counts[0][1], counts[0][2],
            counts[1][1], counts[1][2], counts[2][2])
