"""Independent brute-force oracles for the test suite.

Everything here is deliberately written with different algorithms and
arithmetic than the package (exhaustive enumeration, exact rationals) so the
two sides can check each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from pathdraw.dagcore import Dag


def longest_path_by_enumeration(g: Dag) -> tuple[list[int], int]:
    """Per-vertex longest incoming path length via exhaustive DFS (n <= ~12)."""
    best = [0] * g.vertex_count

    def walk(v: int, length: int) -> None:
        if length > best[v]:
            best[v] = length
        for w in g.out_adjacency[v]:
            walk(w, length + 1)

    for v in range(g.vertex_count):
        walk(v, 0)
    return best, max(best, default=0)


def min_path_partition_size(g: Dag) -> int:
    """Minimum number of vertex-disjoint covering paths, by exhaustive search."""
    full = frozenset(range(g.vertex_count))

    def forward_tails(v: int, avail: frozenset[int]):
        yield (v,)
        for w in g.out_adjacency[v]:
            if w in avail:
                for tail in forward_tails(w, avail - {w}):
                    yield (v,) + tail

    def backward_heads(v: int, avail: frozenset[int]):
        yield (v,)
        for u in g.in_adjacency[v]:
            if u in avail:
                for head in backward_heads(u, avail - {u}):
                    yield head + (v,)

    @lru_cache(maxsize=None)
    def solve(remaining: frozenset[int]) -> int:
        if not remaining:
            return 0
        v = min(remaining)
        avail = remaining - {v}
        best = g.vertex_count
        for head in backward_heads(v, avail):
            left = avail - set(head)
            for tail in forward_tails(v, left):
                used = set(head) | set(tail)
                score = 1 + solve(remaining - frozenset(used))
                if score < best:
                    best = score
        return best

    result = solve(full)
    solve.cache_clear()
    return result


def matching_is_maximum(n_left: int, n_right: int, adjacency: list[list[int]],
                        match_l: list[int], match_r: list[int]) -> bool:
    """No augmenting path exists w.r.t. the given matching (BFS layering + DFS)."""

    def augment(u: int, visited: set[int]) -> bool:
        for v in adjacency[u]:
            if v in visited:
                continue
            visited.add(v)
            if match_r[v] == -1 or augment(match_r[v], visited):
                return True
        return False

    for u in range(n_left):
        if match_l[u] == -1 and augment(u, set()):
            return False
    return True


def max_overlap_depth(ranges: list[tuple[int, int]]) -> int:
    """Max number of closed [s, f] ranges sharing one integer row."""
    if not ranges:
        return 0
    lo = min(s for s, _ in ranges)
    hi = max(f for _, f in ranges)
    return max(sum(1 for s, f in ranges if s <= r <= f) for r in range(lo, hi + 1))


def best_adjacent_weight(weights: dict[tuple[int, int], int], k: int) -> int:
    """Max over all k! orders of the summed weights of adjacent path pairs."""
    from itertools import permutations

    def score(perm: tuple[int, ...]) -> int:
        return sum(
            weights.get((min(a, b), max(a, b)), 0)
            for a, b in zip(perm, perm[1:])
        )

    return max(score(p) for p in permutations(range(k)))


# --- exact-rational segment crossing checker -------------------------------

def _intersection(seg_a, seg_b):
    """('empty' | 'point' | 'overlap', point) for two integer segments."""
    (x1, y1), (x2, y2) = seg_a
    (x3, y3), (x4, y4) = seg_b
    dxa, dya = x2 - x1, y2 - y1
    dxb, dyb = x4 - x3, y4 - y3
    den = dxa * dyb - dya * dxb
    if den == 0:
        if (x3 - x1) * dya - (y3 - y1) * dxa != 0:
            return "empty", None
        # collinear: compare dot-product parameters along segment a's direction
        norm = dxa * dxa + dya * dya
        ta0, ta1 = 0, norm
        tb0 = (x3 - x1) * dxa + (y3 - y1) * dya
        tb1 = (x4 - x1) * dxa + (y4 - y1) * dya
        lo = max(min(ta0, ta1), min(tb0, tb1))
        hi = min(max(ta0, ta1), max(tb0, tb1))
        if lo > hi:
            return "empty", None
        if lo == hi:
            t = Fraction(lo, norm)
            return "point", (x1 + t * dxa, y1 + t * dya)
        return "overlap", None
    t = Fraction((x3 - x1) * dyb - (y3 - y1) * dxb, den)
    s = Fraction((x3 - x1) * dya - (y3 - y1) * dxa, den)
    if 0 <= t <= 1 and 0 <= s <= 1:
        return "point", (x1 + t * dxa, y1 + t * dya)
    return "empty", None


def count_crossings_exact(segments, vertex_points) -> dict[tuple[int, int], int]:
    """Pairwise crossing counts keyed by sorted kind pair.

    ``segments`` are (x1, y1, x2, y2, owner, kind) tuples; the rule mirrors
    the drawing semantics: any shared point away from a vertex grid position
    counts, collinear overlaps count once per pair.
    """
    counts: dict[tuple[int, int], int] = {}
    for i in range(len(segments)):
        x1, y1, x2, y2, owner_a, kind_a = segments[i]
        for j in range(i + 1, len(segments)):
            x3, y3, x4, y4, owner_b, kind_b = segments[j]
            if owner_a == owner_b:
                continue
            state, point = _intersection(((x1, y1), (x2, y2)), ((x3, y3), (x4, y4)))
            if state == "empty":
                continue
            if state == "point":
                px, py = point
                if px.denominator == 1 and py.denominator == 1 and (int(px), int(py)) in vertex_points:
                    continue
            key = tuple(sorted((kind_a, kind_b)))
            counts[key] = counts.get(key, 0) + 1
    return counts
