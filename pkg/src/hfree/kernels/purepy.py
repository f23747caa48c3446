"""Pure-Python kernel backend.

Mirrors hfree.kernels._fast operation for operation: same traversal order,
same pruning, same node accounting. Results, witnesses and explored counts
are interchangeable with the compiled backend byte for byte.

Edges are held as Python-int bitsets, one bit per vertex.
"""

from __future__ import annotations

from typing import Sequence

VERIFY = 0
MATCHES = 1


def prepare(edges: Sequence[Sequence[int]], n: int) -> list[int]:
    bits = []
    for e in edges:
        b = 0
        for v in e:
            b |= 1 << v
        bits.append(b)
    return bits


def scan(
    bits: list[int],
    m: int,
    n: int,
    k: int,
    targets: Sequence[int],
    mode: int,
    lo: int,
    hi: int,
):
    """Depth-first sweep of increasing index tuples with per-subset checks.

    The intersection of every subset of the current prefix lives in a table
    indexed by position mask; pushing element e at depth d checks all 2^d
    subsets that contain e. A prefix survives only while every checked
    subset has intersection size targets[len(subset) - 1], so a surviving
    full-depth tuple is a conforming k-subset and any mismatch kills the
    whole subtree.

    VERIFY returns the lexicographically first k-subset containing a
    mismatching subset (as a tuple), or None when every k-subset conforms.
    Prefixes range over all of [lo, hi) x ... x [.., m) because a mismatch
    among fewer than k edges still completes to a failing k-subset.

    MATCHES returns every conforming k-subset with first element in
    [lo, hi), in lexicographic order.
    """
    table = [0] * (1 << k)
    idx = [0] * k
    best: tuple[int, ...] | None = None
    out: list[tuple[int, ...]] = []

    def completion(verts: tuple[int, ...]) -> tuple[int, ...]:
        # lex-least k-superset: pad with the smallest absent vertices
        have = set(verts)
        filled = list(verts)
        v = 0
        while len(filled) < k:
            if v not in have:
                filled.append(v)
            v += 1
        filled.sort()
        return tuple(filled)

    def node(depth: int, start: int, stop: int) -> None:
        nonlocal best
        for e in range(start, stop):
            idx[depth] = e
            bit = 1 << depth
            eb = bits[e]
            viol = -1
            for s in range(bit):
                inter = (table[s] & eb) if s else eb
                table[s | bit] = inter
                if inter.bit_count() != targets[s.bit_count()]:
                    viol = s | bit
                    break
            if viol >= 0:
                if mode == VERIFY:
                    verts = tuple(idx[j] for j in range(depth + 1) if viol >> j & 1)
                    cand = completion(verts)
                    if best is None or cand < best:
                        best = cand
                continue
            if depth + 1 == k:
                if mode == MATCHES:
                    out.append(tuple(idx))
                continue
            if mode == VERIFY and best is not None:
                if completion(tuple(idx[: depth + 1])) >= best:
                    continue
            if mode == VERIFY:
                node(depth + 1, e + 1, m)
            else:
                node(depth + 1, e + 1, m - k + depth + 2)

    if hi > lo:
        node(0, lo, hi)
    if mode == VERIFY:
        return best
    return out


def mis_solve(n: int, k: int, conflicts: Sequence[tuple[int, ...]]):
    """Exact maximum independent set of a k-uniform conflict hypergraph.

    Phase 1 establishes the optimum: depth-first include/exclude over
    vertices in conflict-degree-descending order (ties by index), seeded
    with a greedy solution, pruned by the remaining-vertex count. Phase 2
    rescans in plain index order, include-first, stopping at the first
    independent set of optimum size; that set is the lexicographically
    smallest maximum witness.

    Returns (alpha, witness, explored) where explored counts search nodes
    entered across both phases.
    """
    if not conflicts:
        return n, tuple(range(n)), 0
    nconf = len(conflicts)
    per_vertex: list[list[int]] = [[] for _ in range(n)]
    for ci, c in enumerate(conflicts):
        for v in c:
            per_vertex[v].append(ci)
    order = sorted(range(n), key=lambda v: (-len(per_vertex[v]), v))
    counts = [0] * nconf
    explored = 0

    def blocked(v: int) -> bool:
        for c in per_vertex[v]:
            if counts[c] == k - 1:
                return True
        return False

    def add(v: int) -> None:
        for c in per_vertex[v]:
            counts[c] += 1

    def drop(v: int) -> None:
        for c in per_vertex[v]:
            counts[c] -= 1

    seed = []
    for v in order:
        if not blocked(v):
            add(v)
            seed.append(v)
    for v in seed:
        drop(v)

    best = len(seed)

    def dfs_value(pos: int, cnt: int) -> None:
        nonlocal best, explored
        explored += 1
        if cnt + (n - pos) <= best:
            return
        if pos == n:
            best = cnt
            return
        v = order[pos]
        if not blocked(v):
            add(v)
            dfs_value(pos + 1, cnt + 1)
            drop(v)
        dfs_value(pos + 1, cnt)

    dfs_value(0, 0)
    alpha = best

    witness: tuple[int, ...] | None = None
    chosen: list[int] = []

    def dfs_witness(pos: int, cnt: int) -> None:
        nonlocal witness, explored
        if witness is not None:
            return
        explored += 1
        if cnt == alpha:
            witness = tuple(chosen)
            return
        if cnt + (n - pos) <= alpha - 1:
            return
        if not blocked(pos):
            add(pos)
            chosen.append(pos)
            dfs_witness(pos + 1, cnt + 1)
            chosen.pop()
            drop(pos)
        dfs_witness(pos + 1, cnt)

    dfs_witness(0, 0)
    assert witness is not None
    return alpha, witness, explored
