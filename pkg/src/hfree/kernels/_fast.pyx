# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Mirrors hfree.kernels.purepy operation for operation: same traversal
order, same pruning, same node accounting. Any divergence in results,
witnesses or explored counts between the two backends is a bug.

Edges are held as packed 64-bit word bitsets, nwords per edge.
"""

import array

from libc.stdlib cimport free, malloc, realloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int hf_popcountll(unsigned long long x) { return __builtin_popcountll(x); }
    #else
    static inline int hf_popcountll(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    #endif
    """
    int hf_popcountll(unsigned long long x) noexcept nogil

VERIFY = 0
MATCHES = 1

cdef enum:
    MAX_K = 12


def prepare(edges, n):
    cdef int nwords = (n + 63) >> 6
    cdef int m = len(edges)
    buf = array.array("Q", bytes(8 * nwords * m))
    if m == 0 or nwords == 0:
        return buf
    cdef unsigned long long[::1] view = buf
    cdef int i
    cdef long v
    for i, e in enumerate(edges):
        for v in e:
            view[i * nwords + (v >> 6)] |= (<unsigned long long> 1) << (v & 63)
    return buf


cdef struct ScanCtx:
    unsigned long long *bits
    unsigned long long *table
    long *targets
    int idx[MAX_K]
    int best[MAX_K]
    int m
    int k
    int nwords
    int mode
    int best_set
    int *matches
    long match_count
    long match_cap
    int oom


cdef void completion(ScanCtx *c, const int *verts, int nverts, int *out) noexcept nogil:
    # lex-least k-superset of verts: merge with the smallest absent values
    cdef int absent[MAX_K]
    cdef int take = c.k - nverts
    cdef int v = 0, vi = 0, ti = 0, a = 0, b = 0, j
    while ti < take:
        while vi < nverts and verts[vi] < v:
            vi += 1
        if vi < nverts and verts[vi] == v:
            v += 1
            continue
        absent[ti] = v
        ti += 1
        v += 1
    for j in range(c.k):
        if a < nverts and (b >= take or verts[a] < absent[b]):
            out[j] = verts[a]
            a += 1
        else:
            out[j] = absent[b]
            b += 1


cdef int lex_less(const int *a, const int *b, int k) noexcept nogil:
    cdef int i
    for i in range(k):
        if a[i] != b[i]:
            return a[i] < b[i]
    return 0


cdef void push_match(ScanCtx *c) noexcept nogil:
    cdef long need = (c.match_count + 1) * c.k
    cdef long cap
    cdef int *grown
    cdef int j
    if need > c.match_cap:
        cap = c.match_cap * 2 if c.match_cap else 4096
        if cap < need:
            cap = need
        grown = <int *> realloc(c.matches, cap * sizeof(int))
        if grown == NULL:
            c.oom = 1
            return
        c.matches = grown
        c.match_cap = cap
    for j in range(c.k):
        c.matches[c.match_count * c.k + j] = c.idx[j]
    c.match_count += 1


cdef void node(ScanCtx *c, int depth, int start, int stop) noexcept nogil:
    cdef int e, s, bit, viol, cnt, j, nv
    cdef unsigned long long *eb
    cdef unsigned long long *dst
    cdef unsigned long long *src
    cdef int verts[MAX_K]
    cdef int cand[MAX_K]
    for e in range(start, stop):
        if c.oom:
            return
        c.idx[depth] = e
        bit = 1 << depth
        eb = &c.bits[<long> e * c.nwords]
        viol = -1
        for s in range(bit):
            dst = &c.table[(<long> (s | bit)) * c.nwords]
            cnt = 0
            if s == 0:
                for j in range(c.nwords):
                    dst[j] = eb[j]
                    cnt += hf_popcountll(dst[j])
            else:
                src = &c.table[<long> s * c.nwords]
                for j in range(c.nwords):
                    dst[j] = src[j] & eb[j]
                    cnt += hf_popcountll(dst[j])
            if cnt != c.targets[hf_popcountll(<unsigned long long> s)]:
                viol = s | bit
                break
        if viol >= 0:
            if c.mode == 0:  # VERIFY
                nv = 0
                for j in range(depth + 1):
                    if (viol >> j) & 1:
                        verts[nv] = c.idx[j]
                        nv += 1
                completion(c, verts, nv, cand)
                if (not c.best_set) or lex_less(cand, c.best, c.k):
                    for j in range(c.k):
                        c.best[j] = cand[j]
                    c.best_set = 1
            continue
        if depth + 1 == c.k:
            if c.mode == 1:  # MATCHES
                push_match(c)
            continue
        if c.mode == 0 and c.best_set:
            completion(c, c.idx, depth + 1, cand)
            if not lex_less(cand, c.best, c.k):
                continue
        if c.mode == 0:
            node(c, depth + 1, e + 1, c.m)
        else:
            node(c, depth + 1, e + 1, c.m - c.k + depth + 2)


def scan(handle, int m, int n, int k, targets, int mode, int lo, int hi):
    if k < 1 or k > MAX_K:
        raise ValueError(f"compiled scan supports 1 <= k <= {MAX_K}, got {k}")
    cdef unsigned long long[::1] bits = handle
    cdef int nwords = (n + 63) >> 6
    if nwords == 0:
        nwords = 1
    cdef long ctargets[MAX_K]
    cdef int j
    cdef long i
    for j in range(k):
        ctargets[j] = targets[j]
    cdef ScanCtx ctx
    if bits.shape[0] > 0:
        ctx.bits = &bits[0]
    else:
        ctx.bits = NULL
    ctx.targets = ctargets
    ctx.m = m
    ctx.k = k
    ctx.nwords = nwords
    ctx.mode = mode
    ctx.best_set = 0
    ctx.matches = NULL
    ctx.match_count = 0
    ctx.match_cap = 0
    ctx.oom = 0
    ctx.table = <unsigned long long *> malloc(
        (<size_t> 1 << k) * nwords * sizeof(unsigned long long)
    )
    if ctx.table == NULL:
        raise MemoryError("scan table")
    try:
        if hi > lo:
            with nogil:
                node(&ctx, 0, lo, hi)
        if ctx.oom:
            raise MemoryError("match buffer")
        if mode == 0:
            if not ctx.best_set:
                return None
            found = []
            for j in range(k):
                found.append(ctx.best[j])
            return tuple(found)
        out = []
        for i in range(ctx.match_count):
            row = []
            for j in range(k):
                row.append(ctx.matches[i * k + j])
            out.append(tuple(row))
        return out
    finally:
        free(ctx.table)
        free(ctx.matches)


cdef struct MisCtx:
    int n
    int k
    int *vc_off
    int *vc
    int *counts
    int *order
    int *chosen
    int *witness
    int best
    int alpha
    int witness_found
    long explored


cdef int blocked(MisCtx *c, int v) noexcept nogil:
    cdef int i
    for i in range(c.vc_off[v], c.vc_off[v + 1]):
        if c.counts[c.vc[i]] == c.k - 1:
            return 1
    return 0


cdef void vadd(MisCtx *c, int v) noexcept nogil:
    cdef int i
    for i in range(c.vc_off[v], c.vc_off[v + 1]):
        c.counts[c.vc[i]] += 1


cdef void vdrop(MisCtx *c, int v) noexcept nogil:
    cdef int i
    for i in range(c.vc_off[v], c.vc_off[v + 1]):
        c.counts[c.vc[i]] -= 1


cdef void dfs_value(MisCtx *c, int pos, int cnt) noexcept nogil:
    cdef int v
    c.explored += 1
    if cnt + (c.n - pos) <= c.best:
        return
    if pos == c.n:
        c.best = cnt
        return
    v = c.order[pos]
    if not blocked(c, v):
        vadd(c, v)
        dfs_value(c, pos + 1, cnt + 1)
        vdrop(c, v)
    dfs_value(c, pos + 1, cnt)


cdef void dfs_witness(MisCtx *c, int pos, int cnt) noexcept nogil:
    cdef int j
    if c.witness_found:
        return
    c.explored += 1
    if cnt == c.alpha:
        for j in range(cnt):
            c.witness[j] = c.chosen[j]
        c.witness_found = 1
        return
    if cnt + (c.n - pos) <= c.alpha - 1:
        return
    if not blocked(c, pos):
        vadd(c, pos)
        c.chosen[cnt] = pos
        dfs_witness(c, pos + 1, cnt + 1)
        vdrop(c, pos)
    dfs_witness(c, pos + 1, cnt)


def mis_solve(int n, int k, conflicts):
    if not conflicts:
        return n, tuple(range(n)), 0
    cdef int nconf = len(conflicts)
    cdef long total = 0
    cdef long vv
    for conf in conflicts:
        for vv in conf:
            if vv < 0 or vv >= n:
                raise IndexError(f"conflict vertex {vv} outside 0..{n - 1}")
            total += 1
    cdef MisCtx ctx
    cdef int *deg = <int *> malloc(n * sizeof(int))
    ctx.vc_off = <int *> malloc((n + 1) * sizeof(int))
    ctx.vc = <int *> malloc(total * sizeof(int) if total else sizeof(int))
    ctx.counts = <int *> malloc(nconf * sizeof(int))
    ctx.order = <int *> malloc(n * sizeof(int))
    ctx.chosen = <int *> malloc((n + 1) * sizeof(int))
    ctx.witness = <int *> malloc((n + 1) * sizeof(int))
    if (
        deg == NULL or ctx.vc_off == NULL or ctx.vc == NULL
        or ctx.counts == NULL or ctx.order == NULL
        or ctx.chosen == NULL or ctx.witness == NULL
    ):
        free(deg)
        free(ctx.vc_off)
        free(ctx.vc)
        free(ctx.counts)
        free(ctx.order)
        free(ctx.chosen)
        free(ctx.witness)
        raise MemoryError("mis_solve arrays")
    cdef int i, v, ci
    try:
        for i in range(n):
            deg[i] = 0
        for conf in conflicts:
            for v in conf:
                deg[v] += 1
        ctx.vc_off[0] = 0
        for i in range(n):
            ctx.vc_off[i + 1] = ctx.vc_off[i] + deg[i]
            deg[i] = 0
        for ci, conf in enumerate(conflicts):
            for v in conf:
                ctx.vc[ctx.vc_off[v] + deg[v]] = ci
                deg[v] += 1
        degs = []
        for i in range(n):
            degs.append(ctx.vc_off[i + 1] - ctx.vc_off[i])
        order_py = sorted(range(n), key=lambda u: (-degs[u], u))
        for i in range(n):
            ctx.order[i] = order_py[i]
        for i in range(nconf):
            ctx.counts[i] = 0
        ctx.n = n
        ctx.k = k
        ctx.explored = 0
        ctx.witness_found = 0

        # greedy seed in branch order, then rewind
        seed = []
        for i in range(n):
            v = ctx.order[i]
            if not blocked(&ctx, v):
                vadd(&ctx, v)
                seed.append(v)
        for v in seed:
            vdrop(&ctx, v)
        ctx.best = len(seed)

        with nogil:
            dfs_value(&ctx, 0, 0)
        ctx.alpha = ctx.best
        with nogil:
            dfs_witness(&ctx, 0, 0)
        if not ctx.witness_found:
            raise AssertionError("witness search failed below the proven optimum")
        found = []
        for i in range(ctx.alpha):
            found.append(ctx.witness[i])
        return ctx.alpha, tuple(found), ctx.explored
    finally:
        free(deg)
        free(ctx.vc_off)
        free(ctx.vc)
        free(ctx.counts)
        free(ctx.order)
        free(ctx.chosen)
        free(ctx.witness)
