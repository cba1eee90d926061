# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: exact max-clique search and rank over F_p.

Mirror images of _pykernels (same branching order, same coloring, same node
counting) so the two backends are interchangeable and cross-checkable.
Bitsets are arrays of uint64 words; Python-int masks are converted at the
call boundary.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t, int64_t

from time import monotonic


cdef extern from *:
    """
    static inline int lint_ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int lint_ctz64(unsigned long long x) nogil


cdef struct CliqueState:
    uint64_t *nbr          # V x W adjacency words
    uint64_t *pstack       # (V+2) x W candidate-set scratch, one row per depth
    uint64_t *scratch      # 2 x W coloring scratch
    int *order             # V ints per depth: coloring order
    int *colors
    int *best_clique
    int *cur_clique
    int V
    int W
    int best
    int best_len
    int cutoff
    double deadline
    long long nodes
    int aborted


cdef inline int _first_bit(uint64_t *words, int W) nogil:
    cdef int w
    for w in range(W):
        if words[w]:
            return 64 * w + lint_ctz64(words[w])
    return -1


cdef inline int _is_empty(uint64_t *words, int W) nogil:
    cdef int w
    for w in range(W):
        if words[w]:
            return 0
    return 1


cdef int _expand(CliqueState *st, int depth, int rsize) except -1:
    """Returns 1 to unwind (cutoff hit or timeout), 0 otherwise."""
    cdef int W = st.W
    cdef uint64_t *P = st.pstack + depth * W
    cdef uint64_t *new_p = st.pstack + (depth + 1) * W
    cdef uint64_t *uncolored = st.scratch
    cdef uint64_t *avail = st.scratch + W
    cdef int *order = st.order + depth * st.V
    cdef int *colors = st.colors + depth * st.V
    cdef int n_ord = 0, color = 0, v, i, w, k

    st.nodes += 1
    if st.deadline >= 0.0 and (st.nodes & 0x3FF) == 0:
        if monotonic() > st.deadline:
            st.aborted = 1
            return 1

    for w in range(W):
        uncolored[w] = P[w]
    while not _is_empty(uncolored, W):
        color += 1
        for w in range(W):
            avail[w] = uncolored[w]
        while True:
            v = _first_bit(avail, W)
            if v < 0:
                break
            order[n_ord] = v
            colors[n_ord] = color
            n_ord += 1
            uncolored[v >> 6] &= ~(<uint64_t>1 << (v & 63))
            for w in range(W):
                avail[w] &= ~st.nbr[v * W + w]
            avail[v >> 6] &= ~(<uint64_t>1 << (v & 63))

    for i in range(n_ord - 1, -1, -1):
        v = order[i]
        if rsize + colors[i] <= st.best:
            return 0
        st.cur_clique[rsize] = v
        for w in range(W):
            new_p[w] = P[w] & st.nbr[v * W + w]
        if rsize + 1 > st.best:
            st.best = rsize + 1
            st.best_len = rsize + 1
            for k in range(rsize + 1):
                st.best_clique[k] = st.cur_clique[k]
            if st.cutoff >= 0 and st.best >= st.cutoff:
                return 1
        if not _is_empty(new_p, W):
            if _expand(st, depth + 1, rsize + 1):
                return 1
        P[v >> 6] &= ~(<uint64_t>1 << (v & 63))
    return 0


def max_clique_core(neighbors, cand_mask, int lower, int cutoff, double deadline):
    """Same contract as _pykernels.max_clique_core."""
    cdef int V = len(neighbors)
    cdef int W = (V + 63) >> 6 if V else 1
    cdef CliqueState st
    cdef int v, w, k
    cdef object m
    cdef uint64_t word

    st.V = V
    st.W = W
    st.best = lower
    st.best_len = 0
    st.cutoff = cutoff
    st.deadline = deadline
    st.nodes = 0
    st.aborted = 0

    st.nbr = <uint64_t *>calloc(max(V, 1) * W, sizeof(uint64_t))
    st.pstack = <uint64_t *>calloc((V + 2) * W, sizeof(uint64_t))
    st.scratch = <uint64_t *>calloc(2 * W, sizeof(uint64_t))
    st.order = <int *>calloc((V + 2) * max(V, 1) + 1, sizeof(int))
    st.colors = <int *>calloc((V + 2) * max(V, 1) + 1, sizeof(int))
    st.best_clique = <int *>calloc(V + 1, sizeof(int))
    st.cur_clique = <int *>calloc(V + 1, sizeof(int))
    if (st.nbr == NULL or st.pstack == NULL or st.scratch == NULL or
            st.order == NULL or st.colors == NULL or
            st.best_clique == NULL or st.cur_clique == NULL):
        _free_state(&st)
        raise MemoryError()

    try:
        for v in range(V):
            m = neighbors[v]
            for w in range(W):
                st.nbr[v * W + w] = <uint64_t>((m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        nonzero = False
        for w in range(W):
            word = <uint64_t>((cand_mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
            st.pstack[w] = word
            if word:
                nonzero = True
        if nonzero:
            _expand(&st, 0, 0)
        best_mask = 0
        one = 1  # Python int: keeps the shift arbitrary-precision
        for k in range(st.best_len):
            best_mask = best_mask | (one << st.best_clique[k])
        return st.best, best_mask, st.nodes, not st.aborted
    finally:
        _free_state(&st)


cdef void _free_state(CliqueState *st):
    free(st.nbr)
    free(st.pstack)
    free(st.scratch)
    free(st.order)
    free(st.colors)
    free(st.best_clique)
    free(st.cur_clique)


def rank_mod_p(rows, long long p):
    """Rank over F_p by Gaussian elimination; requires p < 2^31."""
    cdef int nrows = len(rows)
    cdef int ncols = len(rows[0]) if nrows else 0
    cdef int64_t *mat
    cdef int64_t *top
    cdef int64_t *cur
    cdef int r, c, j, rank, piv
    cdef int64_t inv, f, x

    if nrows == 0 or ncols == 0:
        return 0
    mat = <int64_t *>calloc(nrows * ncols, sizeof(int64_t))
    if mat == NULL:
        raise MemoryError()
    try:
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                mat[r * ncols + c] = row[c] % p
        rank = 0
        for c in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if mat[r * ncols + c]:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    x = mat[rank * ncols + j]
                    mat[rank * ncols + j] = mat[piv * ncols + j]
                    mat[piv * ncols + j] = x
            top = mat + rank * ncols
            inv = _inv_mod(top[c], p)
            for j in range(c, ncols):
                top[j] = top[j] * inv % p
            for r in range(rank + 1, nrows):
                cur = mat + r * ncols
                f = cur[c]
                if f:
                    for j in range(c, ncols):
                        cur[j] = (cur[j] - f * top[j]) % p
                        if cur[j] < 0:
                            cur[j] += p
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(mat)


cdef int64_t _inv_mod(int64_t a, int64_t p) nogil:
    # Extended Euclid; a nonzero mod p, p prime.
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t
