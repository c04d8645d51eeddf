# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Same signatures, same return values. The Prüfer kernel runs entirely in C:
rooted codes are packed into 64-bit words with ``(`` as bit 0 and ``)`` as
bit 1, so integer order on equal-length words is byte order on the strings.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t

ctypedef unsigned long long u64


def code_key(code):
    return (len(code), code)


cdef int _to_csr(adj, int n, int* off, int* nbr) except -1:
    cdef int v, k = 0
    for v in range(n):
        off[v] = k
        for w in adj[v]:
            nbr[k] = w
            k += 1
    off[n] = k
    return 0


cdef class _Csr:
    cdef int n
    cdef int* off
    cdef int* nbr

    def __cinit__(self, adj):
        cdef int m = 0
        self.n = len(adj)
        for a in adj:
            m += len(a)
        self.off = <int*>malloc((self.n + 1) * sizeof(int))
        self.nbr = <int*>malloc((m + 1) * sizeof(int))
        if self.off == NULL or self.nbr == NULL:
            raise MemoryError()
        _to_csr(adj, self.n, self.off, self.nbr)

    def __dealloc__(self):
        free(self.off)
        free(self.nbr)


cdef str _rooted(_Csr g, int root, int skip, int* parent, int* order, list codes):
    cdef int head = 0, tail = 1, x, y, i, j
    order[0] = root
    parent[root] = -1
    while head < tail:
        x = order[head]
        head += 1
        for j in range(g.off[x], g.off[x + 1]):
            y = g.nbr[j]
            if y != skip and y != parent[x]:
                parent[y] = x
                order[tail] = y
                tail += 1
    cdef list ch
    cdef str code = "()"
    for i in range(tail - 1, -1, -1):
        x = order[i]
        ch = []
        for j in range(g.off[x], g.off[x + 1]):
            y = g.nbr[j]
            if y != skip and y != parent[x]:
                ch.append(codes[y])
        if ch:
            ch.sort()
            ch.sort(key=len)
            code = "(" + "".join(ch) + ")"
        else:
            code = "()"
        codes[x] = code
    return code


def rooted_code(adj, int root, int skip=-1):
    cdef _Csr g = _Csr(adj)
    cdef int* parent = <int*>malloc((g.n + 1) * sizeof(int))
    cdef int* order = <int*>malloc((g.n + 1) * sizeof(int))
    try:
        return _rooted(g, root, skip, parent, order, [None] * g.n)
    finally:
        free(parent)
        free(order)


cdef list _free_codes(_Csr g, int skip, int* parent, int* order, int* deg,
                      char* seen, int* comp, int* layer, list codes):
    cdef int n = g.n, s, x, y, j, k, head, tail, remaining, nl, nn, c
    cdef list out = []
    cdef str a, b
    for s in range(n):
        seen[s] = 0
    if skip >= 0:
        seen[skip] = 1
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        comp[0] = s
        tail = 1
        head = 0
        while head < tail:
            x = comp[head]
            head += 1
            deg[x] = 0
            for j in range(g.off[x], g.off[x + 1]):
                y = g.nbr[j]
                if y != skip:
                    deg[x] += 1
                    if not seen[y]:
                        seen[y] = 1
                        comp[tail] = y
                        tail += 1
        if tail <= 2:
            c = comp[0]
            out.append(_rooted(g, c, skip, parent, order, codes))
            continue
        nl = 0
        for k in range(tail):
            if deg[comp[k]] == 1:
                layer[nl] = comp[k]
                nl += 1
        remaining = tail
        while remaining > 2:
            remaining -= nl
            nn = 0
            for k in range(nl):
                x = layer[k]
                for j in range(g.off[x], g.off[x + 1]):
                    y = g.nbr[j]
                    if y != skip:
                        deg[y] -= 1
                        if deg[y] == 1:
                            # write past the live prefix; layer has room for 2n
                            layer[n + nn] = y
                            nn += 1
            for k in range(nn):
                layer[k] = layer[n + k]
            nl = nn
        a = _rooted(g, layer[0], skip, parent, order, codes)
        if nl == 2:
            b = _rooted(g, layer[1], skip, parent, order, codes)
            if len(b) < len(a) or (len(b) == len(a) and b < a):
                a = b
        out.append(a)
    out.sort()
    out.sort(key=len)
    return out


cdef class _Work:
    cdef int* parent
    cdef int* order
    cdef int* deg
    cdef char* seen
    cdef int* comp
    cdef int* layer

    def __cinit__(self, int n):
        n += 1
        self.parent = <int*>malloc(n * sizeof(int))
        self.order = <int*>malloc(n * sizeof(int))
        self.deg = <int*>malloc(n * sizeof(int))
        self.seen = <char*>malloc(n)
        self.comp = <int*>malloc(n * sizeof(int))
        self.layer = <int*>malloc(2 * n * sizeof(int))

    def __dealloc__(self):
        free(self.parent)
        free(self.order)
        free(self.deg)
        free(self.seen)
        free(self.comp)
        free(self.layer)


def component_free_codes(adj, int skip=-1):
    cdef _Csr g = _Csr(adj)
    cdef _Work w = _Work(g.n)
    return _free_codes(g, skip, w.parent, w.order, w.deg, w.seen, w.comp, w.layer,
                       [None] * g.n)


def card_codes(adj):
    cdef _Csr g = _Csr(adj)
    cdef _Work w = _Work(g.n)
    cdef list codes = [None] * g.n
    cdef int v
    return [
        ";".join(_free_codes(g, v, w.parent, w.order, w.deg, w.seen, w.comp, w.layer, codes))
        for v in range(g.n)
    ]


def vertex_codes(adj):
    cdef _Csr g = _Csr(adj)
    cdef _Work w = _Work(g.n)
    cdef list codes = [None] * g.n
    cdef int v
    return [_rooted(g, v, -1, w.parent, w.order, codes) for v in range(g.n)]


def prufer_decode(seq, int n):
    cdef int* s = <int*>malloc((n + 1) * sizeof(int))
    cdef int* eu = <int*>malloc(n * sizeof(int))
    cdef int* ev = <int*>malloc(n * sizeof(int))
    cdef int* deg = <int*>malloc(n * sizeof(int))
    cdef int i
    try:
        for i in range(n - 2):
            s[i] = seq[i]
        _decode(s, n, eu, ev, deg)
        return [(eu[i], ev[i]) for i in range(n - 1)]
    finally:
        free(s)
        free(eu)
        free(ev)
        free(deg)


# -- all-C Prüfer sweep ------------------------------------------------------

cdef inline void _decode(int* seq, int n, int* eu, int* ev, int* deg) noexcept nogil:
    cdef int i, x, ptr = 0, leaf
    for i in range(n):
        deg[i] = 1
    for i in range(n - 2):
        deg[seq[i]] += 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for i in range(n - 2):
        x = seq[i]
        eu[i] = leaf
        ev[i] = x
        deg[x] -= 1
        if x < ptr and deg[x] == 1:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    eu[n - 2] = leaf
    ev[n - 2] = n - 1


cdef enum:
    KSTRIDE = 17


cdef inline u64 _wrap(u64* ks, int m) noexcept nogil:
    # ks holds sorted child keys, key = (vertex count << 32) | word
    cdef u64 acc = 0, size = 1
    cdef int k
    for k in range(m):
        acc = (acc << (2 * (ks[k] >> 32))) | (ks[k] & 0xFFFFFFFFULL)
        size += ks[k] >> 32
    return (size << 32) | (acc << 1) | 1


cdef inline int _insert(u64* ks, int m, u64 key) noexcept nogil:
    cdef int k = m
    while k > 0 and ks[k - 1] > key:
        ks[k] = ks[k - 1]
        k -= 1
    ks[k] = key
    return m + 1


cdef struct Scratch:
    int* par
    int* b1
    int* b2
    int* arg1
    int* up
    u64* key
    u64* kids
    int* cnt


cdef u64 _reroot(Scratch* S, int n, int c) noexcept nogil:
    cdef int root = n - 1, m = 0, j, k, t, removed
    cdef int path[17]
    cdef u64 tmp[17]
    cdef u64 upk = 0, skipkey
    if c == root:
        return S.key[root]
    while c != root:
        path[m] = c
        m += 1
        c = S.par[c]
    path[m] = root
    for j in range(m, 0, -1):
        c = path[j]
        skipkey = S.key[path[j - 1]]
        t = 0
        removed = 0
        for k in range(S.cnt[c]):
            if not removed and S.kids[c * KSTRIDE + k] == skipkey:
                removed = 1
            else:
                tmp[t] = S.kids[c * KSTRIDE + k]
                t += 1
        if upk:
            t = _insert(tmp, t, upk)
        upk = _wrap(tmp, t)
    c = path[0]
    for k in range(S.cnt[c]):
        tmp[k] = S.kids[c * KSTRIDE + k]
    t = _insert(tmp, S.cnt[c], upk)
    return _wrap(tmp, t)


cdef u64 _free_word(Scratch* S, int n, int* eu, int* ev) noexcept nogil:
    """Canonical word of the tree produced by ``_decode`` (children before parents)."""
    cdef int i, v, p, d, e, best, nc
    cdef int cs[2]
    cdef u64 w0, w1
    for v in range(n):
        S.cnt[v] = 0
        S.b1[v] = 0
        S.b2[v] = 0
        S.arg1[v] = -1
    S.par[n - 1] = -1
    for i in range(n - 1):
        v = eu[i]
        p = ev[i]
        S.par[v] = p
        S.key[v] = _wrap(&S.kids[v * KSTRIDE], S.cnt[v])
        S.cnt[p] = _insert(&S.kids[p * KSTRIDE], S.cnt[p], S.key[v])
        d = S.b1[v] + 1
        if d > S.b1[p]:
            S.b2[p] = S.b1[p]
            S.b1[p] = d
            S.arg1[p] = v
        elif d > S.b2[p]:
            S.b2[p] = d
    S.key[n - 1] = _wrap(&S.kids[(n - 1) * KSTRIDE], S.cnt[n - 1])
    # eccentricities top-down: up[v] = longest path leaving v through its parent
    S.up[n - 1] = 0
    best = S.b1[n - 1]
    for i in range(n - 2, -1, -1):
        v = eu[i]
        p = ev[i]
        d = S.b2[p] if S.arg1[p] == v else S.b1[p]
        S.up[v] = 1 + (S.up[p] if S.up[p] > d else d)
        e = S.b1[v] if S.b1[v] > S.up[v] else S.up[v]
        if e < best:
            best = e
    nc = 0
    for v in range(n):
        e = S.b1[v] if S.b1[v] > S.up[v] else S.up[v]
        if e == best:
            cs[nc] = v
            nc += 1
    w0 = _reroot(S, n, cs[0]) & 0xFFFFFFFFULL
    if nc == 2:
        w1 = _reroot(S, n, cs[1]) & 0xFFFFFFFFULL
        if w1 < w0:
            w0 = w1
    return w0


def _word_to_code(u64 word, int nbits):
    return "".join(")" if (word >> (nbits - 1 - i)) & 1 else "(" for i in range(nbits))


cdef enum:
    TABLE_BITS = 16


def prufer_class_codes(int n, int first_lo=0, int first_hi=-1):
    """Free codes of all labelled trees whose Prüfer sequence starts in ``[first_lo, first_hi)``."""
    if n < 2:
        raise ValueError("Prüfer sequences need n >= 2")
    if n > 16:
        # 64-bit words and a 2**16 slot table
        raise ValueError("the compiled Prüfer sweep supports n <= 16")
    if first_hi < 0:
        first_hi = n
    if n == 2:
        return {"(())"} if first_lo == 0 else set()
    cdef int L = n - 2, i
    cdef Scratch S
    cdef int* seq = <int*>calloc(L + 1, sizeof(int))
    cdef int* eu = <int*>malloc(n * sizeof(int))
    cdef int* ev = <int*>malloc(n * sizeof(int))
    cdef int* ddeg = <int*>malloc(n * sizeof(int))
    cdef u64 tsize = (<u64>1) << TABLE_BITS
    cdef u64* table = <u64*>calloc(tsize, sizeof(u64))
    cdef u64 word, h
    cdef list found = []
    S.par = <int*>malloc(n * sizeof(int))
    S.b1 = <int*>malloc(n * sizeof(int))
    S.b2 = <int*>malloc(n * sizeof(int))
    S.arg1 = <int*>malloc(n * sizeof(int))
    S.up = <int*>malloc(n * sizeof(int))
    S.cnt = <int*>malloc(n * sizeof(int))
    S.key = <u64*>malloc(n * sizeof(u64))
    S.kids = <u64*>malloc(n * KSTRIDE * sizeof(u64))
    try:
        with nogil:
            seq[0] = first_lo
            while seq[0] < first_hi:
                _decode(seq, n, eu, ev, ddeg)
                word = _free_word(&S, n, eu, ev)
                h = (word * <u64>0x9E3779B97F4A7C15ULL) >> (64 - TABLE_BITS)
                while table[h] != 0 and table[h] != word:
                    h = (h + 1) & (tsize - 1)
                if table[h] == 0:
                    table[h] = word
                # odometer over the sequence
                i = L - 1
                seq[i] += 1
                while i > 0 and seq[i] == n:
                    seq[i] = 0
                    i -= 1
                    seq[i] += 1
        for h in range(tsize):
            if table[h] != 0:
                found.append(_word_to_code(table[h], 2 * n))
    finally:
        free(seq); free(eu); free(ev); free(ddeg); free(table)
        free(S.par); free(S.b1); free(S.b2); free(S.arg1); free(S.up)
        free(S.cnt); free(S.key); free(S.kids)
    return set(found)
