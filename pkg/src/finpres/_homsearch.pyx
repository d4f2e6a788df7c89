# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking core; same contract as ``_homsearch_py.search``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t


cdef struct Problem:
    int n
    int m
    int injective
    int limit
    unsigned char *dom
    int *dsize
    int *assign
    unsigned char *used
    int *order
    int ncons
    int *scope_off
    int *scope
    int *key_off
    int64_t *keys
    unsigned char *positive
    int *vc_off
    int *vc
    int *trail
    int trail_len
    int64_t *powers


cdef inline bint has_key(Problem *p, int ci, int64_t k):
    cdef int lo = p.key_off[ci]
    cdef int hi = p.key_off[ci + 1] - 1
    cdef int mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if p.keys[mid] == k:
            return True
        if p.keys[mid] < k:
            lo = mid + 1
        else:
            hi = mid - 1
    return False


cdef inline bint prune(Problem *p, int u, int x):
    p.dom[u * p.m + x] = 0
    p.dsize[u] -= 1
    p.trail[p.trail_len] = u * p.m + x
    p.trail_len += 1
    return p.dsize[u] > 0


cdef bint propagate(Problem *p, int v):
    cdef int a, b, j, ci, w, u, x, nfree
    cdef int64_t k
    cdef bint inside
    for a in range(p.vc_off[v], p.vc_off[v + 1]):
        ci = p.vc[a]
        u = -1
        nfree = 0
        for j in range(p.scope_off[ci], p.scope_off[ci + 1]):
            w = p.scope[j]
            if p.assign[w] < 0 and w != u:
                nfree += 1
                u = w
        if nfree == 0:
            k = 0
            for j in range(p.scope_off[ci], p.scope_off[ci + 1]):
                k += p.assign[p.scope[j]] * p.powers[j - p.scope_off[ci]]
            if has_key(p, ci, k) != p.positive[ci]:
                return False
        elif nfree == 1:
            for x in range(p.m):
                if not p.dom[u * p.m + x]:
                    continue
                k = 0
                for j in range(p.scope_off[ci], p.scope_off[ci + 1]):
                    w = p.scope[j]
                    if w == u:
                        k += x * p.powers[j - p.scope_off[ci]]
                    else:
                        k += p.assign[w] * p.powers[j - p.scope_off[ci]]
                inside = has_key(p, ci, k)
                if inside != p.positive[ci]:
                    if not prune(p, u, x):
                        return False
    if p.injective:
        x = p.assign[v]
        for u in range(p.n):
            if p.assign[u] < 0 and p.dom[u * p.m + x]:
                if not prune(p, u, x):
                    return False
    return True


cdef bint rec(Problem *p, int d, list out):
    cdef int v, x, mark, t
    if d == p.n:
        out.append(tuple([p.assign[t] for t in range(p.n)]))
        return p.limit > 0 and len(out) >= p.limit
    v = p.order[d]
    for x in range(p.m):
        if not p.dom[v * p.m + x]:
            continue
        if p.injective and p.used[x]:
            continue
        mark = p.trail_len
        p.assign[v] = x
        if p.injective:
            p.used[x] = 1
        if propagate(p, v) and rec(p, d + 1, out):
            return True
        while p.trail_len > mark:
            p.trail_len -= 1
            t = p.trail[p.trail_len]
            p.dom[t] = 1
            p.dsize[t // p.m] += 1
        p.assign[v] = -1
        p.used[x] = 0
    return False


def search(int n, int m, domains, constraints, order, bint injective, int limit):
    cdef Problem p
    cdef int i, j, ci, total_scope = 0, total_keys = 0, maxar = 0
    cdef list out = []
    if n == 0:
        return [()] if all(domains) else []
    if m == 0:
        return []
    for scope, keys, pos in constraints:
        total_scope += len(scope)
        total_keys += len(keys)
        if len(scope) > maxar:
            maxar = len(scope)
    p.n = n
    p.m = m
    p.injective = injective
    p.limit = limit
    p.ncons = len(constraints)
    p.dom = <unsigned char *> calloc(n * m, 1)
    p.dsize = <int *> calloc(n, sizeof(int))
    p.assign = <int *> malloc(n * sizeof(int))
    p.used = <unsigned char *> calloc(m, 1)
    p.order = <int *> malloc(n * sizeof(int))
    p.scope_off = <int *> malloc((p.ncons + 1) * sizeof(int))
    p.scope = <int *> malloc((total_scope + 1) * sizeof(int))
    p.key_off = <int *> malloc((p.ncons + 1) * sizeof(int))
    p.keys = <int64_t *> malloc((total_keys + 1) * sizeof(int64_t))
    p.positive = <unsigned char *> malloc(p.ncons + 1)
    p.vc_off = <int *> calloc(n + 1, sizeof(int))
    p.trail = <int *> malloc((n * m + 1) * sizeof(int))
    p.trail_len = 0
    p.powers = <int64_t *> malloc((maxar + 1) * sizeof(int64_t))
    p.vc = NULL
    try:
        p.powers[0] = 1
        for j in range(1, maxar + 1):
            p.powers[j] = p.powers[j - 1] * m
        for i in range(n):
            p.assign[i] = -1
            p.order[i] = order[i]
            for x in domains[i]:
                p.dom[i * m + x] = 1
            p.dsize[i] = len(domains[i])
            if p.dsize[i] == 0:
                return []
        per_var = [[] for _ in range(n)]
        a = 0
        b = 0
        for ci, (scope, keys, pos) in enumerate(constraints):
            p.scope_off[ci] = a
            for w in scope:
                p.scope[a] = w
                a += 1
            p.key_off[ci] = b
            for k in keys:
                p.keys[b] = k
                b += 1
            p.positive[ci] = 1 if pos else 0
            for w in set(scope):
                per_var[w].append(ci)
        p.scope_off[p.ncons] = a
        p.key_off[p.ncons] = b
        flat = [ci for lst in per_var for ci in lst]
        p.vc = <int *> malloc((len(flat) + 1) * sizeof(int))
        a = 0
        for i in range(n):
            p.vc_off[i] = a
            for ci in per_var[i]:
                p.vc[a] = ci
                a += 1
        p.vc_off[n] = a
        rec(&p, 0, out)
        return out
    finally:
        free(p.dom); free(p.dsize); free(p.assign); free(p.used); free(p.order)
        free(p.scope_off); free(p.scope); free(p.key_off); free(p.keys)
        free(p.positive); free(p.vc_off); free(p.vc); free(p.trail); free(p.powers)
