# cython: boundscheck=False, wraparound=False
"""Compiled union-find closure kernel; mirrors ``closure_py.closure``."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x):
    cdef int r = x
    cdef int nxt
    while parent[r] != r:
        r = parent[r]
    while parent[x] != r:
        nxt = parent[x]
        parent[x] = r
        x = nxt
    return r


def closure(int n, gen_tables, pairs):
    """Smallest equivalence containing ``pairs`` closed under the actions.

    Every union pushes one translate pair per generator and at most n-1
    unions happen, so the stack never holds more than
    ``len(pairs) + len(gen_tables) * n`` entries.
    """
    cdef int g = len(gen_tables)
    cdef Py_ssize_t npairs = len(pairs)
    cdef Py_ssize_t cap = npairs + (<Py_ssize_t>g) * n + 8
    cdef int* parent = NULL
    cdef int* tables = NULL
    cdef int* stack = NULL
    cdef Py_ssize_t top
    cdef int i, k, a, b, ra, rb

    parent = <int*>malloc(n * sizeof(int))
    if parent == NULL:
        raise MemoryError()
    if g:
        tables = <int*>malloc(g * n * sizeof(int))
        if tables == NULL:
            free(parent)
            raise MemoryError()
    stack = <int*>malloc(2 * cap * sizeof(int))
    if stack == NULL:
        free(parent)
        if tables != NULL:
            free(tables)
        raise MemoryError()

    try:
        for i in range(n):
            parent[i] = i
        for k in range(g):
            table = gen_tables[k]
            for i in range(n):
                tables[k * n + i] = table[i]

        top = 0
        for (pa, pb) in pairs:
            stack[2 * top] = pa
            stack[2 * top + 1] = pb
            top += 1
        while top > 0:
            top -= 1
            a = stack[2 * top]
            b = stack[2 * top + 1]
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra == rb:
                continue
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
            for k in range(g):
                stack[2 * top] = tables[k * n + a]
                stack[2 * top + 1] = tables[k * n + b]
                top += 1

        out = [0] * n
        best = {}
        for i in range(n):
            ra = _find(parent, i)
            if ra not in best:
                best[ra] = i
        for i in range(n):
            out[i] = best[_find(parent, i)]
        return out
    finally:
        free(stack)
        free(parent)
        if tables != NULL:
            free(tables)


def connected_components(int n, edges):
    return closure(n, [], edges)
