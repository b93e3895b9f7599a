# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Smith normal form kernel (64-bit arithmetic).

Mirrors ``snf_py.snf_with_transforms`` (extended-gcd block elimination).
Entries are guarded so every product stays inside int64; when the guard
trips we raise OverflowError and the dispatcher re-runs the pure-Python
bignum twin.
"""

from libc.stdlib cimport malloc, free

cdef long long LIMIT = (<long long>1) << 31


cdef inline long long _llabs(long long x):
    return -x if x < 0 else x


cdef inline int _check(long long x) except -1:
    if _llabs(x) >= LIMIT:
        raise OverflowError("snf kernel overflow")
    return 0


cdef class _Mat:
    cdef long long* a
    cdef int m, n

    def __cinit__(self, int m, int n):
        self.a = <long long*>malloc((m * n if m * n else 1) * sizeof(long long))
        if self.a == NULL:
            raise MemoryError()
        self.m = m
        self.n = n

    def __dealloc__(self):
        if self.a != NULL:
            free(self.a)


cdef void _xgcd(long long a, long long b, long long* xo, long long* yo, long long* go):
    cdef long long x = 1, nx = 0, y = 0, ny = 1, g = a, ng = b, q, t
    while ng:
        q = g / ng
        t = nx; nx = x - q * nx; x = t
        t = ny; ny = y - q * ny; y = t
        t = ng; ng = g - q * ng; g = t
    if g < 0:
        x = -x; y = -y; g = -g
    xo[0] = x; yo[0] = y; go[0] = g


cdef int _rowop2(_Mat M, int t, int i, long long x, long long y,
                 long long mbg, long long ag) except -1:
    # rows (t, i) <- (x*row_t + y*row_i, mbg*row_t + ag*row_i)
    cdef int k
    cdef long long p, q, np_, nq
    _check(x); _check(y); _check(mbg); _check(ag)
    for k in range(M.n):
        p = M.a[t * M.n + k]
        q = M.a[i * M.n + k]
        _check(p); _check(q)
        np_ = x * p + y * q
        nq = mbg * p + ag * q
        M.a[t * M.n + k] = np_
        M.a[i * M.n + k] = nq
    return 0


cdef int _colop2(_Mat M, int t, int j, long long x, long long y,
                 long long mbg, long long ag) except -1:
    cdef int k
    cdef long long p, q, np_, nq
    _check(x); _check(y); _check(mbg); _check(ag)
    for k in range(M.m):
        p = M.a[k * M.n + t]
        q = M.a[k * M.n + j]
        _check(p); _check(q)
        np_ = x * p + y * q
        nq = mbg * p + ag * q
        M.a[k * M.n + t] = np_
        M.a[k * M.n + j] = nq
    return 0


cdef int _addrow(_Mat M, int src, int dst, long long q) except -1:
    cdef int k
    cdef long long v
    _check(q)
    for k in range(M.n):
        v = M.a[src * M.n + k]
        _check(v)
        M.a[dst * M.n + k] = M.a[dst * M.n + k] + q * v
    return 0


cdef int _addcol(_Mat M, int src, int dst, long long q) except -1:
    cdef int k
    cdef long long v
    _check(q)
    for k in range(M.m):
        v = M.a[k * M.n + src]
        _check(v)
        M.a[k * M.n + dst] = M.a[k * M.n + dst] + q * v
    return 0


cdef int _clear_col_entry(_Mat D, _Mat U, int t, int i) except -1:
    cdef long long a = D.a[t * D.n + t]
    cdef long long b = D.a[i * D.n + t]
    cdef long long x, y, g
    if b == 0:
        return 0
    _check(a)
    _check(b)
    if a != 0 and b % a == 0:
        _addrow(D, t, i, -(b / a))
        _addrow(U, t, i, -(b / a))
        return 0
    _xgcd(a, b, &x, &y, &g)
    _rowop2(D, t, i, x, y, -(b / g), a / g)
    _rowop2(U, t, i, x, y, -(b / g), a / g)
    return 0


cdef int _clear_row_entry(_Mat D, _Mat V, int t, int j) except -1:
    cdef long long a = D.a[t * D.n + t]
    cdef long long b = D.a[t * D.n + j]
    cdef long long x, y, g
    if b == 0:
        return 0
    _check(a)
    _check(b)
    if a != 0 and b % a == 0:
        _addcol(D, t, j, -(b / a))
        _addcol(V, t, j, -(b / a))
        return 0
    _xgcd(a, b, &x, &y, &g)
    _colop2(D, t, j, x, y, -(b / g), a / g)
    _colop2(V, t, j, x, y, -(b / g), a / g)
    return 0


def snf_with_transforms(mat):
    """(U, D, V) with U*mat*V = D; same contract as the pure twin."""
    cdef int m = len(mat)
    cdef int n = len(mat[0]) if m else 0
    cdef int i, j, k, t, size, pi, pj, clean
    cdef long long v, a, b, best

    if m == 0 or n == 0:
        Ui = [[1 if x == y else 0 for y in range(m)] for x in range(m)]
        Vi = [[1 if x == y else 0 for y in range(n)] for x in range(n)]
        return Ui, [list(map(int, r)) for r in mat], Vi

    cdef _Mat D = _Mat(m, n)
    cdef _Mat U = _Mat(m, m)
    cdef _Mat V = _Mat(n, n)
    for i in range(m):
        row = mat[i]
        for j in range(n):
            v = row[j]
            _check(v)
            D.a[i * n + j] = v
    for i in range(m):
        for j in range(m):
            U.a[i * m + j] = 1 if i == j else 0
    for i in range(n):
        for j in range(n):
            V.a[i * n + j] = 1 if i == j else 0

    size = m if m < n else n
    t = 0
    while t < size:
        best = 0
        pi = -1
        pj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = D.a[i * n + j]
                if v != 0 and (pi < 0 or _llabs(v) < best):
                    best = _llabs(v)
                    pi = i
                    pj = j
                    if best == 1:
                        break
            if best == 1 and pi >= 0:
                break
        if pi < 0:
            break
        if pi != t:
            _swap_rows(D, t, pi)
            _swap_rows(U, t, pi)
        if pj != t:
            _swap_cols(D, t, pj)
            _swap_cols(V, t, pj)

        while True:
            for i in range(t + 1, m):
                _clear_col_entry(D, U, t, i)
            for j in range(t + 1, n):
                _clear_row_entry(D, V, t, j)
            clean = 1
            for i in range(t + 1, m):
                if D.a[i * n + t] != 0:
                    clean = 0
                    break
            if clean:
                for j in range(t + 1, n):
                    if D.a[t * n + j] != 0:
                        clean = 0
                        break
            if clean:
                break
        t += 1

    for i in range(size):
        if D.a[i * n + i] < 0:
            for k in range(n):
                D.a[i * n + k] = -D.a[i * n + k]
            for k in range(m):
                U.a[i * m + k] = -U.a[i * m + k]

    i = 0
    while i < size - 1:
        a = D.a[i * n + i]
        b = D.a[(i + 1) * n + i + 1]
        if a != 0 and b % a != 0:
            _addcol(D, i + 1, i, 1)
            _addcol(V, i + 1, i, 1)
            while D.a[(i + 1) * n + i] != 0 or D.a[i * n + i + 1] != 0:
                _clear_col_entry(D, U, i, i + 1)
                _clear_row_entry(D, V, i, i + 1)
            if D.a[i * n + i] < 0:
                for k in range(n):
                    D.a[i * n + k] = -D.a[i * n + k]
                for k in range(m):
                    U.a[i * m + k] = -U.a[i * m + k]
            if D.a[(i + 1) * n + i + 1] < 0:
                for k in range(n):
                    D.a[(i + 1) * n + k] = -D.a[(i + 1) * n + k]
                for k in range(m):
                    U.a[(i + 1) * m + k] = -U.a[(i + 1) * m + k]
            i = i - 1 if i > 0 else 0
        else:
            i += 1

    Uc = [[int(U.a[i * m + j]) for j in range(m)] for i in range(m)]
    Dc = [[int(D.a[i * n + j]) for j in range(n)] for i in range(m)]
    Vc = [[int(V.a[i * n + j]) for j in range(n)] for i in range(n)]
    return Uc, Dc, Vc


cdef void _swap_rows(_Mat M, int i, int j):
    cdef int k
    cdef long long t
    for k in range(M.n):
        t = M.a[i * M.n + k]
        M.a[i * M.n + k] = M.a[j * M.n + k]
        M.a[j * M.n + k] = t


cdef void _swap_cols(_Mat M, int i, int j):
    cdef int k
    cdef long long t
    for k in range(M.m):
        t = M.a[k * M.n + i]
        M.a[k * M.n + i] = M.a[k * M.n + j]
        M.a[k * M.n + j] = t


def snf_diagonal(mat):
    """Invariant factors without transform bookkeeping (fast path)."""
    cdef int m = len(mat)
    cdef int n = len(mat[0]) if m else 0
    if m == 0 or n == 0:
        return []
    cdef _Mat D = _Mat(m, n)
    cdef int i, j, t, size, pi, pj, clean
    cdef long long v, a, b, best, x, y, g
    for i in range(m):
        row = mat[i]
        for j in range(n):
            v = row[j]
            _check(v)
            D.a[i * n + j] = v
    size = m if m < n else n
    t = 0
    while t < size:
        best = 0
        pi = -1
        pj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = D.a[i * n + j]
                if v != 0 and (pi < 0 or _llabs(v) < best):
                    best = _llabs(v)
                    pi = i
                    pj = j
                    if best == 1:
                        break
            if best == 1 and pi >= 0:
                break
        if pi < 0:
            break
        if pi != t:
            _swap_rows(D, t, pi)
        if pj != t:
            _swap_cols(D, t, pj)
        while True:
            for i in range(t + 1, m):
                b = D.a[i * n + t]
                if b == 0:
                    continue
                a = D.a[t * n + t]
                _check(a)
                _check(b)
                if a != 0 and b % a == 0:
                    _addrow(D, t, i, -(b / a))
                else:
                    _xgcd(a, b, &x, &y, &g)
                    _rowop2(D, t, i, x, y, -(b / g), a / g)
            for j in range(t + 1, n):
                b = D.a[t * n + j]
                if b == 0:
                    continue
                a = D.a[t * n + t]
                _check(a)
                _check(b)
                if a != 0 and b % a == 0:
                    _addcol(D, t, j, -(b / a))
                else:
                    _xgcd(a, b, &x, &y, &g)
                    _colop2(D, t, j, x, y, -(b / g), a / g)
            clean = 1
            for i in range(t + 1, m):
                if D.a[i * n + t] != 0:
                    clean = 0
                    break
            if clean:
                for j in range(t + 1, n):
                    if D.a[t * n + j] != 0:
                        clean = 0
                        break
            if clean:
                break
        t += 1

    out = []
    cdef long long prev
    diag = []
    for i in range(size):
        v = D.a[i * n + i]
        if v != 0:
            diag.append(-v if v < 0 else v)
    # enforce divisibility on the collected diagonal with plain gcd/lcm
    cdef int changed = 1
    while changed:
        changed = 0
        for i in range(len(diag) - 1):
            a = diag[i]
            b = diag[i + 1]
            if b % a != 0:
                _check(a)
                _check(b)
                g = _gcd_ll(a, b)
                diag[i] = g
                diag[i + 1] = a // g * b
                changed = 1
    return [int(d) for d in diag]


cdef long long _gcd_ll(long long a, long long b):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def integer_rank(mat):
    if not mat or not mat[0]:
        return 0
    return len(snf_diagonal(mat))
