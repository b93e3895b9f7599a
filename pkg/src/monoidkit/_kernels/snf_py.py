"""Smith normal form over the integers, pure-Python reference kernel.

Matrices are lists of row lists of Python ints (exact bignum arithmetic).
Elimination uses extended-gcd 2x2 unimodular blocks, which keeps
intermediate growth tame.  The compiled twin (``_snf_cy``) mirrors this
algorithm in 64-bit arithmetic and raises ``OverflowError`` when entries
threaten the safe range; callers fall back to this module in that case.
"""

from __future__ import annotations


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def snf_with_transforms(mat):
    """Return (U, D, V) with U*mat*V = D in Smith normal form.

    U and V are unimodular; D is diagonal with d1 | d2 | ... and all
    diagonal entries nonnegative.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    D = [list(map(int, row)) for row in mat]
    U = _identity(m)
    V = _identity(n)

    def clear_col_entry(t, i):
        # zero D[i][t] with a unimodular op on rows t and i
        a, b = D[t][t], D[i][t]
        if b == 0:
            return
        if a != 0 and b % a == 0:
            q = b // a
            D[i] = [x - q * y for x, y in zip(D[i], D[t])]
            U[i] = [x - q * y for x, y in zip(U[i], U[t])]
            return
        x, y, g = _xgcd(a, b)
        ag, bg = a // g, b // g
        Dt, Di = D[t], D[i]
        D[t] = [x * p + y * q_ for p, q_ in zip(Dt, Di)]
        D[i] = [-bg * p + ag * q_ for p, q_ in zip(Dt, Di)]
        Ut, Ui = U[t], U[i]
        U[t] = [x * p + y * q_ for p, q_ in zip(Ut, Ui)]
        U[i] = [-bg * p + ag * q_ for p, q_ in zip(Ut, Ui)]

    def clear_row_entry(t, j):
        a, b = D[t][t], D[t][j]
        if b == 0:
            return
        if a != 0 and b % a == 0:
            q = b // a
            for row in D:
                row[j] -= q * row[t]
            for row in V:
                row[j] -= q * row[t]
            return
        x, y, g = _xgcd(a, b)
        ag, bg = a // g, b // g
        for row in D:
            p, q_ = row[t], row[j]
            row[t] = x * p + y * q_
            row[j] = -bg * p + ag * q_
        for row in V:
            p, q_ = row[t], row[j]
            row[t] = x * p + y * q_
            row[j] = -bg * p + ag * q_

    size = min(m, n)
    t = 0
    while t < size:
        # pivot: nonzero entry of minimal absolute value
        piv = None
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        if piv[0] != t:
            D[t], D[piv[0]] = D[piv[0]], D[t]
            U[t], U[piv[0]] = U[piv[0]], U[t]
        if piv[1] != t:
            for row in D:
                row[t], row[piv[1]] = row[piv[1]], row[t]
            for row in V:
                row[t], row[piv[1]] = row[piv[1]], row[t]

        while True:
            for i in range(t + 1, m):
                clear_col_entry(t, i)
            for j in range(t + 1, n):
                clear_row_entry(t, j)
            if all(D[i][t] == 0 for i in range(t + 1, m)) and all(
                D[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        t += 1

    for i in range(size):
        if D[i][i] < 0:
            D[i] = [-x for x in D[i]]
            U[i] = [-x for x in U[i]]

    # enforce divisibility d_i | d_{i+1}
    i = 0
    while i < size - 1:
        a, b = D[i][i], D[i + 1][i + 1]
        if a != 0 and b % a != 0:
            # fold position (i+1) into column i, re-reduce the 2x2 block
            for row in D:
                row[i] += row[i + 1]
            for row in V:
                row[i] += row[i + 1]
            while D[i + 1][i] != 0 or D[i][i + 1] != 0:
                clear_col_entry(i, i + 1)
                clear_row_entry(i, i + 1)
            if D[i][i] < 0:
                D[i] = [-x for x in D[i]]
                U[i] = [-x for x in U[i]]
            if D[i + 1][i + 1] < 0:
                D[i + 1] = [-x for x in D[i + 1]]
                U[i + 1] = [-x for x in U[i + 1]]
            i = max(i - 1, 0)
        else:
            i += 1
    return U, D, V


def snf_diagonal(mat):
    """Invariant factors without transform bookkeeping."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0 or n == 0:
        return []
    D = [list(map(int, row)) for row in mat]

    def clear_col(t, i):
        a, b = D[t][t], D[i][t]
        if b == 0:
            return
        if a != 0 and b % a == 0:
            q = b // a
            D[i] = [x - q * y for x, y in zip(D[i], D[t])]
            return
        x, y, g = _xgcd(a, b)
        ag, bg = a // g, b // g
        Dt, Di = D[t], D[i]
        D[t] = [x * p + y * q_ for p, q_ in zip(Dt, Di)]
        D[i] = [-bg * p + ag * q_ for p, q_ in zip(Dt, Di)]

    def clear_row(t, j):
        a, b = D[t][t], D[t][j]
        if b == 0:
            return
        if a != 0 and b % a == 0:
            q = b // a
            for row in D:
                row[j] -= q * row[t]
            return
        x, y, g = _xgcd(a, b)
        ag, bg = a // g, b // g
        for row in D:
            p, q_ = row[t], row[j]
            row[t] = x * p + y * q_
            row[j] = -bg * p + ag * q_

    size = min(m, n)
    t = 0
    while t < size:
        piv = None
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        if piv[0] != t:
            D[t], D[piv[0]] = D[piv[0]], D[t]
        if piv[1] != t:
            for row in D:
                row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            for i in range(t + 1, m):
                clear_col(t, i)
            for j in range(t + 1, n):
                clear_row(t, j)
            if all(D[i][t] == 0 for i in range(t + 1, m)) and all(
                D[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        t += 1

    from math import gcd

    diag = [abs(D[i][i]) for i in range(size) if D[i][i] != 0]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a != 0:
                g = gcd(a, b)
                diag[i] = g
                diag[i + 1] = a // g * b
                changed = True
    return diag


def integer_rank(mat):
    if not mat or not mat[0]:
        return 0
    return len(snf_diagonal(mat))
