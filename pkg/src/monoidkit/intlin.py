"""Exact integer linear algebra on list-of-rows matrices.

Thin layer over the SNF kernel: kernels, solving, lattice membership and
preimages.  Everything here is deterministic and exact.
"""

from __future__ import annotations

from . import _kernels


def matmul(a, b):
    if not a:
        return []
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cols):
                    oi[j] += v * bk[j]
    return out


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def snf(mat):
    """(U, D, V) with U*mat*V = D, Smith normal form."""
    return _kernels.snf_with_transforms(mat)


def invariant_factors(mat):
    """Nonzero diagonal entries of the SNF, in divisibility order."""
    return _kernels.snf_diagonal(mat)


def rank(mat):
    return _kernels.integer_rank(mat)


def kernel_basis(mat):
    """Columns (as lists) spanning the integer kernel {x : mat*x = 0}."""
    if not mat or not mat[0]:
        n = len(mat[0]) if mat else 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    U, D, V = snf(mat)
    m, n = len(mat), len(mat[0])
    r = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def solve(mat, vec):
    """One integer solution x of mat*x = vec, or None."""
    if not mat:
        return None if any(vec) else []
    m, n = len(mat), len(mat[0])
    U, D, V = snf(mat)
    c = [sum(U[i][k] * vec[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        d = D[i][i]
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    for i in range(min(m, n), m):
        if c[i] != 0:
            return None
    return [sum(V[i][k] * y[k] for k in range(n)) for i in range(n)]


def in_lattice(gens_cols, vec):
    """Is vec an integer combination of the given columns?"""
    if not gens_cols:
        return not any(vec)
    mat = [[col[i] for col in gens_cols] for i in range(len(gens_cols[0]))]
    return solve(mat, vec) is not None


def preimage_lattice(f_mat, lat_cols):
    """Basis (columns) of {x : f_mat*x lies in the lattice spanned by lat_cols}.

    Computed as the x-projection of the kernel of [f_mat | -lat_cols].
    """
    m = len(f_mat)
    n = len(f_mat[0]) if m else 0
    k = len(lat_cols)
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    big = [f_mat[i][:] + [-lat_cols[j][i] for j in range(k)] for i in range(m)]
    ker = kernel_basis(big)
    cols = [col[:n] for col in ker]
    return lattice_basis(cols, n)


def lattice_basis(cols, dim):
    """Independent basis (columns) for the lattice spanned by ``cols``."""
    cols = [c for c in cols if any(c)]
    if not cols:
        return []
    mat = [[c[i] for c in cols] for i in range(dim)]
    U, D, V = snf(mat)
    r = sum(1 for i in range(min(dim, len(cols))) if D[i][i] != 0)
    # columns of mat*V with nonzero image form a basis
    mv = matmul(mat, V)
    return [[mv[i][j] for i in range(dim)] for j in range(r)]


def hermite_solve_all(mat, vec):
    """General integer solution (particular, kernel basis) of mat*x = vec."""
    part = solve(mat, vec)
    if part is None:
        return None
    return part, kernel_basis(mat)
