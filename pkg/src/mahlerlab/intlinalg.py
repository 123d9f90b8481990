"""Exact integer linear algebra on small dense matrices: fraction-free
determinants, integer matrix powers, Smith normal form with transforms,
saturated integer kernels, and LLL reduction over exact rationals.

Everything here works on plain lists of Python ints; matrices are small by
design (companion matrices, Siegel systems, period matrices), so clarity
beats asymptotics.
"""

from __future__ import annotations

import math
from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            for j in range(m):
                oi[j] += c * bt[j]
    return out


def mat_pow(a, n):
    if n < 0:
        raise ValueError("negative matrix powers not supported")
    size = len(a)
    result = identity(size)
    base = [row[:] for row in a]
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def bareiss_det(matrix):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix):
    """(U, S, V) unimodular with U * M * V = S diagonal, s_i | s_{i+1}.

    Standard pivot-reduction; pivots chosen of minimal absolute value to
    keep intermediate growth tame on the small matrices we feed it.
    """
    s = [row[:] for row in matrix]
    rows = len(s)
    cols = len(s[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        s[i] = [a - q * b for a, b in zip(s[i], s[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            s[r][i] -= q * s[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            s[r][i], s[r][j] = s[r][j], s[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(rows, cols):
        # locate a nonzero pivot of minimal magnitude in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    row_op(i, t, q)
                    if s[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    col_op(j, t, q)
                    if s[t][j]:
                        swap_cols(t, j)
                        dirty = True
        t += 1
    # enforce divisibility chain and positive diagonal
    t = min(rows, cols)
    for i in range(t):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a, b = s[i][i], s[i + 1][i + 1]
            if a and b and b % a != 0:
                # standard 2x2 repair: gcd to the front
                g = math.gcd(a, b)
                # col_{i} += col_{i+1}; then clear with row ops
                for r in range(rows):
                    s[r][i] += s[r][i + 1]
                for r in range(cols):
                    v[r][i] += v[r][i + 1]
                # now s[i][i]=a, s[i+1][i]=b; reduce the 2x2 corner
                while s[i + 1][i]:
                    q = s[i][i] // s[i + 1][i] if s[i + 1][i] else 0
                    if abs(s[i][i]) >= abs(s[i + 1][i]):
                        row_op(i, i + 1, q)
                        if not s[i][i]:
                            swap_rows(i, i + 1)
                    else:
                        swap_rows(i, i + 1)
                # clear fill-in in row i and column i+1
                if s[i][i + 1]:
                    q = s[i][i + 1] // s[i][i]
                    col_op(i + 1, i, q)
                if s[i][i] < 0:
                    s[i] = [-x for x in s[i]]
                    u[i] = [-x for x in u[i]]
                if s[i + 1][i + 1] < 0:
                    s[i + 1] = [-x for x in s[i + 1]]
                    u[i + 1] = [-x for x in u[i + 1]]
                assert s[i][i] == g or s[i][i] == -g
                changed = True
    return u, s, v


def kernel_basis(matrix):
    """Basis of the saturated integer kernel {x in Z^L : M x = 0}.

    Via Smith normal form: with U M V = S, the kernel is spanned by the
    columns of V at positions where S has a zero diagonal entry (or beyond
    the diagonal).  The result is a Z-basis of the full kernel lattice, not
    of a finite-index sublattice.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0:
        return [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    _, s, v = smith_normal_form(matrix)
    rank = 0
    for i in range(min(rows, cols)):
        if s[i][i] != 0:
            rank += 1
    basis = []
    for j in range(rank, cols):
        basis.append([v[r][j] for r in range(cols)])
    return basis


def lll_reduce(basis, delta=Fraction(3, 4)):
    """LLL reduction with exact rational Gram-Schmidt data, maintained
    incrementally (the classic algorithm; no floating point anywhere).

    `basis` is a list of linearly independent integer vectors (rows).
    Returns a new reduced list; the input is not modified.
    """
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n <= 1:
        return [row[:] for row in b]

    # initial Gram-Schmidt: star norms and mu coefficients
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms = [Fraction(0)] * n
    star = [None] * n
    for i in range(n):
        vec = [Fraction(x) for x in b[i]]
        for j in range(i):
            if norms[j] == 0:
                raise ValueError("lll_reduce requires linearly independent input")
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(b[i], star[j])) / norms[j]
            vec = [x - mu[i][j] * y for x, y in zip(vec, star[j])]
        star[i] = vec
        norms[i] = sum(x * x for x in vec)
        if norms[i] == 0:
            raise ValueError("lll_reduce requires linearly independent input")

    def red(k, l):
        if 2 * abs(mu[k][l]) > 1:
            q = round(mu[k][l])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            for j in range(l):
                mu[k][j] -= q * mu[l][j]
            mu[k][l] -= q

    k = 1
    while k < n:
        red(k, k - 1)
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            # swap b[k-1], b[k] and patch the Gram-Schmidt data in place
            nu = mu[k][k - 1]
            big = norms[k] + nu * nu * norms[k - 1]
            mu[k][k - 1] = nu * norms[k - 1] / big
            norms[k] = norms[k - 1] * norms[k] / big
            norms[k - 1] = big
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - nu * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return b


def size_reduce(basis):
    """Size reduction only (no swaps): subtract rounded Gram-Schmidt
    projections.  Cheap cleanup when full LLL is unnecessary."""
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            denom = sum(x * x for x in b[j])
            if denom == 0:
                continue
            q = round(Fraction(sum(x * y for x, y in zip(b[i], b[j])), denom))
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
    return b
