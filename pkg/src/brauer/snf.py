"""Integer Smith normal form and modular linear solving.

All matrices are lists of lists of Python ints.  Sizes here stay in the
hundreds, so a straightforward exact pivoting algorithm is adequate.
"""

from __future__ import annotations


class TableSizeError(ValueError):
    """Raised when a cochain table or matrix exceeds the size guard."""


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return (D, U, V) with U*A*V == D diagonal and d1 | d2 | ...

    U and V are unimodular; D has the same shape as A with nonnegative
    diagonal entries.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    D = [list(r) for r in A]
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):
        # row dst += k * row src
        Ds, Dd = D[src], D[dst]
        for c in range(cols):
            Dd[c] += k * Ds[c]
        Us, Ud = U[src], U[dst]
        for c in range(rows):
            Ud[c] += k * Us[c]

    def add_col(src, dst, k):
        for r in D:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate a pivot of minimal absolute value in the trailing block
        pivot = None
        best = None
        for i in range(t, rows):
            Di = D[i]
            for j in range(t, cols):
                v = Di[j]
                if v:
                    a = abs(v)
                    if best is None or a < best:
                        best = a
                        pivot = (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        # clear row and column t; restart if a remainder shrinks the pivot
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = D[i][t]
                if v:
                    q = v // p
                    add_row(t, i, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                v = D[t][j]
                if v:
                    q = v // p
                    add_col(t, j, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if not dirty:
                break

        # divisibility: pivot must divide the trailing block
        p = D[t][t]
        fixed = True
        for i in range(t + 1, rows):
            Di = D[i]
            for j in range(t + 1, cols):
                if Di[j] % p:
                    add_row(i, t, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if p < 0:
            for j in range(cols):
                D[t][j] = -D[t][j]
            for j in range(rows):
                U[t][j] = -U[t][j]
        t += 1

    return D, U, V


def _mat_vec(M, v):
    return [sum(Mi[j] * v[j] for j in range(len(v))) for Mi in M]


def solve_integer(A, b):
    """One integer solution x of A x = b, or None."""
    D, U, V = smith_normal_form(A)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    c = _mat_vec(U, b)
    y = [0] * cols
    for i in range(rows):
        d = D[i][i] if i < cols else 0
        if i < cols and d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return _mat_vec(V, y)


def solve_mod(A, b, m):
    """One solution x of A x = b (mod m), or None.

    Solved exactly as A x + m y = b over the integers.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [list(A[i]) + [m if j == i else 0 for j in range(rows)]
           for i in range(rows)]
    sol = solve_integer(aug, b)
    if sol is None:
        return None
    return [v % m for v in sol[:cols]]


def kernel_basis(A):
    """Columns spanning the integer kernel lattice of A."""
    D, U, V = smith_normal_form(A)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    for i in range(min(rows, cols)):
        if D[i][i]:
            rank += 1
    return [[V[i][j] for j in range(rank, cols)] for i in range(cols)]


def kernel_mod(A, m):
    """Basis (as columns) of the lattice {x in Z^cols : A x = 0 mod m}."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return _identity(cols)
    aug = [list(A[i]) + [m if j == i else 0 for j in range(rows)]
           for i in range(rows)]
    K = kernel_basis(aug)
    # project away the auxiliary y coordinates; (0, y) in the kernel forces
    # m*y = 0, so the projection is injective and the columns stay a basis
    return [K[i] for i in range(cols)]


def quotient_invariants(gens, rels, size_hint=None):
    """Invariant factors (> 1) of the quotient lattice(gens)/lattice(rels).

    ``gens`` is an N x r matrix whose columns generate a lattice L;
    ``rels`` is an N x s matrix whose columns lie in L.  The quotient must
    be finite.
    """
    r = len(gens[0]) if gens else 0
    if r == 0:
        return []
    n = len(gens)
    D, U, V = smith_normal_form(gens)
    s = len(rels[0]) if rels else 0
    Y = [[0] * s for _ in range(r)]
    for j in range(s):
        col = [rels[i][j] for i in range(n)]
        c = _mat_vec(U, col)
        y = [0] * r
        for i in range(n):
            d = D[i][i] if i < r else 0
            if i < r and d:
                if c[i] % d:
                    raise ValueError("relation outside the generated lattice")
                y[i] = c[i] // d
            elif c[i]:
                raise ValueError("relation outside the generated lattice")
        y = _mat_vec(V, y)
        for i in range(r):
            Y[i][j] = y[i]
    Dy, _, _ = smith_normal_form(Y)
    out = []
    for i in range(r):
        d = Dy[i][i] if i < s else 0
        if d == 0:
            raise ValueError("quotient is infinite")
        if d != 1:
            out.append(d)
    return out
