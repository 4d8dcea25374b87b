import random

from brauer.snf import (
    kernel_mod,
    quotient_invariants,
    smith_normal_form,
    solve_integer,
    solve_mod,
)


def _mat_vec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def test_smith_normal_form_properties():
    rng = random.Random(3)
    for _ in range(20):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        A = [[rng.randrange(-9, 10) for _ in range(cols)]
             for _ in range(rows)]
        D, U, V = smith_normal_form(A)
        # U * A * V == D
        UA = [[sum(U[i][k] * A[k][j] for k in range(rows))
               for j in range(cols)] for i in range(rows)]
        UAV = [[sum(UA[i][k] * V[k][j] for k in range(cols))
                for j in range(cols)] for i in range(rows)]
        assert UAV == D
        # diagonal with successive divisibility
        diag = [D[i][i] for i in range(min(rows, cols))]
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert D[i][j] == 0
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0


def test_solve_integer():
    A = [[2, 0], [0, 3]]
    assert solve_integer(A, [4, 9]) == [2, 3]
    assert solve_integer(A, [1, 0]) is None


def test_solve_mod():
    A = [[2], [4]]
    x = solve_mod(A, [2, 4], 6)
    assert x is not None
    assert [(v % 6) for v in _mat_vec(A, x)] == [2, 4]
    assert solve_mod(A, [0, 2], 6) is None
    assert solve_mod([[2]], [1], 4) is None


def test_kernel_mod():
    # kernel of (x, y) -> 2x + 2y mod 4 is generated by (1,1) and (2,0)
    basis = kernel_mod([[2, 2]], 4)
    for col in range(len(basis[0])):
        v = [basis[r][col] for r in range(len(basis))]
        assert sum(2 * c for c in v) % 4 == 0
    gens = [[basis[r][c] for r in range(len(basis))]
            for c in range(len(basis[0]))]
    assert any(all(c % 2 for c in g) for g in gens)


def test_quotient_invariants():
    # Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6
    gens = [[1, 0], [0, 1]]
    rels = [[2, 0], [0, 3]]
    assert quotient_invariants(gens, rels) == [6]
    # Z^2 / <(2,0),(0,2)> = Z/2 x Z/2
    rels = [[2, 0], [0, 2]]
    assert quotient_invariants(gens, rels) == [2, 2]
