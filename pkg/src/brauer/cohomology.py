"""Explicit cohomology of finite abelian groups with Z/m coefficients.

Everything is inhomogeneous-cochain linear algebra over the integers:
cochains are total tables G^k -> Z/m, the differential is the standard one
for the trivial action, and ranks / cohomologous-ness are decided by Smith
normal form.  The multiplicative group mu_n is written additively as Z/n
throughout, via the canonical primitive root of the ambient field.

Also here: the formal-unit calculus for the Cech coboundary identity on the
n-th root cover of a DVR, and the factor set of the monomial-matrix central
extension of mu_n x Z/n (scalars, the n-cycle permutation, and the diagonal
of successive root-of-unity powers).
"""

from __future__ import annotations

import itertools
import random

from dataclasses import dataclass
from fractions import Fraction

from .finitefield import FiniteField
from .snf import (TableSizeError, kernel_mod, quotient_invariants, solve_mod,
                  smith_normal_form)

TABLE_GUARD = 10 ** 6


class FiniteAbelianGroup:
    """Product of cyclic groups Z/m1 x ... x Z/mk; elements are tuples."""

    def __init__(self, factors):
        factors = tuple(int(m) for m in factors)
        if any(m < 1 for m in factors):
            raise ValueError("cyclic factors must be >= 1")
        self.factors = factors
        self.size = 1
        for m in factors:
            self.size *= m
        self._elements = [tuple(e) for e in
                          itertools.product(*(range(m) for m in factors))]
        self._index = {e: i for i, e in enumerate(self._elements)}

    def elements(self):
        return self._elements

    def identity(self):
        return (0,) * len(self.factors)

    def add(self, g, h):
        return tuple((a + b) % m for a, b, m in zip(g, h, self.factors))

    def neg(self, g):
        return tuple((-a) % m for a, m in zip(g, self.factors))

    def index(self, g) -> int:
        return self._index[tuple(g)]

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return " x ".join(f"Z/{m}" for m in self.factors)


def _check_size(group: FiniteAbelianGroup, degree: int):
    if group.size ** max(degree, 1) > TABLE_GUARD:
        raise TableSizeError(
            f"cochain table with {group.size}^{degree} entries exceeds guard")


class Cochain:
    """A total function group^degree -> Z/modulus."""

    def __init__(self, group: FiniteAbelianGroup, degree: int, modulus: int,
                 values=None):
        if degree < 0:
            raise ValueError("negative cochain degree")
        _check_size(group, degree)
        self.group = group
        self.degree = degree
        self.modulus = modulus
        keys = list(itertools.product(group.elements(), repeat=degree))
        if values is None:
            self.values = {k: 0 for k in keys}
        elif callable(values):
            self.values = {k: values(*k) % modulus for k in keys}
        else:
            self.values = {k: values[k] % modulus for k in keys}

    def __call__(self, *args) -> int:
        return self.values[tuple(tuple(g) for g in args)]

    def _compat(self, other):
        if (self.group != other.group or self.degree != other.degree
                or self.modulus != other.modulus):
            raise ValueError("incompatible cochains")

    def __add__(self, other):
        self._compat(other)
        return Cochain(self.group, self.degree, self.modulus,
                       {k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other):
        self._compat(other)
        return Cochain(self.group, self.degree, self.modulus,
                       {k: v - other.values[k] for k, v in self.values.items()})

    def __neg__(self):
        return Cochain(self.group, self.degree, self.modulus,
                       {k: -v for k, v in self.values.items()})

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Cochain(self.group, self.degree, self.modulus,
                       {key: k * v for key, v in self.values.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.group == other.group
                and self.degree == other.degree and self.modulus == other.modulus
                and self.values == other.values)

    def __repr__(self):
        return (f"Cochain(deg={self.degree}, {self.group}, "
                f"Z/{self.modulus}, {len(self.values)} entries)")

    @classmethod
    def random(cls, group, degree, modulus, rng: random.Random):
        return cls(group, degree, modulus,
                   lambda *k: rng.randrange(modulus))


def coboundary(c: Cochain) -> Cochain:
    """Inhomogeneous differential with trivial coefficients; d(d(c)) = 0."""
    G = c.group
    k = c.degree
    _check_size(G, k + 1)
    m = c.modulus
    out = {}
    for key in itertools.product(G.elements(), repeat=k + 1):
        v = c.values[key[1:]]
        sign = -1
        for i in range(k):
            merged = key[:i] + (G.add(key[i], key[i + 1]),) + key[i + 2:]
            v += sign * c.values[merged]
            sign = -sign
        v += sign * c.values[key[:k]]
        out[key] = v % m
    return Cochain(G, k + 1, m, out)


def is_cocycle(c: Cochain) -> bool:
    return coboundary(c).is_zero()


def coboundary_matrix(group: FiniteAbelianGroup, k: int):
    """Integer matrix of d_k : C^k -> C^{k+1} in the tuple-product bases."""
    _check_size(group, k + 1)
    rows_keys = list(itertools.product(group.elements(), repeat=k + 1))
    cols_keys = list(itertools.product(group.elements(), repeat=k))
    col_index = {key: j for j, key in enumerate(cols_keys)}
    M = [[0] * len(cols_keys) for _ in rows_keys]
    for r, key in enumerate(rows_keys):
        row = M[r]
        row[col_index[key[1:]]] += 1
        sign = -1
        for i in range(k):
            merged = key[:i] + (group.add(key[i], key[i + 1]),) + key[i + 2:]
            row[col_index[merged]] += sign
            sign = -sign
        row[col_index[key[:k]]] += sign
    return M


def cohomology_rank(group: FiniteAbelianGroup, modulus: int, degree: int):
    """Invariant factors of H^degree(group, Z/modulus), trivial action.

    Computed as ker(d_k)/im(d_{k-1}) over Z/modulus via integer Smith
    normal form; factors equal to 1 are omitted.
    """
    _check_size(group, degree + 1)
    m = modulus
    B = coboundary_matrix(group, degree)
    N = group.size ** degree
    gens = kernel_mod(B, m)  # N x N basis of {x : Bx = 0 mod m}
    rel_cols = []
    if degree > 0:
        A = coboundary_matrix(group, degree - 1)
        for j in range(len(A[0])):
            rel_cols.append([A[i][j] for i in range(N)])
    for i in range(N):
        rel_cols.append([m if r == i else 0 for r in range(N)])
    rels = [[col[i] for col in rel_cols] for i in range(N)]
    return sorted(quotient_invariants(gens, rels))


def cocycles_cohomologous(c1: Cochain, c2: Cochain) -> bool:
    """Whether c1 - c2 is a coboundary, by modular linear algebra."""
    c1._compat(c2)
    if c1.degree == 0:
        return (c1 - c2).is_zero()
    G = c1.group
    m = c1.modulus
    A = coboundary_matrix(G, c1.degree - 1)
    diff = c1 - c2
    keys = list(itertools.product(G.elements(), repeat=c1.degree))
    b = [diff.values[k] for k in keys]
    return solve_mod(A, b, m) is not None


# ---------------------------------------------------------------------------
# the box product representative and the Cech identity for the root cover

def cup_product_boxtimes(n: int) -> Cochain:
    """Degree-2 cochain ((b1,b2),(b1',b2')) -> b1*b2' on Z/n x Z/n.

    The first factor is mu_n written additively.  This is the cup product
    of the two coordinate characters and is a 2-cocycle for every n.
    """
    G = FiniteAbelianGroup((n, n))
    return Cochain(G, 2, n, lambda g, h: g[0] * h[1])


@dataclass(frozen=True)
class FormalUnit:
    """pi^pi_exponent * zeta^zeta_exponent with zeta_exponent mod n."""

    pi_exponent: Fraction
    zeta_exponent: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "pi_exponent", Fraction(self.pi_exponent))
        object.__setattr__(self, "zeta_exponent", self.zeta_exponent % self.n)
        if (self.pi_exponent * self.n).denominator != 1:
            raise ValueError("pi exponent denominator must divide n")

    def __mul__(self, other: "FormalUnit") -> "FormalUnit":
        if self.n != other.n:
            raise ValueError("formal units for different n")
        return FormalUnit(self.pi_exponent + other.pi_exponent,
                          self.zeta_exponent + other.zeta_exponent, self.n)

    def inverse(self) -> "FormalUnit":
        return FormalUnit(-self.pi_exponent, -self.zeta_exponent, self.n)

    def __repr__(self):
        return f"pi^({self.pi_exponent})*zeta^{self.zeta_exponent}"


def epsilon_cocycle(n: int, power: int = 1):
    """Table (b, b') -> 1 or pi^-1 (pi^-power for the power-th tensor)."""
    one = FormalUnit(0, 0, n)
    drop = FormalUnit(-power, 0, n)
    return {(b, b2): (drop if b + b2 >= n else one)
            for b in range(n) for b2 in range(n)}


def verify_coboundary_identity(n: int, power: int = 1) -> bool:
    """Check d(pi^(power*b/n)) = epsilon^-1 * zeta^(power*beta*b') exactly.

    The Cech coboundary of the 1-cochain indexed by (beta, b) is evaluated
    with the torsor translation: restricting the second index along the
    first multiplies the n-th root of pi by zeta^beta.
    """
    eps = epsilon_cocycle(n, power)
    # the value at ((beta, b), (beta', b')) is independent of beta':
    # the cochain depends only on b and the translation only on beta
    for beta, b, b2 in itertools.product(range(n), repeat=3):
        c_g = FormalUnit(Fraction(power * b, n), 0, n)
        # c_{g'} translated by g: the root picks up the factor zeta^beta
        c_g2_translated = FormalUnit(Fraction(power * b2, n),
                                     power * beta * b2, n)
        c_gg2 = FormalUnit(Fraction(power * ((b + b2) % n), n), 0, n)
        d_value = c_g2_translated * c_gg2.inverse() * c_g
        expected = eps[(b, b2)].inverse() * FormalUnit(0, power * beta * b2, n)
        if d_value != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# the low-degree edge map for the projection mu_n x Z/n -> Z/n

def identity_character(n: int) -> Cochain:
    """The identity homomorphism Z/n -> Z/n as a 1-cochain."""
    return Cochain(FiniteAbelianGroup((n,)), 1, n, lambda g: g[0])


def lhs_edge_map(c: Cochain) -> Cochain:
    """Edge-map value of a 2-cochain on mu_n x Z/n killed on the fiber.

    The restriction of c to the mu_n factor must be a coboundary; c is
    corrected by one, and the residual pairing b -> (beta -> c((beta,0),(0,b))
    - c((0,b),(beta,0))) is read off as a homomorphism mu_n -> Z/n, i.e. an
    element of Z/n.  Returns a 1-cochain on Z/n.
    """
    G = c.group
    if len(G.factors) != 2 or G.factors[0] != G.factors[1]:
        raise ValueError("expected a 2-cochain on Z/n x Z/n")
    if c.degree != 2:
        raise ValueError("expected a degree-2 cochain")
    n = G.factors[0]
    m = c.modulus
    Zn = FiniteAbelianGroup((n,))

    # solve d(phi) = c restricted to the mu_n x mu_n face
    A = coboundary_matrix(Zn, 1)
    keys = list(itertools.product(Zn.elements(), repeat=2))
    b = [c.values[(((k[0][0], 0)), ((k[1][0], 0)))] for k in keys]
    phi = solve_mod(A, b, m)
    if phi is None:
        raise ValueError("class does not vanish on fiber")
    lift = Cochain(G, 1, m, lambda g: phi[g[0]])
    cc = c - coboundary(lift)

    def pairing(beta: int, bb: int) -> int:
        return (cc.values[((beta, 0), (0, bb))]
                - cc.values[((0, bb), (beta, 0))]) % m

    out = {}
    for (bb,) in [(x,) for x in range(n)]:
        base = pairing(0, bb)
        # the corrected pairing is linear in beta; evaluate at the generator
        for beta in range(n):
            expected = (beta * (pairing(1, bb) - base) + base) % m
            if pairing(beta, bb) != expected:
                raise ValueError("fiber pairing is not a character")
        out[((bb,),)] = (pairing(1, bb) - base) % m
    return Cochain(Zn, 1, m, out)


# ---------------------------------------------------------------------------
# the monomial-matrix central extension and its factor set

def _mat_mul(F: FiniteField, A, B):
    n = len(A)
    zero = F.zero().coeffs
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(n):
            acc = zero
            for k in range(n):
                if any(Ai[k]) and any(B[k][j]):
                    acc = F._add(acc, F._mul(Ai[k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _gamma_group(n: int, q_field: FiniteField):
    """Closure of {zeta*I, n-cycle permutation, diag of zeta powers}."""
    F = q_field
    zeta = F.zeta(n)
    zero, one = F.zero().coeffs, F.one().coeffs

    def diag(entries):
        return tuple(tuple(entries[i].coeffs if i == j else zero
                           for j in range(n)) for i in range(n))

    scalar = diag([zeta] * n)
    powers = diag([zeta ** i for i in range(n)])
    cycle = tuple(tuple(one if j == (i + 1) % n else zero for j in range(n))
                  for i in range(n))
    gens = [scalar, powers, cycle]
    seen = {diag([F.one()] * n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = _mat_mul(F, A, g)
                if B not in seen:
                    seen.add(B)
                    nxt.append(B)
        frontier = nxt
    return sorted(seen)


def _dlog(F: FiniteField, zeta, x, n: int) -> int:
    w = F.one()
    for m in range(n):
        if w.coeffs == x:
            return m
        w = w * zeta
    raise ValueError("element is not a power of zeta")


def extension_factor_set(n: int, q: int) -> Cochain:
    """Factor set of the scalar extension of mu_n x Z/n inside GL_n(F_q).

    A group element projects to (beta, b) by the ratio of successive
    nonzero entries and the position of the nonzero entry in the first
    row; the factor set of a deterministic set-theoretic section lands in
    the central scalars and is returned additively, as a 2-cochain on
    Z/n x Z/n with values in Z/n.  Its class is that of
    ((beta,b),(beta',b')) -> beta'*b, the negative of the box product.
    """
    F = FiniteField(q) if isinstance(q, int) else q
    if (F.order - 1) % n != 0:
        raise ValueError(f"n={n} must divide q-1={F.order - 1}")
    zeta = F.zeta(n)
    group = _gamma_group(n, F)

    def project(A):
        cols = []
        for i in range(n):
            col = next(j for j in range(n) if any(A[i][j]))
            cols.append(col)
        ratio = F._mul(A[1][cols[1]], F._inv(A[0][cols[0]])) if n > 1 else F.one().coeffs
        beta = _dlog(F, zeta, ratio, n)
        return (beta, cols[0])

    section = {}
    for A in group:  # sorted, so the chosen preimages are deterministic
        key = project(A)
        if key not in section:
            section[key] = A

    G = FiniteAbelianGroup((n, n))

    def inv_matrix(A):
        # monomial matrix inverse: transpose positions, invert entries
        out = [[F.zero().coeffs] * n for _ in range(n)]
        for i in range(n):
            j = next(jj for jj in range(n) if any(A[i][jj]))
            out[j][i] = F._inv(A[i][j])
        return tuple(tuple(r) for r in out)

    def value(g, h):
        A = _mat_mul(F, section[g], section[h])
        B = _mat_mul(F, A, inv_matrix(section[G.add(g, h)]))
        # B is a scalar matrix in mu_n
        return _dlog(F, zeta, B[0][0], n)

    return Cochain(G, 2, n, value)


def gamma_group_order(n: int, q: int) -> int:
    return len(_gamma_group(n, FiniteField(q)))
