"""Conic bundles a*x^2 + b*y^2 = z^2 over P^1 and their degenerate fibers.

At a place where the quaternion symbol (a,b)_2 ramifies, the fiber of the
minimized local model degenerates to a rank-2 form whose two lines are
swapped by a quadratic twist; the class of that component torsor equals
the tame residue.  A projective point-count over the residue field acts as
an independent oracle: a split degenerate conic over F_Q has 2Q+1 points,
a non-split one exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finitefield import FieldElement, FiniteField, ResidueClass, \
    power_residue_character
from .poly import Poly
from .ratfunc import Place, RatFunc, reduce_at, support, valuation
from .snf import TableSizeError
from .residues import SymbolClass, ramification_divisor, tame_residue


class ConicModelError(ValueError):
    """The local model cannot be reduced to a standard degeneration."""


@dataclass(frozen=True)
class ConicBundle:
    a: RatFunc
    b: RatFunc

    def __post_init__(self):
        if self.a.field is not self.b.field:
            raise ValueError("coefficients over different fields")
        if self.a.field.p == 2:
            raise ConicModelError("odd characteristic required")
        if self.a.is_zero() or self.b.is_zero():
            raise ConicModelError("conic coefficients must be nonzero")

    @property
    def field(self) -> FiniteField:
        return self.a.field

    def symbol(self) -> SymbolClass:
        return SymbolClass.symbol(self.a, self.b, 2)

    def __repr__(self):
        return f"({self.a})*x^2 + ({self.b})*y^2 = z^2"


def minimize_at(C: ConicBundle, P: Place):
    """Local model (a0, b0, -1) with v_P(a0), v_P(b0) in {0, 1}, not both 1.

    Even parts of the valuations are square factors of the uniformizer and
    are stripped; if both coefficients still vanish to order one, the
    symbol identity (a, b) = (a, -a*b) trades b for a unit.  The symbol
    class at P is unchanged throughout.
    """
    pi = P.uniformizer()
    a, b = C.a, C.b
    a = a * pi ** (-2 * (valuation(a, P) // 2))
    b = b * pi ** (-2 * (valuation(b, P) // 2))
    if valuation(a, P) == 1 and valuation(b, P) == 1:
        b = (-a * b) * pi ** -2
    minus_one = RatFunc.constant(C.field, -1)
    return (a, b, minus_one)


def discriminant_places(C: ConicBundle):
    """Places where the quaternion symbol of the bundle ramifies."""
    return ramification_divisor(C.symbol()).places()


def _reduced_fiber(C: ConicBundle, P: Place):
    """Coefficients (abar, bbar) of the fiber form over kappa(P); a
    coefficient of valuation 1 reduces to zero."""
    a0, b0, _ = minimize_at(C, P)
    kappa = P.residue_field()
    abar = kappa.zero() if valuation(a0, P) == 1 else reduce_at(a0, P)
    bbar = kappa.zero() if valuation(b0, P) == 1 else reduce_at(b0, P)
    return abar, bbar


def component_torsor(C: ConicBundle, P: Place) -> ResidueClass:
    """Square class of the unit coefficient of the degenerate fiber at P.

    The fiber u*X^2 = Z^2 factors into two lines over kappa(P)(sqrt(u));
    the torsor of its components is the class of u.  Errors if the fiber
    at P is a smooth conic.
    """
    abar, bbar = _reduced_fiber(C, P)
    if not abar.is_zero() and not bbar.is_zero():
        raise ConicModelError("fiber is smooth")
    unit = abar if bbar.is_zero() else bbar
    if unit.is_zero():
        raise ConicModelError("fiber has rank < 2")  # unreachable: see minimize_at
    return power_residue_character(unit, 2)


def degenerate_places(C: ConicBundle):
    """Places with a degenerate fiber (discriminant places and the split
    degenerations with trivial torsor)."""
    out = []
    candidates = {}
    for f in (C.a, C.b):
        for P in support(f):
            candidates[P] = True
    places = sorted(candidates, key=lambda P: P.key())
    places.append(Place.infinity(C.field))
    for P in places:
        abar, bbar = _reduced_fiber(C, P)
        if abar.is_zero() or bbar.is_zero():
            out.append(P)
    return out


def check_artin(C: ConicBundle):
    """Compare the component torsor with the tame residue at every ramified
    place; returns (place, geometric, residue, agree) rows."""
    rows = []
    for P in discriminant_places(C):
        geo = component_torsor(C, P)
        res = tame_residue(C.symbol(), P)
        rows.append((P, geo, res, geo == res))
    return rows


# ---------------------------------------------------------------------------
# point counting oracle

_SQRT_COUNTS: dict = {}


def _sqrt_count_table(F: FiniteField):
    """cnt[w] = number of z in F with z^2 = w, by one pass over F."""
    key = (F.p, F.d, F.modulus)
    table = _SQRT_COUNTS.get(key)
    if table is None:
        table = {}
        for k in range(F.order):
            w = F._mul(F.from_key(k).coeffs, F.from_key(k).coeffs)
            table[w] = table.get(w, 0) + 1
        _SQRT_COUNTS[key] = table
    return table


def _extension_with_embedding(kappa: FiniteField, e: int):
    """(L, embed) with L = F_{|kappa|^e} and embed: kappa -> L a field map.

    The embedding sends the generator of kappa to the smallest root of
    kappa's defining polynomial in L.
    """
    if e == 1:
        return kappa, lambda u: u
    L = FiniteField(kappa.p, kappa.d * e)
    if kappa.d == 1:
        return L, lambda u: L.element(u.coeffs[0])
    defining = Poly(L, [L.element(c) for c in kappa.modulus])
    roots = defining.roots()
    if not roots:
        raise RuntimeError("defining polynomial has no root in the extension")
    r = roots[0]
    powers = [L.one()]
    for _ in range(kappa.d - 1):
        powers.append(powers[-1] * r)

    def embed(u: FieldElement) -> FieldElement:
        acc = L.zero()
        for c, rp in zip(u.coeffs, powers):
            acc = acc + rp * c
        return acc

    return L, embed


def count_fiber_points(C: ConicBundle, P: Place, e: int = 1) -> int:
    """Projective points of the reduced fiber at P over the degree-e
    extension of kappa(P), counted by enumeration.

    Affine solutions of A x^2 + B y^2 = z^2 are enumerated with a
    square-root count table over the extension (one loop per free
    variable); the projective count is (solutions - 1)/(Q - 1).
    """
    kappa = P.residue_field()
    L, embed = _extension_with_embedding(kappa, e)
    abar, bbar = _reduced_fiber(C, P)
    A, B = embed(abar), embed(bbar)
    Q = L.order
    cnt = _sqrt_count_table(L)
    zero = L.zero().coeffs
    total = 0
    if A.is_zero() or B.is_zero():
        coeff = B.coeffs if A.is_zero() else A.coeffs
        for k in range(Q):
            x = L.from_key(k).coeffs
            w = L._mul(coeff, L._mul(x, x))
            total += cnt.get(w, 0)
        total *= Q  # the missing variable is free
    else:
        if Q * Q > 10 ** 6:
            raise TableSizeError(
                f"smooth-fiber enumeration over {Q}^2 pairs exceeds guard")
        for kx in range(Q):
            x = L.from_key(kx).coeffs
            ax2 = L._mul(A.coeffs, L._mul(x, x))
            for ky in range(Q):
                y = L.from_key(ky).coeffs
                w = L._add(ax2, L._mul(B.coeffs, L._mul(y, y)))
                total += cnt.get(w, 0)
    # projective points = (nonzero affine solutions) / (Q - 1)
    points, rem = divmod(total - 1, Q - 1)
    if rem:
        raise RuntimeError("affine solution count is not projective")
    return points
