"""The rational function field F_q(t), its places, valuations and residues.

Places of the projective line over F_q are monic irreducible polynomials
plus the place at infinity, whose uniformizer is fixed as 1/t.  The base
field is required to be a prime field so residue fields F_q[t]/(pi) can be
constructed directly as extensions of F_p.
"""

from __future__ import annotations

from .finitefield import FieldElement, FiniteField
from .poly import Poly


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.field)
        if num.field is not den.field:
            raise ValueError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(num.field)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.leading_coefficient()
            if lc != num.field.one():
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, field: FiniteField, c) -> "RatFunc":
        return cls(Poly.constant(field, c))

    @classmethod
    def zero(cls, field: FiniteField) -> "RatFunc":
        return cls(Poly.zero(field))

    @classmethod
    def one(cls, field: FiniteField) -> "RatFunc":
        return cls(Poly.one(field))

    @classmethod
    def gen(cls, field: FiniteField) -> "RatFunc":
        """The rational function t."""
        return cls(Poly.gen(field))

    @property
    def field(self) -> FiniteField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise ValueError("rational functions over different fields")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, FieldElement)):
            return RatFunc(Poly(self.field, (other,)))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement, Poly)):
            other = self._coerce(other)
        return (isinstance(other, RatFunc) and other.field is self.field
                and other.num == self.num and other.den == self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == Poly.one(self.field):
            return repr(self.num)
        return f"({self.num})/({self.den})"


class Place:
    """A closed point of P^1 over F_q: a monic irreducible, or infinity."""

    __slots__ = ("field", "poly", "_residue")

    def __init__(self, field: FiniteField, poly: Poly | None = None):
        if poly is not None:
            if poly.field is not field:
                raise ValueError("polynomial over a different field")
            if not poly.is_monic() or not poly.is_irreducible():
                raise ValueError("a finite place needs a monic irreducible")
        self.field = field
        self.poly = poly
        self._residue = None

    @classmethod
    def infinity(cls, field: FiniteField) -> "Place":
        return cls(field, None)

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.is_infinity else self.poly.degree

    def key(self):
        """Sort key: (degree, coefficients), with infinity last."""
        if self.is_infinity:
            return (1, 0, ())
        return (0, self.degree, self.poly.key()[1])

    def uniformizer(self) -> RatFunc:
        if self.is_infinity:
            return RatFunc(Poly.one(self.field), Poly.gen(self.field))
        return RatFunc(self.poly)

    def residue_field(self) -> FiniteField:
        """F_q[t]/(pi) for a finite place; F_q itself at infinity."""
        if self._residue is not None:
            return self._residue
        F = self.field
        if self.is_infinity or self.degree == 1:
            if F.d != 1 and not self.is_infinity:
                raise NotImplementedError(
                    "places are supported over prime base fields only")
            if self.is_infinity:
                self._residue = F
            else:
                self._residue = F
        else:
            if F.d != 1:
                raise NotImplementedError(
                    "places are supported over prime base fields only")
            modulus = tuple(c[0] for c in self.poly.coeffs)
            self._residue = FiniteField(F.p, self.degree, modulus)
        return self._residue

    def __eq__(self, other):
        return (isinstance(other, Place) and other.field is self.field
                and other.poly == self.poly)

    def __hash__(self):
        return hash((id(self.field), self.poly))

    def __repr__(self):
        return "inf" if self.is_infinity else repr(self.poly)


def valuation(f: RatFunc, P: Place) -> int:
    """Order of vanishing of f at P; errors on f = 0."""
    if f.is_zero():
        raise ValueError("valuation of zero")
    if P.is_infinity:
        return f.den.degree - f.num.degree

    def mult(g: Poly) -> int:
        m = 0
        while True:
            q, r = divmod(g, P.poly)
            if not r.is_zero():
                return m
            m += 1
            g = q

    # num and den are coprime, so at most one of the counts is nonzero
    return mult(f.num) - mult(f.den)


def reduce_at(f: RatFunc, P: Place) -> FieldElement:
    """Image of a unit f in the residue field at P."""
    if f.is_zero() or valuation(f, P) != 0:
        raise ValueError("not a unit at P")
    if P.is_infinity:
        return f.num.leading_coefficient() / f.den.leading_coefficient()
    kappa = P.residue_field()

    def into_kappa(g: Poly) -> FieldElement:
        r = g % P.poly
        if P.degree == 1:
            return r.coefficient(0)
        return kappa.element([c[0] for c in r.coeffs])

    return into_kappa(f.num) / into_kappa(f.den)


def degree_one_place(field: FiniteField, c) -> Place:
    """The place t - c."""
    return Place(field, Poly.gen(field) - field.element(c))


def support(f: RatFunc):
    """Finite places where f has a zero or a pole."""
    places = []
    for part in (f.num, f.den):
        if part.degree > 0:
            for g, _ in part.factor():
                places.append(Place(f.field, g))
    return places
