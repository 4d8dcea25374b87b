"""Univariate polynomials over a finite field, with full factorization.

Factorization is squarefree decomposition followed by distinct-degree and
Cantor-Zassenhaus equal-degree splitting (odd characteristic).  Splitting
uses a polynomial-derived seed so results are deterministic.
"""

from __future__ import annotations

import random

from .finitefield import FieldElement, FiniteField


class Poly:
    """Polynomial in t over a FiniteField; coeffs[i] multiplies t^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        self.field = field
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise ValueError("coefficient from a different field")
                cs.append(c.coeffs)
            elif isinstance(c, int):
                cs.append(field.element(c).coeffs)
            else:
                cs.append(tuple(c))
        while cs and not any(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def gen(cls, field):
        """The polynomial t."""
        return cls(field, (0, 1))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return FieldElement(self.field, self.coeffs[i])
        return self.field.zero()

    def leading_coefficient(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coeffs[-1] == self.field.one().coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def key(self):
        """Deterministic sort key: (degree, coefficients from the top down)."""
        keys = tuple(FieldElement(self.field, c).key()
                     for c in reversed(self.coeffs))
        return (self.degree, keys)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, (other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F._add(out[i], c)
        return Poly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly(F, [F._neg(c) for c in self.coeffs])

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
        F = self.field
        if self.is_zero() or o.is_zero():
            return Poly.zero(F)
        a, b = self.coeffs, o.coeffs
        out = [F.zero().coeffs] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if any(x):
                for j, y in enumerate(b):
                    out[i + j] = F._add(out[i + j], F._mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quo = [F.zero().coeffs] * (dq + 1)
        lead_inv = F._inv(o.coeffs[-1])
        for i in range(dq, -1, -1):
            c = F._mul(rem[i + len(o.coeffs) - 1], lead_inv)
            if any(c):
                quo[i] = c
                for j, y in enumerate(o.coeffs):
                    rem[i + j] = F._sub(rem[i + j], F._mul(c, y))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pow_mod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = Poly(self.field, (other,))
        return (isinstance(other, Poly) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    # -- algebra --------------------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.field._inv(self.coeffs[-1])
        return Poly(self.field, [self.field._mul(c, inv) for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "Poly":
        F = self.field
        return Poly(F, [F._mul(F.element(i).coeffs, c)
                        for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: FieldElement) -> FieldElement:
        F = self.field
        acc = F.zero().coeffs
        for c in reversed(self.coeffs):
            acc = F._add(F._mul(acc, x.coeffs), c)
        return FieldElement(F, acc)

    # -- factorization ---------------------------------------------------------

    def is_irreducible(self) -> bool:
        if self.degree < 1:
            return False
        if self.degree == 1:
            return True
        f = self.monic()
        q = self.field.order
        t = Poly.gen(self.field)
        if t.pow_mod(q ** f.degree, f) != t % f:
            return False
        from .finitefield import prime_factors
        for ell in prime_factors(f.degree):
            h = t.pow_mod(q ** (f.degree // ell), f) - t
            if f.gcd(h).degree != 0:
                return False
        return True

    def _pth_root(self) -> "Poly":
        # f with f' = 0 is g(t^p); recover g coefficientwise
        F = self.field
        p = F.p
        root_exp = F.order // p  # c -> c^(q/p) is the inverse of Frobenius
        out = [F._pow(self.coeffs[i], root_exp)
               for i in range(0, len(self.coeffs), p)]
        return Poly(F, out)

    def squarefree_decomposition(self):
        """List of (squarefree monic factor, multiplicity)."""
        f = self.monic()
        if f.degree < 1:
            return []
        p = self.field.p
        out = []

        def recurse(f, mult):
            d = f.derivative()
            if d.is_zero():
                recurse(f._pth_root(), mult * p)
                return
            g = f.gcd(d)
            w = f // g
            i = 1
            while w.degree > 0:
                y = w.gcd(g)
                piece = w // y
                if piece.degree > 0:
                    out.append((piece, i * mult))
                w, g = y, g // y
                i += 1
            if g.degree > 0:
                recurse(g._pth_root(), mult * p)

        recurse(f, 1)
        return out

    def _distinct_degree(self):
        """Split a squarefree monic poly into (product, degree) pieces."""
        f = self
        q = self.field.order
        t = Poly.gen(self.field)
        out = []
        h = t % f
        d = 1
        while f.degree >= 2 * d:
            h = h.pow_mod(q, f)
            g = f.gcd(h - t)
            if g.degree > 0:
                out.append((g, d))
                f = f // g
                h = h % f
            d += 1
        if f.degree > 0:
            out.append((f, f.degree))
        return out

    def _equal_degree(self, d: int):
        """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
        F = self.field
        q = F.order
        if q % 2 == 0:
            raise NotImplementedError(
                "equal-degree splitting implemented for odd order only")
        f = self
        if f.degree == d:
            return [f]
        seed = hash(("edf", F.p, F.d, F.modulus, f.coeffs, d)) & 0xFFFFFFFF
        rng = random.Random(seed)
        exp = (q ** d - 1) // 2
        while True:
            a = Poly(F, [F.from_key(rng.randrange(q))
                         for _ in range(f.degree)])
            if a.degree < 1:
                continue
            g = f.gcd(a)
            if 0 < g.degree < f.degree:
                pass
            else:
                b = a.pow_mod(exp, f) - Poly.one(F)
                g = f.gcd(b)
                if not 0 < g.degree < f.degree:
                    continue
            return g._equal_degree(d) + (f // g)._equal_degree(d)

    def factor(self):
        """Monic irreducible factors with multiplicities, sorted by key.

        The leading coefficient is dropped; the product of the factors is
        self.monic().
        """
        if self.is_zero():
            raise ValueError("cannot factor zero")
        out = []
        for sqf, mult in self.squarefree_decomposition():
            for piece, d in sqf._distinct_degree():
                for irr in piece._equal_degree(d):
                    out.append((irr, mult))
        out.sort(key=lambda fm: fm[0].key())
        return out

    def roots(self):
        """Roots in the coefficient field, without multiplicity."""
        if self.is_zero():
            raise ValueError("every element is a root of zero")
        out = [(-g.coefficient(0)) for g, _ in self.factor() if g.degree == 1]
        out.sort(key=lambda r: r.key())
        return out

    # -- printing --------------------------------------------------------------

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not any(c):
                continue
            ce = FieldElement(self.field, c)
            if self.field.d == 1:
                cstr = str(c[0])
            else:
                cstr = repr(ce)
            if i == 0:
                parts.append(cstr)
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                if ce == self.field.one():
                    parts.append(tpow)
                else:
                    parts.append(f"{cstr}*{tpow}")
        return "+".join(parts)
