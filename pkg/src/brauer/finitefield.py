"""Exact arithmetic in finite fields F_{p^d} and power residue characters.

Elements of F_{p^d} = F_p[x]/(modulus) are coefficient tuples of length d
with entries in [0, p).  Each field caches its n-th roots of unity; the
canonical primitive n-th root is the smallest element of exact order n in
the enumeration order (constants first), which makes every character value
reproducible.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# int-coefficient polynomial helpers mod p (used only to pick field moduli)

def _ip_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _ip_mulmod(f, g, mod, p):
    res = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                res[i + j] = (res[i + j] + a * b) % p
    # reduce modulo the monic polynomial mod
    d = len(mod) - 1
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d):
                res[i - d + j] = (res[i - d + j] - c * mod[j]) % p
    return _ip_trim(res[:d])


def _ip_powmod(f, e, mod, p):
    result = [1]
    base = list(f)
    while e:
        if e & 1:
            result = _ip_mulmod(result, base, mod, p)
        base = _ip_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _ip_gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        # f mod g with g made monic
        inv = pow(g[-1], p - 2, p)
        g = [(c * inv) % p for c in g]
        while len(f) >= len(g):
            c = f[-1]
            if c:
                off = len(f) - len(g)
                for j in range(len(g)):
                    f[off + j] = (f[off + j] - c * g[j]) % p
            f.pop()
            _ip_trim(f)
            if not f:
                break
        f, g = g, f
    return f


def _ip_is_irreducible(f, p):
    """Irreducibility over F_p via x^{p^k} tests (f monic, deg >= 1)."""
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]
    xp = _ip_powmod(x, p ** d, f, p)
    if _ip_trim([(a - b) % p for a, b in
                 itertools.zip_longest(xp, x, fillvalue=0)]):
        return False
    for ell in prime_factors(d):
        xq = _ip_powmod(x, p ** (d // ell), f, p)
        diff = [(a - b) % p for a, b in
                itertools.zip_longest(xq, x, fillvalue=0)]
        g = _ip_gcd(list(f), _ip_trim(diff), p)
        if len(g) - 1 != 0:
            return False
    return True


def _default_modulus(p: int, d: int):
    """Smallest (in enumeration order) monic irreducible of degree d."""
    if d == 1:
        return (0, 1)
    k = 0
    while True:
        coeffs = []
        kk = k
        for _ in range(d):
            coeffs.append(kk % p)
            kk //= p
        f = coeffs + [1]
        if _ip_is_irreducible(f, p):
            return tuple(f)
        k += 1


# ---------------------------------------------------------------------------

_FIELD_CACHE: dict = {}


class FiniteField:
    """The field F_{p^d} = F_p[x]/(modulus)."""

    def __new__(cls, p: int, d: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = _default_modulus(p, d)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != d + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree d")
            if d > 1 and not _ip_is_irreducible(list(modulus), p):
                raise ValueError("modulus is not irreducible")
        key = (p, d, modulus)
        cached = _FIELD_CACHE.get(key)
        if cached is not None:
            return cached
        self = super().__new__(cls)
        self.p = p
        self.d = d
        self.modulus = modulus
        self.order = p ** d
        self._zeta_cache = {}
        # reduction rows for x^k, k = d .. 2d-2
        red = []
        row = [(-modulus[j]) % p for j in range(d)]
        for _ in range(d - 1):
            red.append(tuple(row))
            carry = row[d - 1]
            row = [0] + row[:-1]
            if carry:
                row = [(row[j] + carry * red[0][j]) % p for j in range(d)]
        self._red = red
        _FIELD_CACHE[key] = self
        return self

    # -- low-level ops on coefficient tuples -------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, d = self.p, self.d
        if d == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:d]]
        for k in range(d, 2 * d - 1):
            c = conv[k] % p
            if c:
                row = self._red[k - d]
                for j in range(d):
                    out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        p, d = self.p, self.d
        if d == 1:
            return (pow(a[0], p - 2, p),)
        # extended Euclid in F_p[x] against the modulus
        r0, r1 = list(self.modulus), _ip_trim(list(a))
        t0, t1 = [], [1]
        while r1:
            inv = pow(r1[-1], p - 2, p)
            q = []
            r = list(r0)
            while len(r) >= len(r1) and r:
                c = (r[-1] * inv) % p
                off = len(r) - len(r1)
                if c:
                    while len(q) < off + 1:
                        q.append(0)
                    q[off] = c
                    for j in range(len(r1)):
                        r[off + j] = (r[off + j] - c * r1[j]) % p
                r.pop()
                _ip_trim(r)
            # t = t0 - q*t1
            qt1 = [0] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(t1):
                        qt1[i + j] = (qt1[i + j] + x * y) % p
            t = [(x - y) % p for x, y in
                 itertools.zip_longest(t0, qt1, fillvalue=0)]
            r0, r1, t0, t1 = r1, _ip_trim(r), t1, _ip_trim(t)
        # r0 is the gcd, a nonzero constant
        c = pow(r0[0], p - 2, p)
        out = [(x * c) % p for x in t0]
        out += [0] * (d - len(out))
        return tuple(out[:d])

    def _pow(self, a, e):
        if e < 0:
            return self._pow(self._inv(a), -e)
        result = self.one().coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- element constructors ----------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, FieldElement):
            if coeffs.field is not self:
                raise ValueError("element of a different field")
            return coeffs
        if isinstance(coeffs, int):
            c = [coeffs % self.p] + [0] * (self.d - 1)
            return FieldElement(self, tuple(c))
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.d:
            raise ValueError("too many coefficients")
        c += [0] * (self.d - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.d)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.d - 1))

    def from_key(self, k: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.d):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        for k in range(self.order):
            yield self.from_key(k)

    def zeta(self, n: int) -> "FieldElement":
        """Canonical primitive n-th root of unity: smallest of exact order n."""
        if n in self._zeta_cache:
            return self._zeta_cache[n]
        if n < 1 or (self.order - 1) % n != 0:
            raise ValueError(f"n={n} does not divide |F|-1={self.order - 1}")
        ells = prime_factors(n)
        for u in self.elements():
            if u.is_zero():
                continue
            if u ** n == self.one() and all(
                    u ** (n // ell) != self.one() for ell in ells):
                self._zeta_cache[n] = u
                return u
        raise RuntimeError("no element of the requested order")  # unreachable

    def __repr__(self):
        if self.d == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.d})"

    def __reduce__(self):
        return (FiniteField, (self.p, self.d, self.modulus))


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def key(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field,
                            self.field._mul(self.coeffs, self.field._inv(o.coeffs)))

    def __rtruediv__(self, other):
        return self.field.element(other) / self

    def inverse(self):
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.element(other)
        return (isinstance(other, FieldElement)
                and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        for ell in prime_factors(n):
            while n % ell == 0 and self ** (n // ell) == self.field.one():
                n //= ell
        return n

    def __repr__(self):
        if self.field.d == 1:
            return str(self.coeffs[0])
        return f"[{','.join(map(str, self.coeffs))}]"


@dataclass(frozen=True)
class ResidueClass:
    """An element of kappa*/(kappa*)^n, recorded as an exponent of zeta."""

    n: int
    value: int
    zeta: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.n)

    def __add__(self, other):
        if not isinstance(other, ResidueClass):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("residue classes with different moduli")
        return ResidueClass(self.n, (self.value + other.value) % self.n, self.zeta)

    def __neg__(self):
        return ResidueClass(self.n, (-self.value) % self.n, self.zeta)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return ResidueClass(self.n, (self.value * k) % self.n, self.zeta)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.n
        return (isinstance(other, ResidueClass)
                and self.n == other.n and self.value == other.value)

    def __hash__(self):
        return hash((self.n, self.value))

    def __repr__(self):
        return f"{self.value} (mod {self.n})"


def power_residue_character(u: FieldElement, n: int,
                            zeta: FieldElement | None = None) -> ResidueClass:
    """Discrete logarithm of u^((|F|-1)/n) base zeta, as a ResidueClass.

    The value m satisfies u^((|F|-1)/n) = zeta^m; it is 0 exactly when u is
    an n-th power.
    """
    F = u.field
    if u.is_zero():
        raise ValueError("character of zero")
    if n < 1 or (F.order - 1) % n != 0:
        raise ValueError(f"n={n} does not divide |F|-1={F.order - 1}")
    if zeta is None:
        zeta = F.zeta(n)
    else:
        if zeta.field is not F:
            raise ValueError("zeta lives in a different field")
        if zeta.multiplicative_order() != n:
            raise ValueError("zeta does not have exact order n")
    t = u ** ((F.order - 1) // n)
    w = F.one()
    for m in range(n):
        if w == t:
            return ResidueClass(n, m, zeta)
        w = w * zeta
    raise RuntimeError("character value not found")  # unreachable


def norm_to_prime_field(u: FieldElement) -> FieldElement:
    """Field norm of u down to the prime field F_p, as an element of F_p."""
    F = u.field
    if u.is_zero():
        raise ValueError("norm of zero")
    e = (F.order - 1) // (F.p - 1)
    nu = u ** e
    if any(nu.coeffs[1:]):
        raise RuntimeError("norm did not land in the prime field")
    return FiniteField(F.p).element(nu.coeffs[0])


def corestrict(u: FieldElement, n: int) -> ResidueClass:
    """Class of the norm of u in F_p*/(F_p*)^n."""
    Fp = FiniteField(u.field.p)
    if (Fp.order - 1) % n != 0:
        raise ValueError(f"n={n} does not divide p-1={Fp.order - 1}")
    return power_residue_character(norm_to_prime_field(u), n)
