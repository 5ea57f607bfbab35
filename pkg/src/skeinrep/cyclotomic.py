"""Exact arithmetic in the cyclotomic field K = Q[A]/phi_{4r}(A).

Elements are stored in the power basis 1, A, ..., A^(d-1) with d = phi(4r).
The polynomial arithmetic itself is delegated to FLINT's ``fmpq_poly``;
everything specific to the skein setting (the involution A -> A^-1, quantum
integers, embeddings, norms, integrality) is written out here.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from flint import fmpq, fmpq_poly

__all__ = [
    "CycField",
    "CycNum",
    "FieldMismatchError",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "euler_phi",
    "add",
    "mul",
    "inv",
    "conj",
    "quantum_int",
    "quantum_factorial",
    "complex_embedding",
    "field_norm",
    "is_algebraic_integer",
    "resultant",
]

Scalar = Union[int, Fraction]


class FieldMismatchError(ValueError):
    """Raised when elements of two different cyclotomic fields are combined."""


def euler_phi(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    # both lowest degree first, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for j, b in enumerate(den):
                num[k - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of phi_n, lowest degree first.

    Uses x^n - 1 = prod_{d | n} phi_d(x).
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


class CycField:
    """The field Q[A]/phi_{4r}(A); A is a primitive 4r-th root of unity."""

    __slots__ = ("r", "order", "degree", "modulus", "_mod", "_powers", "zero", "one", "gen")

    def __init__(self, r: int):
        if r < 2:
            raise ValueError(f"level r must be >= 2, got {r}")
        self.r = r
        self.order = 4 * r
        self.modulus = cyclotomic_polynomial(4 * r)
        self.degree = len(self.modulus) - 1
        self._mod = fmpq_poly(list(self.modulus))
        x = fmpq_poly([0, 1])
        self._powers = [(x**k) % self._mod for k in range(self.order)]
        self.zero = CycNum(self, fmpq_poly([]))
        self.one = CycNum(self, fmpq_poly([1]))
        self.gen = CycNum(self, self._powers[1])

    def __repr__(self) -> str:
        return f"CycField(r={self.r})"

    def __reduce__(self):
        return (cyclotomic_field, (self.r,))

    def A(self, k: int = 1) -> "CycNum":
        """The element A^k (k may be negative)."""
        return CycNum(self, self._powers[k % self.order])

    def __call__(self, value) -> "CycNum":
        if isinstance(value, CycNum):
            if value.field is not self:
                raise FieldMismatchError(f"{value.field!r} element used in {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            return CycNum(self, fmpq_poly([fmpq(value.numerator, value.denominator)]))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_coeffs(self, coeffs: Iterable[Scalar]) -> "CycNum":
        coeffs = [Fraction(c) for c in coeffs]
        poly = fmpq_poly([fmpq(c.numerator, c.denominator) for c in coeffs])
        if len(coeffs) > self.degree:
            poly = poly % self._mod
        return CycNum(self, poly)

    def units_mod_order(self) -> list[int]:
        """Exponents m with gcd(m, 4r) = 1, i.e. the Galois group / embeddings."""
        return [m for m in range(1, self.order) if math.gcd(m, self.order) == 1]


@lru_cache(maxsize=None)
def cyclotomic_field(r: int) -> CycField:
    return CycField(r)


class CycNum:
    """An element of a :class:`CycField`. Immutable."""

    __slots__ = ("field", "poly")

    def __init__(self, field: CycField, poly: fmpq_poly):
        self.field = field
        self.poly = poly

    # -- coercion helpers -------------------------------------------------
    def _other(self, other) -> fmpq_poly:
        if isinstance(other, CycNum):
            if other.field is not self.field and other.field.r != self.field.r:
                raise FieldMismatchError(
                    f"cannot combine elements of r={self.field.r} and r={other.field.r}"
                )
            return other.poly
        if isinstance(other, int):
            return fmpq_poly([other])
        if isinstance(other, Fraction):
            return fmpq_poly([fmpq(other.numerator, other.denominator)])
        return NotImplemented

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        p = self._other(other)
        if p is NotImplemented:
            return p
        return CycNum(self.field, self.poly + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._other(other)
        if p is NotImplemented:
            return p
        return CycNum(self.field, self.poly - p)

    def __rsub__(self, other):
        p = self._other(other)
        if p is NotImplemented:
            return p
        return CycNum(self.field, p - self.poly)

    def __neg__(self):
        return CycNum(self.field, -self.poly)

    def __mul__(self, other):
        p = self._other(other)
        if p is NotImplemented:
            return p
        if isinstance(other, CycNum):
            return CycNum(self.field, (self.poly * p) % self.field._mod)
        return CycNum(self.field, self.poly * p)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.poly.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        g, s, _ = self.poly.xgcd(self.field._mod)
        # phi_{4r} is irreducible, so the gcd is a nonzero constant
        return CycNum(self.field, (s * (1 / g[0])) % self.field._mod)

    def __truediv__(self, other):
        if isinstance(other, CycNum):
            self._other(other)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            f = Fraction(other)
            return CycNum(self.field, self.poly * fmpq(f.denominator, f.numerator))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.field.r == other.field.r and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.r, tuple(self.coeffs)))

    def __bool__(self):
        return not self.poly.is_zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    # -- structure --------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates, lowest degree first, length = field degree."""
        cs = [Fraction(int(c.p), int(c.q)) for c in self.poly.coeffs()]
        return tuple(cs + [Fraction(0)] * (self.field.degree - len(cs)))

    def galois(self, m: int) -> "CycNum":
        """Image under the automorphism A -> A^m (gcd(m, 4r) = 1)."""
        if math.gcd(m, self.field.order) != 1:
            raise ValueError(f"exponent {m} is not a unit modulo {self.field.order}")
        powers = self.field._powers
        order = self.field.order
        acc = fmpq_poly([])
        for k, c in enumerate(self.poly.coeffs()):
            if c != 0:
                acc += powers[(k * m) % order] * c
        return CycNum(self.field, acc)

    def conj(self) -> "CycNum":
        """The involution A -> A^-1."""
        return self.galois(-1 % self.field.order)

    def embed(self, m: int = 1) -> complex:
        """Evaluate at A = exp(i*pi*m/(2r))."""
        if math.gcd(m, self.field.order) != 1:
            raise ValueError(f"embedding index {m} is not coprime to {self.field.order}")
        zeta = cmath.exp(1j * math.pi * m / (2 * self.field.r))
        total = 0j
        w = 1 + 0j
        for c in self.poly.coeffs():
            if c != 0:
                total += float(Fraction(int(c.p), int(c.q))) * w
            w *= zeta
        return total

    def norm(self) -> Fraction:
        return resultant(list(self.field.modulus), self.coeffs)

    def is_integral(self) -> bool:
        return self.poly.denom() == 1

    # -- display ----------------------------------------------------------
    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*A^{k}")
        return "CycNum(" + (" + ".join(terms) if terms else "0") + f"; r={self.field.r})"

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def to_json(self) -> dict:
        return {"r": self.field.r, "coeffs": self.to_strings()}

    @classmethod
    def from_json(cls, data) -> "CycNum":
        K = cyclotomic_field(int(data["r"]))
        if len(data["coeffs"]) != K.degree:
            raise ValueError(f"expected {K.degree} coefficients, got {len(data['coeffs'])}")
        return K.from_coeffs(Fraction(c) for c in data["coeffs"])


# ---------------------------------------------------------------------------
# functional surface


def _check_same(x: CycNum, y: CycNum) -> None:
    if x.field.r != y.field.r:
        raise FieldMismatchError(f"r={x.field.r} vs r={y.field.r}")


def add(x: CycNum, y: CycNum) -> CycNum:
    _check_same(x, y)
    return x + y


def mul(x: CycNum, y: CycNum) -> CycNum:
    _check_same(x, y)
    return x * y


def inv(x: CycNum) -> CycNum:
    return x.inverse()


def conj(x: CycNum) -> CycNum:
    return x.conj()


@lru_cache(maxsize=None)
def _quantum_int(r: int, n: int) -> CycNum:
    K = cyclotomic_field(r)
    if n == 0:
        return K.zero
    if n < 0:
        return -_quantum_int(r, -n)
    acc = fmpq_poly([])
    for k in range(n):
        acc += K._powers[(2 * n - 2 - 4 * k) % K.order]
    return CycNum(K, acc)


def quantum_int(n: int, r: int) -> CycNum:
    """[n] = (A^2n - A^-2n)/(A^2 - A^-2), expanded as sum_k A^(2n-2-4k)."""
    return _quantum_int(r, n)


@lru_cache(maxsize=None)
def quantum_factorial(n: int, r: int) -> CycNum:
    if n < 0:
        raise ValueError("quantum factorial of a negative integer")
    if n == 0:
        return cyclotomic_field(r).one
    return quantum_factorial(n - 1, r) * quantum_int(n, r)


def complex_embedding(x: CycNum, m: int) -> complex:
    return x.embed(m)


def field_norm(x: CycNum) -> Fraction:
    """N_{K/Q}(x) as the resultant Res(phi_{4r}, x(A))."""
    return x.norm()


def is_algebraic_integer(x: CycNum) -> bool:
    return x.is_integral()


def resultant(f: list, g: list) -> Fraction:
    """Res(f, g) for univariate polynomials (lowest degree first) over Q.

    Euclidean algorithm: with a = f mod g,
    Res(f, g) = (-1)^(deg f * deg g) lc(g)^(deg f - deg a) Res(g, a).
    """
    f = _trim([Fraction(c) for c in f])
    g = _trim([Fraction(c) for c in g])
    if not f or not g:
        return Fraction(0)
    result = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return result * g[0] ** df
        if df == 0:
            return result * f[0] ** dg
        a = _poly_mod(f, g)
        if not a:
            return Fraction(0)
        da = len(a) - 1
        if (df * dg) % 2:
            result = -result
        result *= g[-1] ** (df - da)
        f, g = g, a


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            q = c / lead
            for j in range(dg + 1):
                f[k - dg + j] -= q * g[j]
    return _trim(f[:dg])
