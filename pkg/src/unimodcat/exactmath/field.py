"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced
modulo the N-th cyclotomic polynomial, so equality is coefficient equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "CyclotomicField",
    "Scalar",
    "ZeroDivision",
    "cyclotomic_field",
    "cyclotomic_polynomial",
]


class ZeroDivision(ZeroDivisionError):
    """Raised when inverting the zero element of a cyclotomic field."""


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic; coefficients low -> high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicField:
    """Static data for Q(zeta_N): degree, power table and Galois action."""

    def __init__(self, order: int):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        phi = self.degree
        n_powers = max(order, 2 * phi - 1)
        powers = []
        vec = [1] + [0] * (phi - 1)
        for _ in range(n_powers):
            powers.append(tuple(vec))
            # multiply by zeta and reduce by the monic modulus
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [v - top * m for v, m in zip(vec, self.modulus)]
        self.powers: tuple[tuple[int, ...], ...] = tuple(powers)
        # reduction rows for exponents phi .. 2*phi-2 used by the kernels
        self.reduction: tuple[tuple[int, ...], ...] = self.powers[: 2 * phi - 1]
        self.units = tuple(k for k in range(1, order + 1) if gcd(k, order) == 1) if order > 1 else (1,)
        self.galois = {k: self._galois_matrix(k) for k in self.units}

    def power(self, e: int) -> tuple[int, ...]:
        return self.powers[e % self.order]

    def _galois_matrix(self, k: int) -> tuple[tuple[int, ...], ...]:
        # column j is the image of zeta^j under zeta -> zeta^k
        return tuple(self.power(j * k) for j in range(self.degree))

    def conjugate_adjoint(self, vec):
        """Product of the non-identity Galois conjugates of an integral element.

        ``vec * adjoint(vec)`` is the (rational integer) field norm.
        """
        phi = self.degree
        acc = [1] + [0] * (phi - 1)
        for k in self.units:
            if k == 1:
                continue
            img = self.galois[k]
            conj = [0] * phi
            for j, c in enumerate(vec):
                if c:
                    for i, w in enumerate(img[j]):
                        if w:
                            conj[i] += c * w
            acc = self.mul_vec(acc, conj)
        return acc

    def mul_vec(self, a, b):
        phi = self.degree
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                for i, w in enumerate(self.powers[e]):
                    if w:
                        out[i] += c * w
        return out

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Scalar:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs=(), order: int = 1):
        fld = cyclotomic_field(order)
        if isinstance(coeffs, (int, Fraction, str, Rational)):
            coeffs = (coeffs,)
        vals = [_as_fraction(c) for c in coeffs]
        if len(vals) > fld.degree:
            # reduce arbitrary-length polynomial in zeta
            red = [Fraction(0)] * fld.degree
            for e, c in enumerate(vals):
                if c:
                    for i, w in enumerate(fld.power(e)):
                        if w:
                            red[i] += c * w
            vals = red
        vals += [Fraction(0)] * (fld.degree - len(vals))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # constructors ---------------------------------------------------------
    @classmethod
    def zeta(cls, order: int, k: int = 1) -> Scalar:
        return cls(cyclotomic_field(order).power(k), order)

    @classmethod
    def from_pairs(cls, pairs, order: int = 1) -> Scalar:
        """Build from ``[exponent, "p/q"]`` pairs meaning sum (p/q) zeta^exponent."""
        fld = cyclotomic_field(order)
        acc = [Fraction(0)] * fld.degree
        for e, c in pairs:
            q = _as_fraction(c)
            for i, w in enumerate(fld.power(int(e))):
                if w:
                    acc[i] += q * w
        return cls(acc, order)

    def to_pairs(self) -> list[list]:
        return [[e, str(c)] for e, c in enumerate(self.coeffs) if c]

    @classmethod
    def coerce(cls, x, order: int = 1) -> Scalar:
        if isinstance(x, Scalar):
            return x
        return cls((_as_fraction(x),), order)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def in_order(self, order: int) -> Scalar:
        if order == self.order:
            return self
        if self.is_rational():
            return Scalar((self.coeffs[0],), order)
        raise ValueError(f"cannot embed an element of Q(zeta_{self.order}) into Q(zeta_{order})")

    def _align(self, other) -> tuple[Scalar, Scalar]:
        if not isinstance(other, Scalar):
            other = Scalar.coerce(other, self.order)
        if other.order == self.order:
            return self, other
        if other.is_rational():
            return self, other.in_order(self.order)
        return self.in_order(other.order), other

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return Scalar([x + y for x, y in zip(a.coeffs, b.coeffs)], a.order)

    __radd__ = __add__

    def __neg__(self):
        return Scalar([-x for x in self.coeffs], self.order)

    def __sub__(self, other):
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return Scalar([x - y for x, y in zip(a.coeffs, b.coeffs)], a.order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        fld = cyclotomic_field(a.order)
        return Scalar(fld.mul_vec(a.coeffs, b.coeffs), a.order)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivision("inverse of zero in a cyclotomic field")
        fld = cyclotomic_field(self.order)
        adj = fld.conjugate_adjoint(self.coeffs)
        norm = fld.mul_vec(self.coeffs, adj)[0]
        return Scalar([c / norm for c in adj], self.order)

    def __truediv__(self, other):
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other, self.order) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = Scalar((1,), self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conjugate(self, k: int) -> Scalar:
        """Image under the Galois automorphism zeta -> zeta^k."""
        fld = cyclotomic_field(self.order)
        out = [Fraction(0)] * fld.degree
        for j, c in enumerate(self.coeffs):
            if c:
                for i, w in enumerate(fld.power(j * k)):
                    if w:
                        out[i] += c * w
        return Scalar(out, self.order)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other, self.order)
            except TypeError:
                return NotImplemented
        if self.order != other.order:
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Scalar({self}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mon = "z" if e == 1 else f"z^{e}"
                if c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append(f"-{mon}")
                else:
                    terms.append(f"{c}*{mon}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")
