"""Exact dense matrices over Q(zeta_N), subspaces and linear solves.

A matrix is an integer numerator array of shape ``(phi, rows, cols)`` over a
common positive denominator.  The pair is kept normalized (gcd 1), so two
matrices are equal exactly when their stored arrays are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .field import Scalar, ZeroDivision, cyclotomic_field

__all__ = ["Matrix", "Subspace", "solve"]


def _object_zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=object)


def _array_gcd(arr: np.ndarray, start: int = 0) -> int:
    g = start
    for v in arr.flat:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _reduce_conv(conv, phi, reduction, shape):
    out = _object_zeros((phi,) + tuple(shape))
    for e, part in enumerate(conv):
        if part is None:
            continue
        if e < phi:
            out[e] += part
        else:
            for i, w in enumerate(reduction[e]):
                if w:
                    out[i] += w * part
    return out


class Matrix:
    """Immutable exact matrix with entries in Q(zeta_order)."""

    __slots__ = ("order", "num", "den")

    def __init__(self, num: np.ndarray, den: int = 1, order: int = 1):
        fld = cyclotomic_field(order)
        num = np.asarray(num, dtype=object)
        if num.ndim != 3 or num.shape[0] != fld.degree:
            raise ValueError(f"numerator must have shape (phi={fld.degree}, r, c), got {num.shape}")
        if den == 0:
            raise ZeroDivision("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = _array_gcd(num, den)
        if g > 1:
            num = num // g
            den //= g
        else:
            num = num.copy()
        num.flags.writeable = False
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # constructors ---------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> Matrix:
        return cls(_object_zeros((cyclotomic_field(order).degree, rows, cols)), 1, order)

    @classmethod
    def identity(cls, n: int, order: int = 1) -> Matrix:
        num = _object_zeros((cyclotomic_field(order).degree, n, n))
        for i in range(n):
            num[0, i, i] = 1
        return cls(num, 1, order)

    @classmethod
    def unit_vector(cls, n: int, i: int, order: int = 1) -> Matrix:
        num = _object_zeros((cyclotomic_field(order).degree, n, 1))
        num[0, i, 0] = 1
        return cls(num, 1, order)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], order: int = 1) -> Matrix:
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        scal = [[Scalar.coerce(x, order).in_order(order) for x in r] for r in rows]
        return cls.from_scalars(scal, order, (nrows, ncols))

    @classmethod
    def from_scalars(cls, scal, order: int, shape: tuple[int, int]) -> Matrix:
        phi = cyclotomic_field(order).degree
        den = 1
        for r in scal:
            for s in r:
                for c in s.coeffs:
                    den = lcm(den, c.denominator)
        num = _object_zeros((phi, shape[0], shape[1]))
        for i, r in enumerate(scal):
            for j, s in enumerate(r):
                for e, c in enumerate(s.coeffs):
                    if c:
                        num[e, i, j] = c.numerator * (den // c.denominator)
        return cls(num, den, order)

    @classmethod
    def column(cls, entries: Iterable, order: int = 1) -> Matrix:
        return cls.from_rows([[x] for x in entries], order)

    @classmethod
    def row(cls, entries: Iterable, order: int = 1) -> Matrix:
        return cls.from_rows([list(entries)], order)

    @classmethod
    def scalar(cls, s, order: int = 1) -> Matrix:
        s = Scalar.coerce(s, order)
        return cls.from_rows([[s]], s.order if not s.is_rational() else order)

    @classmethod
    def diag(cls, entries: Sequence, order: int = 1) -> Matrix:
        n = len(entries)
        return cls.from_rows([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], order)

    # shape and access -----------------------------------------------------
    @property
    def field(self):
        return cyclotomic_field(self.order)

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape[1], self.num.shape[2]

    @property
    def rows(self) -> int:
        return self.num.shape[1]

    @property
    def cols(self) -> int:
        return self.num.shape[2]

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar([Fraction(int(v), self.den) for v in self.num[:, i, j]], self.order)

    def __getitem__(self, key):
        if not isinstance(key, tuple) or len(key) != 2:
            raise IndexError("Matrix indices must be (row, col)")
        i, j = key
        if isinstance(i, (int, np.integer)) and isinstance(j, (int, np.integer)):
            return self.entry(int(i), int(j))
        if isinstance(i, (int, np.integer)):
            i = slice(int(i) % self.rows, int(i) % self.rows + 1)
        if isinstance(j, (int, np.integer)):
            j = slice(int(j) % self.cols, int(j) % self.cols + 1)
        return Matrix(self.num[:, i, :][:, :, j], self.den, self.order)

    def col(self, j: int) -> Matrix:
        return self[:, j]

    def to_scalars(self) -> list[list[Scalar]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def to_list(self) -> list[Scalar]:
        """Entries of a row or column vector."""
        if self.cols == 1:
            return [self.entry(i, 0) for i in range(self.rows)]
        if self.rows == 1:
            return [self.entry(0, j) for j in range(self.cols)]
        raise ValueError(f"not a vector: shape {self.shape}")

    def nonzero_entries(self):
        mask = self.num.any(axis=0)
        for i, j in zip(*np.nonzero(mask)):
            yield int(i), int(j)

    def is_rational(self) -> bool:
        return not self.num[1:].any()

    # order alignment ------------------------------------------------------
    def in_order(self, order: int) -> Matrix:
        if order == self.order:
            return self
        if not self.is_rational():
            raise ValueError(f"cannot embed a Q(zeta_{self.order}) matrix into Q(zeta_{order})")
        phi = cyclotomic_field(order).degree
        num = _object_zeros((phi,) + self.shape)
        num[0] = self.num[0]
        return Matrix(num, self.den, order)

    def _align(self, other: Matrix) -> tuple[Matrix, Matrix]:
        if self.order == other.order:
            return self, other
        if other.is_rational():
            return self, other.in_order(self.order)
        return self.in_order(other.order), other

    @staticmethod
    def _common(a: Matrix, b: Matrix):
        d = lcm(a.den, b.den)
        return a.num * (d // a.den), b.num * (d // b.den), d

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: Matrix) -> Matrix:
        a, b = self._align(other)
        if a.shape != b.shape:
            raise ValueError(f"shape mismatch {a.shape} + {b.shape}")
        x, y, d = Matrix._common(a, b)
        return Matrix(x + y, d, a.order)

    def __neg__(self) -> Matrix:
        return Matrix(-self.num, self.den, self.order)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __matmul__(self, other: Matrix) -> Matrix:
        a, b = self._align(other)
        if a.cols != b.rows:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if a.cols == 0 or a.rows == 0 or b.cols == 0:
            return Matrix.zeros(a.rows, b.cols, a.order)
        num = kernels.cyc_matmul(a.num, b.num, a.field.reduction)
        return Matrix(num, a.den * b.den, a.order)

    def __mul__(self, s) -> Matrix:
        if isinstance(s, Matrix):
            raise TypeError("use @ for matrix products")
        return Matrix.scalar(s, self.order).kron(self)

    __rmul__ = __mul__

    def __truediv__(self, s) -> Matrix:
        return self * Scalar.coerce(s, self.order).inverse()

    def kron(self, other: Matrix) -> Matrix:
        a, b = self._align(other)
        fld = a.field
        phi = fld.degree
        conv = [None] * (2 * phi - 1)
        for e in range(phi):
            if not a.num[e].any():
                continue
            for f in range(phi):
                if not b.num[f].any():
                    continue
                part = np.kron(a.num[e], b.num[f])
                conv[e + f] = part if conv[e + f] is None else conv[e + f] + part
        shape = (a.rows * b.rows, a.cols * b.cols)
        return Matrix(_reduce_conv(conv, phi, fld.reduction, shape), a.den * b.den, a.order)

    @property
    def T(self) -> Matrix:
        return Matrix(self.num.transpose(0, 2, 1), self.den, self.order)

    def reshape(self, rows: int, cols: int) -> Matrix:
        """Row-major reshape."""
        return Matrix(self.num.reshape(self.num.shape[0], rows, cols), self.den, self.order)

    def permute_rows(self, dims: Sequence[int], axes: Sequence[int]) -> Matrix:
        """Reindex rows viewed as a tensor of shape ``dims`` (numpy.transpose semantics)."""
        phi = self.num.shape[0]
        t = self.num.reshape((phi,) + tuple(dims) + (self.cols,))
        t = t.transpose((0,) + tuple(a + 1 for a in axes) + (len(dims) + 1,))
        return Matrix(t.reshape(phi, self.rows, self.cols), self.den, self.order)

    def power(self, k: int) -> Matrix:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = Matrix.identity(self.rows, self.order)
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base
            k >>= 1
        return acc

    @staticmethod
    def hstack(mats: Sequence[Matrix]) -> Matrix:
        return Matrix._stack(mats, axis=2)

    @staticmethod
    def vstack(mats: Sequence[Matrix]) -> Matrix:
        return Matrix._stack(mats, axis=1)

    @staticmethod
    def _stack(mats: Sequence[Matrix], axis: int) -> Matrix:
        mats = list(mats)
        order = next((m.order for m in mats if not m.is_rational()), mats[0].order)
        mats = [m.in_order(order) for m in mats]
        d = 1
        for m in mats:
            d = lcm(d, m.den)
        parts = [m.num * (d // m.den) for m in mats]
        return Matrix(np.concatenate(parts, axis=axis), d, order)

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        try:
            a, b = self._align(other)
        except ValueError:
            return False
        return a.den == b.den and bool((a.num == b.num).all())

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows, self.order)

    # elimination ----------------------------------------------------------
    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form (pivot entries 1) and pivot columns."""
        red, pivots = kernels.cyc_rref(self.num, self.field)
        qs = [int(red[0, i, c]) for i, c in enumerate(pivots)]
        d = 1
        for q in qs:
            d = lcm(d, q)
        red = np.array(red, dtype=object)
        for i, q in enumerate(qs):
            red[:, i, :] *= d // q
        return Matrix(red, d, self.order), pivots

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return len(kernels.cyc_rref(self.num, self.field)[1])

    def nullspace(self) -> Matrix:
        """Columns form a basis of {v : self @ v = 0}."""
        n = self.cols
        if self.rows == 0:
            return Matrix.identity(n, self.order)
        red, pivots = self.rref()
        free = [j for j in range(n) if j not in set(pivots)]
        num = _object_zeros((self.num.shape[0], n, len(free)))
        for k, f in enumerate(free):
            num[0, f, k] = red.den
            for i, pc in enumerate(pivots):
                num[:, pc, k] = -red.num[:, i, f]
        return Matrix(num, red.den, self.order)

    def inverse(self) -> Matrix:
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        red, pivots = Matrix.hstack([self, Matrix.identity(n, self.order)]).rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivision("matrix is singular")
        return red[:, n:]

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, order={self.order})"

    def __str__(self) -> str:
        rows = self.to_scalars()
        return "[" + ",\n ".join("[" + ", ".join(str(s) for s in r) + "]" for r in rows) + "]"


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of the column space Q(zeta)^n, stored by its reduced echelon basis rows."""

    ambient_dim: int
    rows: Matrix

    @classmethod
    def from_vectors(cls, vectors: Matrix) -> Subspace:
        """Span of the columns of ``vectors``."""
        n = vectors.rows
        if vectors.cols == 0:
            return cls.zero(n, vectors.order)
        red, pivots = vectors.T.rref()
        return cls(n, red[: len(pivots), :] if pivots else Matrix.zeros(0, n, vectors.order))

    @classmethod
    def zero(cls, n: int, order: int = 1) -> Subspace:
        return cls(n, Matrix.zeros(0, n, order))

    @classmethod
    def kernel(cls, a: Matrix) -> Subspace:
        return cls.from_vectors(a.nullspace())

    @property
    def dim(self) -> int:
        return self.rows.rows

    @property
    def order(self) -> int:
        return self.rows.order

    def basis(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return self.rows.T

    def vectors(self) -> list[Matrix]:
        b = self.basis()
        return [b.col(k) for k in range(self.dim)]

    def contains(self, v: Matrix) -> bool:
        if self.dim == 0:
            return v.is_zero()
        return Matrix.vstack([self.rows, v.T]).rank() == self.dim

    def annihilator(self) -> Matrix:
        if self.dim == 0:
            return Matrix.identity(self.ambient_dim, self.order)
        return self.rows.nullspace()

    def intersect(self, other: Subspace) -> Subspace:
        eqs = Matrix.vstack([self.annihilator().T, other.annihilator().T])
        if eqs.rows == 0:
            return Subspace.from_vectors(Matrix.identity(self.ambient_dim, self.order))
        return Subspace.kernel(eqs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def solve(a: Matrix, b: Matrix) -> tuple[Matrix | None, Subspace]:
    """Solve ``a @ x = b`` for a column ``b``; return one solution (or None) and the kernel."""
    if b.cols != 1 or b.rows != a.rows:
        raise ValueError(f"right-hand side must be a {a.rows}x1 column, got {b.shape}")
    n = a.cols
    kernel = Subspace.kernel(a)
    red, pivots = Matrix.hstack([a, b]).rref()
    if n in pivots:
        return None, kernel
    x = Matrix.zeros(n, 1, red.order)
    if pivots:
        num = np.array(x.num, dtype=object)
        den = red.den
        for i, pc in enumerate(pivots):
            num[:, pc, 0] = red.num[:, i, n]
        x = Matrix(num, den, red.order)
    return x, kernel
