"""Exact arithmetic in Z[zeta_{2^K}], the value ring of every spectrum.

A level-K element is an integer vector (c_0, ..., c_{L-1}) with L = 2^{K-1},
standing for sum_j c_j * zeta^j under the single relation zeta^L = -1.  The
coefficient vector is unique, so equality of elements is equality of vectors.
No floating point is used anywhere: flatness checks are the ring identity
z * conj(z) == 2^n.

Besides the scalar CycInt class this module holds the vectorized kernels the
transform code runs on: arrays of shape (N, L) whose rows are coefficient
vectors, a Walsh-Hadamard butterfly over the row axis, negacyclic row
products, conjugation and exact norm tests.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import LevelMismatch, ParseError


class CycInt:
    """An element of Z[zeta_{2^K}] with exact integer coefficients."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        if level < 1:
            raise ValueError("level must be >= 1")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != 1 << (level - 1):
            raise ValueError(f"level {level} needs {1 << (level - 1)} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("CycInt is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, level: int) -> "CycInt":
        return cls(level, [0] * (1 << (level - 1)))

    @classmethod
    def integer(cls, value: int, level: int = 1) -> "CycInt":
        c = [0] * (1 << (level - 1))
        c[0] = value
        return cls(level, c)

    @classmethod
    def from_root_power(cls, level: int, e: int) -> "CycInt":
        """zeta_{2^level}^e, with e reduced modulo 2^level."""
        half = 1 << (level - 1)
        e %= 2 * half
        c = [0] * half
        c[e % half] = -1 if e >= half else 1
        return cls(level, c)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "CycInt"):
        if not isinstance(other, CycInt):
            raise TypeError(f"expected CycInt, got {type(other).__name__}")
        if other.level != self.level:
            raise LevelMismatch(f"levels differ: {self.level} vs {other.level}")

    def __add__(self, other):
        self._check(other)
        return CycInt(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return CycInt(self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycInt(self.level, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.level, [a * other for a in self.coeffs])
        self._check(other)
        half = len(self.coeffs)
        out = [0] * half
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                r = i + j
                if r < half:
                    out[r] += a * b
                else:
                    out[r - half] -= a * b
        return CycInt(self.level, out)

    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        """Complex conjugate: zeta^j -> zeta^{-j} = -zeta^{L-j}."""
        half = len(self.coeffs)
        out = [0] * half
        out[0] = self.coeffs[0]
        for j in range(1, half):
            out[half - j] = -self.coeffs[j]
        return CycInt(self.level, out)

    def norm2(self) -> "CycInt":
        return self * self.conj()

    def norm_is(self, target: int) -> bool:
        """Exactly |self|^2 == target (an ordinary integer)."""
        return self.norm2() == CycInt.integer(target, self.level)

    def lift(self, level: int) -> "CycInt":
        """Embed into Z[zeta_{2^level}] via zeta_{2^K} -> zeta_{2^level}^{2^{level-K}}."""
        if level < self.level:
            raise LevelMismatch(f"cannot lift level {self.level} down to {level}")
        step = 1 << (level - self.level)
        out = [0] * (1 << (level - 1))
        for j, a in enumerate(self.coeffs):
            out[j * step] = a
        return CycInt(level, out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, CycInt)
            and self.level == other.level
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.text})"

    @property
    def text(self) -> str:
        return f"K={self.level};[" + ",".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_text(cls, text: str) -> "CycInt":
        m = re.fullmatch(r"K=(\d+);\[([-\d,\s]*)\]", text.strip())
        if not m:
            raise ParseError(f"bad CycInt text {text!r}")
        level = int(m.group(1))
        body = m.group(2).strip()
        coeffs = [int(t) for t in body.split(",")] if body else []
        return cls(level, coeffs)


# ----------------------------------------------------------------------
# Vectorized kernels on (N, L) coefficient-row arrays
# ----------------------------------------------------------------------

def wht_rows(a: np.ndarray) -> np.ndarray:
    """Walsh-Hadamard butterfly along axis 0 (rows may be vectors)."""
    a = np.array(a, dtype=np.int64, copy=True)
    n = a.shape[0]
    h = 1
    while h < n:
        for start in range(0, n, 2 * h):
            top = a[start:start + h].copy()
            bot = a[start + h:start + 2 * h]
            a[start:start + h] = top + bot
            a[start + h:start + 2 * h] = top - bot
        h *= 2
    return a


def root_power_rows(exponents: np.ndarray, level: int) -> np.ndarray:
    """Rows of zeta_{2^level}^{e} for a vector of exponents."""
    half = 1 << (level - 1)
    e = np.asarray(exponents, dtype=np.int64) % (2 * half)
    rows = np.zeros((e.shape[0], half), dtype=np.int64)
    sign = np.where(e >= half, -1, 1)
    rows[np.arange(e.shape[0]), e % half] = sign
    return rows


def conj_rows(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[:, 0] = a[:, 0]
    if a.shape[1] > 1:
        out[:, 1:] = -a[:, :0:-1]
    return out


def negacyclic_mul_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise product in Z[zeta]: negacyclic convolution of each row pair."""
    n, half = a.shape
    out = np.zeros((n, half), dtype=np.int64)
    for i in range(half):
        ai = a[:, i:i + 1]
        out[:, i:] += ai * b[:, :half - i]
        if i:
            out[:, :i] -= ai * b[:, half - i:]
    return out


def rows_norm2(a: np.ndarray) -> np.ndarray:
    return negacyclic_mul_rows(a, conj_rows(a))


def rows_norm_all(a: np.ndarray, target: int) -> bool:
    """True iff every row z satisfies z * conj(z) == target exactly."""
    n2 = rows_norm2(a)
    if not np.all(n2[:, 0] == target):
        return False
    return not a.shape[1] > 1 or not n2[:, 1:].any()


def row_to_cyc(level: int, row) -> CycInt:
    return CycInt(level, [int(v) for v in row])


def rows_from_cycs(values: list[CycInt]) -> np.ndarray:
    return np.array([v.coeffs for v in values], dtype=np.int64)
