"""Generalized Boolean functions f: 2^n points -> Z_{2^k}.

Values decompose uniquely as f = a_0 + 2 a_1 + ... + 2^{k-1} a_{k-1} with
Boolean bit components a_i.  Two exact spectra are provided:

  * the additive-character spectrum H(c, u) = sum_x zeta^{c f(x)} (-1)^{<u,x>}
    (any flavor), whose flatness at c = 1 is gbentness and for all nonzero c
    is Z_{2^k}-bentness;
  * the twisted spectrum K(c, u) = sum_x (-1)^{Tr(ux) + sigma(c0,x)}
    zeta^{c f(x)} i^{Tr(c0 x)} with c0 = c mod 2 (univariate only), whose
    flatness defines the nega variants.

All values are exact elements of Z[zeta_{2^K}] with K = max(k, 2), so that i
always exists.  The shift between the plain and nega worlds is the mod-2^k
addition of 2^{k-2} Tr(x) + 2^{k-1} sigma(1, x).
"""

from __future__ import annotations

from itertools import product

import numpy as np

from . import cyclo
from .boolfn import BoolFn
from .cyclo import CycInt
from .errors import FlavorMismatch, KTooSmall, NotGbent, OddN, ZeroDirection
from .gf2m import Field


class GenSpectrum:
    """Dense exact spectrum: one coefficient-row array per nonzero c."""

    def __init__(self, n: int, k: int, rows_by_c: dict[int, np.ndarray]):
        self.n = n
        self.k = k
        self.level = max(k, 2)
        self.rows_by_c = rows_by_c
        for rows in rows_by_c.values():
            rows.setflags(write=False)

    def value(self, c: int, u: int) -> CycInt:
        return cyclo.row_to_cyc(self.level, self.rows_by_c[c][u])

    def is_flat(self, c: int) -> bool:
        return cyclo.rows_norm_all(self.rows_by_c[c], 1 << self.n)

    def is_flat_all(self) -> bool:
        return all(self.is_flat(c) for c in self.rows_by_c)

    def parseval_holds(self, c: int) -> bool:
        total = cyclo.rows_norm2(self.rows_by_c[c]).sum(axis=0)
        if int(total[0]) != 1 << (2 * self.n):
            return False
        return not total.shape[0] > 1 or not total[1:].any()

    def value_multiset(self) -> dict[tuple, int]:
        """Distinct spectrum values (as coefficient tuples) with multiplicities."""
        out: dict[tuple, int] = {}
        for rows in self.rows_by_c.values():
            for row in rows:
                key = tuple(int(v) for v in row)
                out[key] = out.get(key, 0) + 1
        return out


class GenFn:
    """Truth table of f: 2^n points -> Z_{2^k}."""

    def __init__(self, k: int, values, field: Field | None = None):
        if k < 1:
            raise ValueError("k must be >= 1")
        values = np.asarray(values, dtype=np.int64)
        size = values.shape[0]
        n = size.bit_length() - 1
        if 1 << n != size or values.ndim != 1:
            raise ValueError("value table length must be a power of two")
        if np.any(values < 0) or np.any(values >= 1 << k):
            raise ValueError(f"values must lie in [0, 2^{k})")
        if field is not None and field.m != n:
            raise ValueError(f"field degree {field.m} does not match n={n}")
        self.n = n
        self.k = k
        self.values = values
        self.field = field
        values.setflags(write=False)

    @classmethod
    def from_components(cls, comps: list[BoolFn], field: Field | None = None) -> "GenFn":
        """Assemble sum 2^i a_i from bit components (a_0 first)."""
        k = len(comps)
        field = field if field is not None else comps[0].field
        vals = np.zeros(1 << comps[0].n, dtype=np.int64)
        for i, a in enumerate(comps):
            vals += a.table.astype(np.int64) << i
        return cls(k, vals, field)

    @classmethod
    def zero(cls, n: int, k: int, field: Field | None = None) -> "GenFn":
        return cls(k, np.zeros(1 << n, dtype=np.int64), field)

    @property
    def flavor(self) -> str:
        return "mv" if self.field is None else "uv"

    def component(self, i: int) -> BoolFn:
        """The i-th binary digit of the values, as a BoolFn."""
        if not 0 <= i < self.k:
            raise IndexError(f"component index {i} out of range for k={self.k}")
        return BoolFn(((self.values >> i) & 1).astype(np.uint8), self.field)

    def components(self) -> list[BoolFn]:
        return [self.component(i) for i in range(self.k)]

    def __add__(self, other):
        if isinstance(other, GenFn):
            if (self.n, self.k, self.field) != (other.n, other.k, other.field):
                raise FlavorMismatch("operands live on different domains")
            other = other.values
        return GenFn(self.k, (self.values + other) % (1 << self.k), self.field)

    def __sub__(self, other):
        if isinstance(other, GenFn):
            if (self.n, self.k, self.field) != (other.n, other.k, other.field):
                raise FlavorMismatch("operands live on different domains")
            other = other.values
        return GenFn(self.k, (self.values - other) % (1 << self.k), self.field)

    def __rmul__(self, c: int):
        return GenFn(self.k, (c * self.values) % (1 << self.k), self.field)

    def __eq__(self, other):
        return (
            isinstance(other, GenFn)
            and (self.n, self.k, self.field) == (other.n, other.k, other.field)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.k, self.field, self.values.tobytes()))

    def __repr__(self):
        tag = "mv" if self.field is None else f"uv:0x{self.field.poly:x}"
        return f"GenFn(n={self.n}, k={self.k}, flavor={tag})"

    def reduce_mod(self, k2: int) -> "GenFn":
        """f mod 2^{k2} as a Z_{2^{k2}}-valued function."""
        return GenFn(k2, self.values % (1 << k2), self.field)

    # -- spectra -----------------------------------------------------------

    def _reindex(self, spectrum: np.ndarray) -> np.ndarray:
        if self.field is None:
            return spectrum
        return spectrum[self.field.psi_table]

    def _char_rows(self, c: int) -> np.ndarray:
        level = max(self.k, 2)
        exps = (c * self.values % (1 << self.k)) << (level - self.k)
        return cyclo.root_power_rows(exps, level)

    def char_spectrum_rows(self, c: int) -> np.ndarray:
        return self._reindex(cyclo.wht_rows(self._char_rows(c)))

    def char_spectrum(self, cs=None) -> GenSpectrum:
        """H(c, .) for the given c values (default: all nonzero c)."""
        if cs is None:
            cs = range(1, 1 << self.k)
        return GenSpectrum(self.n, self.k, {c: self.char_spectrum_rows(c) for c in cs})

    def char_spectrum_naive(self, cs=None) -> GenSpectrum:
        from .boolfn import _ip_sign_matrix

        if cs is None:
            cs = range(1, 1 << self.k)
        s = _ip_sign_matrix(self.n, self.field)
        return GenSpectrum(self.n, self.k, {c: s @ self._char_rows(c) for c in cs})

    def _nega_rows(self, c: int) -> np.ndarray:
        if self.field is None:
            raise FlavorMismatch("the twisted spectrum needs the univariate flavor")
        level = max(self.k, 2)
        exps = (c * self.values % (1 << self.k)) << (level - self.k)
        if c & 1:
            exps = exps + (self.field.sigma1_table.astype(np.int64) << (level - 1))
            exps = exps + (self.field.trace_table.astype(np.int64) << (level - 2))
        return cyclo.root_power_rows(exps, level)

    def nega_spectrum_rows(self, c: int) -> np.ndarray:
        return self._reindex(cyclo.wht_rows(self._nega_rows(c)))

    def nega_spectrum(self, cs=None) -> GenSpectrum:
        """K(c, .) for the given c values (default: all nonzero c)."""
        if cs is None:
            cs = range(1, 1 << self.k)
        return GenSpectrum(self.n, self.k, {c: self.nega_spectrum_rows(c) for c in cs})

    def nega_spectrum_naive(self, cs=None) -> GenSpectrum:
        from .boolfn import _ip_sign_matrix

        if cs is None:
            cs = range(1, 1 << self.k)
        s = _ip_sign_matrix(self.n, self.field)
        return GenSpectrum(self.n, self.k, {c: s @ self._nega_rows(c) for c in cs})

    # -- predicates ---------------------------------------------------------

    def is_gbent(self) -> bool:
        if self.k == 1:
            return self.component(0).is_bent()
        return cyclo.rows_norm_all(self.char_spectrum_rows(1), 1 << self.n)

    def is_zk_bent(self) -> bool:
        """Flat additive-character spectrum at every nonzero c."""
        if self.k == 1:
            return self.component(0).is_bent()
        return all(
            cyclo.rows_norm_all(self.char_spectrum_rows(c), 1 << self.n)
            for c in range(1, 1 << self.k)
        )

    def is_nega_gbent(self) -> bool:
        if self.field is None:
            raise FlavorMismatch("nega predicates need the univariate flavor")
        if self.k == 1:
            return self.component(0).is_cbent4(1)
        return cyclo.rows_norm_all(self.nega_spectrum_rows(1), 1 << self.n)

    def is_nega_zk_bent(self) -> bool:
        if self.field is None:
            raise FlavorMismatch("nega predicates need the univariate flavor")
        if self.k == 1:
            return self.component(0).is_cbent4(1)
        return all(
            cyclo.rows_norm_all(self.nega_spectrum_rows(c), 1 << self.n)
            for c in range(1, 1 << self.k)
        )

    # -- derivatives and balance ---------------------------------------------

    def modified_derivative(self, z: int) -> "GenFn":
        """D_z f(x) = f(x+z) - f(x) + 2^{k-1} Tr(zx)   (univariate, z != 0)."""
        if self.field is None:
            raise FlavorMismatch("the modified derivative needs the univariate flavor")
        if z == 0:
            raise ZeroDirection("derivative direction must be nonzero")
        xs = np.arange(1 << self.n, dtype=np.int64)
        tw = self.field.trace_mul_vec(z).astype(np.int64) << (self.k - 1)
        vals = (self.values[xs ^ z] - self.values + tw) % (1 << self.k)
        return GenFn(self.k, vals, self.field)

    def is_balanced(self) -> bool:
        """Every value of Z_{2^k} taken exactly 2^{n-k} times."""
        if self.k > self.n:
            return False
        counts = np.bincount(self.values, minlength=1 << self.k)
        return bool(np.all(counts == 1 << (self.n - self.k)))

    def all_modified_derivatives_balanced(self) -> bool:
        return all(self.modified_derivative(z).is_balanced() for z in range(1, 1 << self.n))

    # -- the plain <-> nega shift ----------------------------------------------

    def _shift_term(self) -> np.ndarray:
        if self.field is None:
            raise FlavorMismatch("the shift needs the univariate flavor")
        if self.k < 2:
            raise KTooSmall("the shift needs k >= 2; for k = 1 add sigma(1, .) directly")
        tr = self.field.trace_table.astype(np.int64)
        sg = self.field.sigma1_table.astype(np.int64)
        return (tr << (self.k - 2)) + (sg << (self.k - 1))

    def shift_to_plain(self) -> "GenFn":
        """f + 2^{k-2} Tr + 2^{k-1} sigma(1,.) mod 2^k.

        Maps nega-gbent onto gbent and nega-Z_{2^k}-bent onto Z_{2^k}-bent.
        """
        return GenFn(self.k, (self.values + self._shift_term()) % (1 << self.k), self.field)

    def shift_to_nega(self) -> "GenFn":
        """Inverse of shift_to_plain (subtracts the same term mod 2^k)."""
        return GenFn(self.k, (self.values - self._shift_term()) % (1 << self.k), self.field)

    def nega_shift(self, direction: str) -> "GenFn":
        if direction == "to_plain":
            return self.shift_to_plain()
        if direction == "to_nega":
            return self.shift_to_nega()
        raise ValueError(f"unknown shift direction {direction!r}")

    # -- structural characterizations -----------------------------------------

    def affine_bent_space(self) -> list[BoolFn]:
        """The affine space a_{k-1} + <a_0, ..., a_{k-2}> as a list of functions."""
        comps = self.components()
        top = comps[-1]
        members = {top}
        for mask in range(1, 1 << (self.k - 1)):
            g = top
            for i in range(self.k - 1):
                if mask >> i & 1:
                    g = g + comps[i]
            members.add(g)
        return sorted(members, key=lambda f: f.table.tobytes())

    def affine_space_check(self) -> bool:
        """Dual-sum characterization of gbentness (even n).

        True iff every member of a_{k-1} + <a_0,...,a_{k-2}> is bent and for
        any three members (g0+g1+g2)* = g0* + g1* + g2*.  Must agree with
        is_gbent on every even-n input.
        """
        if self.n % 2:
            raise OddN("the affine-space characterization needs even n")
        members = self.affine_bent_space()
        for g in members:
            if not g.is_bent():
                return False
        duals = {g: g.dual() for g in members}
        for g0, g1, g2 in product(members, repeat=3):
            s = g0 + g1 + g2  # stays inside the affine space
            if duals[s] != duals[g0] + duals[g1] + duals[g2]:
                return False
        return True

    def nega_zk_conditions(self) -> tuple[bool, bool, bool]:
        """The three-part criterion equivalent to nega-Z_{2^k}-bentness.

        Returns (g gbent, h gbent, low part Z_{2^{k-1}}-bent) where
        g = f + 2^{k-2} Tr + 2^{k-1} sigma, h = g + 2^{k-1} Tr and the low
        part is f mod 2^{k-1}.  The conjunction equals is_nega_zk_bent().
        """
        if self.field is None:
            raise FlavorMismatch("needs the univariate flavor")
        if self.k < 2:
            raise KTooSmall("needs k >= 2")
        g = self.shift_to_plain()
        h = GenFn(
            self.k,
            (g.values + (self.field.trace_table.astype(np.int64) << (self.k - 1))) % (1 << self.k),
            self.field,
        )
        low = self.reduce_mod(self.k - 1)
        return g.is_gbent(), h.is_gbent(), low.is_zk_bent()

    def top_bit_trace_invariant(self) -> bool:
        """Adding Tr to the top bit component must preserve gbentness."""
        if not self.is_gbent():
            raise NotGbent("defined for gbent inputs")
        if self.field is None:
            raise FlavorMismatch("needs the univariate flavor (Tr)")
        shifted = GenFn(
            self.k,
            (self.values + (self.field.trace_table.astype(np.int64) << (self.k - 1))) % (1 << self.k),
            self.field,
        )
        return shifted.is_gbent()
