"""Boolean functions on 2^n points.

A BoolFn is a truth table plus a flavor: multivariate (inputs are bit
vectors, inner product is the dot product) or univariate (inputs are GF(2^n)
elements, inner product is Tr(b*x)).  The two flavors are never mixed
silently; combining functions requires equal flavors.

Provides the Walsh spectrum (butterfly and a definitional naive oracle),
bentness and duals, the quadratic form s2 and its field analogue sigma, the
twisted spectra behind the bent4/negabent notions, the balanced-derivative
test, and the reduction of a full-rank quadratic to the canonical form
x_1 x_{m+1} + ... + x_m x_{2m}.
"""

from __future__ import annotations

import numpy as np

from . import cyclo
from .cyclo import CycInt
from .errors import DegenerateForm, FlavorMismatch, NotBent, ZeroC
from .gf2m import Field


def _parity(arr: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(arr) & 1).astype(np.uint8)


def s2_form(c: int, x: int) -> int:
    """sum_{i<j} (c_i x_i)(c_j x_j) = C(wt(c & x), 2) mod 2."""
    w = (c & x).bit_count()
    return (w * (w - 1) // 2) & 1


def s2_table(n: int, c: int) -> np.ndarray:
    """s2 with parameter c on all of F_2^n, as a uint8 vector."""
    w = np.bitwise_count(np.arange(1 << n, dtype=np.int64) & c)
    return ((w * (w - 1) // 2) & 1).astype(np.uint8)


class WalshSpectrum:
    """Integer spectrum of a Boolean function; Parseval is checked on build."""

    def __init__(self, n: int, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (1 << n,):
            raise ValueError("spectrum length mismatch")
        if int(np.sum(values * values)) != 1 << (2 * n):
            raise AssertionError("Parseval identity violated")
        self.n = n
        self.values = values
        values.setflags(write=False)

    def __getitem__(self, b: int) -> int:
        return int(self.values[b])

    def is_flat(self) -> bool:
        if self.n % 2:
            return False
        target = 1 << self.n
        return bool(np.all(self.values * self.values == target))


class Bent4Spectrum:
    """Level-2 spectrum (values in Z[i]) of a twisted unitary transform."""

    def __init__(self, n: int, rows: np.ndarray):
        self.n = n
        self.rows = rows
        rows.setflags(write=False)

    def __getitem__(self, b: int) -> CycInt:
        return cyclo.row_to_cyc(2, self.rows[b])

    def is_flat(self) -> bool:
        return cyclo.rows_norm_all(self.rows, 1 << self.n)


class BoolFn:
    """Truth table of f: 2^n points -> F_2, multivariate or univariate."""

    def __init__(self, table, field: Field | None = None):
        table = np.asarray(table, dtype=np.uint8)
        size = table.shape[0]
        n = size.bit_length() - 1
        if 1 << n != size or table.ndim != 1:
            raise ValueError("table length must be a power of two")
        if np.any(table > 1):
            raise ValueError("table entries must be bits")
        if field is not None and field.m != n:
            raise ValueError(f"field degree {field.m} does not match n={n}")
        self.n = n
        self.table = table
        self.field = field
        table.setflags(write=False)

    @classmethod
    def from_function(cls, n: int, fn, field: Field | None = None) -> "BoolFn":
        return cls([fn(x) & 1 for x in range(1 << n)], field)

    @classmethod
    def zero(cls, n: int, field: Field | None = None) -> "BoolFn":
        return cls(np.zeros(1 << n, dtype=np.uint8), field)

    @property
    def flavor(self) -> str:
        return "mv" if self.field is None else "uv"

    def _same_flavor(self, other: "BoolFn"):
        if self.n != other.n or self.field != other.field:
            raise FlavorMismatch("operands live on different domains")

    def __add__(self, other):
        if isinstance(other, int):
            return BoolFn(self.table ^ (other & 1), self.field)
        self._same_flavor(other)
        return BoolFn(self.table ^ other.table, self.field)

    __xor__ = __add__

    def __eq__(self, other):
        return (
            isinstance(other, BoolFn)
            and self.field == other.field
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.field, self.table.tobytes()))

    def weight(self) -> int:
        return int(self.table.sum())

    def is_balanced(self) -> bool:
        return self.weight() * 2 == 1 << self.n

    # -- inner product plumbing -------------------------------------------

    def _reindex(self, spectrum: np.ndarray) -> np.ndarray:
        """Convert dot-product indexing to the flavor's inner product.

        For univariate f: sum_x v(x) (-1)^{Tr(ux)} = WHT(v)[psi(u)].
        """
        if self.field is None:
            return spectrum
        return spectrum[self.field.psi_table]

    def signs(self) -> np.ndarray:
        return 1 - 2 * self.table.astype(np.int64)

    # -- Walsh spectrum ------------------------------------------------------

    def walsh(self) -> WalshSpectrum:
        w = cyclo.wht_rows(self.signs()[:, None])[:, 0]
        return WalshSpectrum(self.n, self._reindex(w))

    def walsh_naive(self) -> WalshSpectrum:
        """O(4^n) definitional summation; the butterfly's independent oracle."""
        return WalshSpectrum(self.n, _ip_sign_matrix(self.n, self.field) @ self.signs())

    def is_bent(self) -> bool:
        return self.walsh().is_flat()

    def dual(self) -> "BoolFn":
        """The bent function g with W_f(b) = 2^{n/2} (-1)^{g(b)}."""
        w = self.walsh()
        if not w.is_flat():
            raise NotBent("dual is defined for bent functions only")
        half = 1 << (self.n // 2)
        return BoolFn(((1 - w.values // half) // 2).astype(np.uint8), self.field)

    # -- twisted (bent4) spectra ------------------------------------------

    def _twist_exponents(self, c) -> np.ndarray:
        """Exponent of i for each x in the transform with parameter c.

        Multivariate: 2*(f + s2^c) + (c.x mod 2);  univariate:
        2*(f + sigma(c, .)) + Tr(cx).  Both are mod 4 exponents of i.
        """
        if self.field is None:
            shift = s2_table(self.n, c)
            bit = _parity(np.arange(1 << self.n, dtype=np.int64) & c)
        else:
            shift = self.field.sigma_vec(c)
            bit = self.field.trace_mul_vec(c)
        return (2 * (self.table ^ shift).astype(np.int64) + bit).astype(np.int64)

    def bent4_spectrum(self, c) -> Bent4Spectrum:
        """The twisted unitary spectrum with twist parameter c (nonzero)."""
        if c == 0:
            raise ZeroC("c = 0 degenerates to the Walsh transform; call walsh()")
        rows = cyclo.root_power_rows(self._twist_exponents(c), 2)
        return Bent4Spectrum(self.n, self._reindex(cyclo.wht_rows(rows)))

    def bent4_spectrum_naive(self, c) -> Bent4Spectrum:
        if c == 0:
            raise ZeroC("c = 0 degenerates to the Walsh transform")
        rows = cyclo.root_power_rows(self._twist_exponents(c), 2)
        return Bent4Spectrum(self.n, _ip_sign_matrix(self.n, self.field) @ rows)

    def is_cbent4(self, c) -> bool:
        """Flat twisted spectrum; c = all-ones (mv) resp. 1 (uv) is negabentness."""
        return self.bent4_spectrum(c).is_flat()

    def is_negabent(self) -> bool:
        c = (1 << self.n) - 1 if self.field is None else 1
        return self.is_cbent4(c)

    def bent4_derivative_balanced(self, c) -> bool:
        """For every nonzero a: f(x) + f(x+a) + <c, a*x> is balanced.

        The inner term is c.(a & x) in the multivariate flavor and Tr(c a x)
        in the univariate one.  Equivalent to is_cbent4 for nonzero c.
        """
        xs = np.arange(1 << self.n, dtype=np.int64)
        half = 1 << (self.n - 1)
        for a in range(1, 1 << self.n):
            if self.field is None:
                twist = _parity(xs & (c & a))
            else:
                twist = self.field.trace_mul_vec(self.field.mul(c, a))
            d = self.table ^ self.table[xs ^ a] ^ twist
            if int(d.sum()) != half:
                return False
        return True

    def __repr__(self):
        tag = "mv" if self.field is None else f"uv:0x{self.field.poly:x}"
        return f"BoolFn(n={self.n}, flavor={tag}, weight={self.weight()})"


_SIGN_CACHE: dict = {}


def _ip_sign_matrix(n: int, field: Field | None) -> np.ndarray:
    """(-1)^{<u,x>} as a dense matrix, built directly from the definition."""
    key = (n, field)
    if key not in _SIGN_CACHE:
        size = 1 << n
        s = np.empty((size, size), dtype=np.int64)
        for u in range(size):
            for x in range(size):
                if field is None:
                    ip = (u & x).bit_count() & 1
                else:
                    ip = field.trace(field.mul(u, x))
                s[u, x] = -1 if ip else 1
        _SIGN_CACHE[key] = s
    return _SIGN_CACHE[key]


# ----------------------------------------------------------------------
# Quadratic forms: reduction to mu(x) = x_1 x_{m+1} + ... + x_m x_{2m}
# ----------------------------------------------------------------------

def mu_value(n: int, x: int) -> int:
    m = n // 2
    return ((x & ((1 << m) - 1)) & (x >> m)).bit_count() & 1


def mu_boolfn(n: int) -> BoolFn:
    return BoolFn.from_function(n, lambda x: mu_value(n, x))


def apply_rows(x: int, rows: list[int]) -> int:
    """Row-vector times bit matrix: XOR of the rows selected by x's bits."""
    out = 0
    i = 0
    while x:
        if x & 1:
            out ^= rows[i]
        x >>= 1
        i += 1
    return out


def mat_inv(rows: list[int], n: int) -> list[int]:
    """Inverse of an invertible n x n bit matrix given as row masks."""
    a = list(rows)
    inv = [1 << i for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r] >> col & 1), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        for r in range(n):
            if r != col and a[r] >> col & 1:
                a[r] ^= a[col]
                inv[r] ^= inv[col]
    return inv


def quad_equiv_to_mu(q: BoolFn) -> tuple[list[int], int, int, int]:
    """Write a full-rank quadratic as q(x) = mu(xA + b) + u.x + e.

    A is returned as row masks (xA = XOR of rows for set bits of x), b = 0.
    The symplectic basis behind A is chosen greedily by smallest integer
    encoding, which makes the output deterministic.  Raises DegenerateForm
    if the associated bilinear form has a radical (in particular for odd n).
    The returned identity is verified pointwise before returning.
    """
    n = q.n
    if n % 2:
        raise DegenerateForm("odd number of variables")
    t = q.table.astype(np.int64)
    q0 = int(t[0])
    # bilinear form rows: B[i] bit j = q(ei+ej)+q(ei)+q(ej)+q(0)
    brow = []
    for i in range(n):
        row = 0
        for j in range(n):
            if i != j:
                v = int(t[(1 << i) ^ (1 << j)]) ^ int(t[1 << i]) ^ int(t[1 << j]) ^ q0
                row |= v << j
        brow.append(row)

    def bform(x: int, y: int) -> int:
        acc = 0
        i = 0
        while x:
            if x & 1:
                acc ^= (brow[i] & y).bit_count() & 1
            x >>= 1
            i += 1
        return acc

    def span(basis: list[int]) -> list[int]:
        out = [0]
        for v in basis:
            out += [w ^ v for w in out]
        return out

    basis = [1 << i for i in range(n)]
    pairs = []
    while basis:
        vecs = sorted(span(basis))[1:]
        u1 = vecs[0]
        v1 = next((v for v in vecs if bform(u1, v)), None)
        if v1 is None:
            raise DegenerateForm("bilinear form has a nontrivial radical")
        pairs.append((u1, v1))
        # restrict to the orthogonal complement of <u1, v1>
        new_basis = []
        for w in basis:
            w ^= bform(w, v1) * u1  # clear B(., v1)... using B(u1,v1)=1
            w ^= bform(u1, w) * v1
            if w:
                new_basis.append(w)
        # re-reduce to an independent set (Gaussian, keyed by leading bit)
        reduced: dict[int, int] = {}
        for w in new_basis:
            cur = w
            while cur:
                lead = cur.bit_length() - 1
                if lead in reduced:
                    cur ^= reduced[lead]
                else:
                    reduced[lead] = cur
                    break
        basis = list(reduced.values())
    m = n // 2
    s_rows = [p[0] for p in pairs] + [p[1] for p in pairs]
    a_rows = mat_inv(s_rows, n)
    # residual r(z) = q(zS) + mu(z) is affine; pull it through A
    r0 = int(t[apply_rows(0, s_rows)])
    wbits = 0
    for j in range(n):
        rj = int(t[apply_rows(1 << j, s_rows)]) ^ mu_value(n, 1 << j) ^ r0
        wbits |= rj << j
    # u.x = w.(xA): build column masks of A
    umask = 0
    for j in range(n):
        if wbits >> j & 1:
            col = 0
            for i in range(n):
                col |= (a_rows[i] >> j & 1) << i
            umask ^= col
    e = r0
    for x in range(1 << n):
        val = mu_value(n, apply_rows(x, a_rows)) ^ ((umask & x).bit_count() & 1) ^ e
        if val != int(t[x]):
            raise AssertionError("symplectic reduction failed to reproduce q")
    return a_rows, 0, umask, e
