"""Exact arithmetic in GF(2^m) for 2 <= m <= 16.

Field elements are integers in [0, 2^m): bit i holds the coefficient of x^i
in the polynomial basis {1, x, ..., x^{m-1}}.  Addition is XOR; products are
carry-less multiplications reduced modulo an irreducible polynomial, which is
itself encoded as an (m+1)-bit integer the same way.

Besides the ring operations the module provides the absolute trace
Tr(z) = z + z^2 + ... + z^{2^{m-1}}, relative traces onto subfields, the
quadratic form

    sigma(c, z) = sum_{0 <= i < j < m} (cz)^{2^i} (cz)^{2^j},

which always evaluates to 0 or 1, and the subfield/two-variable plumbing
(SubfieldEmbedding, PairSplit) used by the construction code.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParseError, ZeroInversion

REGISTRY_VERSION = 1

MIN_DEGREE = 2
MAX_DEGREE = 16


# ----------------------------------------------------------------------
# Polynomial arithmetic over GF(2)[x] on plain integers
# ----------------------------------------------------------------------

def _gf2x_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _gf2x_mod(a: int, mod: int) -> int:
    dm = mod.bit_length()
    while a.bit_length() >= dm:
        a ^= mod << (a.bit_length() - dm)
    return a


def _gf2x_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2x_mod(a, b)
    return a


def is_irreducible(poly: int) -> bool:
    """Irreducibility test for a degree-m binary polynomial.

    A reducible polynomial of degree m has an irreducible factor of degree
    <= m/2, and x^{2^i} + x is the product of all irreducibles of degree
    dividing i, so it suffices to check gcd(x^{2^i} + x, poly) = 1 for
    1 <= i <= m/2.
    """
    m = poly.bit_length() - 1
    if m < 1 or not poly & 1:
        return False
    t = 2  # the polynomial x
    for _ in range(m // 2):
        t = _gf2x_mod(_gf2x_mul(t, t), poly)
        if _gf2x_gcd(t ^ 2, poly) != 1:
            return False
    return True


_IRREDUCIBLE_CACHE: dict[int, int] = {}


def default_polynomial(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree m."""
    if m not in _IRREDUCIBLE_CACHE:
        for poly in range((1 << m) | 1, 1 << (m + 1), 2):
            if is_irreducible(poly):
                _IRREDUCIBLE_CACHE[m] = poly
                break
        else:  # pragma: no cover - irreducibles exist in every degree
            raise AssertionError(f"no irreducible polynomial of degree {m}")
    return _IRREDUCIBLE_CACHE[m]


def default_polynomials() -> dict[int, int]:
    """The embedded registry: degree -> default polynomial."""
    return {m: default_polynomial(m) for m in range(MIN_DEGREE, MAX_DEGREE + 1)}


def _prime_factors(n: int) -> list[int]:
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


def _popcount_parity(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.uint8) & 1


class Field:
    """A concrete model of GF(2^m) with cached arithmetic tables.

    Construction validates the defining polynomial (degree bits, lowest bit,
    irreducibility) and locates the smallest primitive element unless one is
    supplied; expensive tables (trace, sigma, trace-coordinate map) are built
    lazily and are immutable afterwards, so a Field can be shared freely
    between threads or workers.
    """

    def __init__(self, m: int, poly: int | None = None, generator: int | None = None):
        if not MIN_DEGREE <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {m}")
        if poly is None:
            poly = default_polynomial(m)
        if poly.bit_length() - 1 != m or not poly & 1:
            raise ValueError(f"polynomial 0x{poly:x} does not have degree {m} with nonzero constant term")
        if not is_irreducible(poly):
            raise ValueError(f"polynomial 0x{poly:x} is reducible")
        self.m = m
        self.poly = poly
        self.order = 1 << m
        self._mult_order = self.order - 1
        self._factors = _prime_factors(self._mult_order)
        if generator is None:
            generator = self._find_generator()
        elif not self._is_primitive(generator):
            raise ValueError(f"element {generator} does not have multiplicative order {self._mult_order}")
        self.generator = generator
        self._build_log_tables()
        self._trace_mask: int | None = None
        self._trace_table: np.ndarray | None = None
        self._sigma1_table: np.ndarray | None = None
        self._psi_table: np.ndarray | None = None
        self._psi_inv: np.ndarray | None = None
        self._subfields: dict[int, "SubfieldEmbedding"] = {}

    # -- bootstrap arithmetic (before log tables exist) -----------------

    def _raw_mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & self.order:
                a ^= self.poly
            b >>= 1
        return r

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _is_primitive(self, g: int) -> bool:
        if g in (0, 1):
            return self._mult_order == 1
        return all(self._raw_pow(g, self._mult_order // q) != 1 for q in self._factors)

    def _find_generator(self) -> int:
        for g in range(2, self.order):
            if self._is_primitive(g):
                return g
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _build_log_tables(self):
        n = self._mult_order
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self._raw_mul(v, self.generator)
        exp[n:] = exp[:n]
        self._exp = exp
        self._log = log

    # -- scalar operations ----------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInversion("0 has no multiplicative inverse")
        return int(self._exp[self._mult_order - self._log[a]])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroInversion("negative power of 0")
        return int(self._exp[(int(self._log[a]) * e) % self._mult_order])

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ZeroInversion("0 has no multiplicative order")
        return self._mult_order // math.gcd(int(self._log[a]), self._mult_order)

    def element_of_order(self, r: int) -> int:
        """Smallest element (by integer encoding) of multiplicative order r."""
        if self._mult_order % r != 0:
            raise ValueError(f"no element of order {r} in GF(2^{self.m})")
        for z in range(1, self.order):
            if self.mult_order(z) == r:
                return z
        raise AssertionError  # pragma: no cover

    # -- traces and sigma -------------------------------------------------

    @property
    def trace_table(self) -> np.ndarray:
        if self._trace_table is None:
            mask = 0
            for j in range(self.m):
                basis = 1 << j
                t = 0
                z = basis
                for _ in range(self.m):
                    t ^= z
                    z = self.mul(z, z)
                assert t in (0, 1)
                mask |= t << j
            self._trace_mask = mask
            xs = np.arange(self.order, dtype=np.int64)
            self._trace_table = _popcount_parity(xs & mask)
            self._trace_table.setflags(write=False)
        return self._trace_table

    def trace(self, x: int) -> int:
        return int(self.trace_table[x])

    def mul_vec(self, c: int, xs: np.ndarray) -> np.ndarray:
        """Multiply every entry of xs by the constant c (vectorized)."""
        out = np.zeros_like(xs)
        for j in range(self.m):
            img = self.mul(c, 1 << j)
            out ^= ((xs >> j) & 1) * img
        return out

    @property
    def sigma1_table(self) -> np.ndarray:
        if self._sigma1_table is None:
            tab = np.zeros(self.order, dtype=np.uint8)
            for y in range(1, self.order):
                conj = []
                z = y
                for _ in range(self.m):
                    conj.append(z)
                    z = self.mul(z, z)
                s = 0
                for i in range(self.m):
                    for j in range(i + 1, self.m):
                        s ^= self.mul(conj[i], conj[j])
                assert s in (0, 1), "sigma is not Boolean"
                tab[y] = s
            self._sigma1_table = tab
            tab.setflags(write=False)
        return self._sigma1_table

    def sigma(self, c: int, x: int) -> int:
        """The Boolean form sum_{i<j} (cx)^{2^i}(cx)^{2^j}; sigma(c, x) = sigma(1, cx)."""
        return int(self.sigma1_table[self.mul(c, x)])

    def sigma_vec(self, c: int) -> np.ndarray:
        """sigma(c, x) for all x as a uint8 vector."""
        xs = np.arange(self.order, dtype=np.int64)
        return self.sigma1_table[self.mul_vec(c, xs)]

    def trace_mul_vec(self, c: int) -> np.ndarray:
        """Tr(cx) for all x as a uint8 vector."""
        xs = np.arange(self.order, dtype=np.int64)
        return self.trace_table[self.mul_vec(c, xs)]

    # -- trace-coordinate (dual basis) map --------------------------------

    @property
    def psi_table(self) -> np.ndarray:
        """psi(u) with bit j = Tr(u x^j): converts Tr(u*z) into a dot product.

        For all u, z: Tr(u z) = <psi(u), z> where <,> is the bit dot product
        on the polynomial-basis coordinates.
        """
        if self._psi_table is None:
            psi = np.zeros(self.order, dtype=np.int64)
            for j in range(self.m):
                psi |= self.trace_mul_vec(1 << j).astype(np.int64) << j
            self._psi_table = psi
            psi.setflags(write=False)
            inv = np.zeros(self.order, dtype=np.int64)
            inv[psi] = np.arange(self.order, dtype=np.int64)
            self._psi_inv = inv
            inv.setflags(write=False)
        return self._psi_table

    @property
    def psi_inv_table(self) -> np.ndarray:
        self.psi_table
        return self._psi_inv

    # -- checks, registry and serialization --------------------------------

    def mul_table(self) -> np.ndarray:
        """Dense 2^m x 2^m product table (m <= 8 only)."""
        if self.m > 8:
            raise ValueError("dense multiplication table is limited to m <= 8")
        if getattr(self, "_mul_table", None) is None:
            idx = np.arange(self.order, dtype=np.int64)
            la = self._log[idx]
            table = self._exp[(la[:, None] + la[None, :]) % self._mult_order].copy()
            table[0, :] = 0
            table[:, 0] = 0
            self._mul_table = table
            table.setflags(write=False)
        return self._mul_table

    def sigma_cocycle_holds(self) -> bool:
        """Exhaustively test the sigma addition law

        sigma(c,x1+x2) = sigma(c,x1) + sigma(c,x2) + Tr(cx1)Tr(cx2) + Tr(c^2 x1 x2)

        over all (c, x1, x2).  Restricted to m <= 8 (the check is cubic in 2^m).
        """
        if self.m > 8:
            raise ValueError("exhaustive cocycle check is limited to m <= 8")
        xs = np.arange(self.order, dtype=np.int64)
        xor = xs[:, None] ^ xs[None, :]
        prod = self.mul_table()
        for c in range(self.order):
            sig_c = self.sigma_vec(c)
            tr_c = self.trace_mul_vec(c).astype(np.uint8)
            c2 = self.mul(c, c)
            lhs = sig_c[xor]
            rhs = sig_c[:, None] ^ sig_c[None, :] ^ (tr_c[:, None] & tr_c[None, :])
            rhs ^= self.trace_table[self.mul_vec(c2, prod.ravel()).reshape(prod.shape)]
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def subfield(self, k: int, subfield: "Field | None" = None) -> "SubfieldEmbedding":
        if subfield is None and k in self._subfields:
            return self._subfields[k]
        emb = SubfieldEmbedding(self, k, subfield)
        if subfield is None:
            self._subfields[k] = emb
        return emb

    @property
    def spec_str(self) -> str:
        return f"m={self.m},poly=0x{self.poly:x}"

    @classmethod
    def from_spec(cls, text: str) -> "Field":
        try:
            parts = dict(item.split("=", 1) for item in text.strip().split(","))
            m = int(parts["m"])
            poly = int(parts["poly"], 16) if "poly" in parts else None
        except (ValueError, KeyError) as exc:
            raise ParseError(f"bad field spec {text!r}") from exc
        return cls(m, poly)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.m, self.poly, self.generator) == (other.m, other.poly, other.generator)
        )

    def __hash__(self):
        return hash((self.m, self.poly, self.generator))

    def __repr__(self):
        return f"Field(m={self.m}, poly=0x{self.poly:x}, generator={self.generator})"


class SubfieldEmbedding:
    """GF(2^k) inside GF(2^n) for k | n.

    The image table is the field homomorphism sending the subfield's
    polynomial generator to the smallest root of the subfield's defining
    polynomial inside the parent field, so it respects both addition and
    multiplication (not just the multiplicative group).
    """

    def __init__(self, parent: Field, k: int, subfield: Field | None = None):
        n = parent.m
        if n % k != 0:
            raise ValueError(f"{k} does not divide {n}")
        self.parent = parent
        self.k = k
        if subfield is None:
            if k >= MIN_DEGREE:
                subfield = parent if k == n else Field(k)
            else:
                subfield = None  # GF(2) needs no table
        self.sub = subfield
        sub_poly = subfield.poly if subfield is not None else 0b11  # x + 1 for GF(2)
        beta = None
        for z in range(parent.order):
            acc = 0
            for bit in range(sub_poly.bit_length() - 1, -1, -1):
                acc = parent.mul(acc, z) ^ ((sub_poly >> bit) & 1)
            if acc == 0:
                beta = z
                break
        assert beta is not None, "subfield polynomial has no root (k | n should guarantee one)"
        self.beta = beta
        pows = [1]
        for _ in range(1, k):
            pows.append(parent.mul(pows[-1], beta))
        images = np.zeros(1 << k, dtype=np.int64)
        for j, p in enumerate(pows):
            images ^= ((np.arange(1 << k, dtype=np.int64) >> j) & 1) * p
        self.images = images
        images.setflags(write=False)
        inv = np.full(parent.order, -1, dtype=np.int64)
        inv[images] = np.arange(1 << k, dtype=np.int64)
        self._inv = inv
        inv.setflags(write=False)
        if len(set(images.tolist())) != 1 << k:
            raise AssertionError("embedding is not injective")
        for z in images.tolist():
            if parent.pow(z, 1 << k) != z:
                raise AssertionError("embedding image not fixed by Frobenius^k")

    def in_image(self, x: int) -> bool:
        return self._inv[x] >= 0

    def to_sub(self, x: int) -> int:
        v = int(self._inv[x])
        if v < 0:
            raise ValueError(f"element {x} is not in the embedded subfield")
        return v

    def embed(self, v: int) -> int:
        return int(self.images[v])

    def rel_trace(self, x: int) -> int:
        """Tr^n_k(x) = sum of x^{2^{ki}}, an element of the embedded subfield."""
        parent = self.parent
        acc = 0
        term = x
        for _ in range(parent.m // self.k):
            acc ^= term
            for _ in range(self.k):
                term = parent.mul(term, term)
        return acc

    def rel_trace_sub(self, x: int) -> int:
        """Relative trace mapped to the abstract subfield encoding."""
        return self.to_sub(self.rel_trace(x))

    def rel_trace_sub_vec(self) -> np.ndarray:
        out = np.zeros(self.parent.order, dtype=np.int64)
        for x in range(self.parent.order):
            out[x] = self.rel_trace_sub(x)
        return out


class PairSplit:
    """Identification of GF(2^m) x GF(2^m) with GF(2^{2m}).

    A pair (x, y) of abstract subfield elements maps to img(x) + gamma*img(y)
    where {1, gamma} is a basis of the big field over the embedded subfield.
    `mv_index` flattens pairs to 2m-bit multivariate indices in which the
    subfield pairing Tr^m(x*y) becomes the standard quadratic form
    sum_i t_i t_{m+i} (x enters in trace coordinates, y in polynomial ones).
    """

    def __init__(self, parent: Field, embed: SubfieldEmbedding | None = None, gamma: int | None = None):
        if parent.m % 2 != 0:
            raise ValueError("pair splitting needs an even extension degree")
        m = parent.m // 2
        self.parent = parent
        self.m = m
        self.embed = embed if embed is not None else parent.subfield(m)
        if self.embed.k != m:
            raise ValueError("embedding degree must be half the parent degree")
        if gamma is None:
            gamma = next(z for z in range(parent.order) if not self.embed.in_image(z))
        elif self.embed.in_image(gamma):
            raise ValueError("gamma lies in the subfield; {1, gamma} is not a basis")
        self.gamma = gamma
        half = 1 << m
        z_of = np.zeros(parent.order, dtype=np.int64)
        for x in range(half):
            xi = self.embed.embed(x)
            for y in range(half):
                z_of[(y << m) | x] = xi ^ parent.mul(gamma, self.embed.embed(y))
        if len(set(z_of.tolist())) != parent.order:
            raise AssertionError("pair map is not a bijection")
        self.z_of = z_of
        x_of = np.zeros(parent.order, dtype=np.int64)
        y_of = np.zeros(parent.order, dtype=np.int64)
        idx = np.arange(parent.order, dtype=np.int64)
        x_of[z_of] = idx & (half - 1)
        y_of[z_of] = idx >> m
        self.x_of = x_of
        self.y_of = y_of
        for arr in (z_of, x_of, y_of):
            arr.setflags(write=False)

    def univ(self, x: int, y: int) -> int:
        return int(self.z_of[(y << self.m) | x])

    def split(self, z: int) -> tuple[int, int]:
        return int(self.x_of[z]), int(self.y_of[z])

    def mv_index(self, x: int, y: int) -> int:
        sub = self.embed.sub
        xt = int(sub.psi_table[x]) if sub is not None else x
        return xt | (y << self.m)

    def mv_split(self, t: int) -> tuple[int, int]:
        sub = self.embed.sub
        lo = t & ((1 << self.m) - 1)
        x = int(sub.psi_inv_table[lo]) if sub is not None else lo
        return x, t >> self.m
