"""Vectorial functions F: 2^n points -> GF(2^k) and the two rival
vectorial negabent notions.

* "vectorial negabent / bent-negabent": every nonzero component function is
  negabent (resp. bent and negabent).  All components are measured against
  the same twist (all-ones c in the multivariate flavor, c = 1 univariately).
  For bent-negabent functions the output dimension is bounded by n/2 - 1.

* "vectorial bent4": the modified derivative F(x+a) + F(x) + Tr^n_k(ax) is
  balanced for every nonzero a (univariate, k | n).  Equivalently, the
  twisted spectrum V_F(c,u) is flat, the graph is a relative difference set
  in the f4 star group, and every component Tr^k_1(c^2 F) is c-bent4 with
  its own twist c.  For k = n these are exactly the modified planar
  functions.

The Maiorana-McFarland construction of maximal-dimension bent-negabent
functions lives here too, together with the bent + bent4 sample built from a
linearized complete mapping.
"""

from __future__ import annotations

import numpy as np

from . import cyclo
from .boolfn import BoolFn, mu_boolfn, quad_equiv_to_mu, apply_rows, s2_table, _parity
from .errors import (
    DependentAlphas,
    FlavorMismatch,
    OddN,
    SpanContainsOne,
    VerificationFailed,
    ZeroC,
)
from .gf2m import Field, PairSplit, SubfieldEmbedding


class VectFn:
    """Truth table of F: 2^n points -> GF(2^k) (values as abstract k-bit ints)."""

    def __init__(self, k: int, table, field: Field | None = None,
                 embed: SubfieldEmbedding | None = None):
        table = np.asarray(table, dtype=np.int64)
        size = table.shape[0]
        n = size.bit_length() - 1
        if 1 << n != size or table.ndim != 1:
            raise ValueError("table length must be a power of two")
        if np.any(table < 0) or np.any(table >= 1 << k):
            raise ValueError(f"table entries must lie in [0, 2^{k})")
        if field is not None:
            if field.m != n:
                raise ValueError("field degree does not match n")
            if n % k:
                raise ValueError("univariate flavor needs k | n")
            if embed is None:
                embed = field.subfield(k)
        else:
            if k > n:
                raise ValueError("multivariate flavor needs k <= n")
        self.n = n
        self.k = k
        self.table = table
        self.field = field
        self.embed = embed
        table.setflags(write=False)

    @property
    def flavor(self) -> str:
        return "mv" if self.field is None else "uv"

    def __eq__(self, other):
        return (
            isinstance(other, VectFn)
            and (self.n, self.k, self.field) == (other.n, other.k, other.field)
            and np.array_equal(self.table, other.table)
        )

    def __repr__(self):
        tag = "mv" if self.field is None else f"uv:0x{self.field.poly:x}"
        return f"VectFn(n={self.n}, k={self.k}, flavor={tag})"

    # -- components ---------------------------------------------------------

    def component(self, c: int) -> BoolFn:
        """Component function for nonzero c: <c, F(x)> (mv) or Tr^k_1(c^2 F(x)) (uv)."""
        if c == 0:
            raise ZeroC("component parameter must be nonzero")
        if self.field is None:
            return BoolFn(_parity(self.table & c))
        sub = self.embed.sub
        if sub is None:  # k = 1
            return BoolFn(self.table.astype(np.uint8), self.field)
        c2 = sub.mul(c, c)
        return BoolFn(sub.trace_table[sub.mul_vec(c2, self.table)], self.field)

    def components(self) -> dict[int, BoolFn]:
        return {c: self.component(c) for c in range(1, 1 << self.k)}

    # -- the negabent-style notions -----------------------------------------

    def _component_twist(self, c: int):
        """The twist each notion applies to component c."""
        if self.field is None:
            return (1 << self.n) - 1
        return 1

    def is_vectorial_negabent(self) -> bool:
        """All nonzero components negabent (one common twist)."""
        return all(self.component(c).is_cbent4(self._component_twist(c))
                   for c in range(1, 1 << self.k))

    def bent_negabent_violations(self) -> list[str]:
        """Diagnostics for is_vectorial_bent_negabent, including the k <= n/2 - 1 bound."""
        out = []
        if self.k > self.n // 2 - 1:
            out.append(f"output dimension {self.k} exceeds the bound n/2 - 1 = {self.n // 2 - 1}")
        for c in range(1, 1 << self.k):
            comp = self.component(c)
            if not comp.is_bent():
                out.append(f"component {c} is not bent")
            if not comp.is_cbent4(self._component_twist(c)):
                out.append(f"component {c} is not negabent")
        return out

    def is_vectorial_bent_negabent(self) -> bool:
        """All nonzero components simultaneously bent and negabent (n even)."""
        if self.n % 2:
            raise OddN("bent components need an even number of variables")
        if self.k > self.n // 2 - 1:
            return False
        return all(
            comp.is_bent() and comp.is_cbent4(self._component_twist(c))
            for c, comp in self.components().items()
        )

    # -- the bent4 notion (univariate) ---------------------------------------

    def modified_derivative(self, a: int) -> np.ndarray:
        """F(x+a) + F(x) + Tr^n_k(ax) as a vector of subfield values."""
        if self.field is None:
            raise FlavorMismatch("the modified derivative needs the univariate flavor")
        xs = np.arange(1 << self.n, dtype=np.int64)
        rel = self.embed.rel_trace_sub_vec()
        tw = rel[self.field.mul_vec(a, xs)]
        return self.table ^ self.table[xs ^ a] ^ tw

    def is_vectorial_bent4(self) -> bool:
        """Balanced modified derivative in every nonzero direction.

        For k = n this is the modified planarity test: each derivative is a
        permutation.
        """
        if self.field is None:
            raise FlavorMismatch("the bent4 notion is univariate")
        each = 1 << (self.n - self.k)
        for a in range(1, 1 << self.n):
            counts = np.bincount(self.modified_derivative(a), minlength=1 << self.k)
            if not np.all(counts == each):
                return False
        return True

    def is_modified_planar(self) -> bool:
        if self.k != self.n:
            raise ValueError("modified planarity is the k = n case")
        return self.is_vectorial_bent4()

    def twisted_spectrum_rows(self, c: int) -> np.ndarray:
        """V_F(c, .) as coefficient rows over u; equals the c-twisted spectrum
        of the component Tr^k_1(c^2 F) with c embedded into the big field."""
        if self.field is None:
            raise FlavorMismatch("the twisted spectrum is univariate")
        if c == 0:
            raise ZeroC("c must be nonzero")
        cimg = self.embed.embed(c)
        comp = self.component(c)
        exps = 2 * (comp.table ^ self.field.sigma_vec(cimg)).astype(np.int64)
        exps = exps + self.field.trace_mul_vec(cimg)
        rows = cyclo.root_power_rows(exps, 2)
        return cyclo.wht_rows(rows)[self.field.psi_table]

    def twisted_spectrum(self) -> dict[int, "list[cyclo.CycInt]"]:
        out = {}
        for c in range(1, 1 << self.k):
            rows = self.twisted_spectrum_rows(c)
            out[c] = [cyclo.row_to_cyc(2, row) for row in rows]
        return out

    def twisted_spectrum_flat(self) -> bool:
        return all(
            cyclo.rows_norm_all(self.twisted_spectrum_rows(c), 1 << self.n)
            for c in range(1, 1 << self.k)
        )

    def bent4_equivalence_report(self) -> tuple[bool, bool, bool, bool]:
        """The four equivalent bent4 criteria, evaluated independently:

        (i) balanced modified derivatives, (ii) flat twisted spectrum,
        (iii) graph is an RDS in the f4 star group, (iv) every component
        c-bent4 with its own twist.  All four must agree.
        """
        from .stargroup import StarGroup, graph_of

        if self.field is None:
            raise FlavorMismatch("the report needs the univariate flavor")
        i = self.is_vectorial_bent4()
        ii = self.twisted_spectrum_flat()
        group = StarGroup(self.field, self.k, "f4", self.embed)
        iii = group.is_rds(graph_of(self, group))
        iv = all(
            self.component(c).is_cbent4(self.embed.embed(c))
            for c in range(1, 1 << self.k)
        )
        return (i, ii, iii, iv)


# ----------------------------------------------------------------------
# Constructions
# ----------------------------------------------------------------------

def _span(elements):
    out = {0}
    for v in elements:
        out |= {w ^ v for w in out}
    return out


def mm_bent_negabent(field: Field, alphas: list[int], rhos: list[BoolFn] | None = None) -> VectFn:
    """Maximal-dimension vectorial bent-negabent function (multivariate).

    Starts from the Maiorana-McFarland coordinates f_i(x, y) = Tr(x a_i y)
    + rho_i(y) over GF(2^m) x GF(2^m), flattened so that Tr(xy) becomes the
    canonical quadratic mu, then composes with the affine substitution that
    carries s2 onto mu.  Requires the alphas to be linearly independent with
    1 outside their span; the result is verified before being returned.
    """
    m = field.m
    if rhos is None:
        rhos = [BoolFn.zero(m) for _ in alphas]
    if len(rhos) != len(alphas):
        raise ValueError("need one rho per alpha")
    if len(alphas) > m - 1:
        raise DependentAlphas(f"at most {m - 1} alphas fit the construction", clause="alpha count")
    span = _span(alphas)
    if len(span) != 1 << len(alphas):
        raise DependentAlphas("alphas are linearly dependent", clause="independent alphas")
    if 1 in span:
        raise SpanContainsOne("the span of the alphas contains 1", clause="span avoids 1")
    n = 2 * m
    kdim = len(alphas)
    psi_inv = field.psi_inv_table
    table = np.zeros(1 << n, dtype=np.int64)
    half = (1 << m) - 1
    for t in range(1 << n):
        x = int(psi_inv[t & half])
        y = t >> m
        v = 0
        for i, (a, rho) in enumerate(zip(alphas, rhos)):
            bit = field.trace(field.mul(x, field.mul(a, y))) ^ int(rho.table[y])
            v |= bit << i
        table[t] = v
    fprime = VectFn(kdim, table)
    a_rows, b, _, _ = quad_equiv_to_mu(BoolFn(s2_table(n, (1 << n) - 1)))
    g_table = np.zeros(1 << n, dtype=np.int64)
    for x in range(1 << n):
        g_table[x] = table[apply_rows(x, a_rows) ^ b]
    out = VectFn(kdim, g_table)
    if not out.is_vectorial_bent_negabent():
        raise VerificationFailed("constructed function failed the bent-negabent check")
    return out


def find_linearized_complete_mapping(field: Field) -> list[int]:
    """Smallest linearized polynomial pi with pi and pi + id both permutations.

    Searches monomials c y^{2^i} first, then binomials, in encoding order.
    """
    size = field.order

    def complete(table):
        return len(set(table)) == size and len({t ^ y for y, t in enumerate(table)}) == size

    for i in range(field.m):
        for c in range(1, size):
            table = [field.mul(c, field.pow(y, 1 << i)) for y in range(size)]
            if complete(table):
                return table
    for i in range(field.m):
        for j in range(i + 1, field.m):
            for c1 in range(1, size):
                for c2 in range(1, size):
                    table = [
                        field.mul(c1, field.pow(y, 1 << i)) ^ field.mul(c2, field.pow(y, 1 << j))
                        for y in range(size)
                    ]
                    if complete(table):
                        return table
    raise VerificationFailed("no linearized complete mapping found")


def bent_bent4_sample(field2m: Field, g=None) -> VectFn:
    """F(x + gamma y) = x pi(y) + g(y): vectorial bent and bent4, m odd.

    gamma is the designated order-3 element (a root of w^2 + w + 1) of the
    big field, pi a linearized complete mapping of the subfield, and g an
    arbitrary map from the subfield to itself (default 0).
    """
    if field2m.m % 2:
        raise ValueError("the sample lives on GF(2^{2m})")
    m = field2m.m // 2
    if m % 2 == 0:
        raise ValueError("the construction needs odd m")
    embed = field2m.subfield(m)
    gamma = field2m.element_of_order(3)
    pair = PairSplit(field2m, embed, gamma)
    sub = embed.sub
    if g is None:
        g = np.zeros(1 << m, dtype=np.int64)
    g = np.asarray(g, dtype=np.int64)
    pi = find_linearized_complete_mapping(sub)
    table = np.zeros(field2m.order, dtype=np.int64)
    for z in range(field2m.order):
        x, y = pair.split(z)
        table[z] = sub.mul(x, pi[y]) ^ int(g[y])
    return VectFn(m, table, field2m, embed)
