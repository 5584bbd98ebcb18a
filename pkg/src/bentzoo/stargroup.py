"""Twisted groups on GF(2^n) x Z_{2^k} and GF(2^n) x GF(2^k).

zk variant:  (x1,y1) * (x2,y2) = (x1+x2, y1+y2+2^{k-1} Tr(x1 x2))  on
             GF(2^n) x Z_{2^k}; for k >= 2 this group is Z_2^n x Z_{2^k},
             for k = 1 it is Z_2^{n-1} x Z_4.
f4 variant:  (x1,y1) * (x2,y2) = (x1+x2, y1+y2+Tr^n_k(x1 x2))  on
             GF(2^n) x GF(2^k), isomorphic to Z_2^{n-k} x Z_4^k.

Characters of the zk variant are
    chi_{u,c}(x,y) = (-1)^{Tr(ux)+sigma(c0,x)} zeta_{2^k}^{cy} i^{Tr(c0 x)},
with c0 = c mod 2; evaluating a character over the graph of a generalized
Boolean function recovers its twisted spectrum, which is how the relative-
difference-set view connects to the spectral one.

The module also holds bent partitions: the indicator of any union of half
of the parts must be bent.  Spreads are the canonical source.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import cyclo
from .boolfn import BoolFn
from .cyclo import CycInt
from .errors import NotAPartition, VariantMismatch, WrongPartCount
from .genfn import GenFn
from .gf2m import Field, PairSplit, SubfieldEmbedding


@dataclass(frozen=True)
class Character:
    u: int
    c: int


class StarGroup:
    """One of the two twisted groups, with elements encoded as (x, y) tuples."""

    def __init__(self, field: Field, k: int, variant: str = "zk",
                 embed: SubfieldEmbedding | None = None):
        if variant not in ("zk", "f4"):
            raise ValueError(f"unknown variant {variant!r}")
        self.field = field
        self.n = field.m
        self.k = k
        self.variant = variant
        if variant == "f4":
            self.embed = embed if embed is not None else field.subfield(k)
            self._rel = self.embed.rel_trace_sub_vec()
        else:
            self.embed = None
        self.identity = (0, 0)

    @property
    def order(self) -> int:
        return 1 << (self.n + self.k)

    def elements(self):
        for x in range(1 << self.n):
            for y in range(1 << self.k):
                yield (x, y)

    def _twist(self, x1: int, x2: int) -> int:
        if self.variant == "zk":
            return self.field.trace(self.field.mul(x1, x2)) << (self.k - 1)
        return int(self._rel[self.field.mul(x1, x2)])

    def add(self, g, h):
        x1, y1 = g
        x2, y2 = h
        t = self._twist(x1, x2)
        if self.variant == "zk":
            return (x1 ^ x2, (y1 + y2 + t) % (1 << self.k))
        return (x1 ^ x2, y1 ^ y2 ^ t)

    def neg(self, g):
        x, y = g
        t = self._twist(x, x)
        if self.variant == "zk":
            return (x, (-y + t) % (1 << self.k))
        return (x, y ^ t)

    def sub(self, g, h):
        return self.add(g, self.neg(h))

    def element_order(self, g) -> int:
        acc = g
        order = 1
        while acc != self.identity:
            acc = self.add(acc, g)
            order += 1
            if order > self.order:  # pragma: no cover
                raise AssertionError("order computation ran away")
        return order

    def order_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for g in self.elements():
            o = self.element_order(g)
            census[o] = census.get(o, 0) + 1
        return census

    # -- characters (zk variant) ------------------------------------------

    def char_eval(self, chi: Character, g) -> CycInt:
        if self.variant != "zk":
            raise VariantMismatch("explicit characters are provided for the zk variant")
        x, y = g
        level = max(self.k, 2)
        c0 = chi.c & 1
        e = (chi.c * y % (1 << self.k)) << (level - self.k)
        if c0:
            e += self.field.sigma(1, x) << (level - 1)
            e += self.field.trace(x) << (level - 2)
        e += (self.field.trace(self.field.mul(chi.u, x)) & 1) << (level - 1)
        return CycInt.from_root_power(level, e)

    def char_rows(self, chi: Character) -> np.ndarray:
        """Character values over all group elements, as coefficient rows.

        Row index is x * 2^k + y.
        """
        if self.variant != "zk":
            raise VariantMismatch("explicit characters are provided for the zk variant")
        level = max(self.k, 2)
        c0 = chi.c & 1
        ys = np.arange(1 << self.k, dtype=np.int64)
        xs = np.arange(1 << self.n, dtype=np.int64)
        ex = (self.field.trace_table[self.field.mul_vec(chi.u, xs)].astype(np.int64)) << (level - 1)
        if c0:
            ex = ex + (self.field.sigma1_table.astype(np.int64) << (level - 1))
            ex = ex + (self.field.trace_table.astype(np.int64) << (level - 2))
        ey = (chi.c * ys % (1 << self.k)) << (level - self.k)
        exps = (ex[:, None] + ey[None, :]).reshape(-1)
        return cyclo.root_power_rows(exps, level)

    def characters(self):
        for u in range(1 << self.n):
            for c in range(1 << self.k):
                yield Character(u, c)

    def _f4_char_row(self, u: int, c: int) -> np.ndarray:
        """Internal f4-variant characters, used for the RDS cross-check.

        chi_{u,c}(x,y) = (-1)^{Tr^k_1(c^2 y) + Tr(ux) + sigma(c_img, x)}
                         i^{Tr(c_img x)}  for c in the abstract subfield.
        """
        sub = self.embed.sub
        xs = np.arange(1 << self.n, dtype=np.int64)
        if c == 0:
            ex = self.field.trace_table[self.field.mul_vec(u, xs)].astype(np.int64) * 2
            ey = np.zeros(1 << self.k, dtype=np.int64)
        else:
            cimg = self.embed.embed(c)
            ex = 2 * self.field.trace_table[self.field.mul_vec(u, xs)].astype(np.int64)
            ex = ex + 2 * self.field.sigma1_table[self.field.mul_vec(cimg, xs)].astype(np.int64)
            ex = ex + self.field.trace_table[self.field.mul_vec(cimg, xs)].astype(np.int64)
            if sub is not None:
                c2 = sub.mul(c, c)
                ey = 2 * sub.trace_table[sub.mul_vec(c2, np.arange(1 << self.k, dtype=np.int64))].astype(np.int64)
            else:
                ey = 2 * (np.arange(1 << self.k, dtype=np.int64) & c)
        exps = (ex[:, None] + ey[None, :]).reshape(-1)
        return cyclo.root_power_rows(exps, 2)

    # -- relative difference sets ----------------------------------------

    def in_forbidden(self, g) -> bool:
        """Membership in N = {0} x (second component)."""
        return g[0] == 0

    def is_rds_counting(self, R) -> bool:
        """Counting check for an (order/2^k, 2^k, |R|, lambda)-RDS relative to N."""
        R = list(R)
        kappa = len(R)
        nu = 1 << self.k
        mu = self.order // nu
        if kappa * (kappa - 1) % (nu * (mu - 1)):
            return False
        lam = kappa * (kappa - 1) // (nu * (mu - 1))
        counts: dict = {}
        for i, r1 in enumerate(R):
            for j, r2 in enumerate(R):
                if i == j:
                    continue
                d = self.sub(r1, r2)
                counts[d] = counts.get(d, 0) + 1
        for g in self.elements():
            if g == self.identity:
                expected = 0
            elif self.in_forbidden(g):
                expected = 0
            else:
                expected = lam
            if counts.get(g, 0) != expected:
                return False
        return True

    def is_rds_characters(self, R) -> bool:
        """Character-sum criterion: |chi(R)|^2 is kappa^2 / kappa - lam*nu / kappa."""
        R = list(R)
        kappa = len(R)
        nu = 1 << self.k
        mu = self.order // nu
        if kappa * (kappa - 1) % (nu * (mu - 1)):
            return False
        lam = kappa * (kappa - 1) // (nu * (mu - 1))
        idx = np.array([(x << self.k) | y for x, y in R], dtype=np.int64)
        for u in range(1 << self.n):
            for c in range(1 << self.k):
                if self.variant == "zk":
                    rows = self.char_rows(Character(u, c))
                else:
                    rows = self._f4_char_row(u, c)
                total = rows[idx].sum(axis=0)[None, :]
                norm = cyclo.rows_norm2(total)[0]
                if (u, c) == (0, 0):
                    expected = kappa * kappa
                elif c == 0:
                    expected = kappa - lam * nu
                else:
                    expected = kappa
                if int(norm[0]) != expected or (norm.shape[0] > 1 and norm[1:].any()):
                    return False
        return True

    def is_rds(self, R) -> bool:
        """Counting verdict, cross-checked against the character criterion."""
        by_count = self.is_rds_counting(R)
        by_char = self.is_rds_characters(R)
        if by_count != by_char:  # pragma: no cover - the two are equivalent
            raise AssertionError("counting and character RDS criteria disagree")
        return by_count

    def rds_parameters(self, R) -> tuple[int, int, int, int]:
        kappa = len(list(R))
        nu = 1 << self.k
        mu = self.order // nu
        lam = kappa * (kappa - 1) // (nu * (mu - 1))
        return (mu, nu, kappa, lam)


def graph_of(f, group: StarGroup) -> list[tuple[int, int]]:
    """The graph {(x, f(x))} as star-group elements."""
    if group.variant == "zk":
        if not isinstance(f, GenFn):
            raise VariantMismatch("the zk variant takes Z_{2^k}-valued functions")
        if f.field != group.field or f.k != group.k:
            raise VariantMismatch("function domain does not match the group")
        values = f.values
    else:
        from .vectfn import VectFn

        if not isinstance(f, VectFn):
            raise VariantMismatch("the f4 variant takes GF(2^k)-valued functions")
        if f.field != group.field or f.k != group.k:
            raise VariantMismatch("function domain does not match the group")
        values = f.table
    return [(x, int(values[x])) for x in range(1 << group.n)]


# ----------------------------------------------------------------------
# Bent partitions
# ----------------------------------------------------------------------

def _check_partition(n: int, parts, u_part) -> None:
    seen: set[int] = set()
    total = 0
    groups = list(parts) + ([u_part] if u_part is not None else [])
    for p in groups:
        s = set(int(v) for v in p)
        if len(s) != len(list(p)):
            raise NotAPartition("a part contains duplicates")
        if seen & s:
            raise NotAPartition("parts are not disjoint")
        seen |= s
        total += len(s)
    if total != 1 << n or seen != set(range(1 << n)):
        raise NotAPartition("parts do not cover the domain")


def is_bent_partition(n: int, parts, u_part=None, field: Field | None = None) -> bool:
    """Every union of exactly half of the parts must have a bent indicator.

    With `u_part` given (the normal form), each selection is tested both with
    and without u_part added to the support, i.e. with both constants on U.
    """
    parts = [list(p) for p in parts]
    _check_partition(n, parts, u_part)
    depth = len(parts)
    if depth % 2:
        raise NotAPartition("the number of parts must be even")
    for chosen in combinations(range(depth), depth // 2):
        table = np.zeros(1 << n, dtype=np.uint8)
        for i in chosen:
            table[parts[i]] = 1
        if not BoolFn(table, field).is_bent():
            return False
        if u_part is not None:
            with_u = table.copy()
            with_u[list(u_part)] = 1
            if not BoolFn(with_u, field).is_bent():
                return False
    return True


def zk_bent_from_partition(n: int, parts, u_part, k: int, field: Field | None = None) -> GenFn:
    """Label a normal partition: f = j on the j-th part, 0 on U.

    For a verified normal bent partition with 2^k parts the result is
    Z_{2^k}-bent.
    """
    parts = [list(p) for p in parts]
    if len(parts) != 1 << k:
        raise WrongPartCount(f"need exactly 2^{k} parts besides U, got {len(parts)}")
    _check_partition(n, parts, u_part)
    values = np.zeros(1 << n, dtype=np.int64)
    for j, p in enumerate(parts):
        values[p] = j
    return GenFn(k, values, field)


def preimage_partition(f: GenFn) -> list[list[int]]:
    return [np.nonzero(f.values == v)[0].tolist() for v in range(1 << f.k)]


def desarguesian_spread(pair: PairSplit) -> tuple[list[int], list[list[int]]]:
    """The spread {(x, sx)} plus {(0, y)} of GF(2^m) x GF(2^m), in univariate
    encoding.  Returns (U, parts): U is the {(0, y)} line including 0 and the
    parts are the remaining lines with 0 removed.
    """
    sub = pair.embed.sub
    m = pair.m
    u_line = [pair.univ(0, y) for y in range(1 << m)]
    parts = []
    for s in range(1 << m):
        line = [pair.univ(x, sub.mul(s, x) if sub is not None else (s & x)) for x in range(1, 1 << m)]
        parts.append(line)
    return u_line, parts
