"""Construction families for gbent and Z_{2^k}-bent functions, plus the
searches around them.

The central combinatorial gadget is a triple of permutations pi_1, pi_2, pi_3
of GF(2^m) whose pointwise sum pi_4 is again a permutation and satisfies
pi_4^{-1} = pi_1^{-1} + pi_2^{-1} + pi_3^{-1}.  Monomial involutions
alpha y^d with d^2 = 1 mod 2^m - 1 and alpha^{d+1} = 1 provide such triples.
From a triple one assembles four Maiorana-McFarland bent functions
f_i(x,y) = Tr(x pi_i(y)) + h_i(y) and the Z_8-valued function
f_1 + 2(f_1+f_2) + 4(f_1+f_3), which is gbent whenever
sum_i h_i(pi_i^{-1}(y)) = 0.

The inverse permutation yields Z_{2^k}-bent functions for every k <= m, and
the linear-permutation family with 4 or more independent coefficients is the
negative control: it can never be gbent.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations as iter_permutations

import numpy as np

from .boolfn import BoolFn
from .errors import (
    BadAlphas,
    BadExponent,
    ConditionFailed,
    DependentAlphas,
    HConditionFailed,
    SizeMismatch,
    VerificationFailed,
)
from .genfn import GenFn
from .gf2m import Field, PairSplit


class Permutation:
    """A permutation of [0, 2^m) with a precomputed inverse."""

    def __init__(self, table):
        table = np.asarray(table, dtype=np.int64)
        size = table.shape[0]
        if sorted(table.tolist()) != list(range(size)):
            raise ValueError("not a permutation")
        self.table = table
        inv = np.zeros(size, dtype=np.int64)
        inv[table] = np.arange(size, dtype=np.int64)
        self.inv = inv
        table.setflags(write=False)
        inv.setflags(write=False)

    def __len__(self):
        return int(self.table.shape[0])

    def __call__(self, y: int) -> int:
        return int(self.table[y])

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self.table, other.table)

    def is_involution(self) -> bool:
        return bool(np.array_equal(self.table[self.table], np.arange(len(self))))

    def is_complete(self) -> bool:
        """pi + identity is also a permutation."""
        shifted = self.table ^ np.arange(len(self), dtype=np.int64)
        return len(set(shifted.tolist())) == len(self)


def has_sum_inverse_property(p1: Permutation, p2: Permutation, p3: Permutation) -> bool:
    """pi_1 + pi_2 + pi_3 is a permutation whose inverse is the sum of inverses."""
    if not len(p1) == len(p2) == len(p3):
        raise SizeMismatch("permutations act on different domains")
    summed = p1.table ^ p2.table ^ p3.table
    if len(set(summed.tolist())) != len(p1):
        return False
    p4 = Permutation(summed)
    return bool(np.array_equal(p4.inv, p1.inv ^ p2.inv ^ p3.inv))


@dataclass(frozen=True)
class PermTriple:
    """A verified triple with the sum-inverse property."""

    p1: Permutation
    p2: Permutation
    p3: Permutation
    p4: Permutation = dc_field(init=False)

    def __post_init__(self):
        if not has_sum_inverse_property(self.p1, self.p2, self.p3):
            raise BadAlphas("triple lacks the sum-inverse property", clause="sum-inverse property")
        object.__setattr__(self, "p4", Permutation(self.p1.table ^ self.p2.table ^ self.p3.table))

    @property
    def perms(self) -> tuple[Permutation, Permutation, Permutation, Permutation]:
        return (self.p1, self.p2, self.p3, self.p4)


def monomial_involution_triple(field: Field, d: int, alphas) -> PermTriple:
    """pi_i(y) = alpha_i y^d with d^2 = 1 mod 2^m - 1 and alpha_i^{d+1} = 1.

    Each pi_i (and their sum) is an involution; the triple carries the
    sum-inverse property.
    """
    n1 = field.order - 1
    if d % n1 in (0,) or (d * d) % n1 != 1 % n1:
        raise BadExponent(f"d^2 = {d * d} is not 1 mod {n1}", clause="d^2 = 1 mod 2^m - 1")
    alphas = list(alphas)
    if len(alphas) != 3 or len(set(alphas)) != 3:
        raise BadAlphas("need three pairwise distinct alphas", clause="pairwise distinct alphas")
    a4 = alphas[0] ^ alphas[1] ^ alphas[2]
    if a4 == 0:
        raise BadAlphas("alpha_4 = alpha_1 + alpha_2 + alpha_3 must be nonzero",
                        clause="alpha_4 nonzero")
    for a in alphas + [a4]:
        if a == 0 or field.pow(a, d + 1) != 1:
            raise BadAlphas(f"alpha = {a} fails alpha^(d+1) = 1", clause="alpha^(d+1) = 1")
    perms = []
    for a in alphas:
        table = [field.mul(a, field.pow(y, d)) if y else 0 for y in range(field.order)]
        p = Permutation(table)
        if not p.is_involution():
            raise VerificationFailed("monomial map is not an involution")
        perms.append(p)
    triple = PermTriple(*perms)
    if not triple.p4.is_involution():
        raise VerificationFailed("sum of the monomial maps is not an involution")
    return triple


def mm_boolfns(field: Field, triple: PermTriple, hs) -> list[np.ndarray]:
    """Tables of f_i(x, y) = Tr(x pi_i(y)) + h_i(y), indexed (y << m) | x."""
    m = field.m
    out = []
    for p, h in zip(triple.perms, hs):
        tab = np.zeros(1 << (2 * m), dtype=np.uint8)
        for y in range(1 << m):
            py = p(y)
            hy = int(h.table[y])
            for x in range(1 << m):
                tab[(y << m) | x] = field.trace(field.mul(x, py)) ^ hy
        out.append(tab)
    return out


def gbent_from_triple(field: Field, triple: PermTriple, hs=None,
                      pair: PairSplit | None = None) -> GenFn:
    """The Z_8-valued function f_1 + 2(f_1+f_2) + 4(f_1+f_3) on GF(2^{2m}).

    Requires sum_i h_i(pi_i^{-1}(y)) = 0 for all y; the gbentness of the
    result is verified before returning.
    """
    m = field.m
    if m < 3:
        raise BadAlphas("the triple construction needs m >= 3", clause="m >= 3")
    if hs is None:
        hs = [BoolFn.zero(m) for _ in range(4)]
    if len(hs) != 4:
        raise ValueError("need four h functions")
    for y in range(1 << m):
        acc = 0
        for p, h in zip(triple.perms, hs):
            acc ^= int(h.table[int(p.inv[y])])
        if acc:
            raise HConditionFailed(
                "sum of h_i(pi_i^{-1}(y)) does not vanish", clause="h compatibility sum"
            )
    f = mm_boolfns(field, triple, hs)
    if pair is None:
        pair = PairSplit(Field(2 * m), None)
    values = np.zeros(1 << (2 * m), dtype=np.int64)
    for y in range(1 << m):
        for x in range(1 << m):
            i = (y << m) | x
            b0 = int(f[0][i])
            b1 = b0 ^ int(f[1][i])
            b2 = b0 ^ int(f[2][i])
            values[pair.univ(x, y)] = b0 | (b1 << 1) | (b2 << 2)
    out = GenFn(3, values, pair.parent)
    if not out.is_gbent():
        raise VerificationFailed("triple construction did not produce a gbent function")
    return out


def trace_monomial_h(field: Field, beta: int, e: int) -> BoolFn:
    """h(y) = Tr(beta y^e), with 0^e = 0."""
    return BoolFn.from_function(
        field.m, lambda y: field.trace(field.mul(beta, field.pow(y, e)))
    )


def nontrivial_hs(field: Field, alphas, e: int | None = None) -> list[BoolFn]:
    """h_i(y) = Tr(alpha_i y^e) with e = 2^m - 2 by default (incl. alpha_4)."""
    if e is None:
        e = field.order - 2
    a4 = alphas[0] ^ alphas[1] ^ alphas[2]
    return [trace_monomial_h(field, a, e) for a in list(alphas) + [a4]]


def inverse_zk_bent(field: Field, alphas, pair: PairSplit | None = None) -> GenFn:
    """F(x,y) = sum_i 2^i Tr(x alpha_i y^{-1}) is Z_{2^k}-bent (alphas independent).

    y^{-1} uses the 0 -> 0 convention.  The output is spectrum-verified.
    """
    m = field.m
    alphas = list(alphas)
    k = len(alphas)
    if len(_span(alphas)) != 1 << k:
        raise DependentAlphas("alphas are linearly dependent", clause="independent alphas")
    if pair is None:
        pair = PairSplit(Field(2 * m), None)
    values = np.zeros(1 << (2 * m), dtype=np.int64)
    d = field.order - 2  # y^(2^m - 2) = y^(-1), with 0 -> 0
    for y in range(1 << m):
        yinv = field.pow(y, d) if y else 0
        for x in range(1 << m):
            v = 0
            for i, a in enumerate(alphas):
                v |= field.trace(field.mul(x, field.mul(a, yinv))) << i
            values[pair.univ(x, y)] = v
    out = GenFn(k, values, pair.parent)
    if not out.is_zk_bent():
        raise VerificationFailed("inverse construction failed the Z_{2^k}-bent check")
    return out


def _span(elements):
    out = {0}
    for v in elements:
        out |= {w ^ v for w in out}
    return out


def linear_mm_genfn(field: Field, alphas, hs=None, pair: PairSplit | None = None) -> GenFn:
    """sum_i 2^i (Tr(x alpha_i y) + h_i(y)) with linear permutations, unverified.

    This is the raw assembly behind the negative control; it places no
    independence requirement on the alphas.
    """
    m = field.m
    alphas = list(alphas)
    k = len(alphas)
    if hs is None:
        hs = [BoolFn.zero(m) for _ in alphas]
    if pair is None:
        pair = PairSplit(Field(2 * m), None)
    values = np.zeros(1 << (2 * m), dtype=np.int64)
    for y in range(1 << m):
        for x in range(1 << m):
            v = 0
            for i, (a, h) in enumerate(zip(alphas, hs)):
                v |= (field.trace(field.mul(x, field.mul(a, y))) ^ int(h.table[y])) << i
            values[pair.univ(x, y)] = v
    return GenFn(k, values, pair.parent)


def linear_family_not_gbent(field: Field, alphas, hs=None, pair: PairSplit | None = None) -> bool:
    """Falsification harness: assemble the linear-permutation family and
    return its gbent verdict (expected False for k+1 >= 4 independent alphas,
    k+1 >= 5 when m is even).  Raises if the alphas are dependent.
    """
    alphas = list(alphas)
    if len(_span(alphas)) != 1 << len(alphas):
        raise DependentAlphas("alphas are linearly dependent", clause="independent alphas")
    return linear_mm_genfn(field, alphas, hs, pair).is_gbent()


def mm_exponent_zk_bent(field: Field, e: int, c1: int, c2: int, c3: int,
                        pair: PairSplit | None = None) -> GenFn:
    """The Z_8-bent function built from x^e and a compatible (c1, c2, c3).

    Needs gcd(2^m - 1, e) = 1, nonzero pairwise distinct c_i with
    c1 + c2 + c3 != 0 and c1^{-e} + c2^{-e} + c3^{-e} = (c1+c2+c3)^{-e}.
    Output is spectrum-verified.
    """
    import math

    m = field.m
    n1 = field.order - 1
    if math.gcd(n1, e % n1 if e % n1 else n1) != 1:
        raise BadExponent(f"gcd(2^m - 1, {e}) != 1", clause="gcd(2^m - 1, e) = 1")
    if 0 in (c1, c2, c3):
        raise ConditionFailed("c_i must be nonzero", clause="nonzero c_i")
    if len({c1, c2, c3}) != 3:
        raise ConditionFailed("c_i must be pairwise distinct", clause="distinct c_i")
    csum = c1 ^ c2 ^ c3
    if csum == 0:
        raise ConditionFailed("c1 + c2 + c3 must be nonzero", clause="c-sum nonzero")
    lhs = field.pow(c1, -e) ^ field.pow(c2, -e) ^ field.pow(c3, -e)
    if lhs != field.pow(csum, -e):
        raise ConditionFailed(
            "c1^-e + c2^-e + c3^-e != (c1+c2+c3)^-e", clause="c-sum condition"
        )
    if pair is None:
        pair = PairSplit(Field(2 * m), None)
    b0c = field.pow(c1, -e) ^ field.pow(c2, -e)
    b1c = field.pow(c1, -e) ^ field.pow(c3, -e)
    b2c = field.pow(c1, -e)
    values = np.zeros(1 << (2 * m), dtype=np.int64)
    for x in range(1 << m):
        xe = field.pow(x, e) if x else 0
        for y in range(1 << m):
            v = field.trace(field.mul(field.mul(b0c, xe), y))
            v |= field.trace(field.mul(field.mul(b1c, xe), y)) << 1
            v |= field.trace(field.mul(field.mul(b2c, xe), y)) << 2
            values[pair.univ(x, y)] = v
    out = GenFn(3, values, pair.parent)
    if not out.is_zk_bent():
        raise VerificationFailed("exponent construction failed the Z_8-bent check")
    return out


def mm_exponent_search(field: Field, e: int) -> list[tuple[int, int, int]]:
    """All c1 < c2 < c3 triples satisfying the compatibility condition."""
    import math

    n1 = field.order - 1
    if math.gcd(n1, e % n1 if e % n1 else n1) != 1:
        raise BadExponent(f"gcd(2^m - 1, {e}) != 1", clause="gcd(2^m - 1, e) = 1")
    inv_e = {c: field.pow(c, -e) for c in range(1, field.order)}
    hits = []
    for c1, c2, c3 in combinations(range(1, field.order), 3):
        csum = c1 ^ c2 ^ c3
        if csum == 0:
            continue
        if inv_e[c1] ^ inv_e[c2] ^ inv_e[c3] == inv_e[csum]:
            hits.append((c1, c2, c3))
    return hits


# ----------------------------------------------------------------------
# Searches
# ----------------------------------------------------------------------

@dataclass
class SearchResult:
    hits: list
    examined: int
    budget_exhausted: bool


def _linear_maps(field: Field):
    """All invertible F_2-linear maps on GF(2^m) as value tables, in
    lexicographic order of the basis images."""
    m = field.m
    size = 1 << m

    def build(images):
        table = np.zeros(size, dtype=np.int64)
        for x in range(size):
            v = 0
            for j in range(m):
                if x >> j & 1:
                    v ^= images[j]
            table[x] = v
        return table

    def rec(images, span):
        if len(images) == m:
            yield build(images)
            return
        for z in range(1, size):
            if z not in span:
                new_span = span | {w ^ z for w in span}
                yield from rec(images + [z], new_span)

    yield from rec([], {0})


def search_sum_inverse_complete(field: Field, klass: str = "monomial",
                                budget: int = 10 ** 6) -> SearchResult:
    """Search for triples of *complete* permutations with the sum-inverse
    property.  `klass` picks the candidate family:

      monomial   - alpha y^d over exponents with d^2 = 1 mod 2^m - 1;
      linearized - invertible F_2-linear maps;
      all        - every permutation of the domain (lexicographic order).

    `budget` caps the number of candidate triples examined; exceeding it
    returns the partial hit list with budget_exhausted set.
    """
    if klass not in ("monomial", "linearized", "all"):
        raise ValueError(f"unknown search class {klass!r}")
    if klass == "all" and field.m > 5:
        raise ValueError("the all-permutations class is limited to m <= 5")
    size = field.order
    examined = 0
    hits = []

    if klass == "monomial":
        n1 = size - 1
        candidates = []
        for d in range(1, n1):
            if (d * d) % n1 != 1:
                continue
            for a in range(1, size):
                if field.pow(a, d + 1) != 1:
                    continue
                table = [field.mul(a, field.pow(y, d)) if y else 0 for y in range(size)]
                if len(set(table)) == size:
                    candidates.append((d, a, Permutation(table)))
        complete = [(d, a, p) for d, a, p in candidates if p.is_complete()]
        pool = sorted(complete, key=lambda t: (t[0], t[1]))
        for (i1, i2, i3) in combinations(range(len(pool)), 3):
            d1, a1, p1 = pool[i1]
            d2, a2, p2 = pool[i2]
            d3, a3, p3 = pool[i3]
            if not (d1 == d2 == d3):
                continue
            if examined >= budget:
                return SearchResult(hits, examined, True)
            examined += 1
            summed = p1.table ^ p2.table ^ p3.table
            if len(set(summed.tolist())) != size:
                continue
            if not Permutation(summed).is_complete():
                continue
            if has_sum_inverse_property(p1, p2, p3):
                hits.append({"class": "monomial", "d": d1, "alphas": [a1, a2, a3]})
        return SearchResult(hits, examined, False)

    if klass == "linearized":
        if field.m > 4:
            raise ValueError("the linearized class is limited to m <= 4")
        pool = [Permutation(t) for t in _linear_maps(field)]
        pool = [p for p in pool if p.is_complete()]
    else:
        pool = []
        for perm in iter_permutations(range(size)):
            if examined >= budget:
                return SearchResult(hits, examined, True)
            examined += 1
            shifted = {v ^ y for y, v in enumerate(perm)}
            if len(shifted) == size:
                pool.append(Permutation(list(perm)))
    for (i1, i2, i3) in combinations(range(len(pool)), 3):
        if examined >= budget:
            return SearchResult(hits, examined, True)
        examined += 1
        p1, p2, p3 = pool[i1], pool[i2], pool[i3]
        summed = p1.table ^ p2.table ^ p3.table
        if len(set(summed.tolist())) != size:
            continue
        if not Permutation(summed).is_complete():
            continue
        if has_sum_inverse_property(p1, p2, p3):
            hits.append({
                "class": klass,
                "tables": [p1.table.tolist(), p2.table.tolist(), p3.table.tolist()],
            })
    return SearchResult(hits, examined, False)


def search_nontrivial_nega_gbent(field: Field, k: int, budget: int,
                                 seed: int = 0) -> SearchResult:
    """Random search for nega-gbent functions that are neither 2^{k-1} times a
    negabent Boolean function nor the shift image of such a lift.

    Purely exploratory: hits are data, not claims.
    """
    rng = np.random.default_rng(seed)
    hits = []
    examined = 0
    top = 1 << (k - 1)
    for _ in range(budget):
        examined += 1
        values = rng.integers(0, 1 << k, size=field.order, dtype=np.int64)
        f = GenFn(k, values, field)
        if not f.is_nega_gbent():
            continue
        trivially_lifted = bool(np.all((f.values % top) == 0))
        plain = f.shift_to_plain()
        shift_of_lift = bool(np.all((plain.values % top) == 0))
        hits.append({
            "values": f.values.tolist(),
            "lifted_negabent": trivially_lifted,
            "shift_of_lifted_bent": shift_of_lift,
            "nontrivial": not (trivially_lifted or shift_of_lift),
        })
    return SearchResult(hits, examined, False)
