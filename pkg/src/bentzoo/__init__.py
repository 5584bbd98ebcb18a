"""bentzoo: exact analysis, verification and construction of bent-like
Boolean and generalized Boolean functions.

All spectra are exact elements of cyclotomic integer rings Z[zeta_{2^K}];
no floating point is used anywhere in a verdict.
"""

from .boolfn import BoolFn, WalshSpectrum, mu_boolfn, quad_equiv_to_mu, s2_form, s2_table
from .cyclo import CycInt
from .errors import BentzooError
from .genfn import GenFn, GenSpectrum
from .gf2m import Field, PairSplit, SubfieldEmbedding, default_polynomials
from .stargroup import (
    Character,
    StarGroup,
    desarguesian_spread,
    graph_of,
    is_bent_partition,
    preimage_partition,
    zk_bent_from_partition,
)
from .vectfn import VectFn, bent_bent4_sample, mm_bent_negabent
from .constructions import (
    PermTriple,
    Permutation,
    SearchResult,
    gbent_from_triple,
    has_sum_inverse_property,
    inverse_zk_bent,
    linear_family_not_gbent,
    mm_exponent_search,
    mm_exponent_zk_bent,
    monomial_involution_triple,
    nontrivial_hs,
    search_sum_inverse_complete,
)

__version__ = "0.1.0"

__all__ = [
    "BentzooError",
    "BoolFn",
    "Character",
    "CycInt",
    "Field",
    "GenFn",
    "GenSpectrum",
    "PairSplit",
    "PermTriple",
    "Permutation",
    "SearchResult",
    "StarGroup",
    "SubfieldEmbedding",
    "VectFn",
    "WalshSpectrum",
    "bent_bent4_sample",
    "default_polynomials",
    "desarguesian_spread",
    "gbent_from_triple",
    "graph_of",
    "has_sum_inverse_property",
    "inverse_zk_bent",
    "is_bent_partition",
    "linear_family_not_gbent",
    "mm_bent_negabent",
    "mm_exponent_search",
    "mm_exponent_zk_bent",
    "monomial_involution_triple",
    "mu_boolfn",
    "nontrivial_hs",
    "preimage_partition",
    "quad_equiv_to_mu",
    "s2_form",
    "s2_table",
    "search_sum_inverse_complete",
    "zk_bent_from_partition",
]
