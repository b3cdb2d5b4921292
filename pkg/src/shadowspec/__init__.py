"""Exact shadow spectra of uniform families and sizes of maximal antichains in B_n."""

from .errors import BudgetExceeded, DomainError, NotAchievable, ParseError
from .intspec import IntSpectrum
from .kk import cascade, catalan_prefix, kk_min_shadow, lovasz_bound, min_squashed_flat_size
from .mac import (
    MacWitness,
    brute_S,
    construct_mac,
    enumerate_Y,
    interval_Ink,
    lift_antichain,
    missing_size_witness,
    phi,
    separated_antichain,
    theorem1_member,
    w_fn,
)
from .setfam import (
    UniformFamily,
    elements,
    elset,
    enumerate_uniform_families,
    is_maximal_antichain,
    level,
    shade,
    shadow,
    squash_prefix,
    squash_rank,
    squash_unrank,
)
from .spectrum import (
    big_sigma,
    f_cap,
    jstar,
    leck_gap_predicate,
    psi,
    sigma,
    sigma_bruteforce,
    star_family,
    witness_family,
)

__all__ = [
    "BudgetExceeded", "DomainError", "NotAchievable", "ParseError", "IntSpectrum",
    "cascade", "catalan_prefix", "kk_min_shadow", "lovasz_bound", "min_squashed_flat_size",
    "MacWitness", "brute_S", "construct_mac", "enumerate_Y", "interval_Ink", "lift_antichain",
    "missing_size_witness", "phi", "separated_antichain", "theorem1_member", "w_fn",
    "UniformFamily", "elements", "elset", "enumerate_uniform_families", "is_maximal_antichain",
    "level", "shade", "shadow", "squash_prefix", "squash_rank", "squash_unrank",
    "big_sigma", "f_cap", "jstar", "leck_gap_predicate", "psi", "sigma", "sigma_bruteforce",
    "star_family", "witness_family",
]
