"""Exact weight spectra of low-weight cosets of MDS codes.

The closed forms live in :mod:`mdscosets.spectra`; brute-force coset
enumeration for checking them lives in :mod:`mdscosets.oracle`.
"""

from .codes import (
    CodeParams,
    MdsCode,
    build_code,
    codeword_weight_histogram,
    make_params,
    mds_weight,
    sphere_volume,
    verify_mds_property,
)
from .combinat import alt_binom_sum, binom
from .gf import Field, make_field
from .oracle import BudgetExceededError, CosetCensus, WeightClass, census, census_reference, covering_radius
from .spectra import (
    cheung_cumulative,
    delta,
    delta_star,
    full_spectrum,
    helper_terms,
    omega,
    phi,
    sigma_le1,
    sigma_le2,
    sigma_w1,
    sigma_w2,
    sigma_w3,
    variants_for,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CodeParams",
    "CosetCensus",
    "Field",
    "MdsCode",
    "WeightClass",
    "alt_binom_sum",
    "binom",
    "build_code",
    "census",
    "census_reference",
    "cheung_cumulative",
    "codeword_weight_histogram",
    "covering_radius",
    "delta",
    "delta_star",
    "full_spectrum",
    "helper_terms",
    "make_field",
    "make_params",
    "mds_weight",
    "omega",
    "phi",
    "sigma_le1",
    "sigma_le2",
    "sigma_w1",
    "sigma_w2",
    "sigma_w3",
    "sphere_volume",
    "variants_for",
    "verify_mds_property",
]
