"""Large-a asymptotic expansions of the Kummer functions 1F1(a;b;z) and U(a,b,z).

The expansions are uniform in bounded z and are written with modified Bessel
functions; all their coefficients are generated in exact rational arithmetic.
"""
from .bessel import BesselResult, bessel_i, bessel_k, phi_k, psi_k
from .coefficients import (
    CoefficientTable,
    DiscrepancyReport,
    Family,
    compare_tables,
    gen_alpha_beta,
    gen_c,
    gen_gamma_ratio_d,
    gen_slater_AB,
    gen_two_bessel,
    series_product_identity,
)
from .exact import BivarPoly, FormalSeries, bernoulli
from .expansions import EvalReport, ExpansionFamily, ExpansionSpec, eval_report, evaluate
from .reference import f1f1_ref, laguerre_ref, u_ref, u_ref_quad

__version__ = "0.1.0"

__all__ = [
    "BesselResult",
    "BivarPoly",
    "CoefficientTable",
    "DiscrepancyReport",
    "EvalReport",
    "ExpansionFamily",
    "ExpansionSpec",
    "Family",
    "FormalSeries",
    "bernoulli",
    "bessel_i",
    "bessel_k",
    "compare_tables",
    "eval_report",
    "evaluate",
    "f1f1_ref",
    "gen_alpha_beta",
    "gen_c",
    "gen_gamma_ratio_d",
    "gen_slater_AB",
    "gen_two_bessel",
    "laguerre_ref",
    "phi_k",
    "psi_k",
    "series_product_identity",
    "u_ref",
    "u_ref_quad",
]
