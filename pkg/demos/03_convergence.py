# %% [markdown]
# # Measured convergence orders
#
# Each expansion is compared with a high-precision reference on the doubling
# grid u = 20, 40, 80.  A two-Bessel form truncated after N terms should lose
# accuracy like u^(-2N).  Slater's U expansion as printed stalls at u^-4 once
# N = 3, because its prefactor already absorbs the gamma ratio.

# %%
from kummer_asym import ExpansionFamily as Fam
from kummer_asym.harness import convergence_slopes

grid = [20, 40, 80]
families = [Fam.U_TwoBessel, Fam.U_SlaterOriginal, Fam.U_SlaterCorrected, Fam.F_TwoBessel, Fam.F_SlaterForm]
for fit in convergence_slopes(families, [1, 2, 3], grid, b=0.3, z=1.5, dps=100):
    errs = "  ".join(f"{float(e):.2e}" for e in fit.rel_errors)
    print(f"{fit.family:20s} N={fit.truncation}  slope {fit.slope:+.2f}   errors {errs}")

# %% [markdown]
# The simpler series in Phi_k converges slowly: each extra term gains roughly
# a factor (1 + uz)/u^2.

# %%
for K in (1, 2, 4, 8):
    (fit,) = convergence_slopes([Fam.U_BesselSeries], [K], grid, b=0.3, z=1.5, dps=100)
    print(f"K={K}: errors " + "  ".join(f"{float(e):.2e}" for e in fit.rel_errors))
