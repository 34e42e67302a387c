# %% [markdown]
# # The reference values
#
# U is computed two independent ways: the connection formula over two Kummer
# series, and tanh-sinh quadrature of its integral representation.  They must
# agree to nearly full precision before they can be trusted as ground truth.

# %%
import mpmath

from kummer_asym import bessel_k, u_ref, u_ref_quad
from kummer_asym.reference import bessel_k_quad

mpmath.mp.dps = 130
for a, b, x in [(10, 0.3, 2.25), (1000.5, -1.5, 0.5), (10000, 0.3, 1.5)]:
    series = u_ref(a, b, x, 100)
    quad = u_ref_quad(a, b, x, 100)
    print(f"U({a}, {b}, {x}) = {mpmath.nstr(series, 25)}   agreement {mpmath.nstr(abs(series / quad - 1), 3)}")

# %% [markdown]
# Integer-order K comes from a symmetric perturbation of the order; compare
# with the integral representation.

# %%
print("K_0(1) series vs quadrature:", mpmath.nstr(abs(bessel_k(0, 1, 100).value / bessel_k_quad(0, 1, 100) - 1), 3))
