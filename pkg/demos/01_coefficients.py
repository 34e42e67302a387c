# %% [markdown]
# # Exact coefficient tables
#
# The generating function f(s) = exp(z^2 mu(s) + b lambda(s)) is expanded in
# exact rational arithmetic; everything else follows from its coefficients c_k.

# %%
from kummer_asym import gen_c, gen_gamma_ratio_d, gen_slater_AB, gen_two_bessel

for k, ck in enumerate(gen_c(5)):
    print(f"c_{k} = {ck}")

# %% [markdown]
# Two-Bessel coefficients a_n (even in z) and b_n (odd in z).

# %%
for n, (a, b) in enumerate(gen_two_bessel(3)):
    print(f"a_{n} = {a}")
    print(f"b_{n} = {b}")

# %% [markdown]
# Slater's recursion, with the integration constants K_s chosen so that A_{s+1}(0) = 0.

# %%
slater = gen_slater_AB(3)
for s, (A, Bs) in enumerate(slater):
    print(f"A_{s} = {A}")
    print(f"B_{s} = {Bs}")
print("K_s:", [str(k) for k in slater.constants])

# %% [markdown]
# Gamma-ratio coefficients: odd ones vanish.

# %%
for n, d in enumerate(gen_gamma_ratio_d(7)):
    print(f"d_{n} = {d}")
