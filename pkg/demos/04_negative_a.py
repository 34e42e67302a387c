# %% [markdown]
# # Negative a and Laguerre polynomials
#
# With a = -n the Kummer function becomes a Laguerre polynomial,
# L_n^(alpha)(x) = C(n+alpha, n) 1F1(-n; alpha+1; x).  The negative-a
# expansion at x = -z^2 should approach it as n grows.

# %%
from kummer_asym.harness import laguerre_check

for row in laguerre_check([10, 30, 60, 120, 200], alpha=0.5, z=1.5, N=3, dps=100):
    print(f"n={row.n:4d}  u={float(row.u):8.4f}  digits correct {row.digits_correct:5.2f}")

# %% [markdown]
# U at negative a, from two negative-a 1F1 expansions combined by the
# connection formula.  The two terms partly cancel; the loss is reported.

# %%
from kummer_asym import ExpansionFamily as Fam, ExpansionSpec, eval_report
from kummer_asym.expansions import u_negative_a_cancellation

for u in (20, 40, 80):
    spec = ExpansionSpec(Fam.U_NegativeA, 3, u, 0.3, 1.5, dps=100)
    r = eval_report(spec)
    print(f"u={u}: rel error {float(r.rel_error):.2e}, digits lost to cancellation {u_negative_a_cancellation(spec):.1f}")
