# %% [markdown]
# # Where Slater's U expansion goes wrong
#
# Slater's A_s, B_s agree with the two-Bessel a_n, b_n only at indices 0 and 1.
# The difference at index 2 is exactly the gamma-ratio coefficient d_2, and the
# whole Slater table is the product of the d series with the a/b series.

# %%
from kummer_asym import compare_tables, gen_gamma_ratio_d, gen_slater_AB, gen_two_bessel
from kummer_asym import series_product_identity

report = compare_tables(gen_slater_AB(4), gen_two_bessel(4))
for row in report.rows:
    print(f"{row.part}[{row.index}]  {row.verdict.value:8s}  {row.difference}")

# %%
print("d_2 =", gen_gamma_ratio_d(3)[2])
print("A_2 - a_2 == d_2:", report.row(2, "A").difference == gen_gamma_ratio_d(3)[2])

# %%
identity = series_product_identity(6)
print("A_s = sum d_j a_(s-j) and B_s = sum d_j b_(s-j) for s < 6:", identity.all_match)
