# %% [markdown]
# # Charts and patch ideals
#
# The w0-chart of the flag variety is parametrized by the matrix `w0 M`.
# Conjugating the regular nilpotent `N` by it gives the polynomials
# `f_{k,l}` that cut out the Hessenberg variety on the chart.

# %%
from hesspatch.hessenberg import (HessenbergFunction, build_chart, chain_ideal, chart_grading,
                                  hess_generators, invert_chart, mu, recursion_f, relabel_down,
                                  f_entry)
from hesspatch.poly import weighted_degree

C = build_chart(4)
for row in C.entries:
    print([str(e) for e in row])

# %% [markdown]
# Entries of the inverse are polynomials too.  Row `n+1-i`, column `n+1-j`
# of the inverse holds `y_{i,j}`.

# %%
inv = invert_chart(C)
print("y[1,3] =", inv[3][1])
print("y[1,2] =", inv[3][2])

# %% [markdown]
# The patch ideal for `n = 5` and `h = (2,3,4,5,5)` has six generators,
# listed bottom to top and left to right.

# %%
h = HessenbergFunction((2, 3, 4, 5, 5))
P = hess_generators(5, None, h)
for (k, l), g in P.generators.items():
    print(f"f[{k},{l}] = {g}    (degree {weighted_degree(g)})")

# %% [markdown]
# The chart grading gives `x[i,j]` weight `n+1-i-j`, so every generator is
# homogeneous.  The recursion along the first row reproduces the entries.

# %%
print(chart_grading(5).weights)
assert recursion_f(5, 5, 1) == f_entry(5, 5, 1)

# %% [markdown]
# Chain ideals drop the bottom-row generators one at a time.  After `mu(h)`
# steps the rest lives in the smaller chart.

# %%
print("mu =", mu(h))
for m in range(mu(h) + 1):
    print(m, len(chain_ideal(5, h, m).gens), "generators")
print(relabel_down(f_entry(5, 4, 2), 5))
