# %% [markdown]
# # Gröbner bases and triangular complete intersections
#
# Under the lex order `<_n` the generators already form a Gröbner basis.
# Their leads are distinct variables, and no lead variable reappears in a
# later generator.

# %%
from hesspatch.groebner import (buchberger, hilbert_function, initial_ideal, monic,
                                monomial_dimension, radical_certificate)
from hesspatch.gvd import detect_tci, tci_conclusions
from hesspatch.hessenberg import HessenbergFunction, hess_generators

I = hess_generators(5, None, HessenbergFunction((2, 3, 4, 5, 5))).ideal()
G = buchberger(list(I.gens))
print(G == [monic(g) for g in I.gens])

# %%
M = initial_ideal(I)
print("initial ideal:", M.strings())
print("dimension:", monomial_dimension(M))
print("radical:", radical_certificate(I))

# %% [markdown]
# The TCI witness gives the same answers without running Buchberger.

# %%
w = detect_tci(I.gens)
c = tci_conclusions(w)
print("lead variables:", w.lead_names())
print(c.initial_ideal == M, c.dimension)

# %% [markdown]
# The Hilbert function of the quotient by the initial ideal, in the chart
# grading, counts partitions into parts of size at most 4.

# %%
print(hilbert_function(M, I.ring.grading, 8))
