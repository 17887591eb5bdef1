# %% [markdown]
# # Frobenius splittings
#
# `F_n` is the product of the first-column variables and the Peterson
# generators.  Its lead term is the product of all chart variables, so
# `Tr(F_n^(p-1)) = 1` and `phi(g) = Tr(F_n^(p-1) g)` is a splitting.

# %%
from hesspatch.frobenius import (F_n_splitting, build_F_n, compat_check, phi_std,
                                 split_poset, trace)
from hesspatch.hessenberg import HessenbergFunction, hess_generators
from hesspatch.poly import GF, PolynomialRing

R = PolynomialRing(["x", "y"], GF(2))
print(trace(R("x*y")), trace(R("x^3*y")), phi_std(R("x^2")))

# %%
F3 = build_F_n(3)
print("F_3 =", F3)
for p in (2, 3, 5):
    print(p, F_n_splitting(4, p).unit_check())

# %% [markdown]
# Compatibility is certified by `F^(p-1) g` lying in the Frobenius power of
# the ideal, for every generator `g`.

# %%
s = F_n_splitting(4, 3)
I = hess_generators(4, None, HessenbergFunction((2, 3, 4, 4))).ideal(GF(3))
rep = compat_check(s, I, samples=20, seed=1)
print(rep.passed, rep.sampled, rep.failures)

# %%
P = split_poset(4, 2)
print(len(P.nodes), "nodes,", len(P.edges), "inclusions, passed:", P.passed)
print("largest ideal at", P.maximum(), "and smallest at", P.minimum())
