# %% [markdown]
# # Geometric vertex decompositions
#
# Each chain step uses `y = x[1,m+2]` with `C = <1>`.  The link ideal `N`
# is the next chain ideal.  The certificate records every check it ran.

# %%
from hesspatch.groebner import Ideal
from hesspatch.gvd import certify_w0_chain, gvd_decompose
from hesspatch.hessenberg import HessenbergFunction, chain_ideal, hessenberg_functions
from hesspatch.poly import PolynomialRing, QQ

cert = certify_w0_chain(5, HessenbergFunction((2, 3, 4, 5, 5)))
for s in cert.steps:
    print(s.n, s.m, s.y, s.kind, all(s.checks.values()))
print([str(h) for (_, h), _ in cert.relabel_checks], cert.base_case)

# %% [markdown]
# A single decomposition can also be computed directly from a Gröbner basis.

# %%
h = HessenbergFunction((2, 3, 4, 5, 5))
step = gvd_decompose(chain_ideal(5, h, 2), (1, 4))
print(step.kind, step.checks)

R = PolynomialRing(["x", "y", "z"], QQ)
toy = gvd_decompose(Ideal(R, [R("x*y + z")]), "x")
print(toy.kind, [str(g) for g in toy.C], toy.N)

# %% [markdown]
# Every indecomposable `h` for `n <= 5` gets an accepted certificate.

# %%
for n in (3, 4, 5):
    print(n, all(certify_w0_chain(n, h).accepted for h in hessenberg_functions(n)))
