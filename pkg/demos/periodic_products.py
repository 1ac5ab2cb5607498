# %% [markdown]
# # Products in the periodic extended algebra
#
# Everything here is exact: coefficients live in Q(v) with v = sqrt(q), and
# every number printed comes from counting over F_q.  We use the one-vertex
# quiver A1 over F_2, whose only indecomposable is the field F itself.

# %%
from perhall import PeriodicExtendedAlgebra, OddPeriodicAlgebra, category

cat = category("A1", 2)
F = cat.classes((1,))[0]
print("classes up to dim 2:", cat.classes_upto((2,)))
print("aut orders:", [cat.aut_order(c) for c in cat.classes_upto((2,))])

# %% [markdown]
# ## Period one
#
# With m = 1 the square of u_F has two terms: the split extension F + F, and
# a K-element coming from the self-map of F that is cancelled.

# %%
p1 = PeriodicExtendedAlgebra(cat, 1)
print(p1.u(F, 0) * p1.u(F, 0))

# %% [markdown]
# ## Period three
#
# F in degree 0 times F in degree 2.  Degrees 2 and 0 are adjacent modulo 3,
# so besides the direct sum there is a correction term K_{(1),2}.

# %%
p3 = PeriodicExtendedAlgebra(cat, 3)
x = p3.u(F, 0) * p3.u(F, 2)
print(x)
print("reverse order:", p3.u(F, 2) * p3.u(F, 0))

# %% [markdown]
# Associativity holds on the nose.  A quick spot check on a triple of
# stalks, then the straightening of the basis element u_{F[0]+F[2]} into
# ordered products.

# %%
a, b, c = p3.u(F, 0), p3.u(F, 2), p3.u(F, 1)
assert (a * b) * c == a * (b * c)

basis_elt = p3.monomial((F, cat.zero, F))
coords = p3.straighten(basis_elt)
for b_, coeff in coords.items():
    print(p3.basis_str(b_), coeff)
assert p3.unstraighten(coords) == basis_elt

# %% [markdown]
# ## The odd-periodic algebra
#
# No K-elements, and a twist depending on alternating sums of dimension
# vectors.  The square of u_{F[0]} is (v/2) u_{F^2[0]}.

# %%
o3 = OddPeriodicAlgebra(cat, 3)
print(o3.u(F, 0) * o3.u(F, 0))
print(o3.u(F, 0) * o3.u(F, 1))
