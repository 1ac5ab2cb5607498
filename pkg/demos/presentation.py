# %% [markdown]
# # Generators and relations for the periodic algebra
#
# For m > 2 the periodic extended algebra is generated by e_{A,i} = u_{A[i]}/a_A
# and the K-elements K_{alpha,i}.  Here we evaluate the defining relations
# through that map and confirm each one exactly.

# %%
from collections import Counter

from perhall import PeriodicExtendedAlgebra, category
from perhall import xcb

cat = category("A2", 2)
checks = xcb.check_bridgeland_relations(cat, 5, (1, 1))
print(len(checks), "instances")
print(Counter(c.relation for c in checks))
assert all(c.equal for c in checks)

# %% [markdown]
# ## The gamma coefficients
#
# They govern how e_{A,i+1} e_{B,i} rewrites in the opposite order.

# %%
a1 = category("A1", 2)
F = a1.classes((1,))[0]
print("gamma^{F,F}_{F,F} =", xcb.gamma(a1, F, F, F, F))
print("gamma^{0,0}_{F,F} =", xcb.gamma(a1, F, F, a1.zero, a1.zero))

# %% [markdown]
# ## A variant that fails
#
# Using the symmetric Euler form instead of the Euler form in the exponents
# of the e-e relations breaks them.  The checker finds the first witness.

# %%
bad = [c for c in xcb.check_bridgeland_relations(a1, 3, (1,), symmetric_exponents=True) if not c.equal]
print(len(bad), "failing instances, e.g.")
print(bad[0].relation, bad[0].instance)
print("  lhs:", bad[0].lhs)
print("  rhs:", bad[0].rhs)

# %% [markdown]
# ## Words in the generators
#
# phi sends a word to its product in the periodic algebra.

# %%
p = PeriodicExtendedAlgebra(a1, 3)
w = [xcb.e(F, 0), xcb.e(F, 2)]
print(xcb.word_str(w), "->", xcb.phi_image(p, w))
