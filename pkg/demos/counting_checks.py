# %% [markdown]
# # Closed forms against brute-force counting
#
# The closed formulas of the package are checked against an oracle that
# builds honest complexes of projective representations and enumerates
# morphisms between them.  This script shows a few of those comparisons.

# %%
from perhall import StalkSum, category, oracle_for
from perhall import xcb
from perhall.derived import brace

cat = category("A2", 2)
o = oracle_for(cat)
for c in cat.classes_upto((1, 1)):
    print(c, "aut order", cat.aut_order(c))

# %% [markdown]
# ## Morphism counts in the bounded derived category
#
# The brace {X, Y} is an alternating product of Hom counts over all shifts.
# The closed value and the count agree.

# %%
s0 = StalkSum.stalk(cat.classes((1, 0))[0], 0)
s1 = StalkSum.stalk(cat.classes((0, 1))[0], 0)
for k in range(3):
    y = s1.shift(k)
    print(f"brace(S0, S1[{k}])", brace(cat, s0, y), "counted", o.brace(s0, y))

# %% [markdown]
# ## Hall numbers of the 3-periodic derived category
#
# calH from the odd-periodic product and from counting cones, and calF by
# the closed route and by both Toen-type expressions.

# %%
a1 = category("A1", 2)
F = a1.classes((1,))[0]
x = StalkSum.stalk(F, 0, 3)
l = StalkSum.stalk(a1.direct_sum(F, F), 0, 3)
print("calH closed ", xcb.curly_H(a1, x, x, l, "closed"))
print("calH counted", xcb.curly_H(a1, x, x, l, "oracle"))
print("calF        ", xcb.curly_F(a1, x, x, l))
print("Toen pair   ", xcb.curly_F_toen(a1, x, x, l))

# %% [markdown]
# ## Running a whole suite
#
# Suites return a report with instance and failure counts; the command line
# `perhall verify --suite NAME` prints the same report as JSON.

# %%
from perhall.suites import run_suite

for name in ("green", "odd-counts", "periodic-hom"):
    r = run_suite(name)
    print(f"{name:14s} instances={r.instances:5d} failures={r.failures}")
