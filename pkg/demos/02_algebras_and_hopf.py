# %% [markdown]
# # Quaternion-type algebras and the Sweedler Hopf algebra
#
# Three 4-dimensional algebras ship with the package: split quaternions
# (`hs`), split semi-quaternions (`hss`) and 1/4-quaternions (`h00`).
# They are stored as multiplication tables on the basis `1, e1, e2, e3`.

# %%
from partialhopf import catalog, check_associative, check_unital, coproduct_n
from partialhopf.hopf import check_antipode, check_bialgebra_compat, check_coalgebra

for cid in ("hs", "hss", "h00"):
    A = catalog.load(cid).payload
    squares = [str(A.product(e, e)) for e in ("e1", "e2", "e3")]
    print(f"{cid:4} e1^2, e2^2, e3^2 = {squares}   e1*e2 = {A.product('e1', 'e2')}")

# %% [markdown]
# The checks run over all basis triples and keep both sides of every
# identity, so a failure comes with the offending triple.

# %%
hss = catalog.load("hss").payload
print(check_associative(hss).summary())
print(check_unital(hss).summary())

broken = hss.with_product("e2", "e3", {"e1": 1})
report = check_associative(broken)
print(report.summary())
print("first bad triple:", report.counterexamples[0].labels)

# %% [markdown]
# The Sweedler algebra has a grouplike `g` and a skew-primitive `nu`.
# Iterated coproducts come out fully expanded.

# %%
h4 = catalog.load("h4").payload
for b in ("g", "nu", "gnu"):
    print(f"Delta({b}) =", " + ".join("@".join(t.legs) for t in coproduct_n(h4, b, 2)))
print("Delta^2(nu) =", " + ".join("@".join(t.legs) for t in coproduct_n(h4, "nu", 3)))

# %%
for check in (check_coalgebra, check_bialgebra_compat, check_antipode):
    print(check(h4).summary())
