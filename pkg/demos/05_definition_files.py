# %% [markdown]
# # Writing your own definitions
#
# All built-in data is stored in a plain-text format, and user files use
# the same format.  Here we define a trivial action (`h . a = eps(h) a`),
# check it, and compare its crossed product with the partial ones.

# %%
from partialhopf import catalog, extract_basis, parse_definition, verify_all

h4 = catalog.load("h4").payload
hss = catalog.load("hss").payload

lines = ["action trivial", "  hopf h4", "  target hss"]
for h in h4.basis:
    eps = h4.counit(h)
    for a in hss.basis:
        lines.append(f"  act {h} {a} = {eps}*{a}" if eps else f"  act {h} {a} = 0")
    for l in h4.basis:
        c = eps * h4.counit(l)
        lines.append(f"  omega {h} {l} = {c}*1" if c else f"  omega {h} {l} = 0")
lines.append("end")

text = catalog.catalog_text("h4") + "\n" + catalog.catalog_text("hss") + "\n" + "\n".join(lines) + "\n"
doc = parse_definition(text, source="trivial.def")
P = doc.action("trivial")
print(verify_all(P, "crossed").summary())
print("rank of hss # h4 for the trivial action:", extract_basis(P).rank)

# %% [markdown]
# Mistakes are reported with file, line and column.

# %%
try:
    parse_definition(text.replace("act nu e1 = 0", "act nu e1 = 3*e5"), source="trivial.def")
except Exception as exc:
    print(type(exc).__name__, "-", exc)

# %% [markdown]
# The same operations are available from the shell:
#
# ```
# partialhopf verify --input trivial.def --profile crossed
# partialhopf crossed --catalog action_hss --emit table --format structured
# partialhopf eval --catalog action_hss "smash(e1,nu)*smash(e2,nu)" --basis --set k1=2,k2=1
# partialhopf catalog list
# ```
