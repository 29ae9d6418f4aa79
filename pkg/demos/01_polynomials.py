# %% [markdown]
# # Exact polynomials in named parameters
#
# Every structure constant in this package is a polynomial with rational
# coefficients.  Identities are decided by subtracting and checking for
# the zero polynomial, so there is no floating point anywhere.

# %%
from fractions import Fraction

from partialhopf import parse_polynomial, var

k1, k2, l1 = var("k1"), var("k2"), var("l1")

p = (k1 + k2) * (k1 - k2)
print("(k1 + k2)(k1 - k2) =", p)
print("is it k1^2 - k2^2?", (p - (k1**2 - k2**2)).is_zero())

# %% [markdown]
# Text round-trips through the parser, and the printed form is canonical:
# the same polynomial always prints the same way.

# %%
q = parse_polynomial("(3/2)*l1*k1 + 1 - k2^2")
print(q)
print(parse_polynomial(str(q)) == q)

# %% [markdown]
# Evaluation takes exact rationals.  A missing parameter is an error
# rather than a silent zero.

# %%
print(p.evaluate({"k1": 3, "k2": 2}))
print(q.evaluate({"k1": Fraction(1, 3), "k2": 2, "l1": 4}))
try:
    q.evaluate({"k1": 1})
except KeyError as exc:
    print("error:", exc)

# %%
print("exact division:", (k1**2 - k2**2).divexact(k1 - k2))
