"""Finite models and the truth definition, including the empty model.

A model is (W, R, v): a finite domain, a relation per relational
variable, and a subset of W per set variable.  Unlisted variables denote
the empty set, and the empty domain is a perfectly good model.
"""

from relsyl import Model, empty_model, eval_formula, parse_formula

m = Model(
    domain=("ann", "bob", "cat"),
    sets={"person": frozenset({"ann", "bob"}), "pet": frozenset({"cat"})},
    rel={"feeds": frozenset({("ann", "cat"), ("bob", "cat")})},
)

for text in [
    "AE(person,pet)[feeds]",     # every person feeds some pet
    "AA(person,pet)[feeds]",     # every person feeds every pet
    "EE(pet,person)[feeds^]",    # some pet is fed by some person
    "pet <= -person",
]:
    print(f"{text:28s} -> {eval_formula(m, parse_formula(text))}")

# On the empty model universal atoms hold vacuously and existential
# atoms fail; this asymmetry is load-bearing for the proof system.
e = empty_model()
print("\non the empty model:")
for text in ["AE(a,b)[r]", "AA(a,b)[r]", "a <= b", "EE(a,b)[r]", "EA(a,b)[r]"]:
    print(f"{text:12s} -> {eval_formula(e, parse_formula(text))}")
