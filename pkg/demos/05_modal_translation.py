"""Translating relational syllogistic formulas into basic modal logic.

Every formula maps to a modal formula whose truth is the same at every
point of every non-empty model.  Universal relational atoms translate
through their negated existential duals, so the target never needs
graded or window modalities.
"""

from relsyl import eval_formula, parse_formula
from relsyl.bml import eval_bml, print_bml, translate
from relsyl.semantics import random_model

for text in [
    "a <= b",
    "EE(a,b)[r]",
    "AE(a,b)[r]",
    "AA(a,b)[r]",
    "EA(a,b)[-r]",
]:
    bf = translate(parse_formula(text))
    print(f"{text:14s} ~> {print_bml(bf)}")

# Point-independence: the translation agrees with the first-order truth
# definition no matter which point we evaluate at.
f = parse_formula("AE(a,b)[r] -> EE(b,a)[r^]")
bf = translate(f)
m = random_model(5, ["a", "b"], ["r"], seed=7)
print(f"\n{print_bml(bf)}")
print("direct truth:", eval_formula(m, f))
print("modal truth per point:",
      [eval_bml(m, x, bf) for x in m.domain])
