"""Parsing and pretty-printing the relational syllogistic language.

Formulas combine set-algebra comparisons (a <= b, a = b) with quantified
relational atoms like EE(a,b)[r]: "some a is r-related to some b".
"""

from relsyl import parse_formula, parse_set_term, print_formula

EXAMPLES = [
    "EE(a,b)[r]",
    "EA(a,b)[r] -> AE(b,a)[r^]",
    "a = b",                       # sugar for (a <= b) & (b <= a)
    "AA(a*b, -c)[r + s^]",
    "a != 0 -> EE(a,a)[1]",
]

for text in EXAMPLES:
    f = parse_formula(text)
    print(f"{text!r:40s} -> {f!r}")
    print(f"{'':40s}    prints back as {print_formula(f)!r}")

# The printer emits minimal parentheses and round-trips structurally.
t = parse_set_term("a + b * -c")
print("\nterm 'a + b * -c' parses as", t)

# Errors carry position and the expected tokens.
try:
    parse_formula("EE(a,)[r]")
except Exception as e:
    print("\nmalformed input is rejected:", e)
