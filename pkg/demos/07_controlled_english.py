"""A controlled-English front end for five-word quantified sentences.

Sentences of the shape "(Every|Some|No) NOUN VERB (every|some) NOUN"
map onto relational atoms; the `reading` argument resolves the scope
ambiguity, with object wide scope expressed through the verb's converse.
"""

from relsyl import print_formula
from relsyl.syntax import Lexicon, english_to_formula

lex = Lexicon(
    nouns={"man": "m", "dog": "d", "animal": "n"},
    verbs={"likes": "l", "feeds": "f"},
)

SENTENCES = [
    "Every man likes some dog",
    "Some man feeds every animal",
    "No man likes every dog",
]

for s in SENTENCES:
    for reading in ("sws", "ows"):
        f = english_to_formula(s, reading, lex)
        print(f"{s:30s} [{reading}] -> {print_formula(f)}")
    print()

# The two readings genuinely differ: "Every man likes some dog" is
# AE(m,d)[l] subject-wide but EA-shaped via the converse object-wide.
