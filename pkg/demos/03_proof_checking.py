"""The Hilbert-style proof checker and the built-in derivation corpus.

Proofs are sequences of lines justified by axiom schemes, tautologies,
modus ponens, or one of the special rules R1/R2/R3/RS that imitate
quantification over sets via a fresh "special variable".
"""

from relsyl import check_proof, paper_corpus, print_formula
from relsyl.proofs import proof_from_text

# A two-line theorem: the first linking axiom followed by rule R1, which
# discharges the fresh variable p to recover AE(a,b)[r] -> AE(a,b)[r].
TEXT = """\
mode: theorem
1: AE(a,b)[r] -> a*p = 0 | EE(p,b)[r] ; axiom AL1
2: AE(a,b)[r] -> AE(a,b)[r] ; R1 1 p
"""

proof = proof_from_text(TEXT)
print("two-line proof:", "ok" if check_proof(proof).ok else "rejected")

# The special variable must not occur in the conclusion's set terms;
# using a clashing one is rejected at the offending line.
bad = proof_from_text(TEXT.replace("R1 1 p", "R1 1 a"))
verdict = check_proof(bad)
print("clashing special variable:",
      f"rejected at line {verdict.bad_line} ({verdict.reason})")

# The corpus bundles checked transcriptions of nontrivial theorems:
# quantifier dualities, monotonicity laws, and reflexive-witness results.
print(f"\ncorpus ({len(paper_corpus())} proofs):")
for entry in paper_corpus():
    ok = "ok" if check_proof(entry.proof).ok else "REJECTED"
    print(f"  {ok}  {entry.name:22s} {print_formula(entry.conclusion)}")
