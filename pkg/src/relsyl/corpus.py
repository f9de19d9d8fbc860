"""A regression corpus of transcribed derivations for the proof checker.

Each corpus entry is a complete Theorem-mode proof object.  The
transcriptions expand quoted derivation sketches into fully explicit
Hilbert proofs: chained steps become Taut/MP bridges, commuted or
reassociated Boolean side conditions get explicit lattice-axiom glue
lines, and derived lemmas used inside other derivations are inlined with
fresh special variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .proofs import (
    AxiomName, JAxiom, JMP, JRule, JTaut, Mode, Proof, ProofLine, match_axiom,
)
from .syntax import (
    And, Atom, Formula, Iff, Implies, Leq, Not, Or, QuantPair, RelCompl,
    RelConv, RelJoin, RelMeet, RelOne, RelTerm, RelVar, RelZero, SetMeet,
    SetJoin, SetTerm, SetVar, SetZero, equals,
)

# ---------------------------------------------------------------------------
# small construction helpers
# ---------------------------------------------------------------------------

def sm(x: SetTerm, y: SetTerm) -> SetTerm:
    return SetMeet(x, y)


def sj(x: SetTerm, y: SetTerm) -> SetTerm:
    return SetJoin(x, y)


def eq0(t: SetTerm) -> Formula:
    return equals(t, SetZero())


def EE(a, b, r) -> Formula:
    return Atom(QuantPair.EE, a, b, r)


def AE(a, b, r) -> Formula:
    return Atom(QuantPair.AE, a, b, r)


def AA(a, b, r) -> Formula:
    return Atom(QuantPair.AA, a, b, r)


def EA(a, b, r) -> Formula:
    return Atom(QuantPair.EA, a, b, r)


class ProofBuilder:
    """Accumulates proof lines; helper methods return 1-based line indices."""

    def __init__(self):
        self.lines: list[ProofLine] = []
        self._fresh = 0

    def fresh(self) -> str:
        self._fresh += 1
        return f"p{self._fresh}"

    def _add(self, formula: Formula, just) -> int:
        index = len(self.lines) + 1
        self.lines.append(ProofLine(index, formula, just))
        return index

    def formula(self, i: int) -> Formula:
        return self.lines[i - 1].formula

    def ax(self, name: AxiomName, formula: Formula) -> int:
        assert match_axiom(name, formula), (
            f"bad axiom instance for {name.value}: {formula}")
        return self._add(formula, JAxiom(name))

    def taut(self, formula: Formula) -> int:
        return self._add(formula, JTaut())

    def mp(self, i: int, j: int) -> int:
        major = self.formula(j)
        assert isinstance(major, Implies) and major.left == self.formula(i)
        return self._add(major.right, JMP(i, j))

    def rule(self, name: str, source: int, special: str, conclusion: Formula) -> int:
        return self._add(conclusion, JRule(name, source, special))

    def tc(self, target: Formula, *deps: int) -> int:
        """Derive target as a tautological consequence of earlier lines.

        Emits one taut line dep1 -> (dep2 -> ... -> target) followed by a
        modus-ponens chain.
        """
        chain = target
        for d in reversed(deps):
            chain = Implies(self.formula(d), chain)
        cur = self.taut(chain)
        for d in deps:
            cur = self.mp(d, cur)
        return cur

    def to_proof(self) -> Proof:
        return Proof(mode=Mode.THEOREM, premises=(), lines=tuple(self.lines))


# ---------------------------------------------------------------------------
# lattice glue
# ---------------------------------------------------------------------------

def _contains(t: SetTerm, sub: SetTerm) -> bool:
    return t == sub or (isinstance(t, SetMeet)
                        and (_contains(t.left, sub) or _contains(t.right, sub)))


def d_leq(b: ProofBuilder, u: SetTerm, w: SetTerm) -> int:
    """Derive u <= w when w is a meet of projections of u."""
    if u == w:
        return b.ax(AxiomName.BA_REFL, Leq(u, u))
    if _contains(u, w):
        assert isinstance(u, SetMeet)
        if _contains(u.left, w):
            step, mid = AxiomName.BA_MEET_L, u.left
        else:
            step, mid = AxiomName.BA_MEET_R, u.right
        i1 = b.ax(step, Leq(u, mid))
        if mid == w:
            return i1
        i2 = d_leq(b, mid, w)
        tr = b.ax(AxiomName.BA_TRANS,
                  Implies(And(Leq(u, mid), Leq(mid, w)), Leq(u, w)))
        return b.tc(Leq(u, w), i1, i2, tr)
    if isinstance(w, SetMeet):
        i1 = d_leq(b, u, w.left)
        i2 = d_leq(b, u, w.right)
        g = b.ax(AxiomName.BA_MEET_GLB,
                 Implies(And(Leq(u, w.left), Leq(u, w.right)), Leq(u, w)))
        return b.tc(Leq(u, w), i1, i2, g)
    raise AssertionError(f"cannot derive {u} <= {w}")


def d_eq0_imp(b: ProofBuilder, t1: SetTerm, t2: SetTerm) -> int:
    """Derive (t1 = 0) -> (t2 = 0), given t2 <= t1 by meet rearrangement."""
    le = d_leq(b, t2, t1)
    zero = SetZero()
    tr = b.ax(AxiomName.BA_TRANS,
              Implies(And(Leq(t2, t1), Leq(t1, zero)), Leq(t2, zero)))
    bot = b.ax(AxiomName.BA_BOT, Leq(zero, t2))
    return b.tc(Implies(eq0(t1), eq0(t2)), le, tr, bot)


# ---------------------------------------------------------------------------
# derived lemmas (each returns the index of its final line)
# ---------------------------------------------------------------------------

def d_aa_to_ee(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """AA(x,y)[rel] & !EE(x,y)[rel] -> x = 0 | y = 0."""
    al2 = b.ax(AxiomName.AL2,
               Implies(AA(x, y, rel), Or(eq0(sm(y, y)), AE(x, y, rel))))
    al1 = b.ax(AxiomName.AL1,
               Implies(AE(x, y, rel), Or(eq0(sm(x, x)), EE(x, y, rel))))
    g1 = d_eq0_imp(b, sm(y, y), y)
    g2 = d_eq0_imp(b, sm(x, x), x)
    return b.tc(Implies(And(AA(x, y, rel), Not(EE(x, y, rel))),
                        Or(eq0(x), eq0(y))),
                al2, al1, g1, g2)


def d_a1_item1(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """AE(x,y)[rel] -> !EA(x,y)[-rel]."""
    p = SetVar(b.fresh())
    neg = RelCompl(rel)
    al1 = b.ax(AxiomName.AL1,
               Implies(AE(x, y, rel), Or(eq0(sm(x, p)), EE(p, y, rel))))
    aneg = b.ax(AxiomName.ANEG, Iff(AA(p, y, neg), Not(EE(p, y, rel))))
    s = b.tc(Implies(AE(x, y, rel), Or(eq0(sm(x, p)), Not(AA(p, y, neg)))),
             al1, aneg)
    return b.rule("R3", s, p.name, Implies(AE(x, y, rel), Not(EA(x, y, neg))))


def d_a1_item2(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """!EA(x,y)[-rel] -> AE(x,y)[rel]."""
    p = SetVar(b.fresh())
    neg = RelCompl(rel)
    al3 = b.ax(AxiomName.AL3,
               Implies(Not(EA(x, y, neg)),
                       Or(eq0(sm(x, p)), Not(AA(p, y, neg)))))
    aneg = b.ax(AxiomName.ANEG, Iff(AA(p, y, neg), Not(EE(p, y, rel))))
    s = b.tc(Implies(Not(EA(x, y, neg)), Or(eq0(sm(x, p)), EE(p, y, rel))),
             al3, aneg)
    return b.rule("R1", s, p.name, Implies(Not(EA(x, y, neg)), AE(x, y, rel)))


def d_a1_item3(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """!EE(x,y)[-rel] -> AA(x,y)[rel]."""
    p = SetVar(b.fresh())
    q = SetVar(b.fresh())
    neg = RelCompl(rel)
    al1 = b.ax(AxiomName.AL1,
               Implies(AE(p, y, neg), Or(eq0(sm(p, x)), EE(x, y, neg))))
    comm1 = d_eq0_imp(b, sm(p, x), sm(x, p))
    al2 = b.ax(AxiomName.AL2,
               Implies(AA(p, q, neg), Or(eq0(sm(q, y)), AE(p, y, neg))))
    comm2 = d_eq0_imp(b, sm(q, y), sm(y, q))
    aneg = b.ax(AxiomName.ANEG, Iff(AA(p, q, neg), Not(EE(p, q, rel))))
    step = b.tc(Implies(Not(EE(x, y, neg)),
                        Or(eq0(sm(x, p)), Or(eq0(sm(y, q)), EE(p, q, rel)))),
                al1, comm1, al2, comm2, aneg)
    phi1 = And(Not(EE(x, y, neg)), Not(eq0(sm(y, q))))
    s2 = b.tc(Implies(phi1, Or(eq0(sm(x, p)), EE(p, q, rel))), step)
    r1 = b.rule("R1", s2, p.name, Implies(phi1, AE(x, q, rel)))
    s3 = b.tc(Implies(Not(EE(x, y, neg)), Or(eq0(sm(y, q)), AE(x, q, rel))), r1)
    return b.rule("R2", s3, q.name, Implies(Not(EE(x, y, neg)), AA(x, y, rel)))


def d_a1_item4(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """!EA(x,y)[rel] -> AE(x,y)[-rel]."""
    p = SetVar(b.fresh())
    neg = RelCompl(rel)
    al3 = b.ax(AxiomName.AL3,
               Implies(Not(EA(x, y, rel)),
                       Or(eq0(sm(x, p)), Not(AA(p, y, rel)))))
    i3 = d_a1_item3(b, p, y, rel)
    s = b.tc(Implies(Not(EA(x, y, rel)), Or(eq0(sm(x, p)), EE(p, y, neg))),
             al3, i3)
    return b.rule("R1", s, p.name, Implies(Not(EA(x, y, rel)), AE(x, y, neg)))


def d_a1_item5(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """AA(x,y)[rel] -> !EE(x,y)[-rel].

    The double complement --rel appears in intermediate lines and is
    discharged by the final complementation-axiom instance.
    """
    p = SetVar(b.fresh())
    neg = RelCompl(rel)
    negneg = RelCompl(neg)
    al2 = b.ax(AxiomName.AL2,
               Implies(AA(x, y, rel), Or(eq0(sm(y, p)), AE(x, p, rel))))
    i1 = d_a1_item1(b, x, p, rel)        # AE(x,p)[rel] -> !EA(x,p)[-rel]
    i4 = d_a1_item4(b, x, p, neg)        # !EA(x,p)[-rel] -> AE(x,p)[--rel]
    s = b.tc(Implies(AA(x, y, rel), Or(eq0(sm(y, p)), AE(x, p, negneg))),
             al2, i1, i4)
    r2 = b.rule("R2", s, p.name, Implies(AA(x, y, rel), AA(x, y, negneg)))
    aneg = b.ax(AxiomName.ANEG, Iff(AA(x, y, negneg), Not(EE(x, y, neg))))
    return b.tc(Implies(AA(x, y, rel), Not(EE(x, y, neg))), r2, aneg)


def d_a1_item6(b: ProofBuilder, x: SetTerm, y: SetTerm, rel: RelTerm) -> int:
    """AE(x,y)[-rel] -> !EA(x,y)[rel]."""
    p = SetVar(b.fresh())
    neg = RelCompl(rel)
    al1 = b.ax(AxiomName.AL1,
               Implies(AE(x, y, neg), Or(eq0(sm(x, p)), EE(p, y, neg))))
    i5 = d_a1_item5(b, p, y, rel)        # AA(p,y)[rel] -> !EE(p,y)[-rel]
    s = b.tc(Implies(AE(x, y, neg), Or(eq0(sm(x, p)), Not(AA(p, y, rel)))),
             al1, i5)
    return b.rule("R3", s, p.name, Implies(AE(x, y, neg), Not(EA(x, y, rel))))


def d_a3_item1a(b: ProofBuilder, x, y, c, rel) -> int:
    """EE(x,y)[rel] & x <= c -> EE(c,y)[rel]."""
    join = sj(x, c)
    au = b.ax(AxiomName.AU1, Iff(EE(join, y, rel), Or(EE(x, y, rel), EE(c, y, rel))))
    lub = b.ax(AxiomName.BA_JOIN_LUB,
               Implies(And(Leq(x, c), Leq(c, c)), Leq(join, c)))
    refl = b.ax(AxiomName.BA_REFL, Leq(c, c))
    jr = b.ax(AxiomName.BA_JOIN_R, Leq(c, join))
    aeq = b.ax(AxiomName.AEQ1,
               Implies(And(EE(join, y, rel), equals(join, c)), EE(c, y, rel)))
    return b.tc(Implies(And(EE(x, y, rel), Leq(x, c)), EE(c, y, rel)),
                au, lub, refl, jr, aeq)


def d_a3_item1b(b: ProofBuilder, x, y, c, rel) -> int:
    """EE(x,y)[rel] & y <= c -> EE(x,c)[rel]."""
    join = sj(y, c)
    au = b.ax(AxiomName.AU2, Iff(EE(x, join, rel), Or(EE(x, y, rel), EE(x, c, rel))))
    lub = b.ax(AxiomName.BA_JOIN_LUB,
               Implies(And(Leq(y, c), Leq(c, c)), Leq(join, c)))
    refl = b.ax(AxiomName.BA_REFL, Leq(c, c))
    jr = b.ax(AxiomName.BA_JOIN_R, Leq(c, join))
    aeq = b.ax(AxiomName.AEQ2,
               Implies(And(EE(x, join, rel), equals(join, c)), EE(x, c, rel)))
    return b.tc(Implies(And(EE(x, y, rel), Leq(y, c)), EE(x, c, rel)),
                au, lub, refl, jr, aeq)


def d_a3_item2a(b: ProofBuilder, x, y, c, rel) -> int:
    """AA(x,y)[rel] & c <= x -> AA(c,y)[rel]."""
    neg = RelCompl(rel)
    i5 = d_a1_item5(b, x, y, rel)
    e1 = d_a3_item1a(b, c, y, x, neg)
    i3 = d_a1_item3(b, c, y, rel)
    return b.tc(Implies(And(AA(x, y, rel), Leq(c, x)), AA(c, y, rel)),
                i5, e1, i3)


def d_a3_item2b(b: ProofBuilder, x, y, c, rel) -> int:
    """AA(x,y)[rel] & c <= y -> AA(x,c)[rel]."""
    neg = RelCompl(rel)
    i5 = d_a1_item5(b, x, y, rel)
    e1 = d_a3_item1b(b, x, c, y, neg)
    i3 = d_a1_item3(b, x, c, rel)
    return b.tc(Implies(And(AA(x, y, rel), Leq(c, y)), AA(x, c, rel)),
                i5, e1, i3)


def d_a3_item3(b: ProofBuilder, x, y, c, d, rho, sigma) -> int:
    """AA(x,y)[rho] & AA(c,d)[sigma] -> AA(x*c, y*d)[rho*sigma]."""
    xc, yd = sm(x, c), sm(y, d)
    pl1 = b.ax(AxiomName.BA_MEET_L, Leq(xc, x))
    pl2 = b.ax(AxiomName.BA_MEET_L, Leq(yd, y))
    pr1 = b.ax(AxiomName.BA_MEET_R, Leq(xc, c))
    pr2 = b.ax(AxiomName.BA_MEET_R, Leq(yd, d))
    t1 = d_a3_item2a(b, x, y, xc, rho)
    t2 = d_a3_item2b(b, xc, y, yd, rho)
    t3 = d_a3_item2a(b, c, d, xc, sigma)
    t4 = d_a3_item2b(b, xc, d, yd, sigma)
    acap = b.ax(AxiomName.ACAP,
                Iff(AA(xc, yd, RelMeet(rho, sigma)),
                    And(AA(xc, yd, rho), AA(xc, yd, sigma))))
    return b.tc(Implies(And(AA(x, y, rho), AA(c, d, sigma)),
                        AA(xc, yd, RelMeet(rho, sigma))),
                pl1, pl2, pr1, pr2, t1, t2, t3, t4, acap)


def d_aa_notee_disjoint(b: ProofBuilder, u, v, c, d, rel) -> int:
    """AA(u,v)[rel] & !EE(c,d)[rel] -> u*c = 0 | v*d = 0."""
    uc, vd = sm(u, c), sm(v, d)
    al2 = b.ax(AxiomName.AL2,
               Implies(AA(u, v, rel), Or(eq0(sm(v, vd)), AE(u, vd, rel))))
    al1 = b.ax(AxiomName.AL1,
               Implies(AE(u, vd, rel), Or(eq0(sm(u, uc)), EE(uc, vd, rel))))
    e1 = d_a3_item1a(b, uc, vd, c, rel)
    pr1 = d_leq(b, uc, c)
    e2 = d_a3_item1b(b, c, vd, d, rel)
    pr2 = d_leq(b, vd, d)
    g1 = d_eq0_imp(b, sm(v, vd), vd)
    g2 = d_eq0_imp(b, sm(u, uc), uc)
    return b.tc(Implies(And(AA(u, v, rel), Not(EE(c, d, rel))),
                        Or(eq0(uc), eq0(vd))),
                al2, al1, e1, pr1, e2, pr2, g1, g2)


def d_a3_item4(b: ProofBuilder, x, y, c, d, rho, sigma) -> int:
    """AA(x,y)[rho] & !EE(c,d)[rho*sigma] -> AA(x*c, y*d)[-sigma]."""
    p = SetVar(b.fresh())
    q = SetVar(b.fresh())
    delta = RelMeet(rho, sigma)
    negs = RelCompl(sigma)
    hyp = And(AA(x, y, rho), Not(EE(c, d, delta)))
    t3 = d_a3_item3(b, x, y, p, q, rho, sigma)
    l2 = d_aa_notee_disjoint(b, sm(x, p), sm(y, q), c, d, delta)
    re1 = d_eq0_imp(b, sm(sm(x, p), c), sm(sm(x, c), p))
    re2 = d_eq0_imp(b, sm(sm(y, q), d), sm(sm(y, d), q))
    i3 = d_a1_item3(b, p, q, sigma)
    phi1 = And(hyp, Not(eq0(sm(sm(y, d), q))))
    s1 = b.tc(Implies(phi1, Or(eq0(sm(sm(x, c), p)), EE(p, q, negs))),
              t3, l2, re1, re2, i3)
    r1 = b.rule("R1", s1, p.name, Implies(phi1, AE(sm(x, c), q, negs)))
    s2 = b.tc(Implies(hyp, Or(eq0(sm(sm(y, d), q)), AE(sm(x, c), q, negs))), r1)
    return b.rule("R2", s2, q.name, Implies(hyp, AA(sm(x, c), sm(y, d), negs)))


# ---------------------------------------------------------------------------
# corpus proofs
# ---------------------------------------------------------------------------

A, B, C, D = SetVar("a"), SetVar("b"), SetVar("c"), SetVar("d")
R, S, T = RelVar("r"), RelVar("s"), RelVar("t")


def build_sec3_worked() -> ProofBuilder:
    """EA(a,b)[r] -> AE(b,a)[r^]."""
    b = ProofBuilder()
    p = SetVar(b.fresh())
    q = SetVar(b.fresh())
    conv = RelConv(R)
    al2 = b.ax(AxiomName.AL2,
               Implies(AA(p, B, R), Or(eq0(sm(B, q)), AE(p, q, R))))
    al1 = b.ax(AxiomName.AL1,
               Implies(AE(p, q, R), Or(eq0(sm(p, A)), EE(A, q, R))))
    comm = d_eq0_imp(b, sm(p, A), sm(A, p))
    aconv = b.ax(AxiomName.ACONV, Iff(EE(q, A, conv), EE(A, q, R)))
    phi1 = And(AA(p, B, R), Not(eq0(sm(A, p))))
    s1 = b.tc(Implies(phi1, Or(eq0(sm(B, q)), EE(q, A, conv))),
              al2, al1, comm, aconv)
    r1 = b.rule("R1", s1, q.name, Implies(phi1, AE(B, A, conv)))
    s2 = b.tc(Implies(Not(AE(B, A, conv)),
                      Or(eq0(sm(A, p)), Not(AA(p, B, R)))), r1)
    r3 = b.rule("R3", s2, p.name,
                Implies(Not(AE(B, A, conv)), Not(EA(A, B, R))))
    b.tc(Implies(EA(A, B, R), AE(B, A, conv)), r3)
    return b


def _wrap(fn, *args) -> ProofBuilder:
    b = ProofBuilder()
    fn(b, *args)
    return b


def build_lemma_4_10(k: int) -> ProofBuilder:
    """a = 0 | EE(a,a)[(1 * (r1^ + -r1)) * (r2^ + -r2) * ...], via k chained RS steps."""
    b = ProofBuilder()
    specials = [SetVar(b.fresh()) for _ in range(k)]
    one = RelOne()

    def base_term(stage: int) -> SetTerm:
        # the set term the stage's RS application quantifies over:
        # a meeted with the not-yet-discharged special variables
        cur: SetTerm = A
        for sp in reversed(specials[stage + 1:]):
            cur = sm(cur, sp)
        return cur

    gamma: RelTerm = one
    prev_rs = 0
    for stage in range(k):
        p = specials[stage]
        base = base_term(stage)
        x = sm(base, p)
        if stage == 0:
            # EE(p,p)[1] or emptiness, from the total relation
            a1r = b.ax(AxiomName.A1R, AA(x, x, one))
            dd = d_aa_to_ee(b, x, x, one)
            source = b.tc(Or(eq0(x), EE(x, x, one)), a1r, dd)
        else:
            source = prev_rs  # Or(eq0(x), EE(x,x)[gamma]), since x = base_term(stage-1)
        e1 = d_a3_item1a(b, x, x, p, gamma)
        pr = b.ax(AxiomName.BA_MEET_R, Leq(x, p))
        e2 = d_a3_item1b(b, p, x, p, gamma)
        s = b.tc(Or(eq0(x), EE(p, p, gamma)), source, e1, pr, e2)
        rel_var = RelVar(f"r{stage + 1}")
        gamma = RelMeet(gamma, RelJoin(RelConv(rel_var), RelCompl(rel_var)))
        prev_rs = b.rule("RS", s, p.name, Or(eq0(base), EE(base, base, gamma)))
    return b


def build_p46_item5() -> ProofBuilder:
    """AA(a,b)[r*(s+t)] -> AA(a,b)[(r*s)+(r*t)]."""
    b = ProofBuilder()
    p = SetVar(b.fresh())
    q = SetVar(b.fresh())
    st = RelJoin(S, T)
    delta = RelJoin(RelMeet(R, S), RelMeet(R, T))
    hyp = AA(A, B, RelMeet(R, st))
    ap, bq = sm(A, p), sm(B, q)
    acap1 = b.ax(AxiomName.ACAP, Iff(hyp, And(AA(A, B, R), AA(A, B, st))))
    i4a = d_a3_item4(b, A, B, p, q, R, S)
    i4b = d_a3_item4(b, A, B, p, q, R, T)
    aneg_s = b.ax(AxiomName.ANEG,
                  Iff(AA(ap, bq, RelCompl(S)), Not(EE(ap, bq, S))))
    aneg_t = b.ax(AxiomName.ANEG,
                  Iff(AA(ap, bq, RelCompl(T)), Not(EE(ap, bq, T))))
    acup2 = b.ax(AxiomName.ACUP,
                 Iff(EE(ap, bq, st), Or(EE(ap, bq, S), EE(ap, bq, T))))
    dis = d_aa_notee_disjoint(b, A, B, ap, bq, st)
    g1 = d_eq0_imp(b, sm(A, ap), ap)
    g2 = d_eq0_imp(b, sm(B, bq), bq)
    mid = b.tc(Implies(And(hyp, And(Not(EE(p, q, RelMeet(R, S))),
                                    Not(EE(p, q, RelMeet(R, T))))),
                       Or(eq0(ap), eq0(bq))),
               acap1, i4a, i4b, aneg_s, aneg_t, acup2, dis, g1, g2)
    acup1 = b.ax(AxiomName.ACUP,
                 Iff(EE(p, q, delta),
                     Or(EE(p, q, RelMeet(R, S)), EE(p, q, RelMeet(R, T)))))
    phi1 = And(hyp, Not(eq0(bq)))
    s1 = b.tc(Implies(phi1, Or(eq0(ap), EE(p, q, delta))), mid, acup1)
    r1 = b.rule("R1", s1, p.name, Implies(phi1, AE(A, q, delta)))
    s2 = b.tc(Implies(hyp, Or(eq0(bq), AE(A, q, delta))), r1)
    b.rule("R2", s2, q.name, Implies(hyp, AA(A, B, delta)))
    return b


def build_p46_item6() -> ProofBuilder:
    """AA(a,b)[r*-r] -> AA(a,b)[0]."""
    b = ProofBuilder()
    zero = RelZero()
    hyp = AA(A, B, RelMeet(R, RelCompl(R)))
    acap = b.ax(AxiomName.ACAP,
                Iff(hyp, And(AA(A, B, R), AA(A, B, RelCompl(R)))))
    aneg = b.ax(AxiomName.ANEG, Iff(AA(A, B, RelCompl(R)), Not(EE(A, B, R))))
    dd = d_aa_to_ee(b, A, B, R)
    a0 = b.ax(AxiomName.A0,
              Implies(Or(eq0(A), eq0(B)), Not(EE(A, B, RelCompl(zero)))))
    i3 = d_a1_item3(b, A, B, zero)
    b.tc(Implies(hyp, AA(A, B, zero)), acap, aneg, dd, a0, i3)
    return b


def build_p46_item7() -> ProofBuilder:
    """EE(a,b)[1] -> EE(a,b)[r+-r]."""
    b = ProofBuilder()
    one = RelOne()
    acup = b.ax(AxiomName.ACUP,
                Iff(EE(A, B, RelJoin(R, RelCompl(R))),
                    Or(EE(A, B, R), EE(A, B, RelCompl(R)))))
    i3 = d_a1_item3(b, A, B, R)
    dd = d_aa_to_ee(b, A, B, R)
    a0 = b.ax(AxiomName.A0, Implies(Or(eq0(A), eq0(B)), Not(EE(A, B, one))))
    b.tc(Implies(EE(A, B, one), EE(A, B, RelJoin(R, RelCompl(R)))),
         acup, i3, dd, a0)
    return b


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    proof: Proof

    @property
    def conclusion(self) -> Formula:
        return self.proof.conclusion


@lru_cache(maxsize=1)
def paper_corpus() -> tuple[CorpusEntry, ...]:
    entries = [
        ("sec3_worked",
         "the worked quantifier-swap theorem: EA(a,b)[r] -> AE(b,a)[r^]",
         build_sec3_worked()),
        ("duality_1", "AE(a,b)[r] -> !EA(a,b)[-r]",
         _wrap(d_a1_item1, A, B, R)),
        ("duality_2", "!EA(a,b)[-r] -> AE(a,b)[r]",
         _wrap(d_a1_item2, A, B, R)),
        ("duality_3", "!EE(a,b)[-r] -> AA(a,b)[r]",
         _wrap(d_a1_item3, A, B, R)),
        ("duality_4", "!EA(a,b)[r] -> AE(a,b)[-r]",
         _wrap(d_a1_item4, A, B, R)),
        ("duality_5", "AA(a,b)[r] -> !EE(a,b)[-r]",
         _wrap(d_a1_item5, A, B, R)),
        ("duality_6", "AE(a,b)[-r] -> !EA(a,b)[r]",
         _wrap(d_a1_item6, A, B, R)),
        ("ee_mono_left", "EE(a,b)[r] & a <= c -> EE(c,b)[r]",
         _wrap(d_a3_item1a, A, B, C, R)),
        ("ee_mono_right", "EE(a,b)[r] & b <= c -> EE(a,c)[r]",
         _wrap(d_a3_item1b, A, B, C, R)),
        ("aa_anti_left", "AA(a,b)[r] & c <= a -> AA(c,b)[r]",
         _wrap(d_a3_item2a, A, B, C, R)),
        ("aa_anti_right", "AA(a,b)[r] & c <= b -> AA(a,c)[r]",
         _wrap(d_a3_item2b, A, B, C, R)),
        ("aa_meet", "AA(a,b)[r] & AA(c,d)[s] -> AA(a*c,b*d)[r*s]",
         _wrap(d_a3_item3, A, B, C, D, R, S)),
        ("aa_residuation", "AA(a,b)[r] & !EE(c,d)[r*s] -> AA(a*c,b*d)[-s]",
         _wrap(d_a3_item4, A, B, C, D, R, S)),
        ("reflexive_witness_1",
         "a = 0 | EE(a,a)[1*(r1^+-r1)]",
         build_lemma_4_10(1)),
        ("reflexive_witness_2",
         "a = 0 | EE(a,a)[(1*(r1^+-r1))*(r2^+-r2)]",
         build_lemma_4_10(2)),
        ("aa_distribute", "AA(a,b)[r*(s+t)] -> AA(a,b)[(r*s)+(r*t)]",
         build_p46_item5()),
        ("aa_contradiction", "AA(a,b)[r*-r] -> AA(a,b)[0]",
         build_p46_item6()),
        ("ee_excluded_middle", "EE(a,b)[1] -> EE(a,b)[r+-r]",
         build_p46_item7()),
    ]
    return tuple(CorpusEntry(name, desc, b.to_proof())
                 for name, desc, b in entries)
