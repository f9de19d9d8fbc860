"""Bounded satisfiability, validity and entailment.

The search enumerates candidate domain sizes 0..max_size.  For each size
the unknown membership and edge bits are explored by backtracking: the
formula is evaluated three-valued under the partial assignment, and the
search branches only on a bit that an undetermined part of the formula
actually depends on (False before True).  This is deterministic and
complete for the candidate size.  `Unsat` is only reported when the bound
reaches the exponential completeness threshold; otherwise a negative
answer is the honest `UnsatUpTo`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .semantics import Model, eval_formula
from .syntax import (
    And, Atom, Bottom, Formula, Iff, Implies, Leq, Not, Or, QuantPair,
    RelCompl, RelConv, RelJoin, RelMeet, RelOne, RelTerm, RelVar, RelZero,
    SetCompl, SetJoin, SetMeet, SetOne, SetTerm, SetVar, SetZero, Top,
    atoms_of, free_rel_vars, free_set_vars,
)


class SolverError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when the configured node budget is exhausted (distinct from UnsatUpTo)."""


@dataclass(frozen=True)
class Sat:
    witness: Model


@dataclass(frozen=True)
class UnsatUpTo:
    bound: int


@dataclass(frozen=True)
class Unsat:
    pass


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class CountermodelFound:
    model: Model


@dataclass(frozen=True)
class NoCountermodelUpTo:
    bound: int


class FragmentClass(Enum):
    FULL = "Full"
    NO_MIXED_QUANTIFIERS = "NoMixedQuantifiers"


def detect_fragment(f: Formula) -> FragmentClass:
    for atom in atoms_of(f):
        if isinstance(atom, Atom) and atom.quant in (QuantPair.AE, QuantPair.EA):
            return FragmentClass.FULL
    return FragmentClass.NO_MIXED_QUANTIFIERS


def formula_size(f) -> int:
    """Number of AST nodes, terms included."""
    if isinstance(f, (SetVar, SetZero, SetOne, RelVar, RelZero, RelOne, Top, Bottom)):
        return 1
    if isinstance(f, (SetCompl, RelCompl, RelConv, Not)):
        return 1 + formula_size(f.arg)
    if isinstance(f, (SetMeet, SetJoin, RelMeet, RelJoin, And, Or, Implies, Iff, Leq)):
        return 1 + formula_size(f.left) + formula_size(f.right)
    if isinstance(f, Atom):
        return 1 + formula_size(f.left) + formula_size(f.right) + formula_size(f.rel)
    raise TypeError(f"unexpected node {f!r}")


# ---------------------------------------------------------------------------
# three-valued evaluation over a partial candidate model
# ---------------------------------------------------------------------------

class _Search:
    def __init__(self, f: Formula, n: int, set_vars: Sequence[str],
                 rel_vars: Sequence[str], budget: Optional[int]):
        self.f = f
        self.n = n
        self.sets = {v: [None] * n for v in set_vars}
        self.rels = {v: [[None] * n for _ in range(n)] for v in rel_vars}
        self.budget = budget
        self.nodes = 0

    # each evaluator returns (truth value or None, branch bit or None)

    def ev_set(self, t: SetTerm, i: int):
        if isinstance(t, SetVar):
            v = self.sets[t.name][i]
            if v is None:
                return None, ("s", t.name, i)
            return v, None
        if isinstance(t, SetZero):
            return False, None
        if isinstance(t, SetOne):
            return True, None
        if isinstance(t, SetCompl):
            v, bit = self.ev_set(t.arg, i)
            return (None if v is None else not v), bit
        if isinstance(t, SetMeet):
            l, lb = self.ev_set(t.left, i)
            if l is False:
                return False, None
            r, rb = self.ev_set(t.right, i)
            if r is False:
                return False, None
            if l is True and r is True:
                return True, None
            return None, lb if lb is not None else rb
        if isinstance(t, SetJoin):
            l, lb = self.ev_set(t.left, i)
            if l is True:
                return True, None
            r, rb = self.ev_set(t.right, i)
            if r is True:
                return True, None
            if l is False and r is False:
                return False, None
            return None, lb if lb is not None else rb
        raise TypeError(f"not a set term: {t!r}")

    def ev_rel(self, t: RelTerm, i: int, j: int):
        if isinstance(t, RelVar):
            v = self.rels[t.name][i][j]
            if v is None:
                return None, ("r", t.name, i, j)
            return v, None
        if isinstance(t, RelZero):
            return False, None
        if isinstance(t, RelOne):
            return True, None
        if isinstance(t, RelCompl):
            v, bit = self.ev_rel(t.arg, i, j)
            return (None if v is None else not v), bit
        if isinstance(t, RelConv):
            return self.ev_rel(t.arg, j, i)
        if isinstance(t, RelMeet):
            l, lb = self.ev_rel(t.left, i, j)
            if l is False:
                return False, None
            r, rb = self.ev_rel(t.right, i, j)
            if r is False:
                return False, None
            if l is True and r is True:
                return True, None
            return None, lb if lb is not None else rb
        if isinstance(t, RelJoin):
            l, lb = self.ev_rel(t.left, i, j)
            if l is True:
                return True, None
            r, rb = self.ev_rel(t.right, i, j)
            if r is True:
                return True, None
            if l is False and r is False:
                return False, None
            return None, lb if lb is not None else rb
        raise TypeError(f"not a relational term: {t!r}")

    def ev_atom(self, f: Atom):
        n = self.n
        q = f.quant
        # Kleene evaluation with full short-circuiting: a pair whose
        # conjunct/disjunct is already decided contributes no unknown bit.
        if q is QuantPair.EE or q is QuantPair.AA:
            # EE: OR over pairs of (a_i & b_j & r_ij); AA: AND over pairs
            # of (!a_i | !b_j | r_ij).
            unknown_bit = None
            for i in range(n):
                a, ab = self.ev_set(f.left, i)
                if a is False:
                    continue
                for j in range(n):
                    bv, bb = self.ev_set(f.right, j)
                    if bv is False:
                        continue
                    r, rb = self.ev_rel(f.rel, i, j)
                    if q is QuantPair.EE:
                        if r is False:
                            continue
                        if a is True and bv is True and r is True:
                            return True, None
                    else:
                        if r is True:
                            continue
                        if a is True and bv is True and r is False:
                            return False, None
                    if unknown_bit is None:
                        unknown_bit = next(b for b in (ab, bb, rb)
                                           if b is not None)
            if unknown_bit is not None:
                return None, unknown_bit
            return (False, None) if q is QuantPair.EE else (True, None)
        if q is QuantPair.AE:
            # AND over i of (!a_i | EXISTS j (b_j & r_ij))
            unknown_bit = None
            for i in range(n):
                a, ab = self.ev_set(f.left, i)
                if a is False:
                    continue
                reach = False
                row_unknown = None
                for j in range(n):
                    bv, bb = self.ev_set(f.right, j)
                    if bv is False:
                        continue
                    r, rb = self.ev_rel(f.rel, i, j)
                    if r is False:
                        continue
                    if bv is True and r is True:
                        reach = True
                        break
                    if row_unknown is None:
                        row_unknown = bb if bb is not None else rb
                if reach:
                    continue
                if a is True and row_unknown is None:
                    return False, None
                if unknown_bit is None:
                    unknown_bit = ab if ab is not None else row_unknown
            if unknown_bit is not None:
                return None, unknown_bit
            return True, None
        # EA: OR over i of (a_i & FORALL j (!b_j | r_ij))
        unknown_bit = None
        for i in range(n):
            a, ab = self.ev_set(f.left, i)
            if a is False:
                continue
            broken = False
            row_unknown = None
            for j in range(n):
                bv, bb = self.ev_set(f.right, j)
                if bv is False:
                    continue
                r, rb = self.ev_rel(f.rel, i, j)
                if r is True:
                    continue
                if bv is True and r is False:
                    broken = True
                    break
                if row_unknown is None:
                    row_unknown = bb if bb is not None else rb
            if broken:
                continue
            if a is True and row_unknown is None:
                return True, None
            if unknown_bit is None:
                unknown_bit = ab if ab is not None else row_unknown
        if unknown_bit is not None:
            return None, unknown_bit
        return False, None

    def ev(self, f: Formula):
        if isinstance(f, Leq):
            unknown_bit = None
            for i in range(self.n):
                a, ab = self.ev_set(f.left, i)
                if a is False:
                    continue
                bv, bb = self.ev_set(f.right, i)
                if bv is True:
                    continue
                if a is True and bv is False:
                    return False, None
                if unknown_bit is None:
                    unknown_bit = ab if ab is not None else bb
            if unknown_bit is None:
                return True, None
            return None, unknown_bit
        if isinstance(f, Atom):
            return self.ev_atom(f)
        if isinstance(f, Top):
            return True, None
        if isinstance(f, Bottom):
            return False, None
        if isinstance(f, Not):
            v, bit = self.ev(f.arg)
            return (None if v is None else not v), bit
        if isinstance(f, And):
            l, lb = self.ev(f.left)
            if l is False:
                return False, None
            r, rb = self.ev(f.right)
            if r is False:
                return False, None
            if l is True and r is True:
                return True, None
            return None, lb if lb is not None else rb
        if isinstance(f, Or):
            l, lb = self.ev(f.left)
            if l is True:
                return True, None
            r, rb = self.ev(f.right)
            if r is True:
                return True, None
            if l is False and r is False:
                return False, None
            return None, lb if lb is not None else rb
        if isinstance(f, Implies):
            l, lb = self.ev(f.left)
            if l is False:
                return True, None
            r, rb = self.ev(f.right)
            if r is True:
                return True, None
            if l is True and r is False:
                return False, None
            return None, lb if lb is not None else rb
        if isinstance(f, Iff):
            l, lb = self.ev(f.left)
            r, rb = self.ev(f.right)
            if l is None:
                return None, lb
            if r is None:
                return None, rb
            return l == r, None
        raise TypeError(f"not a formula: {f!r}")

    def run(self) -> Optional[Model]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        value, bit = self.ev(self.f)
        if value is True:
            return self.extract()
        if value is False:
            return None
        assert bit is not None
        for choice in (False, True):
            self.assign(bit, choice)
            found = self.run()
            if found is not None:
                return found
            self.assign(bit, None)
        return None

    def assign(self, bit, value) -> None:
        if bit[0] == "s":
            _, name, i = bit
            self.sets[name][i] = value
        else:
            _, name, i, j = bit
            self.rels[name][i][j] = value

    def extract(self) -> Model:
        """Build the witness; undetermined bits default to False (empty)."""
        domain = tuple(f"w{i}" for i in range(self.n))
        sets = {v: frozenset(domain[i] for i in range(self.n) if vals[i])
                for v, vals in self.sets.items()}
        rels = {v: frozenset((domain[i], domain[j])
                             for i in range(self.n) for j in range(self.n)
                             if rows[i][j])
                for v, rows in self.rels.items()}
        return Model(domain=domain, sets=sets, rel=rels)


def is_sat(f: Formula, max_size: int = 4, *, threshold_constant: int = 1,
           node_budget: Optional[int] = None):
    """Search models of size 0..max_size over the formula's own vocabulary."""
    if max_size < 0:
        raise SolverError("max_size must be non-negative")
    set_vars = sorted(free_set_vars(f))
    rel_vars = sorted(free_rel_vars(f))
    for n in range(max_size + 1):
        search = _Search(f, n, set_vars, rel_vars, node_budget)
        witness = search.run()
        if witness is not None:
            return Sat(witness)
    threshold = 2 ** (threshold_constant * formula_size(f))
    if max_size >= threshold:
        return Unsat()
    return UnsatUpTo(max_size)


def _dualize(verdict):
    if isinstance(verdict, Sat):
        return CountermodelFound(verdict.witness)
    if isinstance(verdict, Unsat):
        return Valid()
    return NoCountermodelUpTo(verdict.bound)


def is_valid(f: Formula, max_size: int = 4, **kw):
    return _dualize(is_sat(Not(f), max_size, **kw))


def entails(gamma: Sequence[Formula], f: Formula, max_size: int = 4, **kw):
    query: Formula = Not(f)
    for g in reversed(list(gamma)):
        query = And(g, query)
    return _dualize(is_sat(query, max_size, **kw))


# ---------------------------------------------------------------------------
# point-selection minimizer for the mixed-quantifier-free fragment
# ---------------------------------------------------------------------------

def minimize_model(m: Model, f: Formula) -> Model:
    """Select witness points so that every atom keeps its truth value.

    Works for formulas without AE/EA atoms: Leq and AA atoms (and negated
    EE atoms) are universal, hence survive restriction; each true EE atom,
    false AA atom and false Leq atom donates at most two witness points.
    """
    from .semantics import eval_rel_term, eval_set_term

    if detect_fragment(f) is not FragmentClass.NO_MIXED_QUANTIFIERS:
        raise SolverError("minimize_model requires a formula without AE/EA atoms")
    if not eval_formula(m, f):
        raise SolverError("minimize_model requires a model satisfying the formula")

    keep: list[str] = []

    def add(*points: str) -> None:
        for x in points:
            if x not in keep:
                keep.append(x)

    for atom in atoms_of(f):
        if isinstance(atom, Leq):
            left = eval_set_term(m, atom.left)
            right = eval_set_term(m, atom.right)
            if not left <= right:
                add(next(x for x in m.domain if x in left and x not in right))
        else:
            a = eval_set_term(m, atom.left)
            b = eval_set_term(m, atom.right)
            r = eval_rel_term(m, atom.rel)
            if atom.quant is QuantPair.EE:
                for x in m.domain:
                    if x not in a:
                        continue
                    hit = next((y for y in m.domain if y in b and (x, y) in r), None)
                    if hit is not None:
                        add(x, hit)
                        break
            elif atom.quant is QuantPair.AA:
                done = False
                for x in m.domain:
                    if done or x not in a:
                        continue
                    for y in m.domain:
                        if y in b and (x, y) not in r:
                            add(x, y)
                            done = True
                            break
    keep_set = set(keep)
    domain = tuple(x for x in m.domain if x in keep_set)
    return Model(
        domain=domain,
        sets={v: frozenset(members & keep_set) for v, members in m.sets.items()},
        rel={v: frozenset(p for p in pairs if p[0] in keep_set and p[1] in keep_set)
             for v, pairs in m.rel.items()},
    )
