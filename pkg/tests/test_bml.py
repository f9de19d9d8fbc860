"""Modal translation and its semantic adequacy."""

import random

import pytest

from relsyl.bml import (
    BAnd, BBot, BImplies, BNot, BTop, BmlError, Box, Diamond, PropVar,
    eval_bml, print_bml, translate,
)
from relsyl.semantics import empty_model, eval_formula, random_model
from relsyl.solver import formula_size
from relsyl.syntax import (
    Leq, Not, RelCompl, RelConv, RelOne, RelVar, RelZero, SetVar,
    parse_formula,
)
from tests.test_semantics import _all_models
from tests.test_syntax import _rand_formula

P = parse_formula
A, B = PropVar("a"), PropVar("b")
R = RelVar("r")


# ---------------------------------------------------------------------------
# translation shapes
# ---------------------------------------------------------------------------

def test_leq_translation():
    assert translate(P("a <= b")) == Box(RelOne(), BImplies(A, B))


def test_ee_translation():
    assert translate(P("EE(a,b)[r]")) == \
        Diamond(RelOne(), BAnd(A, Diamond(R, B)))


def test_ae_translation():
    assert translate(P("AE(a,b)[r]")) == \
        Box(RelOne(), BImplies(A, Diamond(R, B)))


def test_aa_translation_uses_negation_form():
    assert translate(P("AA(a,b)[r]")) == \
        Box(RelOne(), BImplies(A, Box(RelCompl(R), BNot(B))))


def test_ea_translation_uses_negation_form():
    assert translate(P("EA(a,b)[r]")) == \
        Diamond(RelOne(), BAnd(A, Box(RelCompl(R), BNot(B))))


def test_connectives_are_homomorphic():
    f = P("EE(a,b)[r]")
    assert translate(Not(f)) == BNot(translate(f))
    g = P("EE(a,b)[r] & a <= b")
    assert g.left == f
    assert translate(g) == BAnd(translate(f), translate(g.right))


def test_set_terms_become_boolean_combinations():
    got = translate(P("a * -b <= 0"))
    assert got == Box(RelOne(), BImplies(BAnd(A, BNot(B)), BBot()))


def _bml_size(f):
    n = 1
    for attr in ("arg", "left", "right"):
        child = getattr(f, attr, None)
        if child is not None:
            n += _bml_size(child)
    return n


def test_translation_size_linear():
    rng = random.Random(61)
    for _ in range(200):
        f = _rand_formula(rng, 3)
        assert _bml_size(translate(f)) <= 6 * formula_size(f)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def test_box_one_top_true_everywhere():
    m = random_model(3, [], [], seed=1)
    for x in m.domain:
        assert eval_bml(m, x, Box(RelOne(), BTop()))


def test_diamond_zero_false_everywhere():
    m = random_model(3, [], [], seed=2)
    for x in m.domain:
        assert not eval_bml(m, x, Diamond(RelZero(), BTop()))


def test_eval_rejects_empty_domain():
    with pytest.raises(BmlError):
        eval_bml(empty_model(), "x", BTop())


def test_eval_rejects_foreign_point():
    m = random_model(2, [], [], seed=3)
    with pytest.raises(BmlError):
        eval_bml(m, "nope", BTop())


def test_atomic_translations_point_independent():
    rng = random.Random(62)
    atoms = [P("a <= b"), P("EE(a,b)[r]"), P("AE(a,b)[r]"),
             P("AA(a,b)[r]"), P("EA(a,b)[r]")]
    for i in range(500):
        m = random_model(rng.randint(1, 4), ["a", "b"], ["r"], seed=7000 + i)
        for f in atoms:
            bf = translate(f)
            values = {eval_bml(m, x, bf) for x in m.domain}
            assert len(values) == 1
            assert values == {eval_formula(m, f)}


def test_aa_translation_exhaustively_adequate():
    f = P("AA(a,b)[r]")
    bf = translate(f)
    for n in (1, 2, 3):
        for m in _all_models(n, ["a", "b"], ["r"]):
            want = eval_formula(m, f)
            for x in m.domain:
                assert eval_bml(m, x, bf) == want


def test_random_formulas_adequate():
    rng = random.Random(63)
    for i in range(500):
        f = _rand_formula(rng, 3)
        m = random_model(rng.randint(1, 4), ["a", "b", "c"], ["r", "s"],
                         seed=8000 + i)
        bf = translate(f)
        want = eval_formula(m, f)
        for x in m.domain:
            assert eval_bml(m, x, bf) == want


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def test_print_bml_examples():
    assert print_bml(translate(P("AA(a,b)[r]"))) == "[1](a -> [-r]!b)"
    assert print_bml(translate(P("EE(a,b)[r]"))) == "<1>(a & <r>b)"
    assert print_bml(Diamond(RelConv(R), BTop())) == "<r^>true"
