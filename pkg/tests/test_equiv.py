import random

import pytest

from sigmab import braid as br
from sigmab import config as cf
from sigmab import equiv as eq
from sigmab.bmc import BicharBMC, FreeBMC, PermBMC
from sigmab.sigma import EMPTY_OBJ, SigmaB, SigmaObj, random_object
from sigmab.words import UNIT, Leaf, Tensor

FREE = FreeBMC()
a, b, c = Leaf("a"), Leaf("b"), Leaf("c")
INSTANCES = [FreeBMC(), PermBMC(), BicharBMC(4)]


@pytest.fixture
def S():
    return SigmaB(FREE)


def test_W_obj_examples():
    assert len(eq.W_obj(UNIT).key.levels) == 1
    key = eq.W_obj(Tensor(a, b)).key
    assert len(key.levels) == 1 and key.labels() == (Tensor(a, b),)
    shifted = SigmaObj.of(cf.Configuration([cf.point("1/4", "1/2", a)]))
    assert shifted == eq.W_obj(a)


def test_W_mor_examples(S):
    assert S.equal(eq.W_mor(S, FREE.id(a)), S.id(eq.W_obj(a)))
    m = eq.W_mor(S, FREE.braid(a, b))
    assert m.f.braid == br.BraidWord.from_ints(2, [1])
    f, g = FREE.braid(a, b), FREE.braid_inv(a, b)
    assert eq.check_functor_compose(S, f, g)


def test_phi_examples(S):
    m = eq.phi(S, UNIT, UNIT)
    assert FREE.eq(m.f, FREE.id(Tensor(UNIT, UNIT)))
    assert eq.check_monoidal_assoc(S, a, b, c)
    assert eq.check_monoidal_units(S, a)
    p0 = eq.phi0(S)
    assert p0.source == EMPTY_OBJ and FREE.eq(p0.f, FREE.id(UNIT))


def test_ess_surj_examples(S):
    w = eq.ess_surj_witness(S, eq.W_obj(a))
    assert w.b == a and S.is_identity(w.iso)
    three = SigmaObj.of(cf.Configuration([
        cf.point("1/4", "3/4", Leaf("b1")), cf.point("3/4", "3/4", Leaf("b2")),
        cf.point("1/2", "1/4", Leaf("b3"))]))
    w = eq.ess_surj_witness(S, three)
    assert w.b == Tensor(Leaf("b1"), Tensor(Leaf("b2"), Leaf("b3")))
    assert FREE.eq(w.iso.f, FREE.id(w.b))
    assert eq.witness_is_iso(S, w)
    assert eq.ess_surj_witness(S, EMPTY_OBJ).b == UNIT


def test_faithful_distinguishes_inverse(S):
    m1 = eq.W_mor(S, FREE.braid(a, b))
    m2 = eq.W_mor(S, FREE.braid_inv(b, a))
    assert m1.source == m2.source and m1.target == m2.target
    assert not S.equal(m1, m2)


def test_faithful_full_small(S):
    faithful, full, cases = eq.check_faithful_full(S, (a, b, c), max_len=3)
    assert faithful and full and cases == 1 + 4 + 16 + 64


def test_braided_examples(S):
    assert eq.check_braided(S, UNIT, UNIT)
    assert eq.check_braided(S, a, b)
    B = BicharBMC(4)
    T = SigmaB(B)
    one = Leaf(1)
    assert eq.check_braided(T, one, one)
    assert eq.eh_representative(T, one, one).scalar == 1
    assert T.normalize(eq.W_mor(T, B.braid(one, one))).f.scalar == 1


@pytest.mark.parametrize("B", INSTANCES, ids=lambda B: B.name)
def test_functor_sampled(B):
    S = SigmaB(B)
    rng = random.Random(4)
    for _ in range(25):
        f = B.random_morphism(rng, B.random_object(rng, 2))
        g = B.random_morphism(rng, B.random_object(rng, 2))
        assert eq.check_functor_id(S, B.dom(f))
        assert eq.check_phi_natural(S, f, g)
        assert eq.check_braided(S, B.dom(f), B.dom(g))
        X = random_object(S, rng, 5)
        assert eq.witness_is_iso(S, eq.ess_surj_witness(S, X))
