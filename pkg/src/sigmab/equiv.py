"""The functor ``W: B -> U(Sigma B)`` and executable checks that it is a
braided monoidal equivalence.

``W`` sends an object to a single labelled dot in the middle of the box and
a morphism to the clique map it represents. All the constraint maps of
``W`` are represented by identities of ``B``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from . import braid as br
from . import config as cf
from .bmc import eval_braid, eval_word, transport
from .sigma import EMPTY_OBJ, SigmaB, SigmaMor, SigmaObj
from .words import UNIT, Leaf, Tensor, right_nest


def W_obj(b) -> SigmaObj:
    return SigmaObj.of(cf.singleton(b))


def W_mor(S: SigmaB, f) -> SigmaMor:
    B = S.B
    return S.canonical(W_obj(B.dom(f)), W_obj(B.cod(f)), f)


def phi(S: SigmaB, a, b) -> SigmaMor:
    """``Wa / Wb -> W(a (x) b)``, represented by ``1_{a (x) b}``."""
    B = S.B
    ab = B.tensor_obj(a, b)
    return S.canonical(S.vstack(W_obj(a), W_obj(b)), W_obj(ab), B.id(ab))


def phi0(S: SigmaB) -> SigmaMor:
    """``I -> W(I)``, represented by ``1_I``."""
    I = S.B.unit()
    return S.canonical(EMPTY_OBJ, W_obj(I), S.B.id(I))


@dataclass(frozen=True)
class Witness:
    b: object
    iso: SigmaMor
    inverse: SigmaMor


def ess_surj_witness(S: SigmaB, X: SigmaObj) -> Witness:
    """``X ~ W<X>`` with ``<X>`` the right-nested tensor of its labels."""
    b = S.eval_obj(X)
    Wb = W_obj(b)
    one = S.B.id(b)
    return Witness(b, S.canonical(X, Wb, one), S.canonical(Wb, X, one))


def witness_is_iso(S: SigmaB, w: Witness) -> bool:
    there = S.compose(w.iso, w.inverse)
    back = S.compose(w.inverse, w.iso)
    return S.equal(there, S.id(there.source)) and S.equal(back, S.id(back.source))


# -- functor laws ------------------------------------------------------------

def check_functor_id(S: SigmaB, a) -> bool:
    return S.equal(W_mor(S, S.B.id(a)), S.id(W_obj(a)))


def check_functor_compose(S: SigmaB, f, g) -> bool:
    B = S.B
    return S.equal(W_mor(S, B.compose(f, g)), S.compose(W_mor(S, f), W_mor(S, g)))


def check_phi_natural(S: SigmaB, f, g) -> bool:
    B = S.B
    a, a2, b, b2 = B.dom(f), B.cod(f), B.dom(g), B.cod(g)
    lhs = S.compose(S.vtensor(W_mor(S, f), W_mor(S, g)), phi(S, a2, b2))
    rhs = S.compose(phi(S, a, b), W_mor(S, B.tensor(f, g)))
    return S.equal(lhs, rhs)


def check_monoidal_assoc(S: SigmaB, a, b, c) -> bool:
    B = S.B
    Wa, Wb, Wc = W_obj(a), W_obj(b), W_obj(c)
    lhs = S.compose_all(
        S.vtensor(phi(S, a, b), S.id(Wc)),
        phi(S, B.tensor_obj(a, b), c),
        W_mor(S, B.assoc(a, b, c)),
    )
    rhs = S.compose_all(
        S.vassoc(Wa, Wb, Wc),
        S.vtensor(S.id(Wa), phi(S, b, c)),
        phi(S, a, B.tensor_obj(b, c)),
    )
    return S.equal(lhs, rhs)


def check_monoidal_units(S: SigmaB, a) -> bool:
    B = S.B
    I = B.unit()
    Wa = W_obj(a)
    left = S.compose_all(S.vtensor(phi0(S), S.id(Wa)), phi(S, I, a), W_mor(S, B.lunit(a)))
    right = S.compose_all(S.vtensor(S.id(Wa), phi0(S)), phi(S, a, I), W_mor(S, B.runit(a)))
    return S.equal(left, S.vlunit(Wa)) and S.equal(right, S.vrunit(Wa))


def check_braided(S: SigmaB, a, b) -> bool:
    """The braided-functor square ``eh ; phi(b, a) = phi(a, b) ; W(sigma)``."""
    lhs = S.compose(S.eh_braiding(W_obj(a), W_obj(b)), phi(S, b, a))
    rhs = S.compose(phi(S, a, b), W_mor(S, S.B.braid(a, b)))
    return S.equal(lhs, rhs)


def eh_representative(S: SigmaB, a, b):
    """The morphism of ``B`` representing the braiding ``Wa / Wb -> Wb / Wa``."""
    return S.eh_braiding(W_obj(a), W_obj(b)).f


def eh_is_sigma(S: SigmaB, a, b) -> bool:
    """Both sides live in ``B(a (x) b, b (x) a)`` once the identity-represented
    constraints are stripped off."""
    return S.B.eq(eh_representative(S, a, b), S.B.braid(a, b))


# -- full and faithful -------------------------------------------------------

def braid_words(n: int, max_len: int) -> Iterable[br.BraidWord]:
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for k in range(max_len + 1):
        for combo in itertools.product(letters, repeat=k):
            yield br.BraidWord.from_ints(n, combo)


def check_faithful_full(S: SigmaB, labels: tuple, max_len: int = 6) -> tuple[bool, bool, int]:
    """Faithfulness and full round-trip on every braid word up to ``max_len``.

    The words act on the right-nested tensor of ``labels`` (objects of
    ``B``); each one gives a morphism ``a -> b`` with ``b`` the right-nested
    tensor of the permuted labels. Returns ``(faithful, full, cases)``.
    """
    B = S.B
    n = len(labels)
    src = right_nest(labels)
    a = eval_word(B, src)
    seen: dict = {}
    keys: dict = {}
    faithful = full = True
    cases = 0
    for w in braid_words(n, max_len):
        cases += 1
        lb = br.LabelledBraid(w, tuple(labels))
        tgt = right_nest(lb.target_labels)
        f = eval_braid(B, src, tgt, lb)
        m = W_mor(S, f)
        # faithful: distinct morphisms of B give distinct clique maps
        nf = B.key(f)
        k = S.key(m)
        if seen.setdefault(k, nf) != nf or keys.setdefault(nf, k) != k:
            faithful = False
        # full: a representative on a padded, re-bracketed source round-trips
        if not _round_trip(S, a, f):
            full = False
    return faithful, full, cases


def _round_trip(S: SigmaB, a, f) -> bool:
    B = S.B
    Wa, Wb = W_obj(a), W_obj(B.cod(f))
    padded = Tensor(UNIT, Leaf(a))
    rep = cf.LinearRep(padded, br.LabelledBraid.identity((a,)))
    g = B.compose(transport(B, padded, Leaf(a)), f)
    m = S.raw(Wa, Wb, rep, cf.canonical_rep(Wb.key), g)
    back = W_mor(S, S.normalize(m).f)
    return S.equal(back, m) and B.eq(S.normalize(m).f, f)
