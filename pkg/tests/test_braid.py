import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmab import braid as br
from sigmab.bmc import BicharBMC, eval_braid
from sigmab.words import Leaf, right_nest

W = br.BraidWord.from_ints


@st.composite
def words(draw, n=None, max_len=8):
    n = n or draw(st.integers(2, 5))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(
        lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return W(n, letters)


@st.composite
def word_pairs(draw):
    n = draw(st.integers(2, 5))
    return draw(words(n)), draw(words(n))


def test_free_reduce_examples():
    assert W(2, []).gens == ()
    assert W(2, [1, -1]).to_ints() == ()
    assert W(3, [1, 2, -2, 1]).to_ints() == (1, 1)
    assert br.free_reduce(W(3, [1, 2])) == W(3, [1, 2])


def test_compose_examples():
    w = W(3, [1, 2])
    assert br.compose(br.BraidWord.identity(3), w) == w
    assert br.compose(W(2, [1]), W(2, [-1])).to_ints() == ()
    assert br.compose(W(3, [1]), W(3, [2])).to_ints() == (1, 2)
    with pytest.raises(br.BraidError, match="strand mismatch"):
        br.compose(W(2, [1]), W(3, [1]))


def test_invert_examples():
    assert br.invert(W(2, [])).to_ints() == ()
    assert br.invert(W(2, [1])).to_ints() == (-1,)
    assert br.invert(W(3, [1, -2])).to_ints() == (2, -1)


def test_shift_examples():
    assert br.shift(W(2, []), 2, 5) == br.BraidWord.identity(5)
    assert br.shift(W(2, [1]), 1, 3) == W(3, [2])
    assert br.shift(W(3, [1, 2]), 0, 4) == W(4, [1, 2])
    with pytest.raises(br.BraidError):
        br.shift(W(3, [1]), 2, 4)


def test_block_braiding():
    assert br.block_braiding(1, 1) == W(2, [1])
    assert br.block_braiding(0, 3) == br.BraidWord.identity(3)
    w = br.block_braiding(2, 1)
    assert len(w.gens) == 2 and all(g.sign == 1 for g in w.gens)
    assert br.underlying_permutation(w).apply(["a1", "a2", "c"]) == ["c", "a1", "a2"]


def test_block_braiding_hexagon_in_bichar():
    # sigma_{A(x)B, C} = (sigma_{A,C} (x) 1)(1 (x) sigma_{B,C}) evaluated on labels
    B = BicharBMC(4)
    a, b, c = Leaf(1), Leaf(2), Leaf(3)
    lb = br.LabelledBraid(br.block_braiding(2, 1), (a, b, c))
    block = eval_braid(B, right_nest([a, b, c]), right_nest([c, a, b]), lb)
    two_step = br.LabelledBraid(W(3, [2, 1]), (a, b, c))
    direct = eval_braid(B, right_nest([a, b, c]), right_nest([c, a, b]), two_step)
    assert B.eq(block, direct)
    assert block.scalar == ((1 + 2) * 3) % 4


def test_underlying_permutation_examples():
    assert br.underlying_permutation(W(3, [])) == br.Permutation.identity(3)
    assert br.underlying_permutation(W(2, [1])).one_based() == (2, 1)
    # 1 -> 2 -> 3 -> 1
    p = br.underlying_permutation(W(3, [1, 2]))
    assert p.apply(["x1", "x2", "x3"]) == ["x2", "x3", "x1"]


def test_garside_examples():
    nf = br.garside_nf(W(2, []))
    assert (nf.delta_power, nf.factors) == (0, ())
    nf = br.garside_nf(W(2, [1, 1]))
    assert (nf.delta_power, nf.factors) == (2, ())
    nf = br.garside_nf(W(3, [1, 2, 1]))
    assert (nf.delta_power, nf.factors) == (1, ())


def test_braid_equal_examples():
    assert br.braid_equal(W(3, [1, 2, 1]), W(3, [2, 1, 2]))
    assert not br.braid_equal(W(2, [1]), W(2, [-1]))
    assert br.braid_equal(W(4, [1, 3]), W(4, [3, 1]))
    with pytest.raises(br.BraidError, match="strand mismatch"):
        br.braid_equal(W(2, [1]), W(3, [1]))


def test_sigma_and_inverse_differ_in_bichar():
    B = BicharBMC(4)
    a = Leaf(1)
    src = right_nest([a, a])
    pos = eval_braid(B, src, src, br.LabelledBraid(W(2, [1]), (a, a)))
    neg = eval_braid(B, src, src, br.LabelledBraid(W(2, [-1]), (a, a)))
    assert (pos.scalar, neg.scalar) == (1, 3)


def test_compose_labelled():
    ab = br.LabelledBraid.identity(("a", "b"))
    assert br.compose_labelled(ab, ab) == ab
    s = br.LabelledBraid(W(2, [1]), ("a", "b"))
    assert s.target_labels == ("b", "a")
    back = br.LabelledBraid(W(2, [1]), ("b", "a"))
    both = br.compose_labelled(s, back)
    assert both.braid == W(2, [1, 1]) and both.target_labels == ("a", "b")
    with pytest.raises(br.LabelMismatch):
        br.compose_labelled(s, s)


def test_labelled_rejects_inconsistent_target():
    with pytest.raises(br.LabelMismatch):
        br.LabelledBraid(W(2, [1]), ("a", "b"), ("a", "b"))


def test_sorting_braid_sign_follows_depth():
    # strand 0 moves down past strand 1; it crosses positively iff it is deeper
    assert br.sorting_braid([1, 0], [1, 0]) == W(2, [1])
    assert br.sorting_braid([0, 1], [1, 0]) == W(2, [-1])
    with pytest.raises(br.BraidError):
        br.sorting_braid([0, 0], [1, 0])


def test_text_round_trip():
    for text in ("n=3 s1 s2 s1^-1", "n=1", "n=4 s3^-1 s1"):
        assert br.format_braid(br.parse_braid(text)) == text
    for bad in ("s1 s2", "n=x s1", "n=3 t1", "n=2 s2"):
        with pytest.raises(br.BraidError):
            br.parse_braid(bad)


def test_normal_form_text_round_trip():
    nf = br.garside_nf(W(3, [1, -2, 1]))
    assert br.parse_nf(str(nf)) == nf
    assert br.garside_nf(nf.to_word()) == nf


@settings(max_examples=300, deadline=None)
@given(words())
def test_normal_form_idempotent(w):
    nf = br.garside_nf(w)
    assert br.garside_nf(nf.to_word()) == nf
    assert br.braid_equal(nf.to_word(), w)


@settings(max_examples=300, deadline=None)
@given(words())
def test_inverse_cancels(w):
    assert br.braid_equal(br.compose(w, br.invert(w)), br.BraidWord.identity(w.strands))


@settings(max_examples=300, deadline=None)
@given(word_pairs())
def test_permutation_homomorphism(pair):
    u, v = pair
    assert (br.underlying_permutation(br.compose(u, v))
            == br.underlying_permutation(u) * br.underlying_permutation(v))


@settings(max_examples=200, deadline=None)
@given(words())
def test_equal_braids_evaluate_equally(u):
    v = br.garside_nf(u).to_word()
    B = BicharBMC(4)
    labels = tuple(Leaf(i % 4) for i in range(u.strands))
    src = right_nest(labels)
    tgt = right_nest(br.LabelledBraid(u, labels).target_labels)
    fu = eval_braid(B, src, tgt, br.LabelledBraid(u, labels))
    fv = eval_braid(B, src, tgt, br.LabelledBraid(v, labels))
    assert B.eq(fu, fv)


@settings(max_examples=200, deadline=None)
@given(words())
def test_normal_form_factors_are_proper(w):
    nf = br.garside_nf(w)
    n = w.strands
    ident = tuple(range(n))
    delta = tuple(reversed(range(n)))
    for s in nf.factors:
        assert s != ident and s != delta
