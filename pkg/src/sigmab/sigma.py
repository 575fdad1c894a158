"""The two-tensor category built from a braided monoidal category ``B``.

Objects are slide classes of configurations labelled by objects of ``B``.
A morphism is a clique map, stored through one representative: a
linearisation of the source, one of the target, and a morphism of ``B``
between the evaluated words. Every linearisation is recorded relative to
the canonical one (canonical strand order, right-nested word, trivial
braid), so the connecting isomorphism from the canonical representative is
just the evaluated linearising braid and normalizing a morphism means
conjugating by those connecting isomorphisms.

The vertical tensor stacks boxes and is weak; the horizontal tensor places
boxes side by side and is strict because slide classes forget horizontal
position. Reading a horizontal composite column by column instead of row by
row needs a reordering braid; its crossing sign (``crossing_sign``) is the
one global orientation choice of the construction.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Hashable, Sequence

from . import braid as br
from . import config as cf
from .bmc import BMC, CategoryError, eval_braid, eval_word
from .words import UNIT, Leaf, Tensor, Word, flatten, format_word, right_nest


class SigmaError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SigmaObj:
    key: cf.SlideKey
    witness: cf.Configuration

    def __post_init__(self):
        if cf.slide_key(self.witness) != self.key:
            raise SigmaError("witness is not in the slide class of the key")

    @classmethod
    def of(cls, X: cf.Configuration) -> SigmaObj:
        return cls(cf.slide_key(X), X)

    @classmethod
    def from_key(cls, key: cf.SlideKey) -> SigmaObj:
        return cls(key, cf.key_witness(key))

    def __eq__(self, other):
        return isinstance(other, SigmaObj) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SigmaObj({self.key})"

    def labels(self) -> tuple:
        return self.key.labels()


EMPTY_OBJ = SigmaObj.of(cf.EMPTY)


@dataclass(frozen=True)
class SigmaMor:
    """A representative of a clique map ``source -> target``."""

    source: SigmaObj
    target: SigmaObj
    src_rep: cf.LinearRep
    tgt_rep: cf.LinearRep
    f: object

    def __post_init__(self):
        if self.src_rep.gamma.source_labels != self.source.labels():
            raise SigmaError("source linearisation does not start at the source object")
        if self.tgt_rep.gamma.source_labels != self.target.labels():
            raise SigmaError("target linearisation does not start at the target object")

    def is_canonical(self) -> bool:
        return (self.src_rep == cf.canonical_rep(self.source.key)
                and self.tgt_rep == cf.canonical_rep(self.target.key))


def mediating_braid(rep0: cf.LinearRep, rep1: cf.LinearRep) -> br.LabelledBraid:
    """The braid ``rep0.word -> rep1.word`` with ``gamma0 ; mediating = gamma1``."""
    if rep0.gamma.source_labels != rep1.gamma.source_labels:
        raise SigmaError("linearisations of different configurations")
    return br.compose_labelled(br.invert_labelled(rep0.gamma), rep1.gamma)


def column_reorder(keys: Sequence[cf.SlideKey], sign: int = 1) -> br.LabelledBraid:
    """Braid from the row-major order of ``keys[0] | keys[1] | ...`` to column order.

    Strand order of a horizontal composite is read top level first and left
    to right; the column order lists each column's strands in its own
    canonical order, leftmost column first. A strand of a right column that
    drops below a strand of a left column crosses it positively (times
    ``sign``).
    """
    items = []
    for col, key in enumerate(keys):
        idx = 0
        for y, labels in key.levels:
            for label in labels:
                items.append((y.to_fraction(), col, idx, label))
                idx += 1
    row_major = sorted(items, key=lambda t: (-t[0], t[1], t[2]))
    position = {(t[1], t[2]): i for i, t in enumerate(row_major)}
    col_major = sorted(items, key=lambda t: (t[1], t[2]))
    order = [position[(t[1], t[2])] for t in col_major]
    depths = [t[1] for t in row_major]
    word = br.sorting_braid(depths, order, sign)
    return br.LabelledBraid(word, tuple(t[3] for t in row_major))


def grid_reorder(rows: Sequence[Sequence[cf.SlideKey]], order: str, sign: int = 1) -> br.LabelledBraid:
    """Reorder braid for a grid ``rows[r][c]`` stacked vertically then horizontally.

    ``order`` is ``"rows"`` (each row read column by column, top row first)
    or ``"cols"`` (each column read top to bottom, leftmost column first).
    The object is ``(r0c0 | r0c1 | ...) / (r1c0 | ...) / ...`` with right-nested
    vertical stacking; only relative heights matter, which are preserved
    when rows occupy disjoint height bands.
    """
    items = []
    for r, row in enumerate(rows):
        for c, key in enumerate(row):
            idx = 0
            for y, labels in key.levels:
                for label in labels:
                    items.append((r, -y.to_fraction(), c, idx, label))
                    idx += 1
    row_major = sorted(items, key=lambda t: (t[0], t[1], t[2], t[3]))
    position = {(t[0], t[2], t[3]): i for i, t in enumerate(row_major)}
    if order == "rows":
        target = sorted(items, key=lambda t: (t[0], t[2], t[3]))
    elif order == "cols":
        target = sorted(items, key=lambda t: (t[2], t[0], t[3]))
    else:
        raise ValueError(order)
    perm = [position[(t[0], t[2], t[3])] for t in target]
    depths = [t[2] for t in row_major]
    return br.LabelledBraid(br.sorting_braid(depths, perm, sign), tuple(t[4] for t in row_major))


class SigmaB:
    """The construction over a fixed braided monoidal category ``B``."""

    def __init__(self, B: BMC, crossing_sign: int = 1):
        if crossing_sign not in (1, -1):
            raise ValueError("crossing_sign must be +1 or -1")
        self.B = B
        self.crossing_sign = crossing_sign

    # -- objects -----------------------------------------------------------

    def obj(self, X: cf.Configuration) -> SigmaObj:
        return SigmaObj.of(X)

    def empty(self) -> SigmaObj:
        return EMPTY_OBJ

    def vstack(self, X: SigmaObj, Y: SigmaObj) -> SigmaObj:
        return SigmaObj.of(cf.vstack(X.witness, Y.witness))

    def hstack(self, X: SigmaObj, Y: SigmaObj) -> SigmaObj:
        return SigmaObj.of(cf.hstack(X.witness, Y.witness))

    def canonical_word(self, X: SigmaObj) -> Word:
        return right_nest(X.labels())

    def eval_obj(self, X: SigmaObj):
        return eval_word(self.B, self.canonical_word(X))

    # -- representatives ---------------------------------------------------

    def connecting(self, X: SigmaObj, rep: cf.LinearRep):
        """Connecting isomorphism from the canonical representative of ``X`` to ``rep``."""
        return eval_braid(self.B, self.canonical_word(X), rep.word, rep.gamma)

    def connecting_inv(self, X: SigmaObj, rep: cf.LinearRep):
        return eval_braid(self.B, rep.word, self.canonical_word(X), br.invert_labelled(rep.gamma))

    def raw(self, source: SigmaObj, target: SigmaObj, src_rep: cf.LinearRep,
            tgt_rep: cf.LinearRep, f) -> SigmaMor:
        """An unnormalized representative, checked for well-typedness."""
        B = self.B
        if B.dom(f) != eval_word(B, src_rep.word):
            raise SigmaError("representative does not start at the source word")
        if B.cod(f) != eval_word(B, tgt_rep.word):
            raise SigmaError("representative does not end at the target word")
        return SigmaMor(source, target, src_rep, tgt_rep, f)

    def mor(self, source, target, src_rep, tgt_rep, f) -> SigmaMor:
        return self.normalize(self.raw(source, target, src_rep, tgt_rep, f))

    def normalize(self, m: SigmaMor) -> SigmaMor:
        """Move ``m`` onto the canonical representatives of its endpoints."""
        if m.is_canonical():
            return m
        B = self.B
        f = B.compose_all(
            self.connecting(m.source, m.src_rep),
            m.f,
            self.connecting_inv(m.target, m.tgt_rep),
        )
        return SigmaMor(m.source, m.target, cf.canonical_rep(m.source.key),
                        cf.canonical_rep(m.target.key), f)

    def parallel(self, m1: SigmaMor, m2: SigmaMor) -> bool:
        return m1.source == m2.source and m1.target == m2.target

    def equal(self, m1: SigmaMor, m2: SigmaMor) -> bool:
        if not self.parallel(m1, m2):
            return False
        return self.B.eq(self.normalize(m1).f, self.normalize(m2).f)

    def key(self, m: SigmaMor) -> Hashable:
        return (m.source.key, m.target.key, self.B.key(self.normalize(m).f))

    def is_identity(self, m: SigmaMor) -> bool:
        return m.source == m.target and self.equal(m, self.id(m.source))

    # -- category ----------------------------------------------------------

    def at(self, X: SigmaObj, g) -> SigmaMor:
        """The clique map ``X -> X`` represented on canonical reps by ``g``."""
        return self.canonical(X, X, g)

    def canonical(self, X: SigmaObj, Y: SigmaObj, f) -> SigmaMor:
        return self.raw(X, Y, cf.canonical_rep(X.key), cf.canonical_rep(Y.key), f)

    def id(self, X: SigmaObj) -> SigmaMor:
        return self.canonical(X, X, self.B.id(self.eval_obj(X)))

    def compose(self, m1: SigmaMor, m2: SigmaMor) -> SigmaMor:
        """``m1`` followed by ``m2``."""
        if m1.target != m2.source:
            raise SigmaError(f"cannot compose: {m1.target.key} != {m2.source.key}")
        n1, n2 = self.normalize(m1), self.normalize(m2)
        return SigmaMor(n1.source, n2.target, n1.src_rep, n2.tgt_rep,
                        self.B.compose(n1.f, n2.f))

    def compose_all(self, *ms: SigmaMor) -> SigmaMor:
        out = ms[0]
        for m in ms[1:]:
            out = self.compose(out, m)
        return out

    def inverse(self, m: SigmaMor) -> SigmaMor:
        n = self.normalize(m)
        return SigmaMor(n.target, n.source, n.tgt_rep, n.src_rep, self.B.inverse(n.f))

    # -- vertical tensor (weak) --------------------------------------------

    def vtensor(self, m1: SigmaMor, m2: SigmaMor) -> SigmaMor:
        n1, n2 = self.normalize(m1), self.normalize(m2)
        source = self.vstack(n1.source, n2.source)
        target = self.vstack(n1.target, n2.target)
        src_rep = self._stacked_rep(n1.source, n2.source)
        tgt_rep = self._stacked_rep(n1.target, n2.target)
        return self.mor(source, target, src_rep, tgt_rep, self.B.tensor(n1.f, n2.f))

    def _stacked_rep(self, X: SigmaObj, Y: SigmaObj) -> cf.LinearRep:
        # canonical order of X/Y is X's strands then Y's: no braid needed
        labels = X.labels() + Y.labels()
        word = Tensor(self.canonical_word(X), self.canonical_word(Y))
        return cf.LinearRep(word, br.LabelledBraid.identity(labels))

    def vassoc(self, X: SigmaObj, Y: SigmaObj, Z: SigmaObj) -> SigmaMor:
        """``(X/Y)/Z -> X/(Y/Z)`` represented by the associator of ``B``."""
        cx, cy, cz = (self.canonical_word(O) for O in (X, Y, Z))
        labels = X.labels() + Y.labels() + Z.labels()
        ident = br.LabelledBraid.identity(labels)
        source = self.vstack(self.vstack(X, Y), Z)
        target = self.vstack(X, self.vstack(Y, Z))
        f = self.B.assoc(*(self.eval_obj(O) for O in (X, Y, Z)))
        return self.mor(source, target, cf.LinearRep(Tensor(Tensor(cx, cy), cz), ident),
                        cf.LinearRep(Tensor(cx, Tensor(cy, cz)), ident), f)

    def vassoc_inv(self, X, Y, Z) -> SigmaMor:
        cx, cy, cz = (self.canonical_word(O) for O in (X, Y, Z))
        ident = br.LabelledBraid.identity(X.labels() + Y.labels() + Z.labels())
        source = self.vstack(X, self.vstack(Y, Z))
        target = self.vstack(self.vstack(X, Y), Z)
        f = self.B.assoc_inv(*(self.eval_obj(O) for O in (X, Y, Z)))
        return self.mor(source, target, cf.LinearRep(Tensor(cx, Tensor(cy, cz)), ident),
                        cf.LinearRep(Tensor(Tensor(cx, cy), cz), ident), f)

    def vlunit(self, X: SigmaObj) -> SigmaMor:
        """``I/X -> X``"""
        source = self.vstack(EMPTY_OBJ, X)
        rep = cf.LinearRep(Tensor(UNIT, self.canonical_word(X)), br.LabelledBraid.identity(X.labels()))
        return self.mor(source, X, rep, cf.canonical_rep(X.key), self.B.lunit(self.eval_obj(X)))

    def vlunit_inv(self, X: SigmaObj) -> SigmaMor:
        target = self.vstack(EMPTY_OBJ, X)
        rep = cf.LinearRep(Tensor(UNIT, self.canonical_word(X)), br.LabelledBraid.identity(X.labels()))
        return self.mor(X, target, cf.canonical_rep(X.key), rep, self.B.lunit_inv(self.eval_obj(X)))

    def vrunit(self, X: SigmaObj) -> SigmaMor:
        """``X/I -> X``"""
        source = self.vstack(X, EMPTY_OBJ)
        rep = cf.LinearRep(Tensor(self.canonical_word(X), UNIT), br.LabelledBraid.identity(X.labels()))
        return self.mor(source, X, rep, cf.canonical_rep(X.key), self.B.runit(self.eval_obj(X)))

    def vrunit_inv(self, X: SigmaObj) -> SigmaMor:
        target = self.vstack(X, EMPTY_OBJ)
        rep = cf.LinearRep(Tensor(self.canonical_word(X), UNIT), br.LabelledBraid.identity(X.labels()))
        return self.mor(X, target, cf.canonical_rep(X.key), rep, self.B.runit_inv(self.eval_obj(X)))

    # -- horizontal tensor (strict) ----------------------------------------

    def column_rep(self, parts: Sequence[SigmaObj], word: Word) -> cf.LinearRep:
        """Linearisation of ``parts[0] | parts[1] | ...`` reading column by column.

        ``word`` must have the columns' leaves in column order.
        """
        gamma = column_reorder([P.key for P in parts], self.crossing_sign)
        return cf.LinearRep(word, gamma)

    def htensor(self, m1: SigmaMor, m2: SigmaMor) -> SigmaMor:
        n1, n2 = self.normalize(m1), self.normalize(m2)
        source = self.hstack(n1.source, n2.source)
        target = self.hstack(n1.target, n2.target)
        src_rep = self.column_rep(
            [n1.source, n2.source],
            Tensor(self.canonical_word(n1.source), self.canonical_word(n2.source)))
        tgt_rep = self.column_rep(
            [n1.target, n2.target],
            Tensor(self.canonical_word(n1.target), self.canonical_word(n2.target)))
        return self.mor(source, target, src_rep, tgt_rep, self.B.tensor(n1.f, n2.f))

    def hassoc(self, X: SigmaObj, Y: SigmaObj, Z: SigmaObj) -> SigmaMor:
        """``(X|Y)|Z -> X|(Y|Z)`` represented by the associator on column reps."""
        cx, cy, cz = (self.canonical_word(O) for O in (X, Y, Z))
        source = self.hstack(self.hstack(X, Y), Z)
        target = self.hstack(X, self.hstack(Y, Z))
        src_rep = self.column_rep([X, Y, Z], Tensor(Tensor(cx, cy), cz))
        tgt_rep = self.column_rep([X, Y, Z], Tensor(cx, Tensor(cy, cz)))
        f = self.B.assoc(*(self.eval_obj(O) for O in (X, Y, Z)))
        return self.raw(source, target, src_rep, tgt_rep, f)

    def hlunit(self, X: SigmaObj) -> SigmaMor:
        """``I|X -> X`` represented by the left unitor on the column rep."""
        source = self.hstack(EMPTY_OBJ, X)
        src_rep = self.column_rep([EMPTY_OBJ, X], Tensor(UNIT, self.canonical_word(X)))
        return self.raw(source, X, src_rep, cf.canonical_rep(X.key), self.B.lunit(self.eval_obj(X)))

    def hlunit_inv(self, X: SigmaObj) -> SigmaMor:
        target = self.hstack(EMPTY_OBJ, X)
        tgt_rep = self.column_rep([EMPTY_OBJ, X], Tensor(UNIT, self.canonical_word(X)))
        return self.raw(X, target, cf.canonical_rep(X.key), tgt_rep, self.B.lunit_inv(self.eval_obj(X)))

    def hrunit(self, X: SigmaObj) -> SigmaMor:
        """``X|I -> X``"""
        source = self.hstack(X, EMPTY_OBJ)
        src_rep = self.column_rep([X, EMPTY_OBJ], Tensor(self.canonical_word(X), UNIT))
        return self.raw(source, X, src_rep, cf.canonical_rep(X.key), self.B.runit(self.eval_obj(X)))

    def hrunit_inv(self, X: SigmaObj) -> SigmaMor:
        target = self.hstack(X, EMPTY_OBJ)
        tgt_rep = self.column_rep([X, EMPTY_OBJ], Tensor(self.canonical_word(X), UNIT))
        return self.raw(X, target, cf.canonical_rep(X.key), tgt_rep, self.B.runit_inv(self.eval_obj(X)))

    # -- interchange -------------------------------------------------------

    def interchange_reps(self, W, X, Y, Z) -> tuple[cf.LinearRep, cf.LinearRep]:
        """Row-wise and column-wise linearisations of the 2x2 grid ``[[W, X], [Y, Z]]``."""
        grid = [[W.key, X.key], [Y.key, Z.key]]
        cw, cx, cy, cz = (self.canonical_word(O) for O in (W, X, Y, Z))
        rows = cf.LinearRep(Tensor(Tensor(cw, cx), Tensor(cy, cz)),
                            grid_reorder(grid, "rows", self.crossing_sign))
        cols = cf.LinearRep(Tensor(Tensor(cw, cy), Tensor(cx, cz)),
                            grid_reorder(grid, "cols", self.crossing_sign))
        return rows, cols

    def interchange(self, W, X, Y, Z) -> SigmaMor:
        """The identity clique map ``(W|X)/(Y|Z) -> (W/Y)|(X/Z)``.

        It is represented between the row-wise and column-wise
        linearisations by their connecting isomorphism in ``B``.
        """
        source = self.vstack(self.hstack(W, X), self.hstack(Y, Z))
        target = self.hstack(self.vstack(W, Y), self.vstack(X, Z))
        rows, cols = self.interchange_reps(W, X, Y, Z)
        f = eval_braid(self.B, rows.word, cols.word, mediating_braid(rows, cols))
        return self.raw(source, target, rows, cols, f)

    def interchange_inv(self, W, X, Y, Z) -> SigmaMor:
        """``(W/Y)|(X/Z) -> (W|X)/(Y|Z)``"""
        source = self.hstack(self.vstack(W, Y), self.vstack(X, Z))
        target = self.vstack(self.hstack(W, X), self.hstack(Y, Z))
        rows, cols = self.interchange_reps(W, X, Y, Z)
        f = eval_braid(self.B, cols.word, rows.word, mediating_braid(cols, rows))
        return self.raw(source, target, cols, rows, f)

    def interchange_holds(self, f: SigmaMor, g: SigmaMor, h: SigmaMor, j: SigmaMor) -> bool:
        lhs = self.vtensor(self.htensor(f, g), self.htensor(h, j))
        rhs = self.htensor(self.vtensor(f, h), self.vtensor(g, j))
        return self.equal(lhs, rhs)

    # -- Eckmann-Hilton braiding -------------------------------------------

    def eh_steps(self, A: SigmaObj, Bo: SigmaObj) -> list[SigmaMor]:
        """The six clique maps whose composite is the braiding ``A/B -> B/A``."""
        I = EMPTY_OBJ
        return [
            self.vtensor(self.hlunit_inv(A), self.hrunit_inv(Bo)),   # A/B = (I|A)/(B|I)
            self.interchange(I, A, Bo, I),                           # = (I/B)|(A/I)
            self.htensor(self.vlunit(Bo), self.vrunit(A)),           # -> B|A
            self.htensor(self.vrunit_inv(Bo), self.vlunit_inv(A)),   # -> (B/I)|(I/A)
            self.interchange_inv(Bo, I, I, A),                       # = (B|I)/(I|A)
            self.vtensor(self.hrunit(Bo), self.hlunit(A)),           # = B/A
        ]

    def eh_braiding(self, A: SigmaObj, Bo: SigmaObj) -> SigmaMor:
        return self.normalize(self.compose_all(*self.eh_steps(A, Bo)))

    # -- debug dump --------------------------------------------------------

    def to_json(self, m: SigmaMor) -> str:
        fmt = self.B.format_object

        def rep(r: cf.LinearRep):
            return {"word": format_word(r.word, fmt), "gamma": br.format_braid(r.gamma.braid)}

        def key(k: cf.SlideKey):
            return [{"y": str(y), "labels": [fmt(l) for l in labels]} for y, labels in k.levels]

        return json.dumps({
            "source": key(m.source.key),
            "target": key(m.target.key),
            "src_rep": rep(m.src_rep),
            "tgt_rep": rep(m.tgt_rep),
            "f": self.B.mor_json(m.f),
        }, indent=2, sort_keys=True)


# -- sampling --------------------------------------------------------------

_LEVELS = [cf.Dyadic(k, 4) for k in range(1, 16)]


def random_config(rng: random.Random, labels: Sequence[Hashable], max_levels: int = 3) -> cf.Configuration:
    """Place ``labels`` on a few random dyadic levels at random x positions."""
    ys = rng.sample(_LEVELS, k=min(max_levels, len(_LEVELS)))
    pts = []
    used = set()
    for label in labels:
        while True:
            y = rng.choice(ys)
            x = cf.Dyadic(rng.randrange(1, 64, 2), 6)
            if (x, y) not in used:
                used.add((x, y))
                break
        pts.append(cf.LPoint(x, y, label))
    return cf.Configuration(pts)


def random_object(S: SigmaB, rng: random.Random, max_points: int = 3) -> SigmaObj:
    B = S.B
    n = rng.randint(0, max_points)
    labels = []
    for _ in range(n):
        if rng.random() < 0.8:
            labels.append(Leaf(rng.choice(B.atoms)))
        else:
            labels.append(B.random_object(rng, 2))
    return SigmaObj.of(random_config(rng, labels))


def random_mor(S: SigmaB, rng: random.Random, source: SigmaObj, max_len: int = 4) -> SigmaMor:
    """A clique map out of ``source`` to a random configuration of the permuted labels."""
    B = S.B
    X = source
    src_word = S.canonical_word(X)
    n = len(X.labels())
    letters = []
    if n >= 2:
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))]
    lb = br.LabelledBraid(br.BraidWord.from_ints(n, letters), X.labels())
    target = SigmaObj.of(random_config(rng, lb.target_labels))
    tgt_word = right_nest(lb.target_labels)
    f = eval_braid(B, src_word, tgt_word, lb)
    # target's canonical order may differ from the braid's end order
    perm_to_canonical = _relabel_braid(lb.target_labels, target.labels())
    f = B.compose(f, eval_braid(B, tgt_word, S.canonical_word(target), perm_to_canonical))
    if hasattr(B, "scalar_mor"):
        f = B.compose(f, B.scalar_mor(B.cod(f), rng.randrange(B.root_order)))
    return S.canonical(X, target, f)


def _relabel_braid(src: Sequence, tgt: Sequence) -> br.LabelledBraid:
    """Some positive braid taking label sequence ``src`` to ``tgt``."""
    remaining = list(range(len(src)))
    order = []
    for label in tgt:
        for i in remaining:
            if src[i] == label:
                order.append(i)
                remaining.remove(i)
                break
        else:
            raise CategoryError("label multisets differ")
    word = br.sorting_braid(list(range(len(src))), order, 1)
    return br.LabelledBraid(word, tuple(src))


def generator_mor(S: SigmaB, rng: random.Random, max_len: int = 4) -> SigmaMor:
    """``W f`` for a random morphism ``f`` of ``B``: a clique map between singletons."""
    from .equiv import W_mor
    B = S.B
    a = B.random_object(rng, 3)
    f = B.random_morphism(rng, a, max_len)
    return W_mor(S, f)
