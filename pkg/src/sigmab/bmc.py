"""Braided monoidal categories with decidable equality of morphisms.

Every shipped instance has parenthesised words over a set of atoms as its
objects. Composition is written in diagrammatic order: ``compose(f, g)`` is
``f`` followed by ``g``.

Besides the instances, this module evaluates words and labelled braids into
an instance: :func:`transport` builds the coherence isomorphism between two
parenthesisations of the same leaves, and :func:`eval_braid` sends a
labelled braid to the composite of braidings it describes.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Hashable, Sequence

from . import braid as br
from .words import UNIT, Leaf, Tensor, Word, flatten, fold, format_word, map_labels, parse_word, right_nest


class CategoryError(ValueError):
    """Non-composable morphisms or a malformed object."""


class BMC(ABC):
    """Interface for a braided monoidal category.

    ``braid(a, b)`` is the braiding ``a (x) b -> b (x) a`` and ``braid_inv(a, b)``
    its inverse ``b (x) a -> a (x) b``.
    """

    name: str = "bmc"

    @abstractmethod
    def unit(self): ...

    @abstractmethod
    def tensor_obj(self, a, b): ...

    @abstractmethod
    def dom(self, f): ...

    @abstractmethod
    def cod(self, f): ...

    @abstractmethod
    def id(self, a): ...

    @abstractmethod
    def compose(self, f, g): ...

    @abstractmethod
    def tensor(self, f, g): ...

    @abstractmethod
    def assoc(self, a, b, c): ...

    @abstractmethod
    def assoc_inv(self, a, b, c): ...

    @abstractmethod
    def lunit(self, a): ...

    @abstractmethod
    def lunit_inv(self, a): ...

    @abstractmethod
    def runit(self, a): ...

    @abstractmethod
    def runit_inv(self, a): ...

    @abstractmethod
    def braid(self, a, b): ...

    @abstractmethod
    def braid_inv(self, a, b): ...

    @abstractmethod
    def key(self, f) -> Hashable:
        """A hashable invariant with ``key(f) == key(g)`` iff ``eq(f, g)``."""

    def eq(self, f, g) -> bool:
        return self.key(f) == self.key(g)

    def inverse(self, f):
        raise NotImplementedError(f"{self.name} does not invert arbitrary morphisms")

    def compose_all(self, *fs):
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(out, f)
        return out

    # text and sampling hooks

    def parse_object(self, text: str):
        raise NotImplementedError

    def format_object(self, a) -> str:
        return str(a)

    def format_mor(self, f) -> str:
        return repr(f)

    def mor_json(self, f) -> dict:
        return {"repr": self.format_mor(f)}

    def random_object(self, rng: random.Random, max_atoms: int = 3):
        raise NotImplementedError

    def random_morphism(self, rng: random.Random, src, max_len: int = 4):
        raise NotImplementedError


def eval_word(B: BMC, w: Word):
    """Evaluate a word whose leaves are objects of ``B``."""
    return fold(w, B.unit(), lambda x: x, B.tensor_obj)


# -- coherence transport ---------------------------------------------------

def _merge(B: BMC, left: Sequence, right: Sequence):
    """``rn(left) (x) rn(right) -> rn(left + right)``."""
    if not left:
        return B.lunit(eval_word(B, right_nest(right)))
    if not right:
        return B.runit(eval_word(B, right_nest(left)))
    if len(left) == 1:
        return B.id(B.tensor_obj(left[0], eval_word(B, right_nest(right))))
    head, rest = left[0], left[1:]
    rn_rest = eval_word(B, right_nest(rest))
    rn_right = eval_word(B, right_nest(right))
    return B.compose(
        B.assoc(head, rn_rest, rn_right),
        B.tensor(B.id(head), _merge(B, rest, right)),
    )


def to_right_nested(B: BMC, w: Word):
    """Coherence isomorphism ``eval(w) -> eval(right_nest(flatten(w)))``."""
    if isinstance(w, Tensor):
        first = B.tensor(to_right_nested(B, w.left), to_right_nested(B, w.right))
        return B.compose(first, _merge(B, flatten(w.left), flatten(w.right)))
    return B.id(eval_word(B, w))


def from_right_nested(B: BMC, w: Word):
    """Inverse of :func:`to_right_nested`, built from inverse constraints."""
    if isinstance(w, Tensor):
        last = B.tensor(from_right_nested(B, w.left), from_right_nested(B, w.right))
        return B.compose(_unmerge(B, flatten(w.left), flatten(w.right)), last)
    return B.id(eval_word(B, w))


def _unmerge(B: BMC, left: Sequence, right: Sequence):
    if not left:
        return B.lunit_inv(eval_word(B, right_nest(right)))
    if not right:
        return B.runit_inv(eval_word(B, right_nest(left)))
    if len(left) == 1:
        return B.id(B.tensor_obj(left[0], eval_word(B, right_nest(right))))
    head, rest = left[0], left[1:]
    rn_rest = eval_word(B, right_nest(rest))
    rn_right = eval_word(B, right_nest(right))
    return B.compose(
        B.tensor(B.id(head), _unmerge(B, rest, right)),
        B.assoc_inv(head, rn_rest, rn_right),
    )


def transport(B: BMC, w1: Word, w2: Word):
    """The coherence isomorphism ``eval(w1) -> eval(w2)``."""
    if flatten(w1) != flatten(w2):
        raise CategoryError(
            f"cannot transport between words with different leaves: {w1} vs {w2}")
    if w1 == w2:
        return B.id(eval_word(B, w1))
    return B.compose(to_right_nested(B, w1), from_right_nested(B, w2))


# -- braid evaluation ------------------------------------------------------

def _crossing(B: BMC, labels: Sequence, i: int, sign: int):
    """Generator at position ``i`` acting on ``eval(right_nest(labels))``."""
    if i > 0:
        return B.tensor(B.id(labels[0]), _crossing(B, labels[1:], i - 1, sign))
    x, y = labels[0], labels[1]
    cross = B.braid(x, y) if sign > 0 else B.braid_inv(y, x)
    if len(labels) == 2:
        return cross
    rest = eval_word(B, right_nest(labels[2:]))
    return B.compose_all(
        B.assoc_inv(x, y, rest),
        B.tensor(cross, B.id(rest)),
        B.assoc(y, x, rest),
    )


def eval_braid(B: BMC, src: Word, tgt: Word, lb: br.LabelledBraid):
    """Evaluate a labelled braid between two parenthesisations in ``B``."""
    if flatten(src) != lb.source_labels:
        raise CategoryError(f"source word {src} does not match braid labels")
    if flatten(tgt) != lb.target_labels:
        raise CategoryError(f"target word {tgt} does not match braid labels")
    labels = list(lb.source_labels)
    f = transport(B, src, right_nest(labels))
    for g in lb.braid.gens:
        i = g.index - 1
        f = B.compose(f, _crossing(B, labels, i, g.sign))
        labels[i], labels[i + 1] = labels[i + 1], labels[i]
    return B.compose(f, transport(B, right_nest(labels), tgt))


# -- instances -------------------------------------------------------------

class WordObjects:
    """Objects are words over ``atoms``; shared by all shipped instances."""

    atoms: tuple

    def unit(self):
        return UNIT

    def tensor_obj(self, a, b):
        return Tensor(a, b)

    def parse_atom(self, text: str):
        return text

    def parse_object(self, text: str):
        return parse_word(text, self.parse_atom)

    def format_object(self, a) -> str:
        return format_word(a)

    def random_object(self, rng: random.Random, max_atoms: int = 3):
        n = rng.randint(0, max_atoms)
        return random_parenthesisation(rng, [rng.choice(self.atoms) for _ in range(n)])

    def random_morphism(self, rng: random.Random, src, max_len: int = 4):
        atoms = flatten(src)
        n = len(atoms)
        letters = []
        if n >= 2:
            letters = [rng.choice((1, -1)) * rng.randint(1, n - 1)
                       for _ in range(rng.randint(0, max_len))]
        lb = br.LabelledBraid(br.BraidWord.from_ints(n, letters), tuple(Leaf(a) for a in atoms))
        tgt = random_parenthesisation(rng, [leaf.label for leaf in lb.target_labels])
        return eval_braid(self, map_labels(src, Leaf), map_labels(tgt, Leaf), lb)


def random_parenthesisation(rng: random.Random, labels: Sequence, unit_rate: float = 0.15) -> Word:
    """A random bracketing of ``labels``, occasionally padded with units."""
    labels = list(labels)
    if not labels:
        return UNIT
    if len(labels) == 1:
        w: Word = Leaf(labels[0])
    else:
        cut = rng.randint(1, len(labels) - 1)
        w = Tensor(random_parenthesisation(rng, labels[:cut], unit_rate),
                   random_parenthesisation(rng, labels[cut:], unit_rate))
    if rng.random() < unit_rate:
        w = Tensor(UNIT, w) if rng.random() < 0.5 else Tensor(w, UNIT)
    return w


@dataclass(frozen=True)
class FreeMor:
    """A braid between two words of the free braided monoidal category."""

    src: Word
    tgt: Word
    braid: br.BraidWord

    def __post_init__(self):
        labels = flatten(self.src)
        if len(labels) != self.braid.strands:
            raise CategoryError("braid strand count does not match the source word")
        if tuple(br.underlying_permutation(self.braid).apply(labels)) != flatten(self.tgt):
            raise CategoryError(
                f"braid does not connect {format_word(self.src)} to {format_word(self.tgt)}")

    @property
    def labelled(self) -> br.LabelledBraid:
        return br.LabelledBraid(self.braid, flatten(self.src))


class FreeBMC(WordObjects, BMC):
    """The free braided monoidal category on a set of generators.

    Structural isomorphisms are identity braids between different words, so
    equality of morphisms is equality of endpoint words plus braid equality.
    """

    def __init__(self, atoms: Sequence[str] = ("a", "b", "c")):
        self.atoms = tuple(atoms)
        self.name = "free"

    def dom(self, f: FreeMor):
        return f.src

    def cod(self, f: FreeMor):
        return f.tgt

    def _id_between(self, src: Word, tgt: Word) -> FreeMor:
        return FreeMor(src, tgt, br.BraidWord.identity(len(flatten(src))))

    def id(self, a):
        return self._id_between(a, a)

    def compose(self, f: FreeMor, g: FreeMor) -> FreeMor:
        if f.tgt != g.src:
            raise CategoryError(f"cannot compose: {format_word(f.tgt)} != {format_word(g.src)}")
        return FreeMor(f.src, g.tgt, br.compose(f.braid, g.braid))

    def tensor(self, f: FreeMor, g: FreeMor) -> FreeMor:
        return fo_tensor(f, g)

    def assoc(self, a, b, c):
        return self._id_between(Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)))

    def assoc_inv(self, a, b, c):
        return self._id_between(Tensor(a, Tensor(b, c)), Tensor(Tensor(a, b), c))

    def lunit(self, a):
        return self._id_between(Tensor(UNIT, a), a)

    def lunit_inv(self, a):
        return self._id_between(a, Tensor(UNIT, a))

    def runit(self, a):
        return self._id_between(Tensor(a, UNIT), a)

    def runit_inv(self, a):
        return self._id_between(a, Tensor(a, UNIT))

    def braid(self, a, b):
        m, k = len(flatten(a)), len(flatten(b))
        return FreeMor(Tensor(a, b), Tensor(b, a), br.block_braiding(m, k))

    def braid_inv(self, a, b):
        m, k = len(flatten(a)), len(flatten(b))
        return FreeMor(Tensor(b, a), Tensor(a, b), br.invert(br.block_braiding(m, k)))

    def key(self, f: FreeMor):
        return (f.src, f.tgt, br.garside_nf(f.braid))

    def inverse(self, f: FreeMor) -> FreeMor:
        return FreeMor(f.tgt, f.src, br.invert(f.braid))

    def format_mor(self, f: FreeMor) -> str:
        return f"{format_word(f.src)} -> {format_word(f.tgt)} : {br.format_braid(f.braid)}"

    def mor_json(self, f: FreeMor) -> dict:
        return {"src": format_word(f.src), "tgt": format_word(f.tgt),
                "braid": br.format_braid(f.braid), "normal_form": str(br.garside_nf(f.braid))}


def fo_tensor(f: FreeMor, g: FreeMor) -> FreeMor:
    """Stack ``f`` above ``g``."""
    n = f.braid.strands + g.braid.strands
    word = br.compose(br.shift(f.braid, 0, n), br.shift(g.braid, f.braid.strands, n))
    return FreeMor(Tensor(f.src, g.src), Tensor(f.tgt, g.tgt), word)


@dataclass(frozen=True)
class PermMor:
    """A label-consistent permutation, with an exponent of a fixed root of unity.

    ``images[j]`` is the source position of the leaf at target position ``j``.
    """

    src: Word
    tgt: Word
    images: tuple[int, ...]
    scalar: int = 0

    def __post_init__(self):
        s, t = flatten(self.src), flatten(self.tgt)
        if len(s) != len(self.images) or tuple(s[i] for i in self.images) != t:
            raise CategoryError(
                f"permutation {self.images} does not connect {format_word(self.src)}"
                f" to {format_word(self.tgt)}")


class PermBMC(WordObjects, BMC):
    """Symmetric instance: the braiding is a plain block transposition."""

    def __init__(self, atoms: Sequence[str] = ("a", "b", "c")):
        self.atoms = tuple(atoms)
        self.name = "perm"

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def _scalar(self, k: int) -> int:
        return 0

    def _id_between(self, src, tgt, scalar=0):
        return PermMor(src, tgt, tuple(range(len(flatten(src)))), self._scalar(scalar))

    def id(self, a):
        return self._id_between(a, a)

    def compose(self, f: PermMor, g: PermMor) -> PermMor:
        if f.tgt != g.src:
            raise CategoryError(f"cannot compose: {format_word(f.tgt)} != {format_word(g.src)}")
        images = tuple(f.images[j] for j in g.images)
        return PermMor(f.src, g.tgt, images, self._scalar(f.scalar + g.scalar))

    def tensor(self, f: PermMor, g: PermMor) -> PermMor:
        off = len(f.images)
        images = f.images + tuple(off + i for i in g.images)
        return PermMor(Tensor(f.src, g.src), Tensor(f.tgt, g.tgt), images,
                       self._scalar(f.scalar + g.scalar))

    def assoc(self, a, b, c):
        return self._id_between(Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)))

    def assoc_inv(self, a, b, c):
        return self._id_between(Tensor(a, Tensor(b, c)), Tensor(Tensor(a, b), c))

    def lunit(self, a):
        return self._id_between(Tensor(UNIT, a), a)

    def lunit_inv(self, a):
        return self._id_between(a, Tensor(UNIT, a))

    def runit(self, a):
        return self._id_between(Tensor(a, UNIT), a)

    def runit_inv(self, a):
        return self._id_between(a, Tensor(a, UNIT))

    def _block(self, m, k):
        # target a-block after b-block: b leaves come from positions m.., then a's
        return tuple(range(m, m + k)) + tuple(range(m))

    def braid_weight(self, a, b) -> int:
        return 0

    def braid(self, a, b):
        m, k = len(flatten(a)), len(flatten(b))
        return PermMor(Tensor(a, b), Tensor(b, a), self._block(m, k),
                       self._scalar(self.braid_weight(a, b)))

    def braid_inv(self, a, b):
        m, k = len(flatten(a)), len(flatten(b))
        return PermMor(Tensor(b, a), Tensor(a, b), self._block(k, m),
                       self._scalar(-self.braid_weight(a, b)))

    def key(self, f: PermMor):
        return (f.src, f.tgt, f.images, self._scalar(f.scalar))

    def inverse(self, f: PermMor) -> PermMor:
        inv = [0] * len(f.images)
        for j, i in enumerate(f.images):
            inv[i] = j
        return PermMor(f.tgt, f.src, tuple(inv), self._scalar(-f.scalar))

    def format_mor(self, f: PermMor) -> str:
        perm = ",".join(str(i + 1) for i in f.images)
        return f"{format_word(f.src)} -> {format_word(f.tgt)} : perm [{perm}]"

    def mor_json(self, f: PermMor) -> dict:
        return {"src": format_word(f.src), "tgt": format_word(f.tgt),
                "perm": [i + 1 for i in f.images]}


class BicharBMC(PermBMC):
    """Permutations weighted by powers of a root of unity ``q``.

    Atoms are residues mod ``modulus``; the braiding ``a (x) b -> b (x) a``
    carries ``q ** (|a| * |b|)`` where ``|a|`` is the sum of the atoms of
    ``a``. Exponents are kept as integers mod ``root_order`` (default
    ``modulus``), so with ``modulus=4`` the scalar of a single crossing of
    ``1`` past ``1`` is ``q = i``.
    """

    def __init__(self, modulus: int = 4, root_order: int | None = None):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        self.root_order = root_order or modulus
        self.atoms = tuple(range(modulus))
        self.name = f"bichar:{modulus}"

    def parse_atom(self, text: str):
        try:
            return int(text) % self.modulus
        except ValueError as exc:
            raise CategoryError(f"bichar label must be an integer, got {text!r}") from exc

    def _scalar(self, k: int) -> int:
        return k % self.root_order

    def weight(self, a) -> int:
        return sum(flatten(a)) % self.modulus

    def braid_weight(self, a, b) -> int:
        return self.weight(a) * self.weight(b)

    def scalar_mor(self, a, k: int) -> PermMor:
        """``q ** k`` times the identity of ``a``."""
        return self._id_between(a, a, k)

    def random_morphism(self, rng: random.Random, src, max_len: int = 4):
        f = super().random_morphism(rng, src, max_len)
        return self.compose(f, self.scalar_mor(f.tgt, rng.randrange(self.root_order)))

    def format_mor(self, f: PermMor) -> str:
        return f"{super().format_mor(f)} scalar {format_exponent(f.scalar)}"

    def mor_json(self, f: PermMor) -> dict:
        out = super().mor_json(f)
        out["scalar_exponent"] = f.scalar
        return out


def format_exponent(k: int) -> str:
    return f"+{k}" if k >= 0 else str(k)


def make_category(name: str) -> BMC:
    """``free``, ``perm`` or ``bichar:<n>``."""
    if name == "free":
        return FreeBMC()
    if name == "perm":
        return PermBMC()
    if name.startswith("bichar:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError as exc:
            raise CategoryError(f"bad bichar modulus in {name!r}") from exc
        if n < 1:
            raise CategoryError("bichar modulus must be positive")
        return BicharBMC(n)
    raise CategoryError(f"unknown category {name!r}; expected free, perm or bichar:<n>")
