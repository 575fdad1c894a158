"""Artin braid words, labelled braids and the Garside word problem.

Strand positions are numbered top-to-bottom. ``s<i>`` crosses the strands at
positions ``i`` and ``i+1``; in a positive crossing the strand moving down
passes on the right of the strand moving up.

Internally positions are 0-based; the text format and :class:`BraidGen` use
the usual 1-based generator indices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterable, Sequence


class BraidError(ValueError):
    """Malformed braid word or incompatible strand counts."""


class LabelMismatch(BraidError):
    """Two labelled braids do not compose."""


@dataclass(frozen=True, order=True)
class BraidGen:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise BraidError(f"generator sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise BraidError(f"generator index must be >= 1, got {self.index}")

    def inverse(self) -> BraidGen:
        return BraidGen(self.index, -self.sign)

    def __str__(self):
        return f"s{self.index}" if self.sign == 1 else f"s{self.index}^-1"


def _free_reduce(gens: Iterable[BraidGen]) -> tuple[BraidGen, ...]:
    out: list[BraidGen] = []
    for g in gens:
        if out and out[-1].index == g.index and out[-1].sign == -g.sign:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators on ``strands`` strands.

    Words are freely reduced on construction, so ``BraidWord`` equality is
    equality of reduced words, not of braids; use :func:`braid_equal`.
    """

    strands: int
    gens: tuple[BraidGen, ...] = ()

    def __post_init__(self):
        if self.strands < 0:
            raise BraidError(f"strand count must be non-negative, got {self.strands}")
        gens = tuple(self.gens)
        for g in gens:
            if not isinstance(g, BraidGen):
                raise BraidError(f"not a generator: {g!r}")
            if g.index >= self.strands:
                raise BraidError(f"generator {g} out of range for {self.strands} strands")
        object.__setattr__(self, "gens", _free_reduce(gens))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def from_ints(cls, n: int, letters: Iterable[int]) -> BraidWord:
        """``[1, -2]`` is ``s1 s2^-1``."""
        return cls(n, tuple(BraidGen(abs(i), 1 if i > 0 else -1) for i in letters))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(g.index * g.sign for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return format_braid(self)

    def is_identity_word(self) -> bool:
        return not self.gens


def free_reduce(w: BraidWord) -> BraidWord:
    # BraidWord reduces eagerly; this is kept as the named operation.
    return BraidWord(w.strands, _free_reduce(w.gens))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """``u`` followed by ``v``."""
    if u.strands != v.strands:
        raise BraidError(f"strand mismatch: {u.strands} vs {v.strands}")
    return BraidWord(u.strands, u.gens + v.gens)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(g.inverse() for g in reversed(w.gens)))


def shift(w: BraidWord, offset: int, new_n: int) -> BraidWord:
    if offset < 0 or new_n < w.strands + offset:
        raise BraidError(
            f"cannot shift a {w.strands}-strand braid by {offset} into {new_n} strands")
    return BraidWord(new_n, tuple(BraidGen(g.index + offset, g.sign) for g in w.gens))


def block_braiding(m: int, k: int, sign: int = 1) -> BraidWord:
    """Move the top block of ``m`` strands past the bottom block of ``k``.

    Each bottom strand in turn rises through the whole top block, so
    ``block_braiding(2, 1)`` is ``s2 s1``.
    """
    if m < 0 or k < 0:
        raise BraidError("block sizes must be non-negative")
    gens = []
    for j in range(1, k + 1):
        for i in range(m + j - 1, j - 1, -1):
            gens.append(BraidGen(i, sign))
    return BraidWord(m + k, tuple(gens))


# -- permutations ----------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """``images[j]`` is the source position of the strand ending at ``j``.

    With this convention ``permutation(u v) = permutation(u) * permutation(v)``
    where ``(p * q)(j) = p(q(j))``, and target labels are
    ``[source[images[j]] for j in range(n)]``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise BraidError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise BraidError("permutation size mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, i in enumerate(self.images):
            inv[i] = j
        return Permutation(tuple(inv))

    def apply(self, labels: Sequence) -> list:
        if len(labels) != self.n:
            raise BraidError("label sequence has wrong length")
        return [labels[i] for i in self.images]

    def one_based(self) -> tuple[int, ...]:
        """Map ``j -> images[j]`` written 1-based as a tuple of images."""
        return tuple(i + 1 for i in self.images)


def _transposition(n: int, i: int) -> Permutation:
    images = list(range(n))
    images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def underlying_permutation(w: BraidWord) -> Permutation:
    p = Permutation.identity(w.strands)
    for g in w.gens:
        p = p * _transposition(w.strands, g.index - 1)
    return p


# -- Garside normal form ---------------------------------------------------
#
# A simple element (positive permutation braid) is stored as its strand map
# ``t`` with ``t[i]`` = final position of the strand starting at ``i``.


@dataclass(frozen=True)
class GarsideNF:
    """Left-greedy normal form ``Delta^delta_power * factors[0] * ...``."""

    n: int
    delta_power: int
    factors: tuple[tuple[int, ...], ...]

    def to_word(self) -> BraidWord:
        delta = _simple_word(_delta(self.n))
        if self.delta_power >= 0:
            gens = delta * self.delta_power
        else:
            gens = tuple(g.inverse() for g in reversed(delta)) * -self.delta_power
        for f in self.factors:
            gens += _simple_word(f)
        return BraidWord(self.n, gens)

    def __str__(self):
        parts = [f"n={self.n}", f"D^{self.delta_power}"]
        parts += ["[" + ",".join(str(i + 1) for i in f) + "]" for f in self.factors]
        return " ".join(parts)


_NF_RE = re.compile(r"^\[(\d+(?:,\d+)*)\]$")


def parse_nf(text: str) -> GarsideNF:
    tokens = text.split()
    if len(tokens) < 2 or not tokens[0].startswith("n=") or not tokens[1].startswith("D^"):
        raise BraidError(f"malformed normal form: {text!r}")
    try:
        n = int(tokens[0][2:])
        k = int(tokens[1][2:])
    except ValueError as exc:
        raise BraidError(f"malformed normal form: {text!r}") from exc
    factors = []
    for tok in tokens[2:]:
        m = _NF_RE.match(tok)
        if not m:
            raise BraidError(f"malformed factor {tok!r}")
        f = tuple(int(s) - 1 for s in m.group(1).split(","))
        if sorted(f) != list(range(n)):
            raise BraidError(f"factor {tok!r} is not a permutation of {n} strands")
        factors.append(f)
    return GarsideNF(n, k, tuple(factors))


def _delta(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _swap_after(s, i):
    """``s`` followed by the crossing at positions ``i, i+1``."""
    return tuple(i + 1 if p == i else i if p == i + 1 else p for p in s)


def _swap_before(t, i):
    """The crossing at ``i, i+1`` followed by ``t``."""
    t = list(t)
    t[i], t[i + 1] = t[i + 1], t[i]
    return tuple(t)


def _starting_set(t):
    return {i for i in range(len(t) - 1) if t[i] > t[i + 1]}


def _finishing_set(s):
    inv = [0] * len(s)
    for i, p in enumerate(s):
        inv[p] = i
    return {i for i in range(len(s) - 1) if inv[i] > inv[i + 1]}


def _left_weight(s, t):
    """Rewrite the pair ``s t`` so that ``S(t)`` is contained in ``F(s)``."""
    while True:
        extra = _starting_set(t) - _finishing_set(s)
        if not extra:
            return s, t
        i = min(extra)
        s = _swap_after(s, i)
        t = _swap_before(t, i)


def _tau(s):
    n = len(s)
    return tuple(n - 1 - s[n - 1 - i] for i in range(n))


def _simple_word(s) -> tuple[BraidGen, ...]:
    """A positive word for the simple element ``s`` (bubble sort)."""
    # Track the current arrangement; bubble strands toward their targets.
    current = list(range(len(s)))  # current[p] = strand at position p
    gens = []
    changed = True
    while changed:
        changed = False
        for p in range(len(s) - 1):
            a, b = current[p], current[p + 1]
            if s[a] > s[b]:
                current[p], current[p + 1] = b, a
                gens.append(BraidGen(p + 1, 1))
                changed = True
    return tuple(gens)


@lru_cache(maxsize=65536)
def _normal_form(n: int, letters: tuple[int, ...]) -> GarsideNF:
    ident = tuple(range(n))
    delta = _delta(n)
    k = 0
    factors: list[tuple[int, ...]] = []
    for letter in letters:
        i = abs(letter) - 1
        if letter > 0:
            new = _swap_before(ident, i)
        else:
            # s_i^-1 = Delta^-1 (Delta s_i^-1); moving Delta^-1 left applies tau.
            k -= 1
            factors = [_tau(f) for f in factors]
            new = _swap_after(delta, i)
        factors.append(new)
        for j in range(len(factors) - 2, -1, -1):
            factors[j], factors[j + 1] = _left_weight(factors[j], factors[j + 1])
        while factors and factors[0] == delta:
            factors.pop(0)
            k += 1
        while factors and factors[-1] == ident:
            factors.pop()
    return GarsideNF(n, k, tuple(factors))


def garside_nf(w: BraidWord) -> GarsideNF:
    return _normal_form(w.strands, w.to_ints())


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise BraidError(f"strand mismatch: {u.strands} vs {v.strands}")
    return garside_nf(u) == garside_nf(v)


# -- labelled braids -------------------------------------------------------

@dataclass(frozen=True)
class LabelledBraid:
    """A braid whose strands carry labels; target labels are derived."""

    braid: BraidWord
    source_labels: tuple[Hashable, ...]
    target_labels: tuple[Hashable, ...] = field(default=None)

    def __post_init__(self):
        src = tuple(self.source_labels)
        if len(src) != self.braid.strands:
            raise BraidError(
                f"{len(src)} labels for a {self.braid.strands}-strand braid")
        tgt = tuple(underlying_permutation(self.braid).apply(src))
        if self.target_labels is not None and tuple(self.target_labels) != tgt:
            raise LabelMismatch(
                f"target labels {tuple(self.target_labels)} do not match {tgt}")
        object.__setattr__(self, "source_labels", src)
        object.__setattr__(self, "target_labels", tgt)

    @classmethod
    def identity(cls, labels: Sequence[Hashable]) -> LabelledBraid:
        return cls(BraidWord.identity(len(labels)), tuple(labels))


def compose_labelled(a: LabelledBraid, b: LabelledBraid) -> LabelledBraid:
    if a.target_labels != b.source_labels:
        raise LabelMismatch(
            f"cannot compose: {a.target_labels} != {b.source_labels}")
    return LabelledBraid(compose(a.braid, b.braid), a.source_labels)


def invert_labelled(a: LabelledBraid) -> LabelledBraid:
    return LabelledBraid(invert(a.braid), a.target_labels)


def juxtapose(a: LabelledBraid, b: LabelledBraid) -> LabelledBraid:
    """``a`` on the top strands, ``b`` below it."""
    n = a.braid.strands + b.braid.strands
    word = compose(shift(a.braid, 0, n), shift(b.braid, a.braid.strands, n))
    return LabelledBraid(word, a.source_labels + b.source_labels)


def sorting_braid(depths: Sequence, target_order: Sequence[int], sign: int = 1) -> BraidWord:
    """Layered permutation braid moving strand ``target_order[j]`` to position ``j``.

    Strand ``i`` starts at position ``i`` and sits at horizontal depth
    ``depths[i]``. Every inverted pair crosses exactly once; the crossing is
    positive (times ``sign``) when the strand moving down has the larger
    depth. Such a braid only depends on the permutation and the depths.
    """
    n = len(depths)
    if sorted(target_order) != list(range(n)):
        raise BraidError(f"not a strand order: {target_order}")
    rank = {s: j for j, s in enumerate(target_order)}
    current = list(range(n))
    gens = []
    changed = True
    while changed:
        changed = False
        for p in range(n - 1):
            a, b = current[p], current[p + 1]
            if rank[a] > rank[b]:
                if depths[a] == depths[b]:
                    raise BraidError(
                        f"strands {a} and {b} cross at equal depth; crossing sign undefined")
                s = sign if depths[a] > depths[b] else -sign
                gens.append(BraidGen(p + 1, s))
                current[p], current[p + 1] = b, a
                changed = True
    return BraidWord(n, tuple(gens))


# -- text format -----------------------------------------------------------

_TOKEN_RE = re.compile(r"^s(\d+)(\^-1)?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``n=3 s1 s2 s1^-1``."""
    tokens = text.split()
    if not tokens or not tokens[0].startswith("n="):
        raise BraidError(f"braid word must start with 'n=<strands>': {text!r}")
    try:
        n = int(tokens[0][2:])
    except ValueError as exc:
        raise BraidError(f"bad strand count in {tokens[0]!r}") from exc
    gens = []
    for tok in tokens[1:]:
        m = _TOKEN_RE.match(tok)
        if not m:
            raise BraidError(f"malformed braid token {tok!r}")
        gens.append(BraidGen(int(m.group(1)), -1 if m.group(2) else 1))
    return BraidWord(n, tuple(gens))


def format_braid(w: BraidWord) -> str:
    return " ".join([f"n={w.strands}"] + [str(g) for g in w.gens])
