"""Parenthesised tensor words over labels with a formal unit.

Text form: ``I`` is the unit, identifiers are labels and ``(u * v)`` is a
tensor, e.g. ``(a * (b * I))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Hashable, Iterator, Sequence


class WordError(ValueError):
    pass


class Word:
    """Base class; use :data:`UNIT`, :class:`Leaf` and :class:`Tensor`."""

    __slots__ = ()

    def __mul__(self, other: Word) -> Word:
        return Tensor(self, other)

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True, repr=False)
class Unit(Word):
    def __repr__(self):
        return "UNIT"


@dataclass(frozen=True, repr=False)
class Leaf(Word):
    label: Hashable

    def __repr__(self):
        return f"Leaf({self.label!r})"


@dataclass(frozen=True, repr=False)
class Tensor(Word):
    left: Word
    right: Word

    def __repr__(self):
        return f"Tensor({self.left!r}, {self.right!r})"


UNIT = Unit()


def leaves(w: Word) -> Iterator[Hashable]:
    stack = [w]
    while stack:
        node = stack.pop()
        if isinstance(node, Tensor):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, Leaf):
            yield node.label


def flatten(w: Word) -> tuple:
    return tuple(leaves(w))


def right_nest(labels: Sequence[Hashable]) -> Word:
    labels = list(labels)
    if not labels:
        return UNIT
    word: Word = Leaf(labels[-1])
    for label in reversed(labels[:-1]):
        word = Tensor(Leaf(label), word)
    return word


def size(w: Word) -> int:
    return len(flatten(w))


def map_labels(w: Word, fn: Callable[[Hashable], Hashable]) -> Word:
    if isinstance(w, Tensor):
        return Tensor(map_labels(w.left, fn), map_labels(w.right, fn))
    if isinstance(w, Leaf):
        return Leaf(fn(w.label))
    return w


def fold(w: Word, unit, leaf: Callable, tensor: Callable):
    """Evaluate ``w`` bottom-up."""
    if isinstance(w, Tensor):
        return tensor(fold(w.left, unit, leaf, tensor), fold(w.right, unit, leaf, tensor))
    if isinstance(w, Leaf):
        return leaf(w.label)
    return unit


# -- text format -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\*)|([A-Za-z0-9_.\-]+))")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        yield next(g for g in m.groups() if g is not None)


def parse_word(text: str, label: Callable[[str], Hashable] = str) -> Word:
    toks = list(_tokens(text))
    if not toks:
        raise WordError("empty word text; use 'I' for the unit")

    def parse(i):
        if i >= len(toks):
            raise WordError(f"unexpected end of word {text!r}")
        tok = toks[i]
        if tok == "(":
            left, i = parse(i + 1)
            if i >= len(toks) or toks[i] != "*":
                raise WordError(f"expected '*' in {text!r}")
            right, i = parse(i + 1)
            if i >= len(toks) or toks[i] != ")":
                raise WordError(f"expected ')' in {text!r}")
            return Tensor(left, right), i + 1
        if tok in (")", "*"):
            raise WordError(f"unexpected {tok!r} in {text!r}")
        if tok == "I":
            return UNIT, i + 1
        return Leaf(label(tok)), i + 1

    word, end = parse(0)
    if end != len(toks):
        raise WordError(f"trailing input in {text!r}")
    return word


def format_word(w: Word, label: Callable[[Hashable], str] = str) -> str:
    if isinstance(w, Tensor):
        return f"({format_word(w.left, label)} * {format_word(w.right, label)})"
    if isinstance(w, Leaf):
        return label(w.label)
    return "I"
