"""Labelled point configurations in the open unit square.

Coordinates are exact dyadics, so "same height" is an exact question and
slide classes can be keyed by the y-levels together with the left-to-right
label order on each level.

JSON format::

    {"points": [{"x": "3/8", "y": "1/2", "label": "a"}, ...]}
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from . import braid as br
from .dyadic import HALF, Dyadic, DyadicError, parse_dyadic
from .words import Word, flatten, fold, right_nest


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class LPoint:
    x: Dyadic
    y: Dyadic
    label: Hashable


class Configuration:
    """A finite set of labelled points with pairwise distinct positions."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[LPoint] = ()):
        pts = frozenset(points)
        seen = set()
        for p in pts:
            if not (p.x.in_open_unit() and p.y.in_open_unit()):
                raise ConfigError(f"point {p.x},{p.y} is not in the open unit square")
            if (p.x, p.y) in seen:
                raise ConfigError(f"two points at {p.x},{p.y}")
            seen.add((p.x, p.y))
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("Configuration is immutable")

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        inner = ", ".join(f"{p.label}@({p.x},{p.y})" for p in canonical_order(self))
        return f"Configuration([{inner}])"

    def map(self, fx: Callable[[Dyadic], Dyadic], fy: Callable[[Dyadic], Dyadic]) -> Configuration:
        return Configuration(LPoint(fx(p.x), fy(p.y), p.label) for p in self.points)


EMPTY = Configuration()


def point(x, y, label) -> LPoint:
    """Convenience constructor accepting dyadic strings."""
    def conv(v):
        return v if isinstance(v, Dyadic) else parse_dyadic(str(v))
    return LPoint(conv(x), conv(y), label)


def singleton(label, x: Dyadic = HALF, y: Dyadic = HALF) -> Configuration:
    return Configuration([LPoint(x, y, label)])


def _ident(t):
    return t


def vstack(top: Configuration, bottom: Configuration) -> Configuration:
    """``top`` over ``bottom``, each squashed to half height."""
    upper = top.map(_ident, Dyadic.upper_half)
    lower = bottom.map(_ident, Dyadic.half)
    return Configuration(upper.points | lower.points)


def hstack(left: Configuration, right: Configuration) -> Configuration:
    """``left | right``, each squashed to half width."""
    lhs = left.map(Dyadic.half, _ident)
    rhs = right.map(Dyadic.upper_half, _ident)
    return Configuration(lhs.points | rhs.points)


def canonical_order(X: Configuration) -> list[LPoint]:
    """Top level first, left to right within a level."""
    return sorted(X.points, key=lambda p: (_neg(p.y), p.x))


def _neg(d: Dyadic):
    return -d.to_fraction()


@dataclass(frozen=True)
class SlideKey:
    """Complete invariant of a slide class: ``(y, labels)`` per level, top first."""

    levels: tuple[tuple[Dyadic, tuple], ...]

    def __post_init__(self):
        ys = [y for y, _ in self.levels]
        if any(not (a > b) for a, b in zip(ys, ys[1:])):
            raise ConfigError("slide key levels must be strictly decreasing in y")
        if any(not labels for _, labels in self.levels):
            raise ConfigError("slide key levels must be non-empty")

    def labels(self) -> tuple:
        return tuple(l for _, labels in self.levels for l in labels)

    def __len__(self):
        return sum(len(labels) for _, labels in self.levels)

    def __str__(self):
        if not self.levels:
            return "<empty>"
        return " / ".join(
            f"y={y}: " + " ".join(str(l) for l in labels) for y, labels in self.levels)


def slide_key(X: Configuration) -> SlideKey:
    levels: list[tuple[Dyadic, list]] = []
    for p in canonical_order(X):
        if levels and levels[-1][0] == p.y:
            levels[-1][1].append(p.label)
        else:
            levels.append((p.y, [p.label]))
    return SlideKey(tuple((y, tuple(ls)) for y, ls in levels))


def slide_equal(X: Configuration, Y: Configuration) -> bool:
    return slide_key(X) == slide_key(Y)


def key_witness(key: SlideKey) -> Configuration:
    """A configuration in the slide class ``key`` (evenly spread on each level)."""
    pts = []
    for y, labels in key.levels:
        k = len(labels)
        exp = max(1, (2 * k).bit_length())
        for j, label in enumerate(labels):
            pts.append(LPoint(Dyadic(2 * j + 1, exp), y, label))
    return Configuration(pts)


def embed_word(c: Word) -> Configuration:
    """Points on the vertical centre line spaced by the bracketing of ``c``."""
    return fold(c, Configuration(), lambda label: singleton(label), vstack)


# -- linearisations --------------------------------------------------------

@dataclass(frozen=True)
class LinearRep:
    """A parenthesised word with a braid from the canonical strand order to it."""

    word: Word
    gamma: br.LabelledBraid

    def __post_init__(self):
        if self.gamma.target_labels != flatten(self.word):
            raise ConfigError("linearising braid does not end at the word's leaves")


def canonical_rep(X: Configuration | SlideKey) -> LinearRep:
    labels = X.labels() if isinstance(X, SlideKey) else [p.label for p in canonical_order(X)]
    return LinearRep(right_nest(labels), br.LabelledBraid.identity(labels))


# -- JSON ------------------------------------------------------------------

def config_to_json(X: Configuration, label: Callable[[Hashable], str] = str) -> str:
    pts = [{"x": str(p.x), "y": str(p.y), "label": label(p.label)} for p in canonical_order(X)]
    return json.dumps({"points": pts}, indent=2)


def config_from_json(text: str, label: Callable[[str], Hashable] = str) -> Configuration:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise ConfigError("configuration JSON must be an object with a 'points' list")
    pts = []
    for item in data["points"]:
        try:
            pts.append(LPoint(parse_dyadic(item["x"]), parse_dyadic(item["y"]), label(item["label"])))
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed point {item!r}") from exc
        except DyadicError as exc:
            raise ConfigError(f"non-dyadic coordinate in {item!r}: {exc}") from exc
    return Configuration(pts)


def labels_in_order(X: Configuration) -> list:
    return [p.label for p in canonical_order(X)]

