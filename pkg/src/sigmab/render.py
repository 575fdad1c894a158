"""Deterministic SVG pictures of braids, configurations and linearisations.

Every picture lives in a 100x100 viewport (the unit square scaled by 100,
with y pointing up in the model and down in SVG). Coordinates are printed
with three decimals; elements are emitted in a fixed order so identical
input gives identical bytes.
"""
from __future__ import annotations

from typing import Callable, Hashable
from xml.sax.saxutils import escape

from . import braid as br
from . import config as cf

SCALE = 100
_HEAD = ('<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
         'viewBox="0 0 {w} {h}">')
_FRAME = '<rect x="0" y="0" width="100" height="100" fill="none" stroke="black" stroke-width="0.5"/>'


def _n(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _sx(x) -> float:
    return float(x) * SCALE


def _sy(y) -> float:
    return (1 - float(y)) * SCALE


def _svg(body: list[str]) -> str:
    return "\n".join([_HEAD.format(w=SCALE, h=SCALE), *body, "</svg>"]) + "\n"


def _dot(x: float, y: float, text: str) -> list[str]:
    return [
        f'<circle cx="{_n(x)}" cy="{_n(y)}" r="1.5" fill="black"/>',
        f'<text x="{_n(x + 2)}" y="{_n(y - 2)}" font-size="4" font-family="monospace">{escape(text)}</text>',
    ]


def render_config(X: cf.Configuration, label: Callable[[Hashable], str] = str) -> str:
    body = [_FRAME]
    for p in cf.canonical_order(X):
        body += _dot(_sx(p.x), _sy(p.y), label(p.label))
    return _svg(body)


def render_braid(lb: br.LabelledBraid, label: Callable[[Hashable], str] = str) -> str:
    """Strands run left to right, positions numbered top to bottom.

    In a positive crossing the strand moving down is drawn in front.
    """
    n = lb.braid.strands
    gens = lb.braid.gens
    cols = len(gens) + 2
    dx = SCALE / cols
    dy = SCALE / (n + 1)

    def row(i):
        return (i + 1) * dy

    body = [_FRAME]
    for i, lab in enumerate(lb.source_labels):
        body.append(f'<text x="1.000" y="{_n(row(i) - 1)}" font-size="4" '
                    f'font-family="monospace">{escape(label(lab))}</text>')
    for i in range(n):
        body.append(f'<line x1="0.000" y1="{_n(row(i))}" x2="{_n(dx)}" y2="{_n(row(i))}" '
                    'stroke="black" stroke-width="0.8"/>')
    for c, g in enumerate(gens):
        x0, x1 = (c + 1) * dx, (c + 2) * dx
        i = g.index - 1
        for j in range(n):
            if j not in (i, i + 1):
                body.append(f'<line x1="{_n(x0)}" y1="{_n(row(j))}" x2="{_n(x1)}" y2="{_n(row(j))}" '
                            'stroke="black" stroke-width="0.8"/>')
        down = (row(i), row(i + 1))
        up = (row(i + 1), row(i))
        back, front = (up, down) if g.sign > 0 else (down, up)
        body.append(f'<line x1="{_n(x0)}" y1="{_n(back[0])}" x2="{_n(x1)}" y2="{_n(back[1])}" '
                    'stroke="black" stroke-width="0.8"/>')
        body.append(f'<line x1="{_n(x0)}" y1="{_n(front[0])}" x2="{_n(x1)}" y2="{_n(front[1])}" '
                    'stroke="white" stroke-width="3"/>')
        body.append(f'<line x1="{_n(x0)}" y1="{_n(front[0])}" x2="{_n(x1)}" y2="{_n(front[1])}" '
                    'stroke="black" stroke-width="0.8"/>')
    xe = (cols - 1) * dx
    for i in range(n):
        body.append(f'<line x1="{_n(xe)}" y1="{_n(row(i))}" x2="{_n(SCALE)}" y2="{_n(row(i))}" '
                    'stroke="black" stroke-width="0.8"/>')
    for i, lab in enumerate(lb.target_labels):
        body.append(f'<text x="{_n(SCALE - 6)}" y="{_n(row(i) - 1)}" font-size="4" '
                    f'font-family="monospace">{escape(label(lab))}</text>')
    return _svg(body)


def render_linearisation(X: cf.Configuration, label: Callable[[Hashable], str] = str) -> str:
    """The configuration, its canonical word on the centre line, and the
    (dashed) paths of the linearising strands between them."""
    rep = cf.canonical_rep(X)
    line = cf.canonical_order(cf.embed_word(rep.word))
    pts = cf.canonical_order(X)
    body = [_FRAME,
            '<line x1="50.000" y1="0.000" x2="50.000" y2="100.000" '
            'stroke="grey" stroke-width="0.4" stroke-dasharray="2,2"/>']
    for p, q in zip(pts, line):
        body.append(f'<line x1="{_n(_sx(p.x))}" y1="{_n(_sy(p.y))}" x2="{_n(_sx(q.x))}" '
                    f'y2="{_n(_sy(q.y))}" stroke="grey" stroke-width="0.4" stroke-dasharray="1,1"/>')
    for q in line:
        body.append(f'<circle cx="{_n(_sx(q.x))}" cy="{_n(_sy(q.y))}" r="1" fill="grey"/>')
    for p in pts:
        body += _dot(_sx(p.x), _sy(p.y), label(p.label))
    return _svg(body)
