"""Command-line front end.

Exit status: 0 on success or a true answer, 1 on a false answer or a law
failure, 2 on malformed input or bad usage.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import braid as br
from . import config as cf
from . import laws, render
from .bmc import CategoryError, eval_braid, make_category
from .dyadic import DyadicError
from .equiv import W_obj
from .sigma import SigmaB, SigmaError
from .words import Leaf, WordError, flatten, format_word, map_labels


class UsageError(Exception):
    pass


def _text(arg: str) -> str:
    """A literal argument, or the contents of the file it names."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def _read_config(path: str) -> cf.Configuration:
    try:
        with open(path, encoding="utf-8") as fh:
            return cf.config_from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(args, text: str):
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _labels(B, text: str | None, default: Sequence) -> list:
    if text is None:
        return list(default)
    return [B.parse_object(t.strip()) for t in text.split(",") if t.strip()]


# -- braid -----------------------------------------------------------------

def cmd_braid_normalize(args) -> int:
    w = br.parse_braid(_text(args.word))
    nf = br.garside_nf(w)
    if args.format == "json":
        print(json.dumps({"word": br.format_braid(w), "normal_form": str(nf),
                          "delta_power": nf.delta_power,
                          "factors": [[i + 1 for i in s] for s in nf.factors]}, sort_keys=True))
    else:
        print(nf)
    return 0


def cmd_braid_eq(args) -> int:
    u, v = br.parse_braid(_text(args.left)), br.parse_braid(_text(args.right))
    same = br.braid_equal(u, v)
    print("equal" if same else "not equal")
    return 0 if same else 1


# -- config ----------------------------------------------------------------

def cmd_config_canon(args) -> int:
    X = _read_config(args.file)
    key = cf.slide_key(X)
    rep = cf.canonical_rep(X)
    if args.format == "json":
        print(json.dumps({
            "levels": [{"y": str(y), "labels": list(ls)} for y, ls in key.levels],
            "order": list(cf.labels_in_order(X)),
            "word": format_word(rep.word),
        }, sort_keys=True))
    else:
        print(f"key: {key}")
        print("order: " + " ".join(cf.labels_in_order(X)))
        print(f"word: {format_word(rep.word)}")
    return 0


def cmd_config_eq(args) -> int:
    same = cf.slide_equal(_read_config(args.left), _read_config(args.right))
    print("slide-equivalent" if same else "not slide-equivalent")
    return 0 if same else 1


def cmd_config_stack(args) -> int:
    X, Y = _read_config(args.top), _read_config(args.bottom)
    Z = cf.vstack(X, Y) if args.direction == "vertical" else cf.hstack(X, Y)
    print(cf.config_to_json(Z))
    return 0


# -- fo --------------------------------------------------------------------

def cmd_fo_eval(args) -> int:
    B = make_category(args.category)
    src = B.parse_object(args.source)
    tgt = B.parse_object(args.target)
    w = br.parse_braid(_text(args.braid))
    lb = br.LabelledBraid(w, tuple(Leaf(a) for a in flatten(src)))
    if tuple(leaf.label for leaf in lb.target_labels) != flatten(tgt):
        raise CategoryError(
            f"braid takes {format_word(src)} to leaves "
            f"{[B.format_object(l) for l in lb.target_labels]}, not those of {format_word(tgt)}")
    f = eval_braid(B, map_labels(src, Leaf), map_labels(tgt, Leaf), lb)
    if args.format == "json":
        print(json.dumps(B.mor_json(f), sort_keys=True))
    else:
        print(B.format_mor(f))
    return 0


# -- sigma -----------------------------------------------------------------

def cmd_sigma_eh(args) -> int:
    B = make_category(args.category)
    S = SigmaB(B)
    labels = _labels(B, args.labels, [Leaf(a) for a in B.atoms[:2]])
    if len(labels) != 2:
        raise UsageError("--labels needs exactly two objects, e.g. --labels 1,1")
    a, b = labels
    m = S.eh_braiding(W_obj(a), W_obj(b))
    if args.format == "json":
        print(S.to_json(m))
    else:
        print(f"source: {m.source.key}")
        print(f"target: {m.target.key}")
        print(f"representative: {B.format_mor(m.f)}")
        print("equals W(sigma): " + ("yes" if B.eq(m.f, B.braid(a, b)) else "no"))
    return 0


def _print_reports(args, reports) -> int:
    print(laws.format_reports(reports, args.format))
    return 0 if all(r.passed for r in reports) else 1


def cmd_sigma_interchange(args) -> int:
    S = SigmaB(make_category(args.category))
    reports = [laws.run_sigma_law(S, law, args.seed, args.cases)
               for law in ("interchange", "interchange_multi")]
    return _print_reports(args, reports)


def cmd_sigma_laws(args) -> int:
    B = make_category(args.category)
    S = SigmaB(B)
    reports = laws.check_bmc(B, args.seed, args.cases)
    reports += [laws.run_sigma_law(S, law, args.seed, args.cases)
                for law in laws.SIGMA_LAWS + laws.FUNCTOR_LAWS]
    return _print_reports(args, reports)


# -- render ----------------------------------------------------------------

def cmd_render_braid(args) -> int:
    w = br.parse_braid(_text(args.word))
    if args.labels is None:
        labels = tuple(str(i + 1) for i in range(w.strands))
    else:
        labels = tuple(t.strip() for t in args.labels.split(","))
    _emit(args, render.render_braid(br.LabelledBraid(w, labels)))
    return 0


def cmd_render_config(args) -> int:
    _emit(args, render.render_config(_read_config(args.file)))
    return 0


def cmd_render_linearisation(args) -> int:
    _emit(args, render.render_linearisation(_read_config(args.file)))
    return 0


# -- parser ----------------------------------------------------------------

def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _cases(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("--cases must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--category", default="free", help="free, perm or bichar:<n>")
    common.add_argument("--seed", type=_u64, default=0)
    common.add_argument("--cases", type=_cases, default=200)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="sigmab", description=__doc__.splitlines()[0])
    top = p.add_subparsers(dest="group", required=True)

    def group(name, help):
        g = top.add_parser(name, help=help)
        return g.add_subparsers(dest="command", required=True)

    braid = group("braid", "braid words")
    s = braid.add_parser("normalize", parents=[common], help="Garside normal form")
    s.add_argument("word")
    s.set_defaults(fn=cmd_braid_normalize)
    s = braid.add_parser("eq", parents=[common], help="decide braid equality")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(fn=cmd_braid_eq)

    config = group("config", "labelled configurations (JSON files)")
    s = config.add_parser("canon", parents=[common], help="slide key and canonical linearisation")
    s.add_argument("file")
    s.set_defaults(fn=cmd_config_canon)
    s = config.add_parser("eq", parents=[common], help="decide slide equivalence")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(fn=cmd_config_eq)
    s = config.add_parser("stack", parents=[common], help="stack two configurations")
    s.add_argument("direction", choices=("vertical", "horizontal"))
    s.add_argument("top", help="top (vertical) or left (horizontal) configuration")
    s.add_argument("bottom", help="bottom (vertical) or right (horizontal) configuration")
    s.set_defaults(fn=cmd_config_stack)

    fo = group("fo", "morphisms of the chosen braided monoidal category")
    s = fo.add_parser("eval", parents=[common], help="evaluate a labelled braid between words")
    s.add_argument("source", help="source word, e.g. '(a * b)'")
    s.add_argument("target", help="target word")
    s.add_argument("braid", help="braid word, e.g. 'n=2 s1'")
    s.set_defaults(fn=cmd_fo_eval)

    sigma = group("sigma", "the two-tensor category over --category")
    s = sigma.add_parser("eh", parents=[common], help="Eckmann-Hilton braiding of two singletons")
    s.add_argument("--labels", help="two comma-separated objects")
    s.set_defaults(fn=cmd_sigma_eh)
    s = sigma.add_parser("interchange", parents=[common], help="sampled strict interchange")
    s.set_defaults(fn=cmd_sigma_interchange)
    s = sigma.add_parser("laws", parents=[common], help="full law suite")
    s.set_defaults(fn=cmd_sigma_laws)

    rnd = group("render", "SVG pictures")
    s = rnd.add_parser("braid", parents=[common])
    s.add_argument("word")
    s.add_argument("--labels", help="comma-separated strand labels, top to bottom")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_render_braid)
    for name, fn in (("config", cmd_render_config), ("linearisation", cmd_render_linearisation)):
        s = rnd.add_parser(name, parents=[common])
        s.add_argument("file")
        s.add_argument("-o", "--output")
        s.set_defaults(fn=fn)
    return p


_ERRORS = (
    (br.BraidError, "braid error"),
    (DyadicError, "non-dyadic coordinate"),
    (cf.ConfigError, "configuration error"),
    (WordError, "malformed word"),
    (CategoryError, "category error"),
    (SigmaError, "sigma error"),
    (UsageError, "usage error"),
)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except tuple(e for e, _ in _ERRORS) as exc:
        kind = next(name for e, name in _ERRORS if isinstance(exc, e))
        print(f"{kind}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
