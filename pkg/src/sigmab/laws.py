"""Seeded law checkers.

Generic braided monoidal axioms run against any :class:`~sigmab.bmc.BMC`;
:func:`check_two_monoidal` runs the two-tensor axioms (weak vertical,
strict horizontal, strict interchange) against a :class:`~sigmab.sigma.SigmaB`.

Every case draws from its own generator seeded by ``(seed, law, index)``, so
a reported failure replays on its own with :func:`replay`.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import equiv
from .bmc import BMC
from .sigma import EMPTY_OBJ, SigmaB, SigmaMor, SigmaObj, random_mor, random_object


@dataclass
class LawReport:
    law: str
    instance: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.instance} {self.law}: {self.cases} cases, {len(self.failures)} failures"

    def to_dict(self) -> dict:
        return {"law": self.law, "instance": self.instance, "cases": self.cases,
                "passed": self.passed,
                "failures": sorted(self.failures, key=lambda f: f["case"])}


def case_rng(seed: int, law: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{law}:{index}")


# -- generic braided monoidal laws -------------------------------------------

def _objs(B: BMC, rng, k):
    return [B.random_object(rng) for _ in range(k)]


def check_pentagon(B: BMC, a, b, c, d) -> bool:
    T, I = B.tensor_obj, B.id
    lhs = B.compose(B.assoc(T(a, b), c, d), B.assoc(a, b, T(c, d)))
    rhs = B.compose_all(
        B.tensor(B.assoc(a, b, c), I(d)),
        B.assoc(a, T(b, c), d),
        B.tensor(I(a), B.assoc(b, c, d)),
    )
    return B.eq(lhs, rhs)


def check_triangle(B: BMC, a, b) -> bool:
    lhs = B.compose(B.assoc(a, B.unit(), b), B.tensor(B.id(a), B.lunit(b)))
    return B.eq(lhs, B.tensor(B.runit(a), B.id(b)))


def check_hexagons(B: BMC, a, b, c) -> bool:
    T, I = B.tensor_obj, B.id
    h1 = B.eq(
        B.compose_all(B.assoc(a, b, c), B.braid(a, T(b, c)), B.assoc(b, c, a)),
        B.compose_all(B.tensor(B.braid(a, b), I(c)), B.assoc(b, a, c),
                      B.tensor(I(b), B.braid(a, c))),
    )
    h2 = B.eq(
        B.compose_all(B.assoc_inv(a, b, c), B.braid(T(a, b), c), B.assoc_inv(c, a, b)),
        B.compose_all(B.tensor(I(a), B.braid(b, c)), B.assoc_inv(a, c, b),
                      B.tensor(B.braid(a, c), I(b))),
    )
    return h1 and h2


def check_inverses(B: BMC, a, b, c) -> bool:
    pairs = [
        (B.assoc(a, b, c), B.assoc_inv(a, b, c)),
        (B.lunit(a), B.lunit_inv(a)),
        (B.runit(a), B.runit_inv(a)),
        (B.braid(a, b), B.braid_inv(a, b)),
    ]
    ok = True
    for f, g in pairs:
        ok &= B.eq(B.compose(f, g), B.id(B.dom(f)))
        ok &= B.eq(B.compose(g, f), B.id(B.cod(f)))
    return ok


def check_naturality(B: BMC, f, g, h) -> bool:
    dom, cod, I = B.dom, B.cod, B.id
    a, b, c = dom(f), dom(g), dom(h)
    a2, b2, c2 = cod(f), cod(g), cod(h)
    unit = B.unit()
    assoc = B.eq(
        B.compose(B.tensor(B.tensor(f, g), h), B.assoc(a2, b2, c2)),
        B.compose(B.assoc(a, b, c), B.tensor(f, B.tensor(g, h))),
    )
    lunit = B.eq(B.compose(B.tensor(I(unit), f), B.lunit(a2)), B.compose(B.lunit(a), f))
    runit = B.eq(B.compose(B.tensor(f, I(unit)), B.runit(a2)), B.compose(B.runit(a), f))
    braid = B.eq(
        B.compose(B.tensor(f, g), B.braid(a2, b2)),
        B.compose(B.braid(a, b), B.tensor(g, f)),
    )
    return assoc and lunit and runit and braid


def _bmc_case(B: BMC, law: str, rng: random.Random):
    """Run one case; returns ``(ok, inputs)``."""
    fmt = B.format_object
    if law == "pentagon":
        xs = _objs(B, rng, 4)
        return check_pentagon(B, *xs), [fmt(x) for x in xs]
    if law == "triangle":
        xs = _objs(B, rng, 2)
        return check_triangle(B, *xs), [fmt(x) for x in xs]
    if law == "hexagons":
        xs = _objs(B, rng, 3)
        return check_hexagons(B, *xs), [fmt(x) for x in xs]
    if law == "inverses":
        xs = _objs(B, rng, 3)
        return check_inverses(B, *xs), [fmt(x) for x in xs]
    if law == "naturality":
        fs = [B.random_morphism(rng, B.random_object(rng)) for _ in range(3)]
        return check_naturality(B, *fs), [B.format_mor(f) for f in fs]
    raise KeyError(law)


BMC_LAWS = ("pentagon", "triangle", "hexagons", "inverses", "naturality")


def run_bmc_law(B: BMC, law: str, seed: int, cases: int) -> LawReport:
    report = LawReport(law, B.name)
    for i in range(cases):
        ok, inputs = _bmc_case(B, law, case_rng(seed, law, i))
        report.cases += 1
        if not ok:
            report.failures.append({"case": i, "inputs": inputs})
    return report


def check_bmc(B: BMC, seed: int = 0, cases: int = 200) -> list[LawReport]:
    return [run_bmc_law(B, law, seed, cases) for law in BMC_LAWS]


# -- U(Sigma B) as a braided monoidal category -------------------------------

class USigma(BMC):
    """Vertical tensor, weak constraints and Eckmann-Hilton braiding of ``S``."""

    def __init__(self, S: SigmaB):
        self.S = S
        self.name = f"U-sigma({S.B.name})"

    def unit(self):
        return EMPTY_OBJ

    def tensor_obj(self, a, b):
        return self.S.vstack(a, b)

    def dom(self, f: SigmaMor):
        return f.source

    def cod(self, f: SigmaMor):
        return f.target

    def id(self, a):
        return self.S.id(a)

    def compose(self, f, g):
        return self.S.compose(f, g)

    def tensor(self, f, g):
        return self.S.vtensor(f, g)

    def assoc(self, a, b, c):
        return self.S.vassoc(a, b, c)

    def assoc_inv(self, a, b, c):
        return self.S.vassoc_inv(a, b, c)

    def lunit(self, a):
        return self.S.vlunit(a)

    def lunit_inv(self, a):
        return self.S.vlunit_inv(a)

    def runit(self, a):
        return self.S.vrunit(a)

    def runit_inv(self, a):
        return self.S.vrunit_inv(a)

    def braid(self, a, b):
        return self.S.eh_braiding(a, b)

    def braid_inv(self, a, b):
        return self.S.inverse(self.S.eh_braiding(a, b))

    def key(self, f):
        return self.S.key(f)

    def inverse(self, f):
        return self.S.inverse(f)

    def format_object(self, a: SigmaObj) -> str:
        return str(a.key)

    def format_mor(self, f) -> str:
        return self.S.to_json(f)

    def random_object(self, rng, max_atoms: int = 2):
        return random_object(self.S, rng, max_atoms)

    def random_morphism(self, rng, src, max_len: int = 3):
        return random_mor(self.S, rng, src, max_len)


# -- two-tensor structure ----------------------------------------------------

def _generator(S: SigmaB, rng: random.Random) -> SigmaMor:
    B = S.B
    return equiv.W_mor(S, B.random_morphism(rng, B.random_object(rng, 2), 3))


def _sigma_case(S: SigmaB, law: str, rng: random.Random):
    B = S.B
    U = USigma(S)
    if law == "h_strict_objects":
        X, Y, Z = (random_object(S, rng) for _ in range(3))
        hs = S.hstack
        ok = (hs(hs(X, Y), Z) == hs(X, hs(Y, Z))
              and hs(X, EMPTY_OBJ) == X == hs(EMPTY_OBJ, X))
        return ok, [str(O.key) for O in (X, Y, Z)]
    if law == "h_strict_constraints":
        X, Y, Z = (random_object(S, rng) for _ in range(3))
        maps = [S.hassoc(X, Y, Z), S.hlunit(X), S.hrunit(X),
                S.hlunit_inv(Y), S.hrunit_inv(Z)]
        return all(S.is_identity(m) for m in maps), [str(O.key) for O in (X, Y, Z)]
    if law == "h_strict_morphisms":
        f, g, h = (random_mor(S, rng, random_object(S, rng)) for _ in range(3))
        ok = (S.equal(S.htensor(S.htensor(f, g), h), S.htensor(f, S.htensor(g, h)))
              and S.equal(S.htensor(f, S.id(EMPTY_OBJ)), f)
              and S.equal(S.htensor(S.id(EMPTY_OBJ), f), f))
        return ok, [S.to_json(m) for m in (f, g, h)]
    if law == "v_pentagon":
        xs = [random_object(S, rng, 2) for _ in range(4)]
        return check_pentagon(U, *xs), [str(x.key) for x in xs]
    if law == "v_triangle":
        xs = [random_object(S, rng, 2) for _ in range(2)]
        return check_triangle(U, *xs), [str(x.key) for x in xs]
    if law == "v_weak":
        # vertical constraints relate objects with different keys
        X = random_object(S, rng, 2)
        while not X.labels():
            X = random_object(S, rng, 2)
        return S.vstack(X, EMPTY_OBJ) != X and S.vstack(EMPTY_OBJ, X) != X, [str(X.key)]
    if law == "v_naturality":
        fs = [random_mor(S, rng, random_object(S, rng, 2), 3) for _ in range(3)]
        return check_naturality(U, *fs), [S.to_json(m) for m in fs]
    if law == "functoriality":
        X = random_object(S, rng)
        f = random_mor(S, rng, X)
        g = random_mor(S, rng, f.target)
        h = random_mor(S, rng, random_object(S, rng))
        k = random_mor(S, rng, h.target)
        ok = (S.equal(S.vtensor(S.compose(f, g), S.compose(h, k)),
                      S.compose(S.vtensor(f, h), S.vtensor(g, k)))
              and S.equal(S.htensor(S.compose(f, g), S.compose(h, k)),
                          S.compose(S.htensor(f, h), S.htensor(g, k))))
        return ok, [S.to_json(m) for m in (f, g, h, k)]
    if law == "interchange":
        ms = [_generator(S, rng) for _ in range(4)]
        return S.interchange_holds(*ms), [S.to_json(m) for m in ms]
    if law == "interchange_multi":
        ms = [random_mor(S, rng, random_object(S, rng, 2)) for _ in range(4)]
        return S.interchange_holds(*ms), [S.to_json(m) for m in ms]
    if law == "eh_is_sigma":
        a, b = B.random_object(rng, 2), B.random_object(rng, 2)
        return equiv.eh_is_sigma(S, a, b), [B.format_object(a), B.format_object(b)]
    if law == "eh_hexagons":
        xs = [random_object(S, rng, 1) for _ in range(3)]
        return check_hexagons(U, *xs), [str(x.key) for x in xs]
    return _functor_case(S, law, rng)


def _functor_case(S: SigmaB, law: str, rng: random.Random):
    B = S.B
    fmt = B.format_object
    if law == "W_identity":
        x = B.random_object(rng)
        return equiv.check_functor_id(S, x), [fmt(x)]
    if law == "W_compose":
        f = B.random_morphism(rng, B.random_object(rng))
        g = B.random_morphism(rng, B.cod(f))
        return equiv.check_functor_compose(S, f, g), [B.format_mor(f), B.format_mor(g)]
    if law == "phi_natural":
        f = B.random_morphism(rng, B.random_object(rng, 2))
        g = B.random_morphism(rng, B.random_object(rng, 2))
        return equiv.check_phi_natural(S, f, g), [B.format_mor(f), B.format_mor(g)]
    if law == "monoidal_assoc":
        xs = [B.random_object(rng, 2) for _ in range(3)]
        return equiv.check_monoidal_assoc(S, *xs), [fmt(x) for x in xs]
    if law == "monoidal_units":
        x = B.random_object(rng)
        return equiv.check_monoidal_units(S, x), [fmt(x)]
    if law == "braided_square":
        x, y = B.random_object(rng, 2), B.random_object(rng, 2)
        return equiv.check_braided(S, x, y), [fmt(x), fmt(y)]
    if law == "ess_surj":
        X = random_object(S, rng, 5)
        return equiv.witness_is_iso(S, equiv.ess_surj_witness(S, X)), [str(X.key)]
    raise KeyError(law)


FUNCTOR_LAWS = ("W_identity", "W_compose", "phi_natural", "monoidal_assoc",
                "monoidal_units", "braided_square", "ess_surj")

SIGMA_LAWS = (
    "h_strict_objects", "h_strict_constraints", "h_strict_morphisms",
    "v_pentagon", "v_triangle", "v_weak", "v_naturality", "functoriality",
    "interchange", "interchange_multi", "eh_is_sigma", "eh_hexagons",
)


def run_sigma_law(S: SigmaB, law: str, seed: int, cases: int) -> LawReport:
    report = LawReport(law, f"sigma({S.B.name})")
    for i in range(cases):
        ok, inputs = _sigma_case(S, law, case_rng(seed, law, i))
        report.cases += 1
        if not ok:
            report.failures.append({"case": i, "inputs": inputs})
    return report


def check_two_monoidal(S: SigmaB, seed: int = 0, cases: int = 200,
                       laws: tuple[str, ...] = SIGMA_LAWS) -> LawReport:
    """All two-tensor laws aggregated into one report."""
    report = LawReport("two_monoidal", f"sigma({S.B.name})")
    for law in laws:
        sub = run_sigma_law(S, law, seed, cases)
        report.cases += sub.cases
        for fail in sub.failures:
            report.failures.append({"law": law, **fail})
    report.failures.sort(key=lambda f: (f["law"], f["case"]))
    return report


def replay(target: BMC | SigmaB, law: str, seed: int, index: int) -> bool:
    """Re-run a single case; ``True`` if it passes."""
    rng = case_rng(seed, law, index)
    if isinstance(target, SigmaB):
        return _sigma_case(target, law, rng)[0]
    return _bmc_case(target, law, rng)[0]


def format_reports(reports: list[LawReport], fmt: str = "text") -> str:
    reports = sorted(reports, key=lambda r: (r.instance, r.law))
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)
    lines = []
    for r in reports:
        lines.append(r.line())
        for fail in sorted(r.failures, key=lambda f: (f.get("law", ""), f["case"])):
            lines.append("  counterexample " + json.dumps(fail, sort_keys=True))
    return "\n".join(lines)

