import json

import pytest

from sigmab import laws
from sigmab.bmc import BicharBMC, FreeBMC, PermBMC
from sigmab.sigma import SigmaB
from sigmab.words import UNIT, Leaf

INSTANCES = [FreeBMC(), PermBMC(), BicharBMC(4)]


@pytest.mark.parametrize("B", INSTANCES, ids=lambda B: B.name)
def test_examples_on_units_and_generators(B):
    u = UNIT
    assert laws.check_pentagon(B, u, u, u, u)
    assert laws.check_triangle(B, u, u)
    assert laws.check_hexagons(B, u, u, u)
    x, y, z = (Leaf(t) for t in B.atoms[:3])
    assert laws.check_pentagon(B, x, y, z, x)
    assert laws.check_hexagons(B, x, y, z)
    assert laws.check_hexagons(B, x, UNIT, z)


def test_free_pentagon_routes_are_identity_braids():
    B = FreeBMC()
    x, y, z, w = (Leaf(t) for t in "abca")
    T = B.tensor_obj
    route = B.compose(B.assoc(T(x, y), z, w), B.assoc(x, y, T(z, w)))
    assert route.braid.gens == ()


def test_hexagon_is_block_braiding_in_free():
    B = FreeBMC()
    x, y, z = (Leaf(t) for t in "abc")
    assert laws.check_hexagons(B, x, y, z)
    f = B.braid(x, B.tensor_obj(y, z))
    assert len(f.braid.gens) == 2


def test_empty_sample_passes():
    S = SigmaB(FreeBMC())
    r = laws.check_two_monoidal(S, seed=0, cases=0)
    assert r.passed and r.cases == 0


@pytest.mark.parametrize("B", INSTANCES, ids=lambda B: B.name)
def test_bmc_suite_small(B):
    for r in laws.check_bmc(B, seed=1, cases=40):
        assert r.passed, r.line()


def test_two_monoidal_small():
    S = SigmaB(FreeBMC())
    r = laws.check_two_monoidal(S, seed=3, cases=15)
    assert r.passed, r.failures[:1]


def test_reports_deterministic():
    B = BicharBMC(4)
    r1 = laws.check_bmc(B, seed=9, cases=20)
    r2 = laws.check_bmc(B, seed=9, cases=20)
    assert laws.format_reports(r1, "json") == laws.format_reports(r2, "json")
    data = json.loads(laws.format_reports(r1, "json"))
    assert [d["law"] for d in data] == sorted(d["law"] for d in data)


def test_mirror_mutation_reported_and_replays():
    S = SigmaB(BicharBMC(4), crossing_sign=-1)
    r = laws.check_two_monoidal(S, seed=0, cases=40, laws=("interchange", "eh_is_sigma"))
    assert not r.passed
    assert {f["law"] for f in r.failures} == {"eh_is_sigma"}
    for fail in r.failures:
        assert not laws.replay(S, fail["law"], 0, fail["case"])
        # the same case passes with the standard orientation
        assert laws.replay(SigmaB(BicharBMC(4)), fail["law"], 0, fail["case"])
    text = laws.format_reports([r])
    assert text.startswith("FAIL") and "counterexample" in text
