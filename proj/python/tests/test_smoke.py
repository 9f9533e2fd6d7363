import pytest

import chevwidth as cw


def test_roots_info():
    info = cw.roots_info("A3")
    assert info["num_roots"] == 12
    assert info["num_positive"] == 6
    assert info["weyl_order"] == 24


def test_constants_g2_has_three():
    table = cw.constants("G2")
    assert table["hash"].startswith("fnv1a64:")
    assert max(abs(row[5]) for row in table["entries"]) >= 3


def test_commutator_formula():
    report = cw.verify_commutator("C2", "F5", trials=5)
    assert report["failures"] == []
    assert report["pairs"] == 8 * 6


def test_symplectic_form():
    assert cw.symplectic_form(1) == [[0, 1], [-1, 0]]


def test_eval_and_symbols():
    w = [{"root": 0, "param": 1}, {"root": 1, "param": -1}, {"root": 0, "param": 1}]
    m = cw.eval_word("A1", "sl", "Z", w)
    assert m["matrix"]["rows"] == [["0", "1"], ["-1", "0"]]
    assert cw.collect("A2", "F5", [{"root": 1, "param": 1}, {"root": 0, "param": 1}])[0]["root"] == 0
    assert cw.k2_witness("A1", "F5", w + w + w + w) == "InK2"


def test_k2():
    cls = cw.k2_class("F3(t)", "t^2+1", "t")
    assert len(cls) == 1
    rep = cw.k2_ring("F5[t,t^-1]")
    assert rep["order"] == 4 and rep["verified"]
    assert cw.k2_ring("F3[t]")["order"] == 1


def test_factor_roundtrip():
    f = cw.factor("F2[t]", "A1", [["1+t^2", "t"], ["t", "1"]])
    assert f["verified"]
    with pytest.raises(cw.ChevwidthError) as e:
        cw.factor("F2[t]", "A1", [["t", "t"], ["t", "1"]])
    assert e.value.code == "NotUnimodular"


def test_unitriangular_and_tavgen():
    form = cw.unitriangular("A2", "F3", [[0, 1, 0], [-1, 0, 0], [0, 0, 1]], 4)
    assert form is not None and form["length"] == 4
    sweep = cw.tavgen("D4", 2, walk=20, seed=1)
    assert sweep["failures"] == 0 and sweep["lifts"] == 20


def test_acceptance_single_criterion():
    (res,) = cw.acceptance(criterion=2)
    assert res["passed"]
