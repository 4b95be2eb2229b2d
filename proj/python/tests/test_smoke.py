import pytest

import mordell

SQRT2 = ["-2", "0", "1"]
ZETA3 = ["1", "1", "1"]
CUBIC = ["1", "0", "-3", "1"]


def test_torsion_over_explicit_fields():
    assert mordell.torsion("1", SQRT2)["group"]["name"] == "C6"
    assert mordell.torsion("-27", ZETA3)["group"] == {"m": 2, "n": 6, "name": "C2xC6"}
    assert mordell.torsion("16", CUBIC)["group"]["name"] == "C9"
    assert mordell.torsion("4")["group"]["name"] == "C3"


def test_long_model():
    report = mordell.torsion_long(["0", "0", "1", "0", "0"], ZETA3)
    assert report["group"]["name"] == "C3xC3"


def test_division_polynomial_factors():
    psi3 = mordell.division_polynomial("27", 3)
    assert psi3 == ["0", "324", "0", "0", "3"]
    leading, factors = mordell.factor(psi3)
    assert leading == "3"
    assert factors == [(["0", "1"], 1), (["108", "0", "0", "1"], 1)]
    lam9 = mordell.division_polynomial("4", 9, primitive=True)
    assert len(lam9) == 37
    assert sorted(len(f) - 1 for f, _ in mordell.factor(lam9)[1]) == [9, 27]


def test_classify():
    two = mordell.classify("2p", 7)
    assert two["groups"] == ["C1", "C2", "C3", "C6", "C2xC2", "C2xC6", "C3xC3"]
    three = mordell.classify("3p", 5)
    assert three["groups"] == ["C1", "C2", "C3", "C6", "C9"]
    for trace in three["traces"]:
        assert trace["anchor"]
        assert trace["verdict"] in ("EXCLUDED", "REALIZED")


def test_orbits():
    assert mordell.orbits("Cns+", 11)["orbit_sizes"] == [120]
    assert mordell.orbits("Cs+", 7)["degrees"] == [12, 36]


def test_errors():
    with pytest.raises(ValueError):
        mordell.torsion("0")
    with pytest.raises(ValueError):
        mordell.torsion("1", ["-4", "0", "1"])
    with pytest.raises(ValueError):
        mordell.classify("2p", 4)


def test_verify_subset():
    report = mordell.verify_paper("3.")
    assert report["summary"] == {"pass": 9, "fail": 0}
