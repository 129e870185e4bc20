import json

import pytest

import cuspinv

CURVE_5_11 = {"n": 5, "y": [[11, "1"], [12, "1"], [13, "1"]]}


def test_semigroup_copair():
    assert cuspinv.semigroup(4, 9)["copair"] == [3, 7]
    assert cuspinv.semigroup(5, 11)["conductor"] == 40


def test_semimodule_axes():
    sm = cuspinv.semimodule(5, 11, [5, 11, 17, 23, 29])
    assert sm["axes"] == [5, 16, 22, 28, 34]
    assert sm["limits"][:2] == [[1, 4], [1, 3]]


def test_standard_basis_and_oracle():
    b = cuspinv.standard_basis(CURVE_5_11, delorme=False)
    assert b["lambda"] == [5, 11, 17, 23, 29]
    assert b["t"] == [5, 11, 16, 21, 26, 31]
    assert b["forms"][2] == {"dx": [[0, 1, "-11"]], "dy": [[1, 0, "5"]]}
    assert cuspinv.semimodule_oracle(CURVE_5_11)["basis"] == b["lambda"]


def test_verify_semiroot():
    report = cuspinv.verify(CURVE_5_11, 2, "1/2")
    assert report["pass"]
    assert report["semimodule"] == [5, 11, 17]


def test_dicritical_check():
    form = {"dx": [[0, 1, "-11"]], "dy": [[1, 0, "5"]]}
    assert cuspinv.dicritical_check(form, 5, 11)["dicritical"]


def test_errors_raise():
    with pytest.raises(cuspinv.CuspError):
        cuspinv.semigroup(4, 6)


def test_cli_round_trip():
    code, out, err = cuspinv.run("semigroup", "--pair", "4,9", "--copair")
    assert code == 0 and err == ""
    assert json.loads(out) == {"copair": [3, 7]}
    code, _, err = cuspinv.run("semigroup", "--pair", "4,6")
    assert code == 1 and "non-coprime" in err


def test_malformed_json_raises():
    with pytest.raises(cuspinv.CuspError, match="malformed JSON"):
        cuspinv.standard_basis('{"n": 5,')
    with pytest.raises(ValueError, match="unknown field"):
        cuspinv.standard_basis({"n": 5, "y": [[11, "1"]], "colour": 1})
