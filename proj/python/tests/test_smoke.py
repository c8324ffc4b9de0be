import os
from pathlib import Path

import pytest

import orderdim

FIXTURES = Path(os.environ.get("ORDERDIM_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))

TWO_PLUS_TWO = {"elements": ["a", "b", "c", "d"], "pairs": [["a", "b"], ["c", "d"]]}


def test_classify_two_plus_two():
    report = orderdim.classify(TWO_PLUS_TWO)
    assert report["flags"]["interval_order"] is False
    assert report["witnesses"]["interval_order"]["kind"] == "TwoPlusTwo"


def test_interval_extension():
    r = {"elements": ["x1", "x2", "x3", "x4"], "pairs": [["x1", "x2"], ["x3", "x4"]]}
    out = orderdim.extend(r, "interval")
    assert sorted(map(tuple, out["pairs"])) == [("x1", "x2"), ("x1", "x4"), ("x3", "x2"), ("x3", "x4")]


def test_decompose_and_dimensions():
    d = orderdim.decompose(TWO_PLUS_TWO)
    assert d["linear_sequence"] == ["c", "d", "a", "b"]
    assert d["verified"] is True
    assert orderdim.dimension(TWO_PLUS_TWO, "lidim")["display"] == "(2,0)"
    assert orderdim.dimension(TWO_PLUS_TWO, "idim")["value"] == 2


def test_standard_example_from_file():
    text = (FIXTURES / "s3.json").read_text()
    assert orderdim.dimension(text, "dim")["value"] == 3


def test_triangle_svg():
    svg = orderdim.represent(TWO_PLUS_TWO, "triangle", format="svg")
    assert svg.count("<polygon") == 4


def test_errors_carry_code_and_witness():
    with pytest.raises(orderdim.OrderdimError) as info:
        orderdim.extend({"elements": ["x1", "x2"], "pairs": [["x1", "x2"], ["x2", "x1"]]}, "interval")
    code, message, witness = info.value.args
    assert code == "CyclicInput"
    assert "CyclicInput" in message
    assert witness == ("Cycle", ["x1", "x2", "x1"])


def test_round_trip():
    doc = {"elements": ["b", "a"], "pairs": [["b", "a"]], "name": "rt"}
    assert orderdim.canonical(doc) == doc


def test_audit_and_cli():
    report = orderdim.audit("4.1", n=5, count=20, seed=7)
    assert report["passes"] == 20
    assert "3.7" in orderdim.audit_theorems()
    code, out, err = orderdim.run_cli(["dim", "--quantity", "lidim", str(FIXTURES / "two_plus_two.json")])
    assert code == 0 and '"(2,0)"' in out and err == ""
    code, _, err = orderdim.run_cli(["check", str(FIXTURES / "duplicate.json")])
    assert code == 2 and err.startswith("error:")
