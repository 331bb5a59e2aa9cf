from fractions import Fraction

import pytest

import pfkit


def test_version_and_data():
    assert pfkit.__version__
    assert pfkit.descriptor_hash("W5") == pfkit.locus("W5", 13)["descriptor_hash"]


def test_apery_series():
    coeffs = pfkit.frobenius_solution(["0", "-1", "11", "1"], ["-1", "22", "3"], ["3", "1"], 6)
    assert [Fraction(c) for c in coeffs] == [1, 3, 19, 147, 1251, 11253]


def test_locus_w5_13():
    rep = pfkit.locus("W5", 13)
    assert rep["ss_factored"] == "J*(J - 1)*(J - 9)"
    assert rep["bounds_ok"]
    assert rep["tool_version"] == pfkit.__version__


def test_congruence_alpha():
    rep = pfkit.congruence("W5", 11, 120)
    assert rep["ok"]
    assert [c["alpha"] for c in rep["certificates"]] == ["2*t^3 + 3*t^2 + 5*t + 1", "10*t + 1"]


def test_oracle_agrees_with_locus():
    rep = pfkit.oracle("W5", 13, exts=(1, 2))
    assert rep["oracle_agreement"]
    assert sorted(rep["supersingular"]["1"]) == ["0", "1", "9"]


def test_igusa_rows():
    rows = pfkit.igusa("W5", 13)["rows"]
    assert [r["J"] for r in rows] == ["0", "1", "9"]


def test_modforms_weights_are_strings():
    rep = pfkit.modforms("W5", order=10, emit=["tprime", "Q1"])
    assert [s["label"] for s in rep["series"]] == ["tprime", "Q1"]
    assert rep["series"][1]["weight"][0] == "4/3"
    assert all(isinstance(c, str) for c in rep["series"][0]["coefficients"])


def test_errors():
    with pytest.raises(pfkit.RamifiedPrime):
        pfkit.locus("W5", 5)
    with pytest.raises(pfkit.DescriptorError):
        pfkit.locus("NoSuchFamily", 13)


def _schemas():
    import json
    from pathlib import Path

    root = Path(__file__).resolve().parents[2] / "data" / "schemas"
    return json.loads((root / "descriptor.schema.json").read_text()), json.loads((root / "report.schema.json").read_text())


def _no_floats(x):
    if isinstance(x, float):
        return False
    if isinstance(x, dict):
        return all(_no_floats(v) for v in x.values())
    if isinstance(x, list):
        return all(_no_floats(v) for v in x)
    return True


def test_reports_match_schema():
    import json

    jsonschema = pytest.importorskip("jsonschema")
    descriptor_schema, report_schema = _schemas()
    from pathlib import Path

    for path in sorted((Path(pfkit.data_directory()) / "descriptors").glob("*.json")):
        jsonschema.validate(json.loads(path.read_text()), descriptor_schema)
    for rep in [pfkit.locus("W5", 13), pfkit.solve("Gamma1_5", 10), pfkit.bounds("SL2Z", [7, 11]), pfkit.igusa("W5", 11)]:
        jsonschema.validate(rep, report_schema)
        assert _no_floats(rep)
