import json

import pytest
from click.testing import CliRunner

from spinaf import catalog as cat
from spinaf.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, args, catch_exceptions=False)


def test_preimage_diag(runner):
    result = run(runner, "preimage", "diag:1,1,-1,-1")
    assert result.exit_code == 0
    assert "e3e4" in result.output
    assert "-e3e4" in result.output


def test_preimage_identity(runner):
    result = run(runner, "preimage", "identity")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert any(line.startswith("+") and line.split()[-1] == "1" for line in lines)
    assert any(line.startswith("-") and line.split()[-1] == "-1" for line in lines)


def test_preimage_det_minus_one_exit_2(runner):
    result = run(runner, "preimage", "diag:1,1,1,-1")
    assert result.exit_code == 2
    assert "SO(4)" in result.output


def test_preimage_malformed_literal(runner):
    result = run(runner, "preimage", "nonsense")
    assert result.exit_code == 2


def test_preimage_json_exact_coefficients(runner):
    result = run(runner, "preimage", "mat:1,-1,0,0,1,1,0,0,0,0,2,0,0,0,0,2", "--format", "json")
    # that matrix is not orthogonal -> invalid input
    assert result.exit_code == 2
    result = run(runner, "preimage", "diag:-1,-1,1,1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    terms = payload["preimages"][0]["terms"]
    assert terms == [
        {"blade": "e1e2", "coeff": {"a_num": 1, "a_den": 1, "b_num": 0, "b_den": 1}}
    ]


def test_classify_family_27(runner):
    result = run(runner, "classify", "--family", "27", "--params", "k4=1")
    assert result.exit_code == 0
    assert "16" in result.output


def test_classify_bold_row_B5b(runner):
    result = run(runner, "classify", "--family", "B5b",
                 "--params", "k1=1,k2=1,k5=1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload == [{
        "family": "B5b", "holonomy": "C2", "params": [1, 1, 0, 0, 1],
        "count": 0, "parallelizable": False,
    }]


def test_classify_reduces_mod2(runner):
    result = run(runner, "classify", "--family", "1", "--params", "k1=2",
                 "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload[0]["params"] == [0, 0, 0]
    assert payload[0]["count"] == 16


def test_classify_unknown_family(runner):
    result = run(runner, "classify", "--family", "zz")
    assert result.exit_code == 2


def test_classify_unknown_parameter(runner):
    result = run(runner, "classify", "--family", "1", "--params", "k9=1")
    assert result.exit_code == 2


def test_classify_params_without_family(runner):
    result = run(runner, "classify", "--params", "k1=1")
    assert result.exit_code == 2


def test_verify_bundled_passes(runner):
    result = run(runner, "verify")
    assert result.exit_code == 0
    assert "0 failures" in result.output
    assert "15 rows with zero spin structures" in result.output


def test_verify_json_deterministic(runner):
    a = run(runner, "verify", "--format", "json")
    b = run(runner, "verify", "--format", "json")
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output
    payload = json.loads(a.output)
    assert payload["summary"] == {"total": 127, "failures": 0, "zero_rows": 15}


def test_verify_altered_expectation_exit_1(runner, tmp_path):
    with open(cat.bundled_path("expectations.json"), encoding="utf-8") as fh:
        data = json.load(fh)
    data["rows"][0]["count"] += 1
    p = tmp_path / "alt.json"
    p.write_text(json.dumps(data), encoding="utf-8")
    result = run(runner, "verify", "--expected", str(p))
    assert result.exit_code == 1
    assert "1 failures" in result.output


def test_verify_empty_expectations_warns(runner, tmp_path):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"format_version": 1, "rows": []}), encoding="utf-8")
    result = runner.invoke(main, ["verify", "--expected", str(p)])
    assert result.exit_code == 0
    assert "warning" in result.output


def test_verify_missing_catalog_exit_3(runner, tmp_path):
    result = run(runner, "verify", "--catalog", str(tmp_path / "none.json"))
    assert result.exit_code == 3


def test_verify_malformed_catalog_exit_2(runner, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{\"format_version\": 1, \"records\": [{}]}", encoding="utf-8")
    result = run(runner, "verify", "--catalog", str(p))
    assert result.exit_code == 2


def test_lift_group_examples(runner):
    for family, name in [("103", "Q16"), ("1", "C2"), ("184", "C3:Q8")]:
        result = run(runner, "lift-group", "--family", family, "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["name"] == name


def test_char_examples(runner):
    for family, decomposition in [("75", "2χ1+χ3+χ4"), ("1", "4χ1"),
                                  ("158", "χ1+χ2+χ3")]:
        result = run(runner, "char", "--family", family)
        assert result.exit_code == 0
        assert decomposition in result.output


def test_export(runner):
    result = run(runner, "export", "--family", "4", "--params", "k1=1")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["count"] == 8
    assert payload["strategy"] == "direct"
    assert len(payload["assignments"]) == 8
    assert "base_preimages" in payload
    for term in payload["base_preimages"]["al"]["terms"]:
        assert set(term["coeff"]) == {"a_num", "a_den", "b_num", "b_den"}


def test_export_sylow_family(runner):
    result = run(runner, "export", "--family", "143", "--params", "k1=1")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["count"] == 2
    assert payload["strategy"] == "sylow"
    assert "base_preimages" not in payload


def test_formats_render(runner):
    for fmt in ["text", "csv", "markdown"]:
        result = run(runner, "classify", "--family", "27", "--format", fmt)
        assert result.exit_code == 0
        assert "27" in result.output
