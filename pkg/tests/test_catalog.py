import copy
import json

import pytest

from spinaf import catalog as cat
from spinaf.errors import CatalogFormatError, InconsistentRecord


@pytest.fixture(scope="module")
def bundled():
    return cat.load_bundled()


def test_bundled_catalog_loads(bundled):
    catalog, expectations = bundled
    assert len(catalog.records) == 43
    assert len(expectations) == 127


def test_record_json_roundtrip(bundled):
    catalog, _ = bundled
    for r in catalog.records:
        assert cat.record_from_json(cat.record_to_json(r)) == r


def test_find_missing_family(bundled):
    catalog, _ = bundled
    with pytest.raises(CatalogFormatError):
        catalog.find("no-such-family")


def _bundled_json():
    with open(cat.bundled_path("catalog.json"), encoding="utf-8") as fh:
        return json.load(fh)


def test_corrupted_relator_rejected(tmp_path):
    data = _bundled_json()
    # break a relator of the first record that mentions a holonomy generator
    rec = next(d for d in data["records"] if d["matrices"])
    hol = next(iter(rec["matrices"]))
    rec["relators"].append([[hol, {"const": 1}]])  # alpha = 1 cannot hold
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(InconsistentRecord):
        cat.load_catalog(p)


def test_unknown_holonomy_name_rejected(tmp_path):
    data = _bundled_json()
    data["records"][0]["holonomy"] = "Q8"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(CatalogFormatError):
        cat.load_catalog(p)


def test_duplicate_family_rejected(tmp_path):
    data = _bundled_json()
    data["records"].append(copy.deepcopy(data["records"][0]))
    p = tmp_path / "dup.json"
    p.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(CatalogFormatError):
        cat.load_catalog(p)


def test_missing_file_rejected(tmp_path):
    with pytest.raises(CatalogFormatError):
        cat.load_catalog(tmp_path / "absent.json")


def test_verify_full_table(bundled):
    catalog, expectations = bundled
    report = cat.verify(catalog, expectations)
    assert report.total == 127
    assert report.failures == 0
    assert report.zero_rows == 15


def test_verify_detects_altered_count(bundled):
    catalog, expectations = bundled
    altered = list(expectations)
    row = altered[0]
    altered[0] = cat.ExpectationRow(row.family, row.holonomy, row.params, row.count + 1)
    report = cat.verify(catalog, altered)
    assert report.failures == 1


def test_verify_missing_record_is_failure_not_crash(bundled):
    catalog, _ = bundled
    rows = [cat.ExpectationRow("no-such-family", "C2", (0, 0, 0, 0), 8)]
    report = cat.verify(catalog, rows)
    assert report.failures == 1
    assert report.rows[0].computed is None


def test_verify_empty_expectations(bundled):
    catalog, _ = bundled
    report = cat.verify(catalog, [])
    assert report.total == 0
    assert report.failures == 0


def test_classify_stable_under_record_permutation(bundled):
    catalog, expectations = bundled
    reversed_catalog = cat.Catalog(tuple(reversed(catalog.records)))
    a = cat.verify(catalog, expectations)
    b = cat.verify(reversed_catalog, expectations)
    assert a == b


def test_classify_reduces_params_mod2(bundled):
    catalog, _ = bundled
    r = catalog.find("1")
    row = cat.classify_record(r, (2, 0, 0))
    assert row.params == (0, 0, 0)
    assert row.count == 16


def test_report_json_summary_consistent(bundled):
    catalog, expectations = bundled
    report = cat.verify(catalog, expectations[:5])
    payload = report.to_json()
    assert payload["summary"]["total"] == len(payload["rows"])
    assert payload["summary"]["failures"] == sum(
        1 for r in payload["rows"] if not r["passed"]
    )
