import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def test_character_tables_doc_is_current():
    gen = ROOT / "tools" / "gen_char_docs.py"
    doc = ROOT / "docs" / "character_tables.md"
    result = subprocess.run(
        [sys.executable, "-c",
         "import runpy, sys; sys.argv=['gen']; "
         f"mod = runpy.run_path({str(gen)!r}); print(mod['render'](), end='')"],
        capture_output=True, text=True, check=True,
    )
    assert result.stdout == doc.read_text(encoding="utf-8")


def test_bundled_data_matches_builder_table():
    # the builder refuses to write unless every expectation is recomputed;
    # here we only check the bundled files are in sync with the build script
    import json

    from spinaf import catalog as cat

    with open(cat.bundled_path("expectations.json"), encoding="utf-8") as fh:
        data = json.load(fh)
    assert data["format_version"] == 1
    assert len(data["rows"]) == 127
    assert sum(1 for r in data["rows"] if r["count"] == 0) == 15
