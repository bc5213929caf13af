#!/usr/bin/env python3
"""Regenerate docs/character_tables.md from the tables in spinaf.chartables."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from spinaf.chartables import TABLES

OUT = Path(__file__).resolve().parents[1] / "docs" / "character_tables.md"


def word_str(word) -> str:
    if not word:
        return "1"
    parts = []
    for gen, exp in word:
        parts.append(gen if exp == 1 else f"{gen}^{exp}")
    return "".join(parts)


def render() -> str:
    lines = [
        "# Character tables",
        "",
        "Exact character tables of the nine holonomy groups, with values in",
        "Q(ζ12).  This file is generated by `tools/gen_char_docs.py`; edit the",
        "tables in `spinaf.chartables` and regenerate.",
        "",
    ]
    for name in sorted(TABLES):
        t = TABLES[name]
        lines.append(f"## {name} (order {t.order})")
        lines.append("")
        pres = ", ".join(f"({word_str(w)})^{p}" for w, p in t.relators)
        lines.append(
            f"Presentation: ⟨{', '.join(t.generators)} | {pres}⟩." if t.generators
            else "Trivial group."
        )
        lines.append("")
        header = ["class"] + [word_str(w) for w in t.class_reps]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("| " + " | ".join("---" for _ in header) + " |")
        lines.append("| size | " + " | ".join(str(s) for s in t.class_sizes) + " |")
        for i, chi in enumerate(t.characters, start=1):
            lines.append(
                f"| χ{i} | " + " | ".join(str(v) for v in chi) + " |"
            )
        lines.append("")
    return "\n".join(lines)


def main() -> int:
    OUT.write_text(render(), encoding="utf-8")
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
