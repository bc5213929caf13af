"""Command-line interface.

Subcommands: classify, verify, preimage, lift-group, char, export.

Exit codes:
  0  success
  1  verification failures
  2  invalid input (bad flags, unknown family, malformed data, matrix not
     in SO(4))
  3  I/O error (unreadable catalog or expectations file)
  4  internal invariant violation
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import click

from . import catalog as cat
from . import fp, holonomy, linalg, spin
from .clifford import CliffordElement, blade_str
from .errors import (
    CatalogFormatError,
    InconsistentRecord,
    NotInImage,
    NotInSO,
    NotSignedPerm,
    SpinafError,
    UnsupportedScalar,
)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_INTERNAL = 4

FORMATS = click.Choice(["text", "json", "csv", "markdown"])


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------


def _load_catalog(path: Optional[str]) -> cat.Catalog:
    target = path if path is not None else cat.bundled_path("catalog.json")
    try:
        return cat.load_catalog(target)
    except CatalogFormatError as exc:
        code = EXIT_IO if isinstance(exc.__cause__, OSError) else EXIT_INVALID
        _fail(code, str(exc))
    except InconsistentRecord as exc:
        _fail(EXIT_INVALID, str(exc))


def _load_expectations(path: Optional[str]):
    target = path if path is not None else cat.bundled_path("expectations.json")
    try:
        return cat.load_expectations(target)
    except CatalogFormatError as exc:
        code = EXIT_IO if isinstance(exc.__cause__, OSError) else EXIT_INVALID
        _fail(code, str(exc))


def _find_record(catalog: cat.Catalog, family: str) -> fp.AlmostBieberbachRecord:
    try:
        return catalog.find(family)
    except CatalogFormatError as exc:
        _fail(EXIT_INVALID, str(exc))


def _param_vector(
    record: fp.AlmostBieberbachRecord, params: Optional[str]
) -> Tuple[int, ...]:
    """Parse 'k1=..,k2=..'; unspecified parameters default to 0.

    Values may be any integers; they are reduced mod 2 downstream and the
    reduction is echoed in the output.
    """
    names = record.presentation.parameters
    values = {n: 0 for n in names}
    if params:
        for item in params.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                _fail(EXIT_INVALID, f"malformed parameter assignment {item!r}")
            key, _, raw = item.partition("=")
            key = key.strip()
            if key not in values:
                _fail(
                    EXIT_INVALID,
                    f"family {record.family} has parameters "
                    f"{', '.join(names) or '(none)'}; got {key!r}",
                )
            try:
                values[key] = int(raw)
            except ValueError:
                _fail(EXIT_INVALID, f"parameter {key} needs an integer, got {raw!r}")
    return tuple(values[n] for n in names)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _render_table(headers: Sequence[str], rows: Sequence[Sequence[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "markdown":
        lines = ["| " + " | ".join(headers) + " |"]
        lines.append("| " + " | ".join("---" for _ in headers) + " |")
        for row in rows:
            lines.append("| " + " | ".join(row) + " |")
        return "\n".join(lines)
    # text: aligned columns
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        out.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
    return "\n".join(out)


def _params_str(params: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in params) + ")"


def _qsqrt2_json(c) -> Dict[str, int]:
    a = Fraction(c.a)
    b = Fraction(c.b)
    return {
        "a_num": a.numerator,
        "a_den": a.denominator,
        "b_num": b.numerator,
        "b_den": b.denominator,
    }


def _spin_element_json(x: CliffordElement) -> dict:
    return {
        "terms": [
            {"blade": blade_str(mask) if mask else "1", "coeff": _qsqrt2_json(coeff)}
            for mask, coeff in sorted(x.terms.items())
        ]
    }


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


# ---------------------------------------------------------------------------
# matrix literals
# ---------------------------------------------------------------------------


def _parse_matrix(literal: str):
    """Parse a matrix literal: 'identity', 'diag:1,1,-1,-1', or
    'mat:' followed by 16 row-major comma-separated rationals."""
    literal = literal.strip()
    if literal == "identity":
        return linalg.as_matrix([[1 if i == j else 0 for j in range(4)] for i in range(4)])

    def parse_entries(text: str, expected: int) -> List[Fraction]:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != expected:
            _fail(EXIT_INVALID, f"expected {expected} entries, got {len(parts)}")
        try:
            return [Fraction(p) for p in parts]
        except (ValueError, ZeroDivisionError):
            _fail(EXIT_INVALID, f"non-rational matrix entry in {text!r}")

    if literal.startswith("diag:"):
        entries = parse_entries(literal[len("diag:"):], 4)
        return linalg.as_matrix(
            [[entries[i] if i == j else 0 for j in range(4)] for i in range(4)]
        )
    if literal.startswith("mat:"):
        entries = parse_entries(literal[len("mat:"):], 16)
        return linalg.as_matrix([entries[4 * i : 4 * i + 4] for i in range(4)])
    _fail(
        EXIT_INVALID,
        f"unrecognised matrix literal {literal!r} "
        "(use 'identity', 'diag:...', or 'mat:...')",
    )


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@click.group()
@click.version_option(package_name="spinaf")
def main() -> None:
    """Spin structures on 4-dimensional almost-flat manifolds, exactly."""


_catalog_option = click.option(
    "--catalog", "catalog_path", type=click.Path(), default=None,
    help="Catalog JSON file (defaults to the bundled catalog).")
_family_option = click.option("--family", required=True, help="Family id, e.g. 27 or B5b.")
_format_option = click.option(
    "--format", "fmt", type=FORMATS, default="text", show_default=True,
    help="Output format.")


@main.command()
@_catalog_option
@click.option("--family", default=None, help="Restrict to one family id.")
@click.option(
    "--params", default=None,
    help="Comma-separated assignments like k1=1,k2=0; unset parameters are 0. "
    "Values are reduced mod 2 and the reduction is echoed.")
@_format_option
def classify(catalog_path, family, params, fmt) -> None:
    """Count spin structures for catalog records (at one parameter vector)."""
    catalog = _load_catalog(catalog_path)
    if params is not None and family is None:
        _fail(EXIT_INVALID, "--params requires --family")
    if family is not None:
        records = [_find_record(catalog, family)]
    else:
        records = sorted(catalog.records, key=lambda r: r.family)
    rows: List[cat.ClassifyRow] = []
    for record in records:
        if not holonomy.orientability(record):
            _fail(
                EXIT_INVALID,
                f"family {record.family} is not orientable (its holonomy does not "
                "lie in SL(4, Z)); spin structures are undefined",
            )
        try:
            rows.append(cat.classify_record(record, _param_vector(record, params)))
        except InconsistentRecord as exc:
            _fail(EXIT_INTERNAL, str(exc))
    if fmt == "json":
        click.echo(_dump_json([
            {
                "family": r.family,
                "holonomy": r.holonomy,
                "params": list(r.params),
                "count": r.count,
                "parallelizable": r.parallelizable,
            }
            for r in rows
        ]))
        return
    table = [
        (r.family, r.holonomy, _params_str(r.params), str(r.count),
         "yes" if r.parallelizable else "no")
        for r in rows
    ]
    click.echo(_render_table(
        ["family", "holonomy", "params", "count", "parallelizable"], table, fmt))


@main.command()
@_catalog_option
@click.option(
    "--expected", "expected_path", type=click.Path(), default=None,
    help="Expectations JSON file (defaults to the bundled expectations).")
@_format_option
def verify(catalog_path, expected_path, fmt) -> None:
    """Recompute every expected (family, params) -> count row."""
    catalog = _load_catalog(catalog_path)
    expectations = _load_expectations(expected_path)
    if not expectations:
        click.echo("warning: expectations file has no rows", err=True)
    try:
        report = cat.verify(catalog, expectations)
    except SpinafError as exc:
        _fail(EXIT_INTERNAL, str(exc))
    if fmt == "json":
        click.echo(_dump_json(report.to_json()))
    else:
        table = [
            (r.family, r.holonomy, _params_str(r.params), str(r.expected),
             "-" if r.computed is None else str(r.computed),
             "pass" if r.passed else "FAIL")
            for r in report.rows
        ]
        click.echo(_render_table(
            ["family", "holonomy", "params", "expected", "computed", "status"],
            table, fmt))
        click.echo(
            f"{report.total} rows, {report.failures} failures, "
            f"{report.zero_rows} rows with zero spin structures")
    if report.failures:
        sys.exit(EXIT_FAILURES)


@main.command()
@click.argument("matrix")
@_format_option
def preimage(matrix, fmt) -> None:
    """Both spin preimages of a matrix in SO(4).

    MATRIX is 'identity', 'diag:1,1,-1,-1', or 'mat:' with 16 row-major
    comma-separated entries.
    """
    M = _parse_matrix(matrix)
    try:
        x, neg = spin.preimage(M)
    except (NotInSO, NotSignedPerm) as exc:
        _fail(EXIT_INVALID, f"matrix is not in SO(4): {exc}")
    except (NotInImage, UnsupportedScalar) as exc:
        _fail(EXIT_INVALID, str(exc))
    if fmt == "json":
        click.echo(_dump_json({
            "preimages": [_spin_element_json(x), _spin_element_json(neg)],
        }))
        return
    table = [("+", str(x)), ("-", str(neg))]
    click.echo(_render_table(["sign", "element"], table, fmt))


@main.command("lift-group")
@_catalog_option
@_family_option
@_format_option
def lift_group(catalog_path, family, fmt) -> None:
    """Identify the preimage of the holonomy group in Spin(4)."""
    catalog = _load_catalog(catalog_path)
    record = _find_record(catalog, family)
    try:
        result = fp.lift_group(record)
    except SpinafError as exc:
        _fail(EXIT_INTERNAL, str(exc))
    if fmt == "json":
        click.echo(_dump_json({
            "family": record.family,
            "holonomy": record.holonomy_name,
            "name": result.name,
            "order": result.order,
            "realization": result.realization,
            "elements": [_spin_element_json(x) for x in result.elements],
        }))
        return
    click.echo(f"family {record.family}: holonomy {record.holonomy_name}, "
               f"preimage {result.name} of order {result.order} "
               f"({result.realization} realization)")
    if result.elements:
        table = [(str(i), str(x)) for i, x in enumerate(result.elements)]
        click.echo(_render_table(["#", "element"], table, fmt))


@main.command()
@_catalog_option
@_family_option
@_format_option
def char(catalog_path, family, fmt) -> None:
    """Decompose the holonomy representation into irreducible characters."""
    catalog = _load_catalog(catalog_path)
    record = _find_record(catalog, family)
    try:
        mults, rendered = holonomy.character_of_record(record)
    except SpinafError as exc:
        _fail(EXIT_INTERNAL, str(exc))
    if fmt == "json":
        click.echo(_dump_json({
            "family": record.family,
            "holonomy": record.holonomy_name,
            "decomposition": rendered,
            "multiplicities": list(mults),
        }))
        return
    click.echo(f"{record.family}: {rendered}")


@main.command()
@_catalog_option
@_family_option
@click.option(
    "--params", default=None,
    help="Comma-separated assignments like k1=1,k2=0; unset parameters are 0.")
@click.option(
    "--format", "fmt", type=click.Choice(["json"]), default="json",
    show_default=True, help="Output format (export is JSON only).")
def export(catalog_path, family, params, fmt) -> None:
    """Export the full lift data for one family as exact JSON."""
    del fmt
    catalog = _load_catalog(catalog_path)
    record = _find_record(catalog, family)
    vector = _param_vector(record, params)
    names = record.presentation.parameters
    reduced = fp.reduce_params_mod2(dict(zip(names, vector)))
    try:
        result = fp.count_lifts(record, reduced)
    except SpinafError as exc:
        _fail(EXIT_INTERNAL, str(exc))
    payload = {
        "family": record.family,
        "holonomy": record.holonomy_name,
        "nilpotency_class": record.nilpotency_class,
        "params": {n: reduced[n] for n in names},
        "count": result.count,
        "exists": result.exists,
        "strategy": result.strategy,
        "parallelizable": result.parallelizable,
        "assignments": [a.as_dict() for a in result.valid_assignments],
    }
    try:
        base = fp.base_preimages(record)
    except UnsupportedScalar:
        base = None
    if base is not None:
        payload["base_preimages"] = {
            name: _spin_element_json(x) for name, x in sorted(base.items())
        }
    click.echo(_dump_json(payload))


if __name__ == "__main__":  # pragma: no cover
    main()
