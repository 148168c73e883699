"""Bundled golden fixtures and the errata comparison against them.

The package ships a reference decision matrix (table2.json) together with
the recorded intermediate score tables (table3/table4), the recorded
dominance matrix (table5) and the recorded degrees (table6).  Where the
records contradict the formulas, the comparison emits errata rather than
patching either side; a registry of pre-verified discrepancies is bundled
as errata.json.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from importlib import resources

from .decision import DominanceReport, Erratum, WeightedInfoSystem, system_from_dict
from .errors import DimensionError
from .rational import as_rational, exact_str
from .scores import quad_at

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def _read_text(name: str) -> str:
    return resources.files("ifnorder.fixtures").joinpath(name).read_text("utf-8")


def load_table2_system() -> WeightedInfoSystem:
    doc = json.loads(_read_text("table2.json"), parse_float=Fraction, parse_int=Fraction)
    return system_from_dict(doc)


def load_expected_scores() -> dict[tuple[str, str, int], str]:
    """Recorded per-cell scores keyed by (alternative, attribute, score index)."""
    expected = {}
    for name in ("table3.expected.csv", "table4.expected.csv"):
        rows = csv.DictReader(_read_text(name).splitlines())
        for row in rows:
            key = (row["alternative"], row["attribute"], int(row["index"]))
            expected[key] = row["value"]
    return expected


def load_expected_matrix() -> tuple[tuple[str, ...], dict[tuple[str, str], str]]:
    rows = list(csv.reader(_read_text("table5.expected.csv").splitlines()))
    header = [c.strip() for c in rows[0][1:]]
    cells = {}
    for row in rows[1:]:
        x = row[0].strip()
        for y, value in zip(header, row[1:]):
            cells[(x, y)] = value.strip()
    return tuple(header), cells


def load_expected_degrees() -> dict[str, str]:
    rows = csv.DictReader(_read_text("table6.expected.csv").splitlines())
    return {row["alternative"]: row["degree"] for row in rows}


def registry() -> tuple[Erratum, ...]:
    """Pre-verified discrepancies between recorded values and the formulas."""
    entries = json.loads(_read_text("errata.json"))
    return tuple(
        Erratum(
            location=e["location"],
            recorded=e["recorded"],
            computed=e["computed"],
            note=e.get("note", ""),
        )
        for e in entries
    )


def matches_printed(actual: Fraction, printed: str) -> bool:
    """True when `actual` rounds to the printed text at its own precision.

    Ties at exactly half an ulp are accepted either way, so a record rounded
    half-up never counts as a discrepancy against half-even recomputation.
    """
    printed = printed.strip().lstrip("+")
    recorded = as_rational(printed)
    dp = len(printed.split(".")[1]) if "." in printed else 0
    return abs(actual - recorded) <= Fraction(1, 2 * 10**dp)


def reference_errata(report: DominanceReport, system: WeightedInfoSystem) -> list[Erratum]:
    """Compare a pipeline run against the recorded tables, entry by entry.

    Scores are recompared at the recorded levels (1,1) and (1/2,1/2); the
    dominance matrix and degrees come from the report.  Only mismatches are
    returned, each carrying the recorded value and the recomputation.
    """
    alts, matrix_expected = load_expected_matrix()
    if tuple(report.alternatives) != alts:
        raise DimensionError(
            "reference comparison requires the bundled fixture's alternatives"
        )
    errata: list[Erratum] = []

    expected_scores = load_expected_scores()
    quads: dict[tuple[str, str, int], Fraction] = {}
    for x in report.alternatives:
        for a in report.attributes:
            cell = system.cell(x, a)
            low = quad_at(cell, 1, 1).as_tuple()
            high = quad_at(cell, HALF, HALF).as_tuple()
            for idx, value in enumerate(low + high, start=1):
                quads[(x, a, idx)] = value
    for (x, a, idx), printed in sorted(
        expected_scores.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1])
    ):
        actual = quads[(x, a, idx)]
        if not matches_printed(actual, printed):
            errata.append(
                Erratum(
                    location=f"table{3 if idx <= 4 else 4}:{x}:{a}:C{idx}",
                    recorded=printed,
                    computed=exact_str(actual),
                    note="recorded cell score disagrees with the formula",
                )
            )

    for i, x in enumerate(report.alternatives):
        for j, y in enumerate(report.alternatives):
            printed = matrix_expected[(x, y)]
            actual = report.matrix[i][j]
            if not matches_printed(actual, printed):
                errata.append(
                    Erratum(
                        location=f"table5:{x}:{y}",
                        recorded=printed,
                        computed=exact_str(actual),
                        note="recorded dominance entry disagrees with recomputation",
                    )
                )

    degrees_expected = load_expected_degrees()
    for x, degree in zip(report.alternatives, report.degrees):
        printed = degrees_expected[x]
        if not matches_printed(degree, printed):
            errata.append(
                Erratum(
                    location=f"table6:{x}",
                    recorded=printed,
                    computed=exact_str(degree),
                    note="recorded dominance degree disagrees with recomputation",
                )
            )
    return errata
