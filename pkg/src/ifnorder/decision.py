"""Weighted decision matrices of IFN cells and the dominance ranking pipeline.

The pipeline compares every pair of alternatives attribute by attribute with
the total order, splits attributes into win/tie sets, folds weights into a
dominance matrix, and ranks by row means.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import (
    CellValidationError,
    DimensionError,
    IfnValidationError,
    ParseError,
    WeightSumError,
)
from .ifn import Ifn, ifn_from_compact, ifn_from_dict, ifn_to_compact
from .ordering import DEFAULT_DEPTH, Relation, Verdict, compare
from .rational import as_rational, format_rational
from .sequences import DEFAULT_SEQUENCE, DenseSequence

ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeightedInfoSystem:
    """Alternatives x attributes matrix of IFN cells plus attribute weights."""

    alternatives: tuple[str, ...]
    attributes: tuple[str, ...]
    weights: dict[str, Fraction]
    cells: dict[tuple[str, str], Ifn]

    def cell(self, alternative: str, attribute: str) -> Ifn:
        return self.cells[(alternative, attribute)]


def _validate_system(
    alternatives, attributes, weights, raw_cells, normalize: bool
) -> WeightedInfoSystem:
    if not alternatives:
        raise ParseError("system has no alternatives")
    if not attributes:
        raise ParseError("system has no attributes")
    if len(set(alternatives)) != len(alternatives):
        raise ParseError("duplicate alternative ids")
    if len(set(attributes)) != len(attributes):
        raise ParseError("duplicate attribute ids")
    for a, w in weights.items():
        if w < 0:
            raise WeightSumError(f"weight of {a} is negative: {w}")
    total = sum(weights.values())
    if total == 0:
        raise WeightSumError("weights sum to zero")
    if total != ONE:
        if not normalize:
            raise WeightSumError(
                f"weights sum to {format_rational(total, 6)}, expected exactly 1 "
                "(pass normalize to rescale)"
            )
        weights = {a: w / total for a, w in weights.items()}
    cells: dict[tuple[str, str], Ifn] = {}
    for x in alternatives:
        for a in attributes:
            if (x, a) not in raw_cells:
                raise CellValidationError(x, a, "missing cell")
            cells[(x, a)] = raw_cells[(x, a)]
    return WeightedInfoSystem(tuple(alternatives), tuple(attributes), weights, cells)


def system_from_dict(doc: dict, normalize: bool = False) -> WeightedInfoSystem:
    """Build a system from the JSON document shape.

    {"alternatives": [...], "attributes": [{"id": ..., "weight": ...}, ...],
     "cells": {alt: {attr: <IFN literal>, ...}, ...}}
    """
    try:
        alternatives = [str(x) for x in doc["alternatives"]]
        attr_entries = doc["attributes"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"system document missing required keys: {exc}") from exc
    attributes = []
    weights = {}
    for entry in attr_entries:
        try:
            attributes.append(str(entry["id"]))
            weights[str(entry["id"])] = as_rational(entry["weight"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed attribute entry {entry!r}: {exc}") from exc
    raw_cells = {}
    cell_doc = doc.get("cells", {})
    for x in alternatives:
        for a in attributes:
            try:
                literal = cell_doc[x][a]
            except (KeyError, TypeError):
                continue
            try:
                if isinstance(literal, str):
                    raw_cells[(x, a)] = ifn_from_compact(literal)
                else:
                    raw_cells[(x, a)] = ifn_from_dict(literal)
            except (IfnValidationError, ParseError) as exc:
                raise CellValidationError(x, a, str(exc)) from exc
    return _validate_system(alternatives, attributes, weights, raw_cells, normalize)


def system_from_csv_text(text: str, normalize: bool = False) -> WeightedInfoSystem:
    """CSV shape: header of attribute ids, weights line, then one row per alternative."""
    rows = list(csv.reader(text.splitlines()))
    rows = [r for r in rows if r and any(c.strip() for c in r)]
    if len(rows) < 3:
        raise ParseError("CSV system needs a header, a weights line and data rows")
    attributes = [c.strip() for c in rows[0][1:]]
    if rows[1][0].strip().lower() != "weights":
        raise ParseError("second CSV line must start with 'weights'")
    if len(rows[1]) != len(attributes) + 1:
        raise ParseError("weights line does not match the attribute header")
    weights = {a: as_rational(w.strip()) for a, w in zip(attributes, rows[1][1:])}
    alternatives = []
    raw_cells = {}
    for row in rows[2:]:
        x = row[0].strip()
        alternatives.append(x)
        if len(row) != len(attributes) + 1:
            raise ParseError(f"row {x!r} does not match the attribute header")
        for a, text_cell in zip(attributes, row[1:]):
            if not text_cell.strip():
                continue
            try:
                raw_cells[(x, a)] = ifn_from_compact(text_cell.strip())
            except (IfnValidationError, ParseError) as exc:
                raise CellValidationError(x, a, str(exc)) from exc
    return _validate_system(alternatives, attributes, weights, raw_cells, normalize)


def load_system(path, normalize: bool = False) -> WeightedInfoSystem:
    """Load a system document from a .json or .csv file."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from exc
    if p.suffix.lower() == ".csv":
        return system_from_csv_text(text, normalize=normalize)
    try:
        doc = json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{p}: {exc}") from exc
    return system_from_dict(doc, normalize=normalize)


@dataclass(frozen=True)
class PairAudit:
    """One attribute-level comparison inside the pipeline."""

    x: str
    y: str
    attribute: str
    relation: str
    j: int | None


def _attribute_verdicts(
    sys: WeightedInfoSystem, x: str, y: str, seq: DenseSequence, depth: int
) -> list[tuple[str, Verdict]]:
    return [
        (a, compare(sys.cell(x, a), sys.cell(y, a), seq=seq, max_depth=depth))
        for a in sys.attributes
    ]


def better_sets(
    sys: WeightedInfoSystem,
    x: str,
    y: str,
    seq: DenseSequence = DEFAULT_SEQUENCE,
    depth: int = DEFAULT_DEPTH,
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Attributes where x strictly beats y, and where they tie.

    Indistinguishable comparisons count as ties; with the default sequence on
    trapezoids they never occur.
    """
    better, ties = [], []
    for a, verdict in _attribute_verdicts(sys, x, y, seq, depth):
        if verdict.relation is Relation.GREATER:
            better.append(a)
        elif verdict.is_tie:
            ties.append(a)
    return tuple(better), tuple(ties)


def wr(
    sys: WeightedInfoSystem,
    x: str,
    y: str,
    seq: DenseSequence = DEFAULT_SEQUENCE,
    depth: int = DEFAULT_DEPTH,
) -> Fraction:
    """Weighted dominance of x over y: won weights plus half the tied weights."""
    better, ties = better_sets(sys, x, y, seq=seq, depth=depth)
    return sum(sys.weights[a] for a in better) + sum(sys.weights[a] for a in ties) / 2


def dominance_degrees(matrix) -> list[Fraction]:
    """Row means of a square dominance matrix."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise DimensionError("dominance matrix must be square")
    if n == 0:
        raise DimensionError("dominance matrix is empty")
    return [sum(row, Fraction(0)) / n for row in matrix]


@dataclass(frozen=True)
class Erratum:
    """A documented mismatch between a recorded value and its recomputation."""

    location: str
    recorded: str
    computed: str
    note: str = ""


@dataclass(frozen=True)
class DominanceReport:
    """Everything the pipeline produced, plus audit trail and errata notes."""

    alternatives: tuple[str, ...]
    attributes: tuple[str, ...]
    weights: dict[str, Fraction]
    matrix: tuple[tuple[Fraction, ...], ...]
    degrees: tuple[Fraction, ...]
    ranking: tuple[str, ...]
    degree_ties: tuple[tuple[str, ...], ...]
    audit: tuple[PairAudit, ...]
    errata: tuple[Erratum, ...] = field(default_factory=tuple)

    def degree_of(self, alternative: str) -> Fraction:
        return self.degrees[self.alternatives.index(alternative)]

    def wr_of(self, x: str, y: str) -> Fraction:
        return self.matrix[self.alternatives.index(x)][self.alternatives.index(y)]

    def with_errata(self, errata) -> "DominanceReport":
        return DominanceReport(
            self.alternatives,
            self.attributes,
            self.weights,
            self.matrix,
            self.degrees,
            self.ranking,
            self.degree_ties,
            self.audit,
            tuple(errata),
        )

    def to_jsonable(
        self, places: int = 6, include_audit: bool = False, include_errata: bool = False
    ) -> dict:
        fmt = lambda v: format_rational(v, places)
        doc = {
            "alternatives": list(self.alternatives),
            "attributes": [
                {"id": a, "weight": fmt(self.weights[a])} for a in self.attributes
            ],
            "dominance": [[fmt(v) for v in row] for row in self.matrix],
            "degrees": {x: fmt(d) for x, d in zip(self.alternatives, self.degrees)},
            "ranking": list(self.ranking),
            "degree_ties": [list(group) for group in self.degree_ties],
        }
        if include_audit:
            doc["audit"] = [
                {
                    "x": rec.x,
                    "y": rec.y,
                    "attribute": rec.attribute,
                    "relation": rec.relation,
                    "j": rec.j,
                }
                for rec in self.audit
            ]
        if include_errata:
            doc["errata"] = [
                {
                    "location": e.location,
                    "recorded": e.recorded,
                    "computed": e.computed,
                    "note": e.note,
                }
                for e in self.errata
            ]
        return doc


def run_algorithm(
    sys: WeightedInfoSystem,
    seq: DenseSequence = DEFAULT_SEQUENCE,
    depth: int = DEFAULT_DEPTH,
) -> DominanceReport:
    """Full pipeline: pairwise verdicts, win/tie sets, matrix, degrees, ranking.

    Each unordered pair is compared once; the mirrored entries follow from
    antisymmetry.  Ranking is by descending degree, ties broken by input
    order and reported as tied groups.
    """
    alts = sys.alternatives
    n = len(alts)
    verdicts: dict[tuple[str, str, str], Verdict] = {}
    for i, x in enumerate(alts):
        for y in alts[i + 1 :]:
            for a, verdict in _attribute_verdicts(sys, x, y, seq, depth):
                verdicts[(x, y, a)] = verdict

    def relation(x: str, y: str, a: str) -> Relation:
        if (x, y, a) in verdicts:
            return verdicts[(x, y, a)].relation
        mirrored = verdicts[(y, x, a)].relation
        if mirrored is Relation.LESS:
            return Relation.GREATER
        if mirrored is Relation.GREATER:
            return Relation.LESS
        return mirrored

    matrix = []
    for x in alts:
        row = []
        for y in alts:
            if x == y:
                row.append(HALF * sum(sys.weights.values()))
                continue
            value = Fraction(0)
            for a in sys.attributes:
                rel = relation(x, y, a)
                if rel is Relation.GREATER:
                    value += sys.weights[a]
                elif rel in (Relation.EQUIVALENT, Relation.INDISTINGUISHABLE):
                    value += sys.weights[a] / 2
            row.append(value)
        matrix.append(tuple(row))
    degrees = dominance_degrees([list(r) for r in matrix])

    order = sorted(range(n), key=lambda i: (-degrees[i], i))
    ranking = tuple(alts[i] for i in order)
    ties = []
    start = 0
    while start < n:
        end = start
        while end + 1 < n and degrees[order[end + 1]] == degrees[order[start]]:
            end += 1
        if end > start:
            ties.append(tuple(alts[order[k]] for k in range(start, end + 1)))
        start = end + 1

    audit = []
    for i, x in enumerate(alts):
        for y in alts[i + 1 :]:
            for a in sys.attributes:
                v = verdicts[(x, y, a)]
                audit.append(PairAudit(x, y, a, v.relation.value, v.j))

    return DominanceReport(
        alternatives=alts,
        attributes=sys.attributes,
        weights=sys.weights,
        matrix=tuple(matrix),
        degrees=tuple(degrees),
        ranking=ranking,
        degree_ties=tuple(ties),
        audit=tuple(audit),
    )


def system_to_csv(sys: WeightedInfoSystem) -> str:
    """Render a system in the CSV shape (compact cell literals)."""
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alternative"] + list(sys.attributes))
    writer.writerow(["weights"] + [format_rational(sys.weights[a], 6) for a in sys.attributes])
    for x in sys.alternatives:
        writer.writerow([x] + [ifn_to_compact(sys.cell(x, a)) for a in sys.attributes])
    return buf.getvalue()
