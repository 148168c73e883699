"""Lexicographic total order over the score stream, with an equality certificate."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CertificateInapplicableError, DomainError
from .ifn import Ifn
from .scores import quad_at
from .sequences import DEFAULT_SEQUENCE, DenseSequence

DEFAULT_DEPTH = 100


class Relation(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUIVALENT = "Equivalent"
    INDISTINGUISHABLE = "Indistinguishable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one comparison.

    For Less/Greater, `j` is the smallest score index where the operands
    differ and `c_a`/`c_b` the two scores there.  Equivalent is only emitted
    with a sound certificate; Indistinguishable records the exhausted depth.
    """

    relation: Relation
    j: int | None = None
    c_a: Fraction | None = None
    c_b: Fraction | None = None
    certified: bool = False
    depth: int | None = None

    @property
    def is_tie(self) -> bool:
        return self.relation in (Relation.EQUIVALENT, Relation.INDISTINGUISHABLE)


def _certificate_indices(seq: DenseSequence) -> list[int] | None:
    """Level-pair indices covering three distinct diagonal levels, if available."""
    if not seq.diagonal:
        return None
    levels = seq.first_distinct_levels(3)
    if levels is None:
        return None
    return [i for i, _ in levels]


def equality_certificate(a: Ifn, b: Ifn, seq: DenseSequence = DEFAULT_SEQUENCE) -> bool:
    """Decide stream equality from finitely many scores.

    Sound for diagonal sequences: each of the four scores is a polynomial of
    degree at most two in the level (cut endpoints are affine, the products
    contribute degree two), so agreement at three distinct levels forces the
    polynomials, hence every deeper score, to agree.
    """
    indices = _certificate_indices(seq)
    if indices is None:
        raise CertificateInapplicableError(
            "certificate needs a diagonal sequence whose prefix reaches "
            "three distinct levels"
        )
    for i in indices:
        alpha, beta = seq.pair(i)
        if quad_at(a, alpha, beta) != quad_at(b, alpha, beta):
            return False
    return True


def compare(
    a: Ifn,
    b: Ifn,
    seq: DenseSequence = DEFAULT_SEQUENCE,
    max_depth: int = DEFAULT_DEPTH,
) -> Verdict:
    """Scan scores j = 1, 2, ... and stop at the first strict difference.

    With a certificate-capable sequence the scan is complete once the three
    certificate levels agree (Equivalent, certified).  Otherwise the scan is
    bounded by `max_depth` level pairs and ends in Indistinguishable.
    """
    if max_depth < 1:
        raise DomainError(f"max_depth must be positive, got {max_depth}")
    cert_indices = _certificate_indices(seq)
    if cert_indices is not None:
        scan_to = cert_indices[-1]
    else:
        scan_to = max_depth
        if seq.is_finite:
            scan_to = min(scan_to, len(seq))
    depth = 0
    for i in range(1, scan_to + 1):
        alpha, beta = seq.pair(i)
        qa = quad_at(a, alpha, beta).as_tuple()
        qb = quad_at(b, alpha, beta).as_tuple()
        depth = i
        for r in range(4):
            if qa[r] != qb[r]:
                j = 4 * (i - 1) + r + 1
                rel = Relation.LESS if qa[r] < qb[r] else Relation.GREATER
                return Verdict(rel, j=j, c_a=qa[r], c_b=qb[r])
    if cert_indices is not None:
        return Verdict(Relation.EQUIVALENT, certified=True)
    return Verdict(Relation.INDISTINGUISHABLE, depth=depth)


@dataclass(frozen=True)
class TieGroup:
    """Maximal run of mutually tied operands, in input order."""

    items: tuple[Ifn, ...]
    indistinguishable: bool = False


def sort_ifns(
    items,
    seq: DenseSequence = DEFAULT_SEQUENCE,
    max_depth: int = DEFAULT_DEPTH,
) -> list[TieGroup]:
    """Ascending total preorder; ties grouped, stable within groups."""
    items = list(items)
    if not items:
        raise ValueError("nothing to sort")
    groups: list[dict] = []
    for item in items:
        placed = False
        for pos, group in enumerate(groups):
            verdict = compare(item, group["rep"], seq=seq, max_depth=max_depth)
            if verdict.relation is Relation.LESS:
                groups.insert(pos, {"rep": item, "members": [item], "fuzzy": False})
                placed = True
                break
            if verdict.is_tie:
                group["members"].append(item)
                group["fuzzy"] = group["fuzzy"] or (
                    verdict.relation is Relation.INDISTINGUISHABLE
                )
                placed = True
                break
        if not placed:
            groups.append({"rep": item, "members": [item], "fuzzy": False})
    return [
        TieGroup(items=tuple(g["members"]), indistinguishable=g["fuzzy"]) for g in groups
    ]
