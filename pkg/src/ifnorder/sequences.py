"""Upper dense sequences in (0,1] feeding the level pairs of the comparator.

Every sequence yields pairs (alpha_i, beta_i) with both components in (0,1]
and the first pair equal to (1,1).  The default enumerates each rational in
(0,1] exactly once: 1, then for k = 2, 3, ... the reduced fractions j/k in
increasing j.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, ParseError
from .rational import as_rational

ONE = Fraction(1)

_distinct_cache: list[Fraction] = [ONE]
_distinct_next_den = 2


def distinct_term(i: int) -> Fraction:
    """i-th term of the duplicate-free enumeration of the rationals in (0,1]."""
    if i < 1:
        raise DomainError(f"index must be positive, got {i}")
    global _distinct_next_den
    while len(_distinct_cache) < i:
        k = _distinct_next_den
        for j in range(1, k):
            if math.gcd(j, k) == 1:
                _distinct_cache.append(Fraction(j, k))
        _distinct_next_den += 1
    return _distinct_cache[i - 1]


def term_with_repeats(i: int) -> Fraction:
    """Closed-form enumeration i/k - (k-1)/2 with k the triangular block index.

    Values repeat: block k lists 1/k, 2/k, ..., k/k without reducing, so the
    same rational reappears under different indices.
    """
    if i < 1:
        raise DomainError(f"index must be positive, got {i}")
    k = (math.isqrt(8 * i - 7) + 1) // 2
    return Fraction(i, k) - Fraction(k - 1, 2)


class DenseSequence:
    """Pure index -> (alpha, beta) rule; no iteration state."""

    diagonal: bool = False

    def pair(self, i: int) -> tuple[Fraction, Fraction]:
        raise NotImplementedError

    def __len__(self) -> int:  # finite sequences override
        raise TypeError("sequence is unbounded")

    @property
    def is_finite(self) -> bool:
        try:
            len(self)
        except TypeError:
            return False
        return True

    def first_distinct_levels(self, count: int, probe: int = 16):
        """Indices and values of the first `count` distinct alpha levels.

        Only meaningful for diagonal sequences; returns None when the prefix
        of `probe` terms does not contain `count` distinct values.
        """
        seen: list[tuple[int, Fraction]] = []
        values: set[Fraction] = set()
        i = 1
        while len(seen) < count and i <= probe:
            try:
                alpha, _ = self.pair(i)
            except IndexError:
                return None
            if alpha not in values:
                values.add(alpha)
                seen.append((i, alpha))
            i += 1
        return seen if len(seen) == count else None


class DistinctDiagonal(DenseSequence):
    """Default: (d_i, d_i) over the duplicate-free rational enumeration."""

    diagonal = True

    def pair(self, i):
        v = distinct_term(i)
        return (v, v)


class RepeatsDiagonal(DenseSequence):
    """Diagonal pairs over the with-repeats closed form."""

    diagonal = True

    def pair(self, i):
        v = term_with_repeats(i)
        return (v, v)


class PairList(DenseSequence):
    """Explicit finite list of (alpha, beta) pairs."""

    def __init__(self, pairs):
        cleaned = []
        for a, b in pairs:
            a, b = as_rational(a), as_rational(b)
            for v in (a, b):
                if not Fraction(0) < v <= ONE:
                    raise DomainError(f"sequence level {v} outside (0, 1]")
            cleaned.append((a, b))
        if not cleaned:
            raise ParseError("sequence must be nonempty")
        if cleaned[0] != (ONE, ONE):
            raise DomainError("sequence must start at (1, 1)")
        self._pairs = tuple(cleaned)
        self.diagonal = all(a == b for a, b in cleaned)

    def pair(self, i):
        if i < 1:
            raise DomainError(f"index must be positive, got {i}")
        return self._pairs[i - 1]  # IndexError past the end, as documented

    def __len__(self):
        return len(self._pairs)


class CustomRule(DenseSequence):
    """Two user-supplied index rules; `diagonal` is the caller's promise."""

    def __init__(self, alpha_rule, beta_rule, diagonal: bool = False):
        self._alpha = alpha_rule
        self._beta = beta_rule
        self.diagonal = diagonal
        if self.pair(1) != (ONE, ONE):
            raise DomainError("sequence must start at (1, 1)")

    def pair(self, i):
        a, b = as_rational(self._alpha(i)), as_rational(self._beta(i))
        for v in (a, b):
            if not Fraction(0) < v <= ONE:
                raise DomainError(f"sequence level {v} outside (0, 1]")
        return (a, b)


DEFAULT_SEQUENCE = DistinctDiagonal()


def from_spec(spec: str) -> DenseSequence:
    """Resolve a CLI sequence spec: distinct | repeats | file:<path>."""
    if spec == "distinct":
        return DistinctDiagonal()
    if spec == "repeats":
        return RepeatsDiagonal()
    if spec.startswith("file:"):
        return from_file(spec[len("file:") :])
    raise ParseError(f"unknown sequence spec {spec!r}")


def from_file(path: str) -> PairList:
    """Load one 'alpha,beta' decimal pair per line; blank lines and # comments skipped."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ParseError(f"{path}:{lineno}: expected 'alpha,beta'")
            pairs.append((parts[0], parts[1]))
    return PairList(pairs)
