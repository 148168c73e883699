"""Score functions: the four-per-level cut scores, interval-valued scores,
triangular scores, and the bench of legacy ranking formulas they improve on."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .cuts import CutRect, cut
from .errors import KindMismatchError
from .ifn import Ifn
from .rational import as_rational
from .sequences import DenseSequence

ONE = Fraction(1)
TWO = Fraction(2)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ScoreQuad:
    """The four scores of one cut rectangle, in comparison order."""

    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c1, self.c2, self.c3, self.c4)


def quad_from_endpoints(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> ScoreQuad:
    ac, bd = a * c, b * d
    return ScoreQuad(
        c1=(a + b - c - d + ac + bd) / 2,
        c2=(a + b - c - d - ac - bd) / 2,
        c3=(a - b - c + d + ac + bd) / 2,
        c4=(a - b + c - d + ac - bd) / 2,
    )


def score_quad(rect: CutRect) -> ScoreQuad:
    return quad_from_endpoints(rect.mu_lo, rect.mu_hi, rect.nu_lo, rect.nu_hi)


def quad_at(ifn: Ifn, alpha, beta) -> ScoreQuad:
    return score_quad(cut(ifn, alpha, beta))


def c_value(ifn: Ifn, seq: DenseSequence, j: int) -> Fraction:
    """The j-th score of the stream: level pair ceil(j/4), component j mod 4."""
    if j < 1:
        raise ValueError(f"score index must be positive, got {j}")
    i = (j + 3) // 4
    r = j - 4 * (i - 1)
    alpha, beta = seq.pair(i)
    return quad_at(ifn, alpha, beta).as_tuple()[r - 1]


def c_stream(ifn: Ifn, seq: DenseSequence, count: int) -> list[Fraction]:
    """First `count` scores, four per level pair, evaluating each cut once."""
    out: list[Fraction] = []
    i = 1
    while len(out) < count:
        try:
            alpha, beta = seq.pair(i)
        except IndexError:
            break
        out.extend(quad_at(ifn, alpha, beta).as_tuple())
        i += 1
    return out[:count]


class IvifScores(NamedTuple):
    L: Fraction
    LG: Fraction
    P: Fraction
    IP: Fraction


def ivif_scores(mu_interval, nu_interval) -> IvifScores:
    """Membership, nonmembership, vague and imprecise scores of ([a,b],[c,d]).

    They are the cut scores in disguise: L = c1, -LG = c2, P = c3, -IP = c4.
    """
    a, b = (as_rational(v) for v in mu_interval)
    c, d = (as_rational(v) for v in nu_interval)
    ac, bd = a * c, b * d
    return IvifScores(
        L=(a + b - c - d + ac + bd) / 2,
        LG=(-a - b + c + d + ac + bd) / 2,
        P=(a - b - c + d + ac + bd) / 2,
        IP=(-a + b - c + d - ac + bd) / 2,
    )


class TriangularScores(NamedTuple):
    T: Fraction
    NT: Fraction
    NTc: Fraction


def triangular_scores(ifn: Ifn) -> TriangularScores:
    """Membership score T from the membership triple, NT/NTc from the other."""
    if not (ifn.mu.is_triangle and ifn.nu.is_triangle):
        raise KindMismatchError("triangular scores need coincident shoulders")
    a, b, c = ifn.mu.q1, ifn.mu.q2, ifn.mu.q4
    e, f, g = ifn.nu.q1, ifn.nu.q2, ifn.nu.q4
    left = (ONE - a) / (ONE + b - a)
    right = c / (ONE + c - b)
    t = (ONE + right - left) / 2
    nl = e / (ONE + e - f)
    nr = (ONE - g) / (ONE + f - g)
    nt = (ONE + nl - nr) / 2
    return TriangularScores(T=t, NT=nt, NTc=ONE - nt)


@dataclass(frozen=True)
class RootQuotient:
    """Exact value num / sqrt(radicand) with num >= 0, radicand > 0.

    Keeps similarity-degree scores exact: equality and order compare squared
    cross products, so no irrational ever needs rounding.
    """

    num: Fraction
    radicand: Fraction

    def __post_init__(self):
        if self.radicand <= 0:
            raise ZeroDivisionError("radicand must be positive")
        if self.num < 0:
            raise ValueError("numerator must be nonnegative")

    def __eq__(self, other):
        if isinstance(other, RootQuotient):
            return self.num**2 * other.radicand == other.num**2 * self.radicand
        return NotImplemented

    def __hash__(self):
        return hash(self.num**2 / self.radicand)

    def __lt__(self, other: "RootQuotient") -> bool:
        return self.num**2 * other.radicand < other.num**2 * self.radicand

    def __float__(self) -> float:
        return float(self.num) / float(self.radicand) ** 0.5


# --- legacy ranking bench ---------------------------------------------------
#
# Each method reproduces one published scoring formula verbatim, for the
# comparison bench only.  Shapes: "interval" methods read a flat pair as
# ([a,b],[c,d]); "point" methods read a point pair as (mu, nu); "triangular"
# methods need coincident shoulders.


def _interval_of(ifn: Ifn):
    if not (ifn.mu.is_flat and ifn.nu.is_flat):
        raise KindMismatchError(f"{ifn.text()} is not interval-shaped")
    return ifn.mu.q1, ifn.mu.q3, ifn.nu.q1, ifn.nu.q3


def _point_of(ifn: Ifn):
    if not (ifn.mu.is_point and ifn.nu.is_point):
        raise KindMismatchError(f"{ifn.text()} is not a point value")
    return ifn.mu.q1, ifn.nu.q1


def xu_s(ifn: Ifn) -> Fraction:
    a, b, c, d = _interval_of(ifn)
    return (a + b - c - d) / 2


def xu_h(ifn: Ifn) -> Fraction:
    a, b, c, d = _interval_of(ifn)
    return (a + b + c + d) / 2


def yu_s(ifn: Ifn) -> Fraction:
    a, b, c, d = _interval_of(ifn)
    return (TWO + a + b - c - d) / 2


def ye_m(ifn: Ifn) -> Fraction:
    a, b, c, d = _interval_of(ifn)
    return a + b - ONE + (c + d) / 2


def lakshmana_geetha_lg(ifn: Ifn, delta=HALF) -> Fraction:
    delta = as_rational(delta)
    if not Fraction(0) <= delta <= ONE:
        raise ValueError(f"delta must lie in [0, 1], got {delta}")
    a, b, c, d = _interval_of(ifn)
    return (a + b + delta * (TWO - a - b - c - d)) / 2


def chen_tan_s(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return m - n


def hong_choi_h(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return m + n


def liu_s(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return m + m * (ONE - m - n)


def zhou_wu_s(ifn: Ifn, alpha=HALF, beta=HALF) -> Fraction:
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha + beta > ONE:
        raise ValueError("parameters must satisfy alpha + beta <= 1")
    m, n = _point_of(ifn)
    return m - n + (alpha - beta) * (ONE - m - n)


def lin_s(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return 2 * m + n - ONE


def wang_s(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return m - n - (ONE - m - n) / 2


def llin_s(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return m / 2 + Fraction(3, 2) * (m + n) - ONE


def ye_sy(ifn: Ifn) -> Fraction:
    m, n = _point_of(ifn)
    return m * (TWO - m - n) + (ONE - m - n) ** 2


def zhang_yu_kminus(ifn: Ifn) -> RootQuotient:
    """Similarity to the anti-ideal ([0,0],[1,1])."""
    a, b, c, d = _interval_of(ifn)
    radicand = (a**2 + b**2 + c**2 + d**2) / 2
    if radicand == 0:
        raise ZeroDivisionError("similarity degree undefined for the zero value")
    return RootQuotient((c + d) / 2, radicand)


def zhang_yu_kplus(ifn: Ifn) -> RootQuotient:
    """Similarity to the ideal ([1,1],[0,0])."""
    a, b, c, d = _interval_of(ifn)
    radicand = (a**2 + b**2 + c**2 + d**2) / 2
    if radicand == 0:
        raise ZeroDivisionError("similarity degree undefined for the zero value")
    return RootQuotient((a + b) / 2, radicand)


def zhang_yu(ifn: Ifn) -> tuple[RootQuotient, RootQuotient]:
    return (zhang_yu_kminus(ifn), zhang_yu_kplus(ifn))


def triangular_t(ifn: Ifn) -> Fraction:
    return triangular_scores(ifn).T


def triangular_nt(ifn: Ifn) -> Fraction:
    return triangular_scores(ifn).NT


def triangular_ntc(ifn: Ifn) -> Fraction:
    return triangular_scores(ifn).NTc


LEGACY_METHODS: dict[str, Callable] = {
    "xu-s": xu_s,
    "xu-h": xu_h,
    "yu-s": yu_s,
    "ye-m": ye_m,
    "lg": lakshmana_geetha_lg,
    "chen-tan-s": chen_tan_s,
    "hong-choi-h": hong_choi_h,
    "liu-s": liu_s,
    "zhou-wu-s": zhou_wu_s,
    "lin-s": lin_s,
    "wang-s": wang_s,
    "llin-s": llin_s,
    "ye-sy": ye_sy,
    "zhang-yu-kminus": zhang_yu_kminus,
    "zhang-yu-kplus": zhang_yu_kplus,
    "tri-t": triangular_t,
    "tri-nt": triangular_nt,
    "tri-ntc": triangular_ntc,
}


def legacy_score(method: str, ifn: Ifn, **params):
    """Dispatch a legacy method by registry name."""
    try:
        fn = LEGACY_METHODS[method]
    except KeyError:
        raise KeyError(f"unknown legacy method {method!r}") from None
    return fn(ifn, **params)
