"""Level cuts of fuzzy numbers and the truncated decomposition reconstruction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .ifn import Ifn, TrapFN
from .rational import as_rational
from .sequences import DenseSequence

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class CutRect:
    """The rectangle of a level cut: one interval per hat, tagged with levels.

    Open flags distinguish strong cuts; the interval endpoints are identical
    either way and are what the score functions consume.
    """

    alpha: Fraction
    beta: Fraction
    mu_lo: Fraction
    mu_hi: Fraction
    nu_lo: Fraction
    nu_hi: Fraction
    mu_open: bool = False
    nu_open: bool = False

    @property
    def mu_interval(self) -> tuple[Fraction, Fraction]:
        return (self.mu_lo, self.mu_hi)

    @property
    def nu_interval(self) -> tuple[Fraction, Fraction]:
        return (self.nu_lo, self.nu_hi)

    @property
    def mu_empty_interior(self) -> bool:
        return self.mu_open and self.mu_lo == self.mu_hi

    @property
    def nu_empty_interior(self) -> bool:
        return self.nu_open and self.nu_lo == self.nu_hi


def alpha_cut(fn: TrapFN, alpha) -> tuple[Fraction, Fraction]:
    """Endpoints [q1 + (q2-q1)a, q4 - (q4-q3)a] of {x : fn(x) >= a}, a in (0,1]."""
    alpha = as_rational(alpha)
    if not ZERO < alpha <= ONE:
        raise DomainError(f"cut level must lie in (0, 1], got {alpha}")
    return _cut_endpoints(fn, alpha)


def _cut_endpoints(fn: TrapFN, level: Fraction) -> tuple[Fraction, Fraction]:
    return (
        fn.q1 + (fn.q2 - fn.q1) * level,
        fn.q4 - (fn.q4 - fn.q3) * level,
    )


def cut(ifn: Ifn, alpha, beta) -> CutRect:
    """Plain cut: both hats cut with the same shoulder-shrinking formula.

    The beta side cuts the nonmembership hat exactly like an alpha cut of a
    membership hat; for normal trapezoids this coincides with the superlevel
    set {x : nu(x) >= beta}.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    a, b = alpha_cut(ifn.mu, alpha)
    c, d = alpha_cut(ifn.nu, beta)
    return CutRect(alpha, beta, a, b, c, d)


def strong_cut(ifn: Ifn, alpha, beta) -> CutRect:
    """Strong cut: same endpoints, open sides, levels in [0, 1)."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    for v in (alpha, beta):
        if not ZERO <= v < ONE:
            raise DomainError(f"strong cut level must lie in [0, 1), got {v}")
    a, b = _cut_endpoints(ifn.mu, alpha)
    c, d = _cut_endpoints(ifn.nu, beta)
    return CutRect(alpha, beta, a, b, c, d, mu_open=True, nu_open=True)


@dataclass(frozen=True)
class LevelRange:
    """Attained-degree ranges of the two hats over the universe."""

    mu_range: tuple[Fraction, Fraction]
    nu_range: tuple[Fraction, Fraction]
    mu_discrete: bool
    nu_discrete: bool


def level_range(ifn: Ifn) -> LevelRange:
    """Ranges of values each hat attains; discrete means only {0, 1} occur.

    A hat with two vertical legs (crisp interval or point) never takes an
    intermediate degree; the range is still reported as [0, 1] with the
    discreteness flag set.
    """
    return LevelRange(
        mu_range=(ZERO, ONE),
        nu_range=(ZERO, ONE),
        mu_discrete=ifn.mu.is_flat,
        nu_discrete=ifn.nu.is_flat,
    )


def reconstruct(ifn: Ifn, seq: DenseSequence, n: int, x) -> tuple[Fraction, Fraction]:
    """Truncated decomposition: largest sequence levels whose cuts contain x.

    Returns (mu_hat, nu_hat) with mu_hat = max{alpha_i : i <= n, mu(x) >= alpha_i}
    (0 if none) and likewise for nu.  Nondecreasing in n and bounded above by
    the true degrees; exact once the degree itself appears in the sequence.
    """
    if n < 1:
        raise DomainError(f"term count must be positive, got {n}")
    x = as_rational(x)
    m = ifn.membership_at(x)
    v = ifn.nonmembership_at(x)
    mu_hat = ZERO
    nu_hat = ZERO
    for i in range(1, n + 1):
        try:
            alpha, beta = seq.pair(i)
        except IndexError:
            break
        if alpha <= m and alpha > mu_hat:
            mu_hat = alpha
        if beta <= v and beta > nu_hat:
            nu_hat = beta
    return (mu_hat, nu_hat)
