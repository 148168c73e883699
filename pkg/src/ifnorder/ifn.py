"""Trapezoidal fuzzy numbers, intuitionistic fuzzy numbers, and their validation.

An `Ifn` pairs two trapezoidal fuzzy numbers over the universe [0, 1]: a
membership hat and a nonmembership hat.  Point values, intervals and triangles
are degenerate trapezoids, so a single normal form carries all four kinds.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IfnValidationWarning,
    KnotOrderError,
    LegConditionError,
    ParseError,
    PointwiseConsistencyError,
)
from .rational import as_rational, exact_str

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TrapFN:
    """Piecewise-linear hat with feet q1, q4 and shoulders q2, q3, all in [0, 1]."""

    q1: Fraction
    q2: Fraction
    q3: Fraction
    q4: Fraction

    def __post_init__(self):
        knots = (self.q1, self.q2, self.q3, self.q4)
        for k in knots:
            if not isinstance(k, Fraction):
                raise TypeError("knots must be Fractions; use make_trapezoidal")
        if not (self.q1 <= self.q2 <= self.q3 <= self.q4):
            raise KnotOrderError(f"knots not nondecreasing: {self.text()}")
        if self.q1 < ZERO or self.q4 > ONE:
            raise KnotOrderError(f"knots outside [0, 1]: {self.text()}")

    @property
    def knots(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.q1, self.q2, self.q3, self.q4)

    @property
    def is_point(self) -> bool:
        return self.q1 == self.q4

    @property
    def is_flat(self) -> bool:
        """Both legs vertical: a crisp interval (or point)."""
        return self.q1 == self.q2 and self.q3 == self.q4

    @property
    def is_triangle(self) -> bool:
        return self.q2 == self.q3

    def membership(self, x: Fraction) -> Fraction:
        """Evaluate the hat: 0 outside [q1, q4], 1 on [q2, q3], linear on the legs."""
        if x < self.q1 or x > self.q4:
            return ZERO
        if self.q2 <= x <= self.q3:
            return ONE
        if x < self.q2:
            return (x - self.q1) / (self.q2 - self.q1)
        return (self.q4 - x) / (self.q4 - self.q3)

    def text(self) -> str:
        return "(" + ",".join(exact_str(k) for k in self.knots) + ")"


class IfnKind(enum.Enum):
    IF_VALUE = "IFValue"
    IVIF = "IVIF"
    TRIANGULAR = "Triangular"
    TRAPEZOIDAL = "Trapezoidal"


def _classify(mu: TrapFN, nu: TrapFN) -> IfnKind:
    if mu.is_point and nu.is_point:
        return IfnKind.IF_VALUE
    if mu.is_flat and nu.is_flat:
        return IfnKind.IVIF
    if mu.is_triangle and nu.is_triangle:
        return IfnKind.TRIANGULAR
    return IfnKind.TRAPEZOIDAL


@dataclass(frozen=True)
class Ifn:
    """A validated membership/nonmembership pair with an informative kind tag."""

    mu: TrapFN
    nu: TrapFN
    kind: IfnKind

    def membership_at(self, x) -> Fraction:
        return self.mu.membership(as_rational(x))

    def nonmembership_at(self, x) -> Fraction:
        return self.nu.membership(as_rational(x))

    def hesitancy_at(self, x) -> Fraction:
        x = as_rational(x)
        return ONE - self.mu.membership(x) - self.nu.membership(x)

    def text(self) -> str:
        return f"<{self.mu.text()},{self.nu.text()}>"


def _leg_branches(mu: TrapFN, nu: TrapFN) -> tuple[bool, bool]:
    # Branch one: nu sits to the right of mu; branch two: to the left.
    first = nu.q1 >= mu.q3 and nu.q2 >= mu.q4
    second = nu.q3 <= mu.q1 and nu.q4 <= mu.q2
    return first, second


def _plateau_touch(mu: TrapFN, nu: TrapFN) -> Fraction | None:
    """Point where both hats reach height one, if any."""
    lo = max(mu.q2, nu.q2)
    hi = min(mu.q3, nu.q3)
    return lo if lo <= hi else None


def validate_pair(mu: TrapFN, nu: TrapFN, strict: bool = True) -> None:
    """Check the structural conditions making (mu, nu) an IFN.

    Two layered checks:

    * leg arrangement: the nonmembership hat lies entirely to one side of the
      membership hat (its left leg starts at or after the right shoulder, or
      mirrored), with non-strict inequalities so the hats may touch;
    * degree consistency at a touch: where both hats reach height one the
      knots carry degree semantics (embedded values and intervals), so the
      right shoulders must not sum above one.

    A touch can only arise from vertical legs, i.e. from embedded point or
    interval values, which is why the second check is the classic degree-sum
    constraint in disguise.  With `strict=False` failures downgrade to
    `IfnValidationWarning` so hypothetical counterexamples can be built.
    """
    problems: list[Exception] = []
    first, second = _leg_branches(mu, nu)
    if not (first or second):
        problems.append(
            LegConditionError(
                f"neither leg arrangement holds for mu={mu.text()}, nu={nu.text()}"
            )
        )
    touch = _plateau_touch(mu, nu)
    if touch is not None and mu.q3 + nu.q3 > ONE:
        problems.append(
            PointwiseConsistencyError(
                f"membership and nonmembership both reach 1 at x={exact_str(touch)} "
                f"with shoulder degrees summing to {exact_str(mu.q3 + nu.q3)} > 1 "
                f"for mu={mu.text()}, nu={nu.text()}"
            )
        )
    if not problems:
        return
    if len(problems) == 2:
        # One raised error must report both failures.
        merged = LegConditionError("; ".join(str(p) for p in problems))
        problems = [merged]
    if strict:
        raise problems[0]
    warnings.warn(str(problems[0]), IfnValidationWarning, stacklevel=3)


def _trap(knots) -> TrapFN:
    vals = [as_rational(k) for k in knots]
    if len(vals) != 4:
        raise KnotOrderError(f"expected 4 knots, got {len(vals)}")
    return TrapFN(*vals)


def make_trapezoidal(mu_knots, nu_knots, strict: bool = True, kind: IfnKind | None = None) -> Ifn:
    """Build and validate an IFN from two 4-tuples of knots.

    Scalars may be decimal strings, ints or Fractions.  The kind tag is
    derived from knot degeneracy unless an explicit (consistent) one is given.
    """
    mu = _trap(mu_knots)
    nu = _trap(nu_knots)
    validate_pair(mu, nu, strict=strict)
    return Ifn(mu, nu, kind or _classify(mu, nu))


def embed_if_value(m, n, strict: bool = True) -> Ifn:
    """Embed a plain (membership, nonmembership) value pair as point hats."""
    m, n = as_rational(m), as_rational(n)
    return make_trapezoidal((m, m, m, m), (n, n, n, n), strict=strict, kind=IfnKind.IF_VALUE)


def embed_ivif(mu_interval, nu_interval, strict: bool = True) -> Ifn:
    """Embed an interval-valued pair ([a,b],[c,d]) as flat hats."""
    a, b = (as_rational(v) for v in mu_interval)
    c, d = (as_rational(v) for v in nu_interval)
    return make_trapezoidal((a, a, b, b), (c, c, d, d), strict=strict, kind=IfnKind.IVIF)


def embed_triangular(mu_triple, nu_triple, strict: bool = True) -> Ifn:
    """Embed two ordered triples as triangles (coincident shoulders)."""
    a, b, c = (as_rational(v) for v in mu_triple)
    e, f, g = (as_rational(v) for v in nu_triple)
    return make_trapezoidal((a, b, b, c), (e, f, f, g), strict=strict, kind=IfnKind.TRIANGULAR)


# --- literals -------------------------------------------------------------
#
# JSON grammar: {"mu":[q1,q2,q3,q4],"nu":[...]} with numbers as decimal
# strings or JSON numbers, plus shorthands {"ifv":[m,n]},
# {"ivif":[[a,b],[c,d]]} and {"tri":[[a,b,c],[e,f,g]]}.
# Compact text grammar: "<side|side>" where each side is 1, 2, 3 or 4
# comma-separated decimals (point, interval, triangle, trapezoid).


def ifn_from_dict(doc: dict, strict: bool = True) -> Ifn:
    if not isinstance(doc, dict):
        raise ParseError(f"IFN literal must be an object, got {type(doc).__name__}")
    keys = set(doc)
    try:
        if keys == {"mu", "nu"}:
            return make_trapezoidal(doc["mu"], doc["nu"], strict=strict)
        if keys == {"ifv"}:
            m, n = doc["ifv"]
            return embed_if_value(m, n, strict=strict)
        if keys == {"ivif"}:
            mu_iv, nu_iv = doc["ivif"]
            return embed_ivif(mu_iv, nu_iv, strict=strict)
        if keys == {"tri"}:
            mu_t, nu_t = doc["tri"]
            return embed_triangular(mu_t, nu_t, strict=strict)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, (KnotOrderError, LegConditionError)):
            raise
        raise ParseError(f"malformed IFN literal {doc!r}: {exc}") from exc
    raise ParseError(f"unrecognized IFN literal keys: {sorted(keys)}")


def _side_to_knots(parts: list[Fraction]):
    if len(parts) == 1:
        (m,) = parts
        return (m, m, m, m)
    if len(parts) == 2:
        a, b = parts
        return (a, a, b, b)
    if len(parts) == 3:
        a, b, c = parts
        return (a, b, b, c)
    if len(parts) == 4:
        return tuple(parts)
    raise ParseError(f"a side must have 1-4 components, got {len(parts)}")


def ifn_from_compact(text: str, strict: bool = True) -> Ifn:
    """Parse the compact form, e.g. "<0.2|0.4>" or "<0.1,0.2,0.3,0.4|0.3,0.4,0.5,0.6>"."""
    s = text.strip()
    for open_c, close_c in (("<", ">"), ("⟨", "⟩")):
        if s.startswith(open_c) and s.endswith(close_c):
            s = s[len(open_c) : -len(close_c)]
            break
    else:
        raise ParseError(f"compact IFN literal must be bracketed: {text!r}")
    sides = s.split("|")
    if len(sides) != 2:
        raise ParseError(f"expected 'mu|nu' in compact literal: {text!r}")
    try:
        mu = _side_to_knots([as_rational(p) for p in sides[0].split(",")])
        nu = _side_to_knots([as_rational(p) for p in sides[1].split(",")])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed compact literal {text!r}: {exc}") from exc
    return make_trapezoidal(mu, nu, strict=strict)


def ifn_to_dict(ifn: Ifn) -> dict:
    """Serialize to the JSON grammar; inverse of `ifn_from_dict` up to shorthand."""
    if ifn.kind is IfnKind.IF_VALUE:
        return {"ifv": [exact_str(ifn.mu.q1), exact_str(ifn.nu.q1)]}
    if ifn.kind is IfnKind.IVIF:
        return {
            "ivif": [
                [exact_str(ifn.mu.q1), exact_str(ifn.mu.q3)],
                [exact_str(ifn.nu.q1), exact_str(ifn.nu.q3)],
            ]
        }
    if ifn.kind is IfnKind.TRIANGULAR:
        return {
            "tri": [
                [exact_str(ifn.mu.q1), exact_str(ifn.mu.q2), exact_str(ifn.mu.q4)],
                [exact_str(ifn.nu.q1), exact_str(ifn.nu.q2), exact_str(ifn.nu.q4)],
            ]
        }
    return {
        "mu": [exact_str(k) for k in ifn.mu.knots],
        "nu": [exact_str(k) for k in ifn.nu.knots],
    }


def ifn_to_compact(ifn: Ifn) -> str:
    def side(fn: TrapFN) -> str:
        if fn.is_point:
            parts = [fn.q1]
        elif fn.is_flat:
            parts = [fn.q1, fn.q3]
        elif fn.is_triangle:
            parts = [fn.q1, fn.q2, fn.q4]
        else:
            parts = list(fn.knots)
        return ",".join(exact_str(p) for p in parts)

    return f"<{side(ifn.mu)}|{side(ifn.nu)}>"


def sample_curve(ifn: Ifn, step: Fraction | None = None):
    """(x, mu(x), nu(x)) rows at the knots plus an optional uniform grid.

    Rows are sorted by x and deduplicated; knots are always present so the
    polylines bend exactly at the breakpoints.
    """
    xs = set(ifn.mu.knots) | set(ifn.nu.knots) | {ZERO, ONE}
    if step is not None:
        step = as_rational(step)
        if not ZERO < step <= ONE:
            raise ParseError(f"step must lie in (0, 1], got {step}")
        k = 0
        while (x := k * step) <= ONE:
            xs.add(x)
            k += 1
    return [(x, ifn.membership_at(x), ifn.nonmembership_at(x)) for x in sorted(xs)]
