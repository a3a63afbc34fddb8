"""Operational definitions of velocity from a displacement measurement.

Given a distance x traveled in time t, three definitions are implemented:

1. the direct quotient x/t (unbounded; may exceed c);
2. a regularized bounded operator with auxiliary time scale T whose
   T -> infinity limit is the bounded image of x/t;
3. a regularized unbounded operator whose T -> infinity limit is the
   unbounded image of x/t, diverging as x approaches ct.

Both finite-T operators collapse algebraically to x/t when T = t, and
both converge to their limits at second order in 1/T;
:func:`convergence_scan` measures that rate empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from .core import (
    DEFAULT_POLICY,
    AtLightCone,
    BoundedVelocity,
    LightSpeed,
    NonFinite,
    NumericPolicy,
    UnboundedVelocity,
    VelocityError,
    _finish_bounded,
    artanh_ratio,
    tanh_ratio,
)

__all__ = [
    "BeyondLightCone",
    "ConvergenceRow",
    "ConvergenceScan",
    "DefinitionTag",
    "DegenerateFit",
    "ObservationRecord",
    "OutsideOperatorDomain",
    "convergence_scan",
    "def1_velocity",
    "def2_velocity",
    "def2_limit",
    "def3_velocity",
    "def3_limit",
    "evaluate",
]

# default regularization scale, in units of the observation time
DEFAULT_T_FACTOR = 1000.0


class OutsideOperatorDomain(VelocityError):
    """|x| >= cT: the bounded operator's real powers are undefined."""


class BeyondLightCone(VelocityError):
    """The unbounded operator's inner product left (-1, 1)."""


class DegenerateFit(VelocityError):
    """Errors vanished on too much of the grid to fit a rate.

    Carries the rows that were computed before the fit was abandoned.
    """

    def __init__(self, message: str, rows: tuple["ConvergenceRow", ...]):
        super().__init__(message)
        self.rows = rows


@dataclass(frozen=True)
class ObservationRecord:
    """One measured displacement x over duration t.

    T is the regularization scale used by the finite-T definitions; when
    omitted it defaults to 1000 * t, close enough to the T -> infinity
    limits to be representative while keeping the finite-T character
    visible.
    """

    x: float
    t: float
    T: float | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.x):
            raise ValueError(f"displacement must be finite, got {self.x!r}")
        if not (math.isfinite(self.t) and self.t > 0.0):
            raise ValueError(f"duration must be a positive finite real, got {self.t!r}")
        if self.T is None:
            object.__setattr__(self, "T", DEFAULT_T_FACTOR * self.t)
        if not (math.isfinite(self.T) and self.T > 0.0):
            raise ValueError(f"regularization scale must be a positive finite real, got {self.T!r}")


class DefinitionTag(Enum):
    """The three velocity definitions plus the limits of the finite-T pair."""

    DEF1 = "def1"
    DEF2 = "def2"
    DEF2_LIMIT = "def2-limit"
    DEF3 = "def3"
    DEF3_LIMIT = "def3-limit"

    @classmethod
    def parse(cls, text: str) -> "DefinitionTag":
        for tag in cls:
            if tag.value == text:
                return tag
        raise ValueError(f"unknown definition tag {text!r}")


@dataclass(frozen=True)
class ConvergenceRow:
    T: float
    value: float
    abs_error: float


@dataclass(frozen=True)
class ConvergenceScan:
    """Rows of |finite-T - limit| over a T grid plus the fitted order."""

    rows: tuple[ConvergenceRow, ...]
    order: float


def def1_velocity(obs: ObservationRecord) -> UnboundedVelocity:
    """The direct quotient x/t; unbounded, legally superluminal."""
    return UnboundedVelocity(obs.x / obs.t)


def def2_velocity(obs: ObservationRecord, c: LightSpeed,
                  policy: NumericPolicy = DEFAULT_POLICY) -> BoundedVelocity:
    """The finite-T bounded velocity operator.

    Dimensionless form: with r = x/(cT) and exponent T/t,

        ((1+r)^(T/t) - (1-r)^(T/t)) / ((1+r)^(T/t) + (1-r)^(T/t))

    evaluated in log space so the powers never overflow.  Requires
    |x| < cT (real powers of a non-positive base are undefined); the
    result magnitude stays below c for all inputs in the domain.
    """
    if abs(obs.x) >= c.c * obs.T:
        raise OutsideOperatorDomain(
            f"|x| = {abs(obs.x)!r} >= c*T = {c.c * obs.T!r}")
    r = obs.x / (c.c * obs.T)
    exponent = obs.T / obs.t
    if exponent == 1.0:
        # the operator reduces to the identity on r; evaluating the log
        # form anyway would only add rounding noise
        return _finish_bounded(c.c * r, c, policy)
    half_gap = 0.5 * (exponent * math.log1p(r) - exponent * math.log1p(-r))
    if math.isnan(half_gap):
        raise NonFinite(f"log-space exponent overflowed for {obs!r}")
    return _finish_bounded(c.c * tanh_ratio(half_gap), c, policy)


def def2_limit(obs: ObservationRecord, c: LightSpeed,
               policy: NumericPolicy = DEFAULT_POLICY) -> BoundedVelocity:
    """Large-T limit of the bounded operator.

    Equals the bounded image of x/t: c (e^(2x/ct) - 1)/(e^(2x/ct) + 1),
    computed overflow-safely.  Saturates toward +-c as |x|/(ct) grows,
    clamping per policy.
    """
    ratio = obs.x / (c.c * obs.t)
    if math.isnan(ratio):
        raise NonFinite(f"x/(c t) overflowed for {obs!r}")
    return _finish_bounded(c.c * tanh_ratio(ratio), c, policy)


def def3_velocity(obs: ObservationRecord, c: LightSpeed) -> UnboundedVelocity:
    """The finite-T unbounded velocity operator.

    With w = tanh(x/(cT)), forms s = (T/t) w and returns c * artanh(s).
    The domain constraint lives on s, not on x: for T > t the inner
    product can reach 1 even when |x| < ct, and that is exactly where
    the logarithm fails, so |s| >= 1 raises :class:`BeyondLightCone`.
    """
    r = obs.x / (c.c * obs.T)
    exponent = obs.T / obs.t
    if exponent == 1.0:
        return UnboundedVelocity(c.c * r)
    s = exponent * tanh_ratio(r)
    if math.isnan(s):
        raise NonFinite(f"inner product overflowed for {obs!r}")
    if abs(s) >= 1.0:
        raise BeyondLightCone(f"inner product {s!r} outside (-1, 1)")
    return UnboundedVelocity(c.c * artanh_ratio(s))


def def3_limit(obs: ObservationRecord, c: LightSpeed) -> UnboundedVelocity:
    """Large-T limit of the unbounded operator.

    Equals the unbounded image of x/t: (c/2) ln((1 + x/ct)/(1 - x/ct)),
    in the cancellation-safe form.  Diverges as x -> ct; |x| >= ct
    raises :class:`AtLightCone`.
    """
    ratio = obs.x / (c.c * obs.t)
    if abs(obs.x) >= c.c * obs.t or abs(ratio) >= 1.0:
        raise AtLightCone(f"|x| = {abs(obs.x)!r} >= c*t = {c.c * obs.t!r}")
    return UnboundedVelocity(c.c * artanh_ratio(ratio))


def evaluate(tag: DefinitionTag, obs: ObservationRecord, c: LightSpeed,
             policy: NumericPolicy = DEFAULT_POLICY) -> BoundedVelocity | UnboundedVelocity:
    """Dispatch an observation through the chosen definition.

    The returned type is the representation marker: bounded definitions
    yield :class:`BoundedVelocity`, unbounded ones
    :class:`UnboundedVelocity`.
    """
    if tag is DefinitionTag.DEF1:
        return def1_velocity(obs)
    if tag is DefinitionTag.DEF2:
        return def2_velocity(obs, c, policy)
    if tag is DefinitionTag.DEF2_LIMIT:
        return def2_limit(obs, c, policy)
    if tag is DefinitionTag.DEF3:
        return def3_velocity(obs, c)
    if tag is DefinitionTag.DEF3_LIMIT:
        return def3_limit(obs, c)
    raise ValueError(f"unknown definition tag {tag!r}")


def _fit_order(points: Sequence[tuple[float, float]]) -> float:
    # least-squares slope of log(error) against log(T), sign-flipped so a
    # decaying error reports a positive order
    n = len(points)
    mean_x = sum(p[0] for p in points) / n
    mean_y = sum(p[1] for p in points) / n
    sxx = sum((p[0] - mean_x) ** 2 for p in points)
    sxy = sum((p[0] - mean_x) * (p[1] - mean_y) for p in points)
    return -(sxy / sxx)


def convergence_scan(tag: DefinitionTag, obs: ObservationRecord, c: LightSpeed,
                     T_grid: Sequence[float],
                     policy: NumericPolicy = DEFAULT_POLICY) -> ConvergenceScan:
    """Measure how fast a finite-T definition approaches its limit.

    Evaluates the finite-T operator at every grid point, records the
    absolute error against the closed-form limit, and fits the order as
    the log-log slope (expected close to 2 for both operators).  Raises
    :class:`DegenerateFit`, carrying the computed rows, when at least
    half the grid hits zero error: there is no slope left to fit, only
    saturated precision.
    """
    if tag is DefinitionTag.DEF2:
        finite = lambda o: def2_velocity(o, c, policy).value
        limit = def2_limit(obs, c, policy).value
    elif tag is DefinitionTag.DEF3:
        finite = lambda o: def3_velocity(o, c).value
        limit = def3_limit(obs, c).value
    else:
        raise ValueError(f"convergence scan needs a finite-T definition, got {tag!r}")
    if len(T_grid) < 4:
        raise ValueError("T grid needs at least 4 points")
    if any(not (math.isfinite(T) and T > 0.0) for T in T_grid):
        raise ValueError("T grid values must be positive finite reals")
    if any(b <= a for a, b in zip(T_grid, T_grid[1:])):
        raise ValueError("T grid must be strictly ascending")
    if T_grid[-1] / T_grid[0] < 1e3:
        raise ValueError("T grid must span at least three decades")

    rows = []
    for T in T_grid:
        value = finite(replace(obs, T=T))
        rows.append(ConvergenceRow(T=T, value=value, abs_error=abs(value - limit)))
    rows = tuple(rows)

    zeros = sum(1 for row in rows if row.abs_error == 0.0)
    if 2 * zeros >= len(rows):
        raise DegenerateFit(
            f"{zeros} of {len(rows)} grid points at saturated precision", rows)
    points = [(math.log(row.T), math.log(row.abs_error)) for row in rows if row.abs_error > 0.0]
    if len(points) < 2:
        raise DegenerateFit("fewer than two nonzero errors to fit", rows)
    return ConvergenceScan(rows=rows, order=_fit_order(points))
