"""Core value types and the bounded/unbounded velocity maps.

A velocity can be represented two ways:

* *unbounded* (Galilean representation): any finite real number, composing
  by ordinary subtraction;
* *bounded* (Lorentz representation): a number strictly inside (-c, c),
  composing by the Einstein relative-velocity formula.

The two are connected by a logarithmic bijection and its exponential
inverse,

    unbounded = (c/2) * ln((c + v) / (c - v))
    bounded   = c * (e^(2a/c) - 1) / (e^(2a/c) + 1)

implemented here in cancellation-safe / overflow-safe forms.  In 64-bit
floating point the bounded image saturates onto c once |a|/c is a bit
above 19; what happens then is governed by a :class:`NumericPolicy`.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from enum import Enum

__all__ = [
    "AtLightCone",
    "BoundedVelocity",
    "DEFAULT_POLICY",
    "LightSpeed",
    "NonFinite",
    "NumericPolicy",
    "Saturation",
    "SaturationMode",
    "UnboundedVelocity",
    "VelocityError",
    "representation_of",
    "round_trip_residual",
    "to_bounded",
    "to_unbounded",
]

SI_LIGHT_SPEED = 299792458.0


class VelocityError(Exception):
    """Base class for the typed domain errors raised by this package."""


class AtLightCone(VelocityError):
    """A bounded-representation magnitude reached or exceeded c."""


class Saturation(VelocityError):
    """A result rounded onto c and the policy forbids clamping."""


class NonFinite(VelocityError):
    """A value that must be finite is infinite or NaN."""


class SaturationMode(Enum):
    """What to do when a bounded result rounds onto the light cone."""

    CLAMP = "clamp"
    ERROR = "error"


@dataclass(frozen=True)
class LightSpeed:
    """The scale constant c.  Defaults to natural units (c = 1)."""

    c: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise ValueError(f"light speed must be a positive finite real, got {self.c!r}")

    @classmethod
    def si(cls) -> "LightSpeed":
        return cls(SI_LIGHT_SPEED)


@dataclass(frozen=True)
class NumericPolicy:
    """Tolerances and saturation handling for the numeric operations.

    ``abs_tol`` is expressed in velocity units and should scale with c;
    use :meth:`for_scale` when working away from natural units.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-15
    saturation_mode: SaturationMode = SaturationMode.CLAMP

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("rel_tol and abs_tol must be positive")

    @classmethod
    def for_scale(cls, c: LightSpeed, rel_tol: float = 1e-12,
                  saturation_mode: SaturationMode = SaturationMode.CLAMP) -> "NumericPolicy":
        return cls(rel_tol=rel_tol, abs_tol=1e-15 * c.c, saturation_mode=saturation_mode)


DEFAULT_POLICY = NumericPolicy()


@dataclass(frozen=True)
class UnboundedVelocity:
    """A velocity in the unbounded (Galilean) representation.

    Any finite real is legal, including magnitudes beyond c.
    """

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise NonFinite(f"unbounded velocity must be finite, got {self.value!r}")


@dataclass(frozen=True)
class BoundedVelocity:
    """A velocity in the bounded (Lorentz) representation.

    Passing a :class:`LightSpeed` enforces |value| < c at construction.
    Omitting it skips the check; that raw path exists so operations can
    build results they have already validated.  ``saturated`` is set only
    by producing operations that clamped a result onto the largest
    representable magnitude below c.
    """

    value: float
    c: InitVar[LightSpeed | None] = None
    saturated: bool = False

    def __post_init__(self, c: LightSpeed | None) -> None:
        if not math.isfinite(self.value):
            raise NonFinite(f"bounded velocity must be finite, got {self.value!r}")
        if c is not None and abs(self.value) >= c.c:
            raise AtLightCone(f"|{self.value!r}| >= c = {c.c!r}")


def representation_of(v: BoundedVelocity | UnboundedVelocity) -> str:
    """Return ``"bounded"`` or ``"unbounded"`` for a velocity value."""
    return "bounded" if isinstance(v, BoundedVelocity) else "unbounded"


def tanh_ratio(m: float) -> float:
    """tanh(m) through exp(-2|m|), odd bitwise, never overflowing.

    This is the dimensionless kernel of the unbounded -> bounded map: the
    naive (e^(2m) - 1)/(e^(2m) + 1) overflows once m > ~355, and the
    subtraction cancels for small m.  Using expm1 of the negative
    exponent avoids both; the sign is handled by mirroring so that
    tanh_ratio(-m) == -tanh_ratio(m) exactly, signed zero included.
    """
    if m < 0.0 or (m == 0.0 and math.copysign(1.0, m) < 0.0):
        return -tanh_ratio(-m)
    z = math.exp(-2.0 * m)
    return -math.expm1(-2.0 * m) / (1.0 + z)


def artanh_ratio(r: float) -> float:
    """artanh(r) as half the difference of one-plus logarithms.

    Requires |r| < 1 (or exactly +-1, where it returns +-inf); odd
    bitwise by the antisymmetry of floating subtraction.
    """
    return 0.5 * (math.log1p(r) - math.log1p(-r))


def _finish_bounded(value: float, c: LightSpeed, policy: NumericPolicy) -> BoundedVelocity:
    # Shared epilogue for every operation producing a bounded value: a
    # result that rounded onto +-c is clamped to the last representable
    # magnitude below c, or rejected, per policy.
    if abs(value) < c.c:
        return BoundedVelocity(value)
    if policy.saturation_mode is SaturationMode.ERROR:
        raise Saturation(f"result magnitude reached c = {c.c!r}")
    return BoundedVelocity(math.copysign(math.nextafter(c.c, 0.0), value), saturated=True)


def to_unbounded(v: BoundedVelocity, c: LightSpeed) -> UnboundedVelocity:
    """Map a bounded velocity to its unbounded image.

    Strictly increasing and odd in v; diverges toward the light cone,
    so |v| >= c (reachable only by bypassing validated construction)
    raises :class:`AtLightCone`.
    """
    if not math.isfinite(v.value):
        raise NonFinite(f"bounded velocity must be finite, got {v.value!r}")
    if abs(v.value) >= c.c:
        raise AtLightCone(f"|{v.value!r}| >= c = {c.c!r}")
    return UnboundedVelocity(c.c * artanh_ratio(v.value / c.c))


def to_bounded(a: UnboundedVelocity, c: LightSpeed,
               policy: NumericPolicy = DEFAULT_POLICY) -> BoundedVelocity:
    """Map an unbounded velocity to its bounded image.

    The exact image is strictly inside (-c, c) for every finite input;
    in floating point it rounds onto c for |a|/c above ~19.07, where the
    policy's saturation mode decides between clamping (with the
    ``saturated`` flag set) and raising :class:`Saturation`.
    """
    if not math.isfinite(a.value):
        raise NonFinite(f"unbounded velocity must be finite, got {a.value!r}")
    return _finish_bounded(c.c * tanh_ratio(a.value / c.c), c, policy)


def round_trip_residual(a: UnboundedVelocity, c: LightSpeed,
                        policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """|to_unbounded(to_bounded(a)) - a|, the inverse-pair defect.

    Never negative.  Grows like cosh^2(a/c) * ulp(c) / 2 for large |a|
    because the bounded image loses resolution approaching c; once the
    map saturates (|a|/c above ~19.07) the residual is roughly
    |a| - c * artanh(clamp/c).  Under an ERROR saturation policy the
    forward map's :class:`Saturation` propagates.
    """
    return abs(to_unbounded(to_bounded(a, c, policy), c).value - a.value)
