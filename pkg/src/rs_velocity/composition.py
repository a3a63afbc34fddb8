"""Relative-velocity laws and the cross-representation identity.

Two laws live here: plain subtraction for unbounded velocities, and the
Einstein formula (u - v)/(1 - uv/c^2) for bounded ones.  The point of the
pairing is that the bounded/unbounded maps are a homomorphism between
them: mapping then composing equals composing then mapping.
:func:`cross_representation_check` measures that identity numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_POLICY,
    BoundedVelocity,
    LightSpeed,
    NumericPolicy,
    UnboundedVelocity,
    VelocityError,
    _finish_bounded,
    to_bounded,
    to_unbounded,
)

__all__ = [
    "CrossCheckReport",
    "DegenerateDenominator",
    "cross_representation_check",
    "einstein_compose",
    "einstein_relative",
    "galilean_relative",
]


class DegenerateDenominator(VelocityError):
    """1 - uv/c^2 came out non-positive: an upstream invariant is broken."""


@dataclass(frozen=True)
class CrossCheckReport:
    """Both representations of one relative velocity, and their mismatch."""

    d_galilean: UnboundedVelocity
    d_einstein: BoundedVelocity
    residual: float
    passed: bool


def galilean_relative(a: UnboundedVelocity, b: UnboundedVelocity) -> UnboundedVelocity:
    """Relative velocity in the unbounded representation: a - b.

    A single floating subtraction; overflow (only conceivable near the
    float maximum) surfaces as :class:`NonFinite`.
    """
    return UnboundedVelocity(a.value - b.value)


def einstein_relative(u: BoundedVelocity, v: BoundedVelocity, c: LightSpeed,
                      policy: NumericPolicy = DEFAULT_POLICY) -> BoundedVelocity:
    """Relative velocity in the bounded representation.

    Evaluates exactly ``(u - v) / (1 - (u*v)/c^2)`` in that order, with no
    algebraic rewriting, so that swapping the arguments negates the result
    bit for bit.  For strictly bounded inputs the exact value is again
    strictly bounded; a result that rounds onto c is clamped or rejected
    per policy.
    """
    num = u.value - v.value
    den = 1.0 - (u.value * v.value) / (c.c * c.c)
    if den <= 0.0:
        raise DegenerateDenominator(
            f"1 - uv/c^2 = {den!r} for u={u.value!r}, v={v.value!r}")
    return _finish_bounded(num / den, c, policy)


def einstein_compose(u: BoundedVelocity, v: BoundedVelocity, c: LightSpeed,
                     policy: NumericPolicy = DEFAULT_POLICY) -> BoundedVelocity:
    """Forward composition (u + v)/(1 + uv/c^2), inverse of the relative form.

    ``einstein_relative(einstein_compose(u, v), v)`` recovers u up to
    rounding.
    """
    num = u.value + v.value
    den = 1.0 + (u.value * v.value) / (c.c * c.c)
    if den <= 0.0:
        raise DegenerateDenominator(
            f"1 + uv/c^2 = {den!r} for u={u.value!r}, v={v.value!r}")
    return _finish_bounded(num / den, c, policy)


def cross_representation_check(a: UnboundedVelocity, b: UnboundedVelocity,
                               c: LightSpeed, tol: float,
                               policy: NumericPolicy = DEFAULT_POLICY) -> CrossCheckReport:
    """Compare a - b against the Einstein composition of the bounded images.

    Computes d = a - b and d' = einstein_relative(to_bounded(a),
    to_bounded(b)), then the residual |d - to_unbounded(d')|.  Passes when
    the residual is within ``tol * max(c, |d|)``.  Near the saturation
    range of the map the residual grows without the comparison being
    wrong, which is why it is reported rather than asserted.
    """
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    d = galilean_relative(a, b)
    d_einstein = einstein_relative(to_bounded(a, c, policy), to_bounded(b, c, policy), c, policy)
    residual = abs(d.value - to_unbounded(d_einstein, c).value)
    passed = residual <= tol * max(c.c, abs(d.value))
    return CrossCheckReport(d_galilean=d, d_einstein=d_einstein,
                            residual=residual, passed=passed)
