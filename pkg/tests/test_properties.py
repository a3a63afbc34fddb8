"""The seeded property suite behind the verify command."""

import pytest

from rs_velocity import LightSpeed, run_property_suite, ulps_between

EXPECTED_ORDER = [
    "round-trip",
    "homomorphism",
    "dual-homomorphism",
    "compose-inverse",
    "t-collapse",
    "limit-consistency",
    "four-quadrant",
    "divergence-monotonicity",
]


def test_all_properties_pass_in_natural_units():
    results = run_property_suite(LightSpeed(), rel_tol=1e-12, seed=42)
    assert [r.name for r in results] == EXPECTED_ORDER
    assert all(r.passed for r in results)
    assert all(r.cases == 1000 for r in results)


def test_all_properties_pass_at_si_scale():
    results = run_property_suite(LightSpeed.si(), rel_tol=1e-12, seed=7)
    assert all(r.passed for r in results)


def test_sub_machine_tolerance_fails():
    results = run_property_suite(LightSpeed(), rel_tol=1e-30, seed=42)
    assert any(not r.passed for r in results)


def test_fixed_seed_is_deterministic():
    first = run_property_suite(LightSpeed(), rel_tol=1e-12, seed=42)
    second = run_property_suite(LightSpeed(), rel_tol=1e-12, seed=42)
    assert first == second


def test_different_seeds_sample_differently():
    a = run_property_suite(LightSpeed(), rel_tol=1e-12, seed=1)
    b = run_property_suite(LightSpeed(), rel_tol=1e-12, seed=2)
    assert [r.max_residual for r in a] != [r.max_residual for r in b]


def test_collapse_property_is_measured_in_ulps():
    results = run_property_suite(LightSpeed(), rel_tol=1e-12, seed=42)
    collapse = next(r for r in results if r.name == "t-collapse")
    assert collapse.max_residual <= 2.0


@pytest.mark.parametrize("a,b,expected", [
    (1.0, 1.0, 0),
    (1.0, 1.0 + 2.220446049250313e-16, 1),
    (0.5, 0.5000000000000001, 1),
    (-0.0, 0.0, 1),
])
def test_ulps_between(a, b, expected):
    assert ulps_between(a, b) == expected
