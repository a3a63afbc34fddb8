"""Scenario evaluation, the cross-algebra checks, and the light-cone scan."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rs_velocity import (
    AtLightCone,
    BoundedVelocity,
    CompositionTag,
    DefinitionTag,
    LightSpeed,
    NumericPolicy,
    ObservationRecord,
    RepresentationMismatch,
    Saturation,
    SaturationMode,
    Scenario,
    UnboundedVelocity,
    claim_id_for,
    galilean_in_lorentz_check,
    light_cone_divergence_scan,
    relative_velocity,
    relativistic_in_galilean_check,
    representation_of,
    to_unbounded,
)

from oracle_reference import to_unbounded_ref, ulps

C = LightSpeed()

LN3 = 1.0986122886681098
ARTANH_HALF = 0.5493061443340549
# def3-limit column values at x = 1 - eps (frozen 50-digit oracle, evaluated
# at the floating-point x actually fed to the operator)
DEF3_COLUMN = {
    0.5: 0.5493061443340548,
    1e-3: 3.8002011672501994,
    1e-6: 7.254328619247669,
}


def obs(x, t, T=None):
    return ObservationRecord(x=x, t=t, T=T)


def scenario(definition, law, body, observer):
    return Scenario(obs_body=body, obs_observer=observer,
                    definition=definition, law=law)


class TestClaimIds:
    def test_the_four_kinematics_pairings_are_named(self):
        assert claim_id_for(DefinitionTag.DEF1, CompositionTag.GALILEAN_ADDITIVE) \
            == "galilean-kinematics-def1"
        assert claim_id_for(DefinitionTag.DEF2, CompositionTag.EINSTEIN_RELATIVE) \
            == "galilean-kinematics-def2"
        assert claim_id_for(DefinitionTag.DEF1, CompositionTag.EINSTEIN_RELATIVE) \
            == "relativistic-kinematics-def1"
        assert claim_id_for(DefinitionTag.DEF3, CompositionTag.GALILEAN_ADDITIVE) \
            == "relativistic-kinematics-def3"

    def test_other_pairings_are_anonymous(self):
        assert claim_id_for(DefinitionTag.DEF2_LIMIT, CompositionTag.EINSTEIN_RELATIVE) is None

    def test_composition_tag_parse(self):
        assert CompositionTag.parse("galilean") is CompositionTag.GALILEAN_ADDITIVE
        assert CompositionTag.parse("einstein") is CompositionTag.EINSTEIN_RELATIVE
        with pytest.raises(ValueError):
            CompositionTag.parse("newtonian")


class TestRelativeVelocity:
    def test_quotients_with_subtraction(self):
        got = relative_velocity(
            scenario(DefinitionTag.DEF1, CompositionTag.GALILEAN_ADDITIVE,
                     obs(3.0, 2.0), obs(1.0, 2.0)), C)
        assert got.value == 1.0
        assert representation_of(got) == "unbounded"

    def test_quotients_with_einstein_law(self):
        got = relative_velocity(
            scenario(DefinitionTag.DEF1, CompositionTag.EINSTEIN_RELATIVE,
                     obs(1.0, 2.0), obs(-1.0, 2.0)), C)
        assert got.value == 0.8
        assert representation_of(got) == "bounded"

    def test_unbounded_operator_with_subtraction(self):
        got = relative_velocity(
            scenario(DefinitionTag.DEF3_LIMIT, CompositionTag.GALILEAN_ADDITIVE,
                     obs(0.5, 1.0), obs(-0.5, 1.0)), C)
        assert ulps(got.value, LN3) <= 2
        assert representation_of(got) == "unbounded"

    def test_superluminal_quotient_cannot_enter_the_bounded_law(self):
        with pytest.raises(RepresentationMismatch):
            relative_velocity(
                scenario(DefinitionTag.DEF1, CompositionTag.EINSTEIN_RELATIVE,
                         obs(3.0, 2.0), obs(1.0, 2.0)), C)

    def test_law_decides_the_output_algebra(self):
        got = relative_velocity(
            scenario(DefinitionTag.DEF2_LIMIT, CompositionTag.GALILEAN_ADDITIVE,
                     obs(0.9, 1.0), obs(-0.9, 1.0)), C)
        assert representation_of(got) == "unbounded"

    def test_definition_errors_propagate(self):
        with pytest.raises(AtLightCone):
            relative_velocity(
                scenario(DefinitionTag.DEF3_LIMIT, CompositionTag.GALILEAN_ADDITIVE,
                         obs(1.0, 1.0), obs(0.0, 1.0)), C)

    def test_saturation_propagates_under_error_mode(self):
        strict = NumericPolicy(saturation_mode=SaturationMode.ERROR)
        with pytest.raises(Saturation):
            relative_velocity(
                scenario(DefinitionTag.DEF2_LIMIT, CompositionTag.GALILEAN_ADDITIVE,
                         obs(100.0, 1.0), obs(0.0, 1.0)), C, strict)


class TestGalileanInLorentz:
    def test_zero_inputs(self):
        report = galilean_in_lorentz_check(
            UnboundedVelocity(0.0), UnboundedVelocity(0.0), C, tol=1e-12)
        assert report.residual == 0.0
        assert report.passed
        assert report.claim_id == "S3-galilean-as-lorentz"

    def test_moderate_inputs_pass_certified(self):
        report = galilean_in_lorentz_check(
            UnboundedVelocity(1.2), UnboundedVelocity(-0.7), C, tol=1e-12)
        assert report.passed
        assert report.certified
        assert report.residual <= 1e-13

    def test_wide_inputs_still_reported_uncertified(self):
        report = galilean_in_lorentz_check(
            UnboundedVelocity(6.0), UnboundedVelocity(-6.0), C, tol=1e-12)
        assert not report.certified
        assert report.passed  # opposite signs stay benign out to saturation

    def test_pass_matches_the_stored_tolerance(self):
        report = galilean_in_lorentz_check(
            UnboundedVelocity(2.0), UnboundedVelocity(1.0), C, tol=1e-12)
        assert report.passed == (report.residual <= report.tolerance)
        assert report.tolerance == 1e-12 * C.c


class TestRelativisticInGalilean:
    def test_self_relative(self):
        report = relativistic_in_galilean_check(
            BoundedVelocity(0.5, C), BoundedVelocity(0.5, C), C, tol=1e-12)
        assert report.passed
        assert abs(report.lhs) <= 1e-15 and abs(report.rhs) <= 1e-15

    def test_symmetric_pair_gives_twice_the_rapidity(self):
        report = relativistic_in_galilean_check(
            BoundedVelocity(0.5, C), BoundedVelocity(-0.5, C), C, tol=1e-12)
        assert report.passed
        assert report.certified
        assert ulps(report.lhs, LN3) <= 1
        assert ulps(report.rhs, LN3) <= 2
        assert report.claim_id == "S3-lorentz-as-galilean"

    def test_near_cone_pair_reported_uncertified(self):
        edge = 0.999999
        report = relativistic_in_galilean_check(
            BoundedVelocity(edge, C), BoundedVelocity(-edge, C), C, tol=1e-12)
        assert not report.certified
        assert report.passed == (report.residual <= report.tolerance)
        # both sides approximate 2 * artanh(edge) even where uncertified
        assert report.lhs == pytest.approx(report.rhs, rel=1e-4)


class TestLightConeScan:
    def test_frozen_column_values(self):
        scan = light_cone_divergence_scan(1.0, C, (0.5, 1e-3, 1e-6))
        assert scan.def2_monotone and scan.def3_monotone
        for row in scan.rows:
            assert ulps(row.def3_limit, DEF3_COLUMN[row.epsilon]) <= 1
            assert row.def2_limit < C.c
            assert row.x == 1.0 - row.epsilon

    def test_unbounded_column_grows_past_the_log_floor(self):
        epsilons = (1e-2, 1e-4, 1e-6, 1e-8)
        scan = light_cone_divergence_scan(1.0, C, epsilons)
        for row in scan.rows:
            assert row.def3_limit > 0.5 * math.log(1.0 / row.epsilon)

    def test_oracle_agreement_on_the_unbounded_column(self):
        scan = light_cone_divergence_scan(1.0, C, (1e-2, 1e-4, 1e-6, 1e-8))
        for row in scan.rows:
            assert ulps(row.def3_limit, float(to_unbounded_ref(row.x))) <= 2

    @pytest.mark.parametrize("epsilons", [
        (),
        (0.5, 0.5),
        (1e-3, 0.5),
        (0.5, 1e-3, 1.0),
        (0.0,),
    ])
    def test_epsilon_validation(self, epsilons):
        with pytest.raises(ValueError):
            light_cone_divergence_scan(1.0, C, epsilons)

    def test_duration_validation(self):
        with pytest.raises(ValueError):
            light_cone_divergence_scan(0.0, C, (0.5, 1e-3))


light_fraction = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False)
durations = st.floats(min_value=0.1, max_value=10.0, allow_nan=False)


@settings(max_examples=300)
@given(light_fraction, durations, light_fraction, durations)
def test_kinematics_table_first_pairing(fb, tb, fo, to):
    # quotient subtraction against the unbounded image of the bounded-
    # operator limits composed under the Einstein law
    body, observer = obs(fb * tb, tb), obs(fo * to, to)
    lhs = relative_velocity(
        scenario(DefinitionTag.DEF1, CompositionTag.GALILEAN_ADDITIVE, body, observer), C)
    rhs = to_unbounded(relative_velocity(
        scenario(DefinitionTag.DEF2_LIMIT, CompositionTag.EINSTEIN_RELATIVE, body, observer), C), C)
    assert abs(lhs.value - rhs.value) <= 1e-12 * max(1.0, abs(lhs.value), abs(rhs.value))


@settings(max_examples=300)
@given(light_fraction, durations, light_fraction, durations)
def test_kinematics_table_second_pairing(fb, tb, fo, to):
    # unbounded-operator subtraction against the unbounded image of the
    # quotients composed under the Einstein law
    body, observer = obs(fb * tb, tb), obs(fo * to, to)
    lhs = relative_velocity(
        scenario(DefinitionTag.DEF3_LIMIT, CompositionTag.GALILEAN_ADDITIVE, body, observer), C)
    rhs = to_unbounded(relative_velocity(
        scenario(DefinitionTag.DEF1, CompositionTag.EINSTEIN_RELATIVE, body, observer), C), C)
    assert abs(lhs.value - rhs.value) <= 1e-12 * max(1.0, abs(lhs.value), abs(rhs.value))
