import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from twolevel import (
    SI,
    Constants,
    EquilibriumState,
    RangeError,
    entropy,
    entropy_from_energy,
    excited_population,
    gap_from_entropy,
    gap_from_field,
    hotness,
    is_hotter,
    massieu,
    mean_energy,
    temperature_from_energy,
    temperature_from_entropy,
)
from twolevel.equilibrium import X_MAX, entropy_x, state_from_x

K = SI.k_b
LN3 = math.log(3.0)

xs = st.floats(min_value=1e-6, max_value=40.0)
signed_xs = st.builds(lambda v, s: v * s, xs, st.sampled_from([1.0, -1.0]))
gaps = st.floats(min_value=1e-24, max_value=1e-19)


# --- gap_from_field ---------------------------------------------------------

@pytest.mark.parametrize("b, expected", [(1600, 2.96768e-20), (250, 4.637e-21)])
def test_gap_from_field(b, expected):
    assert gap_from_field(b) == pytest.approx(expected, rel=1e-15)


def test_gap_from_field_linear():
    assert gap_from_field(2 * 731.0) == 2 * gap_from_field(731.0)


@pytest.mark.parametrize("b", [0.0, -5.0, float("nan")])
def test_gap_from_field_rejects_nonpositive(b):
    with pytest.raises(RangeError):
        gap_from_field(b)


# --- population / energy ----------------------------------------------------

def test_population_at_ln3_is_quarter():
    s = state_from_x(LN3, 1e-21)
    assert excited_population(s) == pytest.approx(0.25, rel=1e-14)


def test_population_symmetric_limit():
    assert state_from_x(1e-9, 1e-21).p == pytest.approx(0.5, abs=1e-9)


@given(signed_xs)
def test_population_inversion_symmetry(x):
    a, b = state_from_x(x, 1e-21), state_from_x(-x, 1e-21)
    assert a.p + b.p == pytest.approx(1.0, abs=1e-15)
    assert (a.p < 0.5) == (a.temperature > 0)


def test_mean_energy_reference_state():
    s = EquilibriumState(600.0, gap_from_field(1600))
    assert s.x == pytest.approx(3.582469790173558, rel=1e-14)
    assert mean_energy(s) == pytest.approx(-1.4035505164743200e-20, rel=1e-13)


@given(signed_xs, gaps)
def test_energy_two_closed_forms_agree(x, gap):
    s = state_from_x(x, gap)
    assert abs(s.energy / s.gap - (s.p - 0.5)) < 1e-14
    assert -gap / 2 <= s.energy <= gap / 2


@given(xs)
def test_energy_is_odd_in_temperature(x):
    gap = 3e-21
    assert state_from_x(-x, gap).energy == -state_from_x(x, gap).energy


def test_energy_vanishes_at_infinite_temperature_limit():
    assert abs(state_from_x(1e-10, 1e-21).energy) < 1e-31


# --- entropy ---------------------------------------------------------------

def test_entropy_at_ln3():
    s = state_from_x(LN3, 1e-21)
    expected = 0.25 * math.log(4) + 0.75 * math.log(4 / 3)
    assert entropy(s) / K == pytest.approx(expected, rel=1e-14)
    assert entropy(s) / K == pytest.approx(0.56233514461880835, rel=1e-14)


@given(signed_xs, gaps)
def test_entropy_matches_high_precision_oracle(x, gap):
    s = state_from_x(x, gap)
    assert s.entropy / K == pytest.approx(float(oracle.entropy_red(s.x)), rel=1e-12, abs=1e-300)


def test_entropy_pure_state_limit():
    assert entropy_x(700.0) < 1e-290
    assert entropy_x(X_MAX + 1) == 0.0
    s = EquilibriumState(1e-3, 1e-17)
    assert s.saturated and s.entropy == 0.0


@given(xs)
def test_entropy_even(x):
    assert entropy_x(x) == entropy_x(-x)


def test_entropy_strictly_decreasing_in_abs_x():
    x = np.geomspace(1e-3, 40, 2000)
    s = entropy_x(x)
    assert np.all(np.diff(s) < 0)
    assert np.all((s > 0) & (s < math.log(2)))


# --- entropy_from_energy ------------------------------------------------------

def test_entropy_from_energy_at_zero_is_ln2():
    assert entropy_from_energy(0.0, 1e-21) == pytest.approx(K * math.log(2), rel=1e-15)


@pytest.mark.parametrize("ratio", [-0.25, 0.25])
def test_entropy_from_energy_quarter(ratio):
    gap = 4e-21
    assert entropy_from_energy(ratio * gap, gap) / K == pytest.approx(0.56233514461880835, rel=1e-14)


@pytest.mark.parametrize("ratio", [0.5, -0.5, 0.7])
def test_entropy_from_energy_out_of_range(ratio):
    with pytest.raises(RangeError):
        entropy_from_energy(ratio * 1e-21, 1e-21)


# from |x| ~ 37.98 on, E/delta rounds to exactly -1/2 in float64
unsaturated_xs = st.builds(lambda v, s: v * s, st.floats(min_value=1e-6, max_value=36.0),
                           st.sampled_from([1.0, -1.0]))


@given(unsaturated_xs, gaps)
def test_fundamental_relation_consistency(x, gap):
    s = state_from_x(x, gap)
    assert abs(entropy_from_energy(s.energy, gap) - s.entropy) < 1e-12 * K


def test_saturated_energy_cannot_be_inverted():
    s = state_from_x(38.0, 1e-21)
    assert s.energy == -0.5e-21
    with pytest.raises(RangeError):
        entropy_from_energy(s.energy, s.gap)
    with pytest.raises(RangeError):
        temperature_from_energy(s.energy, s.gap)


# --- massieu ----------------------------------------------------------------

def test_massieu_reference_state():
    s = EquilibriumState(600.0, gap_from_field(1600))
    assert massieu(s) / K == pytest.approx(1.8186622391111453, rel=1e-13)
    assert massieu(s) == pytest.approx(s.entropy - s.energy / s.temperature, rel=1e-13)


def test_massieu_high_temperature_limit():
    assert state_from_x(1e-8, 1e-21).massieu / K == pytest.approx(math.log(2), rel=1e-12)


@given(xs, st.floats(min_value=0.1, max_value=10.0))
def test_massieu_constant_on_isoentrope(x, factor):
    a = state_from_x(x, 2e-21)
    b = EquilibriumState(a.temperature * factor, a.gap * factor)
    assert b.massieu == pytest.approx(a.massieu, rel=1e-12)


# --- temperature_from_energy ------------------------------------------------

def test_temperature_from_energy_round_trip_x_one():
    gap = 5e-21
    e = mean_energy(state_from_x(1.0, gap))
    assert e / gap == pytest.approx(-0.23105857863000487, rel=1e-14)
    t = temperature_from_energy(e, gap)
    assert gap / (K * t) == pytest.approx(1.0, rel=1e-12)


def test_temperature_from_energy_inverted():
    assert temperature_from_energy(0.1e-21, 1e-21) < 0


@pytest.mark.parametrize("e", [0.5e-21, -0.5e-21, 0.0])
def test_temperature_from_energy_range_errors(e):
    with pytest.raises(RangeError):
        temperature_from_energy(e, 1e-21)


@given(st.floats(min_value=1e-6, max_value=36.0), st.sampled_from([1.0, -1.0]))
def test_temperature_from_energy_round_trip(x, sign):
    gap = 2e-21
    s = state_from_x(sign * x, gap)
    t = temperature_from_energy(s.energy, gap)
    back = EquilibriumState(t, gap)
    assert back.energy == pytest.approx(s.energy, rel=1e-12)
    assert abs(back.entropy - s.entropy) < 1e-12 * K


# --- temperature_from_entropy / gap_from_entropy ------------------------------

def test_temperature_from_entropy_ln3():
    gap = 3e-21
    target = state_from_x(LN3, gap).entropy
    t = temperature_from_entropy(target, gap)
    assert gap / (K * t) == pytest.approx(LN3, rel=1e-9)
    assert abs(EquilibriumState(t, gap).entropy - target) < 1e-12 * K


def test_temperature_from_entropy_branches_are_opposite():
    gap = 3e-21
    target = 0.3 * K
    assert temperature_from_entropy(target, gap, "negative") == -temperature_from_entropy(target, gap)


def test_temperature_from_entropy_near_ln2_is_finite():
    gap = 3e-21
    target = K * (math.log(2) - 1e-15)
    t = temperature_from_entropy(target, gap)
    assert math.isfinite(t) and t > 0
    assert abs(EquilibriumState(t, gap).entropy - target) < 1e-12 * K


@pytest.mark.parametrize("s", [0.0, -1.0, math.log(2), 1.0])
def test_temperature_from_entropy_rejects_out_of_range(s):
    with pytest.raises(RangeError):
        temperature_from_entropy(s * K, 1e-21)


def test_gap_from_entropy_closed_form():
    target = state_from_x(LN3, 1e-21).entropy
    assert gap_from_entropy(target, 600.0) == pytest.approx(LN3 * K * 600.0, rel=1e-9)


def test_gap_from_entropy_linear_in_temperature():
    target = 0.4 * K
    assert gap_from_entropy(target, 300.0) == pytest.approx(0.5 * gap_from_entropy(target, 600.0), rel=1e-15)


def test_gap_from_entropy_ln2_is_an_error():
    with pytest.raises(RangeError):
        gap_from_entropy(K * math.log(2), 300.0)


@given(st.floats(min_value=1e-6, max_value=40.0), st.floats(min_value=1.0, max_value=1e4))
def test_gap_from_entropy_round_trip(x, t):
    target = K * float(entropy_x(x))
    gap = gap_from_entropy(target, t)
    assert abs(EquilibriumState(t, gap).entropy - target) < 1e-12 * K


# --- hotness ---------------------------------------------------------------

@pytest.mark.parametrize("a, b", [(600.0, 300.0), (-300.0, 600.0), (-300.0, -600.0)])
def test_is_hotter_examples(a, b):
    assert is_hotter(a, b)
    assert not is_hotter(b, a)


def test_hotness_values():
    assert hotness(-300.0) == pytest.approx(1 / 300)
    assert hotness(-600.0) == pytest.approx(1 / 600)


@given(st.floats(min_value=1e-3, max_value=1e9), st.floats(min_value=1e-3, max_value=1e9))
def test_negative_beats_any_positive(a, b):
    assert is_hotter(-a, b)


# --- states and constants ---------------------------------------------------------

@pytest.mark.parametrize("t", [0.0, float("inf"), -float("inf"), float("nan")])
def test_unrepresentable_temperatures(t):
    with pytest.raises(RangeError):
        EquilibriumState(t, 1e-21)


@pytest.mark.parametrize("gap", [0.0, -1e-21, float("inf")])
def test_invalid_gaps(gap):
    with pytest.raises(RangeError):
        EquilibriumState(300.0, gap)


def test_constants_must_be_positive():
    with pytest.raises(RangeError):
        Constants(k_b=0.0)
    with pytest.raises(RangeError):
        Constants(mu_b=-1.0)


def test_custom_constants_propagate():
    k = Constants(k_b=1.0, mu_b=0.5)
    s = EquilibriumState(2.0, gap_from_field(2.0, k), k)
    assert s.gap == 2.0 and s.x == 1.0
    assert s.entropy == pytest.approx(float(entropy_x(1.0)))


def test_property_set():
    s = EquilibriumState(600.0, gap_from_field(1600))
    ps = s.properties()
    assert (ps.p, ps.energy, ps.entropy, ps.massieu) == (s.p, s.energy, s.entropy, s.massieu)
