import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landau import (
    Constant,
    FieldParseError,
    FieldSpec,
    FieldValidationError,
    GaussianPulse,
    Sampled,
    SampledField,
    Sinusoid,
    SquarePulse,
    WhiteNoise,
    complex_field,
    eval_field,
    load_sampled_field,
)
from landau.fields import primitive_from_dict, xorshift_uniform


def test_zero_before_window():
    spec = FieldSpec([Constant(0.5), Sinusoid(1.0, 2.0, target="E2")], 1.0, 3.0)
    assert eval_field(spec, 0.5) == (0.0, 0.0)
    assert eval_field(spec, 3.5) == (0.0, 0.0)


def test_constant_component():
    spec = FieldSpec([Constant(0.5)], 0.0, 10.0)
    assert eval_field(spec, 3.0) == (0.5, 0.0)


def test_sinusoid_at_quarter_period():
    spec = FieldSpec([Sinusoid(amplitude=1.0, angular_frequency=2.0, phase=0.0)], 0.0, 10.0)
    e1, e2 = eval_field(spec, math.pi / 4)
    assert abs(e1) < 1e-15 and e2 == 0.0


def test_sinusoid_sub_window():
    s = Sinusoid(2.0, 0.0, start=1.0, stop=2.0, target="E2")
    spec = FieldSpec([s], 0.0, 5.0)
    assert eval_field(spec, [0.5, 1.5, 2.5])[1].tolist() == [0.0, 2.0, 0.0]


def test_gaussian_and_square_values():
    g = GaussianPulse(2.0, center=1.0, width=0.5, carrier_angular_frequency=3.0, carrier_phase=0.2)
    spec = FieldSpec([g, SquarePulse(1.0, 0.0, 0.5, target="E2")], -5.0, 5.0)
    e1, e2 = eval_field(spec, 1.25)
    assert e1 == pytest.approx(2.0 * math.exp(-0.125) * math.cos(0.75 + 0.2), rel=1e-15)
    assert e2 == 0.0
    assert eval_field(spec, 0.25)[1] == 1.0


def test_complex_field_convention():
    assert complex_field(FieldSpec.zero(), 0.5) == 0
    assert complex_field(FieldSpec([Constant(1.0)], 0, 1), 0.5) == 1 + 0j
    spec = FieldSpec([Constant(0.3), Constant(-0.4, target="E2")], 0, 1)
    assert complex_field(spec, 0.5) == pytest.approx(0.3 - 0.4j, abs=0)


def test_invalid_specs():
    with pytest.raises(FieldValidationError):
        FieldSpec([], 1.0, 1.0)
    with pytest.raises(FieldValidationError):
        Constant(1.0, target="E3")
    with pytest.raises(FieldValidationError):
        GaussianPulse(1.0, 0.0, 0.0)
    with pytest.raises(FieldValidationError):
        SquarePulse(1.0, 2.0, 1.0)
    with pytest.raises(FieldValidationError):
        WhiteNoise(1.0, -0.1)


def test_breakpoints_cover_jumps():
    spec = FieldSpec([SquarePulse(1.0, 0.3, 0.7), WhiteNoise(0.1, 0.25, 1, target="E2")], 0.0, 1.0)
    assert spec.breakpoints().tolist() == [0.0, 0.25, 0.3, 0.5, 0.7, 0.75, 1.0]


# -- white noise ------------------------------------------------------------


def _reference_xorshift(seed, count):
    # straight transcription of the update equations in the module docstring
    M = 2**64
    s = (seed + 0x9E3779B97F4A7C15) % M
    z = s
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % M
    x = z ^ (z >> 31)
    out = []
    for _ in range(count):
        x ^= x >> 12
        x = (x ^ (x << 25)) % M
        x ^= x >> 27
        out.append(((x * 0x2545F4914F6CDD1D) % M >> 11) / 2**53)
    return out


def test_xorshift_matches_documented_equations():
    assert xorshift_uniform(42, 50).tolist() == _reference_xorshift(42, 50)


def test_noise_uniform_moments():
    u = xorshift_uniform(3, 20000)
    assert np.all((u >= 0) & (u < 1))
    assert abs(u.mean() - 0.5) < 0.01
    assert abs(u.var() - 1 / 12) < 0.005


def test_noise_piecewise_constant_and_bounded():
    spec = FieldSpec([WhiteNoise(0.3, 0.5, seed=9)], 0.0, 3.0)
    t = np.linspace(0.0, 2.999, 400)
    e1, _ = eval_field(spec, t)
    assert np.all(np.abs(e1) <= 0.3)
    assert len(np.unique(e1)) == 6
    samples = spec.components[0].samples(0.0, 3.0)
    assert e1[0] == samples[0] and eval_field(spec, 1.2)[0] == samples[2]


@given(st.integers(0, 2**32), st.floats(0.05, 1.0))
@settings(max_examples=25, deadline=None)
def test_noise_deterministic(seed, step):
    a = FieldSpec([WhiteNoise(1.0, step, seed)], 0.0, 5.0)
    b = FieldSpec([WhiteNoise(1.0, step, seed)], 0.0, 5.0)
    t = np.linspace(-1, 6, 97)
    np.testing.assert_array_equal(a.complex_values(t), b.complex_values(t))


# -- invariants ---------------------------------------------------------------

amp = st.floats(-5, 5, allow_nan=False)
primitive = st.one_of(
    st.builds(Constant, amp, st.sampled_from(["E1", "E2"])),
    st.builds(
        Sinusoid,
        amp,
        st.floats(-4, 4, allow_nan=False),
        st.floats(-3, 3, allow_nan=False),
        target=st.sampled_from(["E1", "E2"]),
    ),
    st.builds(
        GaussianPulse,
        amp,
        st.floats(0, 10),
        st.floats(0.1, 3),
        st.floats(0, 3),
        target=st.sampled_from(["E1", "E2"]),
    ),
    st.builds(WhiteNoise, amp, st.floats(0.1, 2), st.integers(0, 1000), st.sampled_from(["E1", "E2"])),
)
times = st.lists(st.floats(-5, 15, allow_nan=False), min_size=1, max_size=20)


@given(st.lists(primitive, max_size=3), st.lists(primitive, max_size=3), times)
@settings(max_examples=60, deadline=None)
def test_linearity(p, q, t):
    both = FieldSpec(p + q, 0.0, 10.0)
    sep = FieldSpec(p, 0.0, 10.0).complex_values(t) + FieldSpec(q, 0.0, 10.0).complex_values(t)
    np.testing.assert_allclose(both.complex_values(t), sep, rtol=1e-12, atol=1e-12)


@given(st.lists(primitive, min_size=1, max_size=4), st.floats(-100, -1e-9) | st.floats(10 + 1e-9, 100))
@settings(max_examples=60, deadline=None)
def test_compact_support(p, t):
    assert eval_field(FieldSpec(p, 0.0, 10.0), t) == (0.0, 0.0)


# -- sampled fields -------------------------------------------------------------


def _write(tmp_path, text, name="f.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_sampled_linear_interpolation(tmp_path):
    table = load_sampled_field(_write(tmp_path, "t,E1,E2\n0,0,0\n1,1,0\n"))
    spec = FieldSpec([Sampled(table)], 0.0, 1.0)
    assert eval_field(spec, 0.5) == (0.5, 0.0)


def test_sampled_empty_file(tmp_path):
    with pytest.raises(FieldValidationError):
        load_sampled_field(_write(tmp_path, ""))
    with pytest.raises(FieldValidationError):
        load_sampled_field(_write(tmp_path, "t,E1,E2\n", "g.csv"))


def test_sampled_non_monotone(tmp_path):
    with pytest.raises(FieldValidationError, match="increasing"):
        load_sampled_field(_write(tmp_path, "t,E1,E2\n0,0,0\n0,1,0\n"))


def test_sampled_malformed_row_reports_line(tmp_path):
    with pytest.raises(FieldParseError) as info:
        load_sampled_field(_write(tmp_path, "t,E1,E2\n0,0,0\n1,abc,0\n"))
    assert info.value.line == 3
    with pytest.raises(FieldParseError) as info:
        load_sampled_field(_write(tmp_path, "t,E1,E2\n0,0,0\n1,0\n", "g.csv"))
    assert info.value.line == 3


def test_sampled_bad_header(tmp_path):
    with pytest.raises(FieldParseError):
        load_sampled_field(_write(tmp_path, "time,Ex,Ey\n0,0,0\n1,1,1\n"))


def test_sampled_zero_outside_table():
    table = SampledField([1.0, 2.0], [1.0, 1.0], [0.0, -1.0])
    spec = FieldSpec([Sampled(table)], 0.0, 3.0)
    assert eval_field(spec, 0.5) == (0.0, 0.0)
    assert eval_field(spec, 1.5) == (1.0, -0.5)


# -- dict round trip -------------------------------------------------------------


def test_from_dict_round_trip():
    spec = FieldSpec(
        [Sinusoid(0.1, 1.0, 0.2, start=0.5), GaussianPulse(0.3, 2.0, 0.5, target="E2"), WhiteNoise(0.2, 0.1, 5)],
        0.0,
        4.0,
    )
    again = FieldSpec.from_dict(spec.to_dict())
    assert again == spec
    assert again.digest() == spec.digest()


def test_from_dict_rejects_unknown_keys():
    with pytest.raises(FieldValidationError):
        primitive_from_dict({"kind": "constant", "amplitude": 1.0, "colour": "red"})
    with pytest.raises(FieldValidationError):
        primitive_from_dict({"kind": "laser"})
    with pytest.raises(FieldValidationError):
        FieldSpec.from_dict({"t_start": 0, "t_end": 1, "extra": 1})
