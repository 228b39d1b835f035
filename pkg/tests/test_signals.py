import cmath

import numpy as np
import pytest

from fftinterp.signals import SignalSpec, eval_ground_truth, generate, splitmix64, uniform_doubles
from fftinterp.transforms import dft_naive


class TestSplitmix64:
    def test_known_answer_seed_zero(self):
        # canonical first outputs of the splitmix64 recurrence
        assert splitmix64(0, 3) == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_known_answer_seed_1234567(self):
        assert splitmix64(1234567, 3) == [
            0x599ED017FB08FC85,
            0x2C73F08458540FA5,
            0x883EBCE5A3F27C77,
        ]

    def test_doubles_land_in_unit_interval(self):
        draws = uniform_doubles(42, 1000)
        assert all(0.0 <= d < 1.0 for d in draws)


class TestSpecValidation:
    def test_tone_needs_one_harmonic(self):
        with pytest.raises(ValueError):
            SignalSpec(kind="tone", length=8)
        with pytest.raises(ValueError):
            SignalSpec(kind="tone", length=8, harmonics=(1, 2))

    def test_bandlimited_flag_rejects_out_of_band(self):
        with pytest.raises(ValueError):
            SignalSpec(kind="tone", length=8, harmonics=(4,))
        SignalSpec(kind="tone", length=8, harmonics=(4,), bandlimited=False)
        SignalSpec(kind="tone", length=8, harmonics=(3.5,))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            SignalSpec(kind="chirp", length=8)

    def test_amplitudes_must_parallel_harmonics(self):
        with pytest.raises(ValueError):
            SignalSpec(kind="multitone", length=8, harmonics=(1, 2), amplitudes=(1,))

    def test_random_band_default_and_bounds(self):
        spec = SignalSpec(kind="bandlimited-random", length=16)
        assert spec.band == 7
        with pytest.raises(ValueError):
            SignalSpec(kind="bandlimited-random", length=16, band=9)

    def test_pulse_width_positive(self):
        with pytest.raises(ValueError):
            SignalSpec(kind="gaussian-pulse", length=16, width=0.0)


class TestGenerate:
    def test_zero_harmonic_tone_is_all_ones(self):
        seq = generate(SignalSpec(kind="tone", length=6, harmonics=(0,)))
        np.testing.assert_allclose(seq.samples, np.ones(6), rtol=0, atol=1e-15)
        assert seq.sample_period == 1.0

    def test_unit_harmonic_tone_length4(self):
        seq = generate(SignalSpec(kind="tone", length=4, harmonics=(1,)))
        np.testing.assert_allclose(seq.samples, [1, 1j, -1, -1j], rtol=0, atol=1e-15)

    def test_random_signal_is_deterministic(self):
        spec = SignalSpec(kind="bandlimited-random", length=16, seed=5)
        first = generate(spec).samples
        second = generate(spec).samples
        np.testing.assert_array_equal(first, second)

    def test_random_signal_spectrum_is_bandlimited(self):
        spec = SignalSpec(kind="bandlimited-random", length=16, seed=5, band=3)
        coefficients = dft_naive(generate(spec).samples)
        in_band = {h % 16 for h in range(-3, 4)}
        for k in range(16):
            if k not in in_band:
                assert abs(coefficients[k]) <= 1e-12

    def test_gaussian_pulse_peaks_at_center(self):
        spec = SignalSpec(kind="gaussian-pulse", length=17, center=8.0, width=2.0)
        samples = generate(spec).samples.real
        assert samples[8] == pytest.approx(1.0)
        np.testing.assert_allclose(samples[:8], samples[9:][::-1], rtol=0, atol=1e-15)


class TestGroundTruth:
    def test_tone_closed_form(self):
        spec = SignalSpec(kind="tone", length=4, harmonics=(1,))
        assert eval_ground_truth(spec, 0.5) == pytest.approx(cmath.exp(1j * cmath.pi / 4))

    @pytest.mark.parametrize(
        "spec",
        [
            SignalSpec(kind="tone", length=8, harmonics=(2,), amplitudes=(0.5 - 0.5j,)),
            SignalSpec(kind="multitone", length=12, harmonics=(1, -4), amplitudes=(1, 2j)),
            SignalSpec(kind="bandlimited-random", length=16, seed=9),
            SignalSpec(kind="gaussian-pulse", length=16),
        ],
    )
    def test_agrees_with_generate_at_sample_points(self, spec):
        seq = generate(spec)
        for m in range(spec.length):
            assert eval_ground_truth(spec, float(m)) == seq.samples[m]

    def test_multitone_independent_evaluation(self):
        spec = SignalSpec(kind="multitone", length=16, harmonics=(1, 3), amplitudes=(1, 0.5))
        t = 2.25
        expected = cmath.exp(2j * cmath.pi * t / 16) + 0.5 * cmath.exp(2j * cmath.pi * 3 * t / 16)
        assert eval_ground_truth(spec, t) == pytest.approx(expected, abs=1e-15)
        assert eval_ground_truth(spec, t) == pytest.approx(
            0.1934326519894680 + 1.0087088217757358j, abs=1e-14
        )

    def test_rejects_non_finite_time(self):
        spec = SignalSpec(kind="tone", length=4, harmonics=(1,))
        with pytest.raises(ValueError):
            eval_ground_truth(spec, np.inf)
