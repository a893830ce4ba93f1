import json
import math

import numpy as np
import pytest

from eliashberg_tc import measure
from eliashberg_tc.errors import ValidationError
from eliashberg_tc.numerics import integrate_adaptive


class TestValidation:
    def test_einstein_valid(self):
        m = measure.einstein(1.0)
        assert m.omega_max == 1.0
        assert m.moment(0) == 1.0

    def test_discrete_valid(self):
        m = measure.discrete([(0.5, 0.8), (0.5, 1.2)])
        assert m.omega_max == 1.2
        assert m.moment(0) == pytest.approx(1.0, abs=1e-15)

    def test_discrete_mass_rejected(self):
        with pytest.raises(ValidationError, match="mass"):
            measure.discrete([(0.7, 1.0), (0.7, 2.0)])

    def test_nonpositive_frequency_rejected(self):
        with pytest.raises(ValidationError):
            measure.einstein(0.0)
        with pytest.raises(ValidationError):
            measure.discrete([(1.0, -2.0)])

    def test_negative_weight_rejected(self):
        with pytest.raises(ValidationError):
            measure.discrete([(1.5, 1.0), (-0.5, 2.0)])

    def test_mass_rescaled_within_tolerance(self):
        m = measure.discrete([(0.5004, 1.0), (0.5, 2.0)])
        assert m.moment(0) == pytest.approx(1.0, abs=1e-15)

    def test_tabulated_mass_rule(self):
        with pytest.raises(ValidationError, match="mass"):
            measure.tabulated([(0.0, 0.0), (0.5, 1.6), (1.0, 0.0)])  # trapezoid mass 0.8

    def test_tabulated_nodes_must_increase(self):
        with pytest.raises(ValidationError):
            measure.tabulated([(0.0, 0.0), (0.5, 2.0), (0.5, 0.0)])

    def test_small_frequency_behavior_warns_only(self):
        with pytest.warns(UserWarning):
            m = measure.tabulated([(0.5, 1.0), (1.5, 1.0)])  # flat density, no ~w onset
        assert m.moment(0) == pytest.approx(1.0, abs=1e-14)

    def test_immutable_after_validate(self):
        m = measure.einstein(1.0)
        with pytest.raises(ValueError):
            m.omegas[0] = 2.0


class TestFileFormat:
    def test_einstein_shape(self):
        m = measure.from_json('{"type":"einstein","omega":1.0}')
        assert m.kind == "einstein"
        assert m.omega_max == 1.0

    def test_discrete_shape(self):
        text = '{"type":"discrete","atoms":[{"weight":0.5,"omega":0.8},{"weight":0.5,"omega":1.2}]}'
        m = measure.from_json(text)
        assert m.kind == "discrete"
        assert m.omega_max == 1.2

    def test_tabulated_shape(self):
        m = measure.from_json('{"type":"tabulated","nodes":[[0.0,0.0],[0.5,2.0],[1.0,0.0]]}')
        assert m.kind == "tabulated"
        assert m.moment(0) == pytest.approx(1.0, abs=1e-14)

    def test_load_roundtrip(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"type": "einstein", "omega": 2.0}), encoding="utf-8")
        assert measure.load(path).omega_max == 2.0

    def test_malformed_rejected(self):
        with pytest.raises(ValidationError):
            measure.from_json("not json at all")
        with pytest.raises(ValidationError):
            measure.from_json('{"type":"unknown"}')
        with pytest.raises(ValidationError):
            measure.from_json('{"omega": 1.0}')

    def test_validate_passthrough_and_dict(self):
        m = measure.einstein(1.0)
        assert measure.validate(m) is m
        assert measure.validate({"type": "einstein", "omega": 3.0}).omega_max == 3.0
        with pytest.raises(ValidationError):
            measure.validate([1, 2, 3])


class TestMoments:
    def test_einstein_exact(self):
        assert measure.einstein(2.0).moment(2) == 4.0

    def test_discrete_weighted_sum(self):
        m = measure.discrete([(0.5, 1.0), (0.5, 3.0)])
        assert m.moment(2) == pytest.approx(5.0, abs=1e-14)

    def test_triangle_second_moment(self, triangle):
        # density 2w on [0, 1] has second moment 1/2 (calculus oracle);
        # the symmetric triangle peaked at 1/2 is checked by quadrature below
        ramp = measure.tabulated([(0.0, 0.0), (1.0, 2.0)])
        assert ramp.moment(2) == pytest.approx(0.5, rel=1e-12)
        want = integrate_adaptive(
            lambda w: (4 * w if w <= 0.5 else 4 * (1 - w)) * w * w, 0.0, 1.0, 1e-12
        )
        assert triangle.moment(2) == pytest.approx(want, rel=1e-10)


class TestKernelAverage:
    def test_varpi_one_values(self):
        t = 0.25
        m = measure.einstein(2.0 * math.pi * t)
        assert m.kernel_average(1, t).value == pytest.approx(0.5, abs=1e-15)
        assert m.kernel_average(2, t).value == pytest.approx(0.2, abs=1e-15)

    def test_decreasing_in_index(self, two_atoms, triangle):
        rng = np.random.default_rng(0)
        for m in (two_atoms, triangle, measure.einstein(1.7)):
            for _ in range(3):
                t = float(rng.uniform(0.02, 3.0))
                vals = m.kernel_values(t, 17)[1:]
                assert np.all(np.diff(vals) < 0.0)

    def test_decreasing_in_index_random_measures(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            k = int(rng.integers(1, 6))
            weights = rng.random(k)
            weights /= weights.sum()
            atoms = list(zip(weights, rng.uniform(0.1, 4.0, size=k)))
            m = measure.discrete(atoms)
            t = float(rng.uniform(0.02, 3.0))
            vals = m.kernel_values(t, 17)[1:]
            assert np.all(np.diff(vals) < 0.0)

    def test_decreasing_in_temperature(self, two_atoms):
        temps = np.geomspace(0.01, 10.0, 12)
        vals = [two_atoms.kernel_average(1, float(t)).value for t in temps]
        assert np.all(np.diff(vals) < 0.0)

    def test_high_temperature_vanishes(self, two_atoms, triangle):
        for m in (two_atoms, triangle):
            t = 1e6 * m.omega_max
            assert m.kernel_average(1, t).value <= 1e-10

    def test_high_temperature_normalization(self, two_atoms, triangle):
        for m in (two_atoms, triangle, measure.einstein(0.3)):
            t = 1e4 * m.omega_max
            v = m.kernel_average(3, t).value
            assert v * (6.0 * math.pi * t) ** 2 / m.moment(2) == pytest.approx(1.0, abs=1e-6)

    def test_low_temperature_limit(self, two_atoms):
        t = 1e-6 * float(np.min(two_atoms.omegas))
        assert two_atoms.kernel_average(1, t).value == pytest.approx(1.0, abs=1e-9)

    def test_discrete_exactness(self):
        m = measure.discrete([(0.25, 0.5), (0.75, 2.0)])
        for n in (1, 3):
            for t in (0.07, 0.9):
                want = 0.25 * 0.25 / (0.25 + (2 * n * math.pi * t) ** 2) + 0.75 * 4.0 / (
                    4.0 + (2 * n * math.pi * t) ** 2
                )
                assert m.kernel_average(n, t).value == pytest.approx(want, abs=1e-14)

    def test_tabulated_against_quadrature(self, triangle):
        t = 0.2
        c = 2.0 * math.pi * t

        def density(w):
            return 4.0 * w if w <= 0.5 else 4.0 * (1.0 - w)

        want = integrate_adaptive(lambda w: density(w) * w * w / (w * w + c * c), 0.0, 1.0, 1e-12)
        assert triangle.kernel_average(1, t).value == pytest.approx(want, rel=1e-9)

    def test_domain_errors(self, einstein_unit):
        with pytest.raises(ValidationError):
            einstein_unit.kernel_average(1, 0.0)
        with pytest.raises(ValidationError):
            einstein_unit.kernel_average(0, 1.0)
