# Copyright 2026 The evcopula Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json

import numpy as np
import pytest

import evcopula as ev


def test_closed_forms():
    t = ev.triangular(0.5, 0.75)
    assert len(t) == 1
    assert ev.tau(t) == pytest.approx(1 / 3, abs=1e-15)
    assert ev.rho(t) == pytest.approx(3 / 7, abs=1e-15)
    m = ev.measures(ev.Pickands([(0.3, 0.8), (0.6, 0.7)]))
    assert m.exact
    assert m.tau == pytest.approx(257 / 560, abs=1e-14)
    assert m.rho == pytest.approx(10 / 17, abs=1e-14)
    assert ev.measures(ev.Pickands.comonotonic()).tau == pytest.approx(1.0)


def test_validation_errors():
    with pytest.raises(ev.EvcError, match="EnvelopeViolation"):
        ev.Pickands([(0.5, 0.4)])
    with pytest.raises(ValueError):
        ev.Pickands([(0.3, 0.95), (0.6, 0.75)])
    with pytest.raises(ev.EvcError):
        ev.admissible_interval(ev.Pickands.independence(), 0.2)


def test_evaluation_and_json_round_trip():
    a = ev.Pickands([(0.6, 0.7), (0.3, 0.8)])
    assert a.vertices == [(0.3, 0.8), (0.6, 0.7)]
    assert a(0.0) == 1.0
    assert a.right_derivative(0.1) == pytest.approx(-2 / 3)
    b = ev.Pickands.from_json(a.to_json())
    assert a == b
    assert json.loads(a.to_json())["vertices"] == [[0.3, 0.8], [0.6, 0.7]]
    assert ev.copula_cdf(ev.Pickands(), 0.3, 0.6) == pytest.approx(0.18)


def test_insertion_and_increments():
    t = ev.triangular(0.5, 0.75)
    assert ev.admissible_interval(t, 0.25) == pytest.approx((0.75, 0.875))
    b = ev.vertex_insert(t, 0.25, 0.8)
    assert b.vertices == [(0.25, 0.8), (0.5, 0.75)]
    assert ev.delta_tau(0.5, 0.75, 0.25, 0.8) == pytest.approx(0.040625)
    assert ev.tau(b) - ev.tau(t) == pytest.approx(0.040625, abs=1e-13)
    assert ev.capital_delta(b, t) == pytest.approx(0.027424, abs=1e-6)
    terms = ev.lemma2_terms(0.5, 0.75, 0.25, 0.8)
    assert terms["N3"] > 0
    assert terms["quotient"] == pytest.approx(ev.capital_delta(b, t))


def test_bounds_and_gap():
    lower, upper, sharp = ev.bound_curves(1 / 3)
    assert lower < sharp < upper
    argmax, value = ev.maximize_gap(100_000)
    assert argmax == pytest.approx(np.sqrt(6) - 2, abs=1e-6)
    assert value == pytest.approx(5 - 2 * np.sqrt(6), abs=1e-9)


def test_general_measures_with_python_callable():
    f = ev.DependenceEvaluator("gumbel2", lambda t: (t**2 + (1 - t) ** 2) ** 0.5)
    m = ev.measures_general(f, 1e-8)
    assert not m.exact
    assert m.tau == pytest.approx(0.5, abs=1e-6)
    g = ev.measures_general(ev.DependenceEvaluator.gumbel(2.0), 1e-8)
    assert g.rho == pytest.approx(m.rho, abs=1e-12)


def test_verification_entry_points():
    report = ev.lemma_suite(500, 1)
    assert report["passed"]
    assert report["checks"]["n3_positive"]["violations"] == 0
    samples = ev.region_scan(200, 8, 3)
    assert len(samples) == 200
    assert not any(s["violation"] for s in samples)
    r = ev.check_ordering(ev.triangular(0.5, 0.9), ev.triangular(0.5, 0.75))
    assert r["relation"] == "first" and r["consistent"]
    a = ev.random_pickands(6, 11)
    assert a == ev.random_pickands(6, 11)
    assert ev.check_sharp_inequality(a)["slack_sharp"] >= -1e-9


def test_sampling():
    t = ev.triangular(0.5, 0.75)
    pairs = ev.sample(t, 20_000, 5)
    assert pairs.shape == (20_000, 2)
    assert np.all((pairs > 0) & (pairs < 1))
    assert np.array_equal(pairs, ev.sample(t, 20_000, 5, workers=3))
    assert ev.empirical_tau(pairs) == pytest.approx(1 / 3, abs=0.02)
    assert ev.empirical_rho(pairs) == pytest.approx(3 / 7, abs=0.02)
    diag = ev.sample(ev.Pickands.comonotonic(), 1000, 1)
    assert ev.empirical_tau(diag) == 1.0
