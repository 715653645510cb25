import json
from dataclasses import replace

import numpy as np
import pytest

from squintpy import option_context
from squintpy.core import Architecture, PerfCurve, with_fractional_bandwidth
from squintpy.costadvisor import (
    Recommendation, advise, architecture_cost, architecture_performance, crossover_thresholds
)
from squintpy.perf import PerformanceResult, evaluate_scenario


def inputs(scenario, bf):
    s = with_fractional_bandwidth(scenario, bf)
    k = s.cost.sparse_ttd_count(s.n_elements)
    with option_context({'WBBG.RESTARTS': 2}):
        perf = evaluate_scenario(s)
    costs = [architecture_cost(a, s.array, s.cost.n_rf, k, s.cost.model, bf) for a in Architecture]
    return s, perf, costs


@pytest.fixture(scope="module")
def narrow(mmwave):
    return inputs(mmwave, 0.01)


@pytest.fixture(scope="module")
def wide(mmwave):
    return inputs(mmwave, 0.5)


def test_cost_only_picks_non_ttd_in_narrowband(narrow):
    s, perf, costs = narrow
    rec = advise(s, 0.0, 1.0, perf, costs)
    assert rec.architecture is Architecture.NonTTD_NBBG


@pytest.mark.parametrize("perf_weight", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_full_ttd_wins_in_ultra_wideband(wide, perf_weight):
    s, perf, costs = wide
    rec = advise(s, perf_weight, 1 - perf_weight, perf, costs)
    assert rec.architecture is Architecture.FullTTD_NBBG


def test_performance_only_picks_full_ttd(mmwave_ideal):
    s, perf, costs = inputs(mmwave_ideal, 0.1)
    rec = advise(s, 1.0, 0.0, perf, costs)
    assert rec.architecture is Architecture.FullTTD_NBBG
    assert rec.perf_ratios[Architecture.FullTTD_NBBG] == 1.0


def test_score_table(narrow):
    s, perf, costs = narrow
    rec = advise(s, 0.3, 0.7, perf, costs)

    totals = {c.architecture: c.total for c in costs}
    se = architecture_performance(perf)
    for a in Architecture:
        expected = 0.3 * se[a] / se[Architecture.FullTTD_NBBG] \
            - 0.7 * totals[a] / max(totals.values())
        assert rec.scores[a] == pytest.approx(expected)
    assert rec.architecture is max(rec.scores, key=rec.scores.get)
    assert max(rec.normalized_costs.values()) == 1.0


def test_sparse_performance_is_midpoint_of_bounds(narrow):
    _, perf, _ = narrow
    se = architecture_performance(perf)
    assert se[Architecture.SparseTTD_NBBG] == pytest.approx(
        (perf[PerfCurve.SparseTTD_lower].sum_se + perf[PerfCurve.SparseTTD_upper].sum_se) / 2)
    assert architecture_performance(list(perf.values())) == se


def test_raising_a_cost_never_helps(narrow):
    s, perf, costs = narrow
    # capped at the largest cost so the normalization stays put
    top = max(c.total for c in costs)
    for perf_weight in np.linspace(0, 1, 5):
        base = advise(s, perf_weight, 1 - perf_weight, perf, costs)
        for i, c in enumerate(costs):
            if c.architecture is base.architecture:
                continue
            raised = list(costs)
            raised[i] = replace(c, total=min(c.total * 1.5, top))
            assert advise(s, perf_weight, 1 - perf_weight, perf, raised).architecture \
                is base.architecture


def test_ties_go_to_the_cheaper_architecture(narrow):
    s, _, costs = narrow
    flat = {c: PerformanceResult.build(c, np.ones(4), 4.0) for c in PerfCurve}
    cheapest = min(costs, key=lambda c: c.total).architecture

    rec = advise(s, 1.0, 0.0, flat, costs)
    assert len(set(rec.scores.values())) == 1
    assert rec.architecture is cheapest


def test_advise_is_pure(narrow):
    s, perf, costs = narrow
    assert advise(s, 0.5, 0.5, perf, costs) == advise(s, 0.5, 0.5, perf, costs)


@pytest.mark.parametrize("weights", [(0.5, 0.6), (-0.1, 1.1), (1.2, -0.2)])
def test_invalid_weights(narrow, weights):
    s, perf, costs = narrow
    with pytest.raises(ValueError):
        advise(s, *weights, perf, costs)


def test_missing_rows(narrow):
    s, perf, costs = narrow
    with pytest.raises(ValueError, match="missing cost rows"):
        advise(s, 0.5, 0.5, perf, costs[:3])

    partial = {k: v for k, v in perf.items() if k is not PerfCurve.SparseTTD_upper}
    with pytest.raises(ValueError, match="missing performance rows"):
        advise(s, 0.5, 0.5, partial, costs)


def test_record_and_report(narrow):
    s, perf, costs = narrow
    th = crossover_thresholds(s.array, 1, 4, s.cost.model)
    rec = advise(s, 0.0, 1.0, perf, costs, th)
    assert isinstance(rec, Recommendation)
    assert rec.regime == 'narrowband'

    record = json.loads(json.dumps(rec.as_dict()))
    assert record['architecture'] == 'NonTTD_NBBG'
    assert record['th1'] == th.th1 and record['th2'] == th.th2
    assert set(record['scores']) == {a.value for a in Architecture}

    text = rec.summary().as_text()
    assert "Recommended architecture: NonTTD_NBBG" in text
    assert "th1" in text
