import numpy as np
import pytest

from steering_analysis.core.assemblage import depolarize, lhs_assemblage
from steering_analysis.core.errors import ConfigError, DimensionMismatchError
from steering_analysis.core.lhs import inner_inf_relative_entropy
from steering_analysis.core.quantifiers import (
    RestrictedResSolver,
    continuity_bound,
    continuity_bound_check,
    faithfulness_check,
    full_bounds,
    g_eps,
    lhs_proximity_upper_bound,
    res_lower_bound_full,
    restricted_res,
    restricted_res_exchanged,
    restricted_trace_distance,
    restricted_upper_bound,
    seesaw_trace_distance,
    strategy_mutual_information,
    sup_outcome_entropy,
    trace_distance_lower_bound,
    upper_bound_full,
)
from steering_analysis.models import Assemblage, Instrument, MeasurementStrategy
from steering_analysis.models.results import Interval
from steering_analysis.pipeline import (
    make_rng,
    random_assemblage,
    random_lhs_model,
    random_measurement_strategy,
    werner_assemblage,
)


def _half_singlet():
    """x=0 取单态的 Z 测量，x=1 取完全噪声的 X 测量"""
    singlet, noise = werner_assemblage(1.0), werner_assemblage(0.0)
    return Assemblage(np.stack([singlet.elements[0], noise.elements[1]]))


def _deterministic(outcome, state):
    """两个输入都以概率 1 给出 outcome，Bob 处于 |state⟩"""
    elements = np.zeros((2, 2, 2, 2), dtype=complex)
    elements[:, outcome, state, state] = 1.0
    return Assemblage(elements)


# ---- g(ε) 与连续性界 ----

def test_g_eps_values():
    assert g_eps(0.0) == 0.0
    assert g_eps(1.0) == pytest.approx(2.0)
    assert g_eps(0.5) == pytest.approx(1.5 * np.log2(1.5) - 0.5 * np.log2(0.5))
    values = [g_eps(k / 50.0) for k in range(51)]
    assert np.all(np.diff(values) > 0.0)

    with pytest.raises(ValueError):
        g_eps(-0.1)
    with pytest.raises(ValueError):
        g_eps(1.5)


def test_continuity_bound_values():
    assert continuity_bound(0.0, 2, 2) == 0.0
    assert continuity_bound(0.1, 3, 2) == pytest.approx(0.1 + g_eps(0.1))


# ---- 距离 ----

def test_restricted_trace_distance_values():
    singlet = werner_assemblage(1.0)
    assert restricted_trace_distance(singlet, singlet) == 0.0
    assert restricted_trace_distance(singlet, _half_singlet()) == pytest.approx(0.5)

    with pytest.raises(DimensionMismatchError):
        restricted_trace_distance(singlet, random_assemblage(2, 3, 2, make_rng(1)))


def test_restricted_trace_distance_orthogonal():
    a, b = _deterministic(0, 0), _deterministic(1, 1)
    assert restricted_trace_distance(a, b) == pytest.approx(1.0, abs=1e-12)
    assert restricted_trace_distance(a, _deterministic(0, 1)) == pytest.approx(1.0, abs=1e-12)


def test_restricted_trace_distance_metric(rng):
    a, b, c = (random_assemblage(2, 2, 2, rng) for _ in range(3))
    ab = restricted_trace_distance(a, b)
    assert abs(ab - restricted_trace_distance(b, a)) <= 1e-12
    assert ab + restricted_trace_distance(b, c) >= restricted_trace_distance(a, c) - 1e-12
    assert 0.0 <= ab <= 1.0


def test_lower_bound_distance(rng):
    a, b = random_assemblage(2, 2, 2, rng), random_assemblage(2, 2, 2, rng)
    strategies = [random_measurement_strategy(2, 2, rng) for _ in range(3)]
    trivial_only = trace_distance_lower_bound(a, b)
    with_strategies = trace_distance_lower_bound(a, b, strategies)

    # 均匀 p_X 下等于各输入距离的平均
    per_input = [0.5 * sum(np.sum(np.abs(np.linalg.eigvalsh(a.elements[x, k] - b.elements[x, k])))
                           for k in range(2)) for x in range(2)]
    assert trivial_only == pytest.approx(np.mean(per_input), abs=1e-12)
    assert with_strategies >= trivial_only
    assert with_strategies == pytest.approx(trace_distance_lower_bound(b, a, strategies), abs=1e-12)


def test_seesaw_lower_bound(rng):
    a, b = random_assemblage(2, 2, 2, rng), random_assemblage(2, 2, 2, rng)
    restricted = restricted_trace_distance(a, b)

    start, _ = seesaw_trace_distance(a, b, 0)
    assert start == pytest.approx(restricted, abs=1e-12)

    value, strategy = seesaw_trace_distance(a, b, 5, make_rng(3))
    again, _ = seesaw_trace_distance(a, b, 5, make_rng(3))
    assert value >= restricted - 1e-12
    assert value == again
    assert isinstance(strategy, MeasurementStrategy)

    with pytest.raises(ValueError):
        seesaw_trace_distance(a, b, -1)


# ---- 上界链 ----

def test_bound_chain_on_singlet():
    chain = restricted_upper_bound(werner_assemblage(1.0))
    assert chain.cmi_layer == pytest.approx(1.0, abs=1e-9)
    assert chain.entropy_layer == pytest.approx(1.0, abs=1e-9)
    assert chain.dimension_layer == 1.0
    assert chain.value == pytest.approx(1.0, abs=1e-9)

    labels = [layer["label"] for layer in chain.to_dict()["layers"]]
    assert labels == ["sup_p I(A;B|X)", "min{sup_p H(A), H(B)}", "min{log2|A|, log2 d_B}"]


def test_bound_chain_ordering(rng):
    for shape in ((2, 2, 2), (3, 2, 3), (2, 3, 2)):
        chain = restricted_upper_bound(random_assemblage(*shape, rng))
        assert chain.cmi_layer <= chain.entropy_layer + 1e-9
        assert chain.entropy_layer <= chain.dimension_layer + 1e-9
        assert chain.dimension_layer == pytest.approx(np.log2(min(shape[1], shape[2])))


def test_sup_outcome_entropy():
    value, certified, p = sup_outcome_entropy(np.array([[1.0, 0.0], [0.0, 1.0]]))
    assert value == pytest.approx(1.0, abs=1e-6)
    assert value <= certified <= 1.0
    assert np.allclose(p, [0.5, 0.5], atol=1e-3)

    value, certified, _ = sup_outcome_entropy(np.array([[1.0, 0.0, 0.0], [1.0, 0.0, 0.0]]))
    assert value == pytest.approx(0.0, abs=1e-12)
    assert certified == pytest.approx(0.0, abs=1e-9)


def test_full_chain(rng):
    a = werner_assemblage(1.0)
    chain = upper_bound_full(a)
    assert chain.mutual_information is None
    assert chain.log_outcomes == 1.0
    assert chain.to_dict()["layers"][-1] == {"label": "log2|A|", "value": 1.0}

    strategies = [MeasurementStrategy.trivial(2, [0.5, 0.5]), random_measurement_strategy(2, 2, rng)]
    with_strategies = upper_bound_full(a, strategies)
    assert with_strategies.mutual_information <= with_strategies.sup_entropy_a + 1e-9
    # 单态的 Z 测量下 I(XB;Ā) 至少为 1/2
    assert strategy_mutual_information(a, strategies[0]) >= 0.5 - 1e-9


def test_full_chain_on_deterministic_assemblage():
    chain = upper_bound_full(_deterministic(0, 0))
    assert chain.sup_entropy_a == pytest.approx(0.0, abs=1e-9)
    assert chain.log_outcomes == 1.0
    assert chain.value == pytest.approx(0.0, abs=1e-9)
    assert restricted_upper_bound(_deterministic(1, 0)).value == pytest.approx(0.0, abs=1e-9)


def test_full_lower_bound_matches_restricted_inner(rng, lhs_config):
    a = random_assemblage(2, 2, 2, rng)
    p = np.array([0.5, 0.5])
    config = {'final_inner_iters': lhs_config['inner_max_iter']}

    inner = inner_inf_relative_entropy(a, p, lhs_config)
    lower = res_lower_bound_full(a, [MeasurementStrategy.trivial(2, p)], config, lhs_config)
    assert lower == pytest.approx(inner.lower_bound, abs=1e-12)
    assert res_lower_bound_full(a, [], config, lhs_config) == 0.0

    summary = full_bounds(a, [MeasurementStrategy.trivial(2, p)], config, lhs_config)
    assert summary["lower_bound"] <= summary["upper_chain"]["value"] + 1e-9


def test_full_lower_bound_after_trace_out(lhs_config):
    a = werner_assemblage(1.0)
    traced = MeasurementStrategy(np.array([[0.5, 0.5]]), Instrument.trace_out(2))
    config = {'final_inner_iters': lhs_config['inner_max_iter']}
    assert res_lower_bound_full(a, [traced], config, lhs_config) == pytest.approx(0.0, abs=1e-9)


# ---- 受限相对熵导向量区间 ----

def test_restricted_res_on_singlet(solver_config, lhs_config):
    a = werner_assemblage(1.0)
    interval = restricted_res(a, solver_config, lhs_config)

    assert 0.0 <= interval.lo <= interval.hi
    assert interval.lo > 0.05
    assert interval.hi <= restricted_upper_bound(a).value + 1e-9
    assert interval.diagnostics["order"] == "sup-inf"
    assert set(interval.to_dict()) == {"lo", "hi", "diagnostics"}


def test_restricted_res_single_input(rng):
    a = random_assemblage(1, 2, 2, rng)
    interval = restricted_res(a)
    assert interval.lo == pytest.approx(0.0, abs=1e-9)
    assert interval.hi <= 1e-6


def test_restricted_res_config_validation():
    with pytest.raises(ConfigError):
        RestrictedResSolver({'outer_iters': 0})
    with pytest.raises(ConfigError):
        RestrictedResSolver({'beta_schedule': ()})
    with pytest.raises(ConfigError):
        RestrictedResSolver(lhs_config={'inner_tol': 0.0})


def test_continuity_check_with_given_intervals():
    a1 = werner_assemblage(1.0)
    a2 = depolarize(a1, 0.01)
    close = Interval(0.30, 0.31)

    same = continuity_bound_check(a1, a1, intervals=(close, close))
    assert same.epsilon == 0.0
    assert same.passed

    report = continuity_bound_check(a1, a2, intervals=(Interval(0.9, 0.95), Interval(0.0, 0.05)))
    assert report.epsilon > 0.0
    assert report.difference_lower == pytest.approx(0.85)
    assert not report.passed
    assert report.margin < 0.0


def test_faithfulness_on_lhs_assemblage(rng, solver_config, lhs_config):
    a = lhs_assemblage(random_lhs_model(2, 2, 2, rng))
    report = faithfulness_check(a, solver_config, lhs_config, interval=Interval(0.0, 1e-4))

    assert report.pinsker_ok
    assert report.pinsker_distance_ok
    assert report.zero_implies_lhs
    assert report.feasibility_status != "infeasible"


def test_lhs_proximity_bound(rng, lhs_config):
    a = lhs_assemblage(random_lhs_model(2, 2, 2, rng))
    value = lhs_proximity_upper_bound(a, lhs_config)
    assert 0.0 <= value <= continuity_bound(1.0, 2, 2)


@pytest.mark.slow
def test_restricted_res_orders_agree():
    a = werner_assemblage(1.0)
    sup_inf = restricted_res(a)
    inf_sup = restricted_res_exchanged(a)

    assert sup_inf.overlaps(inf_sup, tol=2e-3)
    assert sup_inf.width <= 1e-3


@pytest.mark.slow
def test_restricted_res_near_zero_on_lhs(rng):
    a = lhs_assemblage(random_lhs_model(2, 2, 2, rng))
    interval = restricted_res(a)
    assert interval.hi <= 1e-3
    assert faithfulness_check(a, interval=interval).passed
