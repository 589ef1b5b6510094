import numpy as np
import pytest

from steering_analysis.core.assemblage import embed_cq, lhs_assemblage, relabel_outcomes
from steering_analysis.core.errors import StrategyCapExceededError
from steering_analysis.core.lhs import (
    check_strategy_cap,
    enumerate_strategies,
    inner_inf_relative_entropy,
    lhs_feasibility,
    project_simplex,
    project_spectraplex,
    response_tensor,
)
from steering_analysis.models import Assemblage
from steering_analysis.pipeline import random_assemblage, random_hermitian, random_lhs_model, werner_assemblage


def _divergence(assemblage, p, model):
    sigma = Assemblage(model.assemblage_elements())
    return float(embed_cq(assemblage, p).relative_entropy(embed_cq(sigma, p)))


def test_strategy_enumeration():
    strategies = enumerate_strategies(2, 3)
    assert len(strategies) == 9
    assert len({s.response for s in strategies}) == 9
    assert strategies[0].response == (0, 0)
    assert strategies[5].response == (1, 2)
    assert all(s.index(3) == i for i, s in enumerate(strategies))

    assert check_strategy_cap(12, 2) == 4096
    with pytest.raises(StrategyCapExceededError):
        check_strategy_cap(13, 2)


def test_projections(rng):
    p = project_simplex(np.array([0.9, 0.8, -0.3]))
    assert np.all(p >= 0.0)
    assert p.sum() == pytest.approx(1.0)
    assert np.allclose(p, [0.55, 0.45, 0.0])

    blocks = np.stack([random_hermitian(2, rng) for _ in range(4)])
    projected = project_spectraplex(blocks)
    assert np.real(np.trace(projected, axis1=-2, axis2=-1)).sum() == pytest.approx(1.0)
    assert np.min(np.linalg.eigvalsh(projected)) >= -1e-12


def test_lhs_assemblage_is_feasible(rng):
    model = random_lhs_model(2, 2, 2, rng)
    report = lhs_feasibility(lhs_assemblage(model))

    assert report.status == "feasible"
    assert report.residual <= 1e-6
    assert report.model is not None
    reproduced = report.model.assemblage_elements()
    assert np.allclose(reproduced, lhs_assemblage(model).elements, atol=1e-5)


def test_werner_feasibility():
    low = lhs_feasibility(werner_assemblage(0.5))
    assert low.status == "feasible"

    high = lhs_feasibility(werner_assemblage(0.9))
    assert high.status == "infeasible"
    assert high.model is None
    assert high.witness_value > 0.0


def test_inner_solve_descends_with_sound_certificate(rng, lhs_config):
    a = random_assemblage(2, 2, 2, rng)
    p = np.array([0.5, 0.5])
    seen = []
    result = inner_inf_relative_entropy(a, p, lhs_config, callback=lambda it, s, f: seen.append((it, f)))

    assert np.all(np.diff(result.history) <= 1e-12)
    assert result.value >= 0.0
    assert result.gap >= 0.0
    assert len(seen) == len(result.history) - 1

    value_at_model = _divergence(a, p, result.model)
    assert value_at_model == pytest.approx(result.value, abs=1e-9)
    for _ in range(10):
        other = random_lhs_model(2, 2, 2, rng)
        assert result.value - result.gap <= _divergence(a, p, other) + 1e-9


def test_inner_solve_on_lhs_assemblage(rng, lhs_config):
    model = random_lhs_model(2, 2, 2, rng)
    result = inner_inf_relative_entropy(lhs_assemblage(model), np.array([0.5, 0.5]), lhs_config)

    assert result.lower_bound <= 1e-9
    assert result.value <= 1e-3


def test_inner_solve_relabel_symmetry(rng, lhs_config):
    a = random_assemblage(2, 3, 2, rng)
    p = np.array([0.4, 0.6])
    direct = inner_inf_relative_entropy(a, p, lhs_config)
    relabeled = inner_inf_relative_entropy(relabel_outcomes(a, [1, 2, 0]), p, lhs_config)

    assert abs(direct.value - relabeled.value) <= max(direct.gap, relabeled.gap) + 1e-9


def test_inner_solve_pinsker_at_iterates(rng, lhs_config):
    a = random_assemblage(2, 2, 2, rng)
    p = np.array([0.5, 0.5])
    rho_cq = embed_cq(a, p)
    incidence = response_tensor(2, 2)
    checked = []

    def check(iteration, s, f):
        sigma_cq = embed_cq(Assemblage(np.einsum('lxa,lij->xaij', incidence, s)), p)
        distance = 2.0 * rho_cq.trace_distance(sigma_cq)
        checked.append(f - distance ** 2 / (2.0 * np.log(2.0)))

    inner_inf_relative_entropy(a, p, lhs_config, max_iter=300, callback=check)

    assert checked
    assert min(checked) >= -1e-9
