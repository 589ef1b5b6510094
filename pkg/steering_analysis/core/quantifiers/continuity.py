"""
连续性与忠实性

g(ε) = (ε+1) log₂(ε+1) − ε log₂ ε，一致连续性界 ε log₂ min{|A|, d_B} + g(ε)，
以及基于量子 Pinsker 不等式的忠实性检查。
"""

import logging
from typing import Any, Dict, Optional

import numpy as np
from scipy.special import xlogy

from ...config import QUANTIFIER_CONFIG
from ...models.assemblage_models import Assemblage
from ...models.results import ContinuityReport, FaithfulnessReport, Interval
from ..assemblage.construction import embed_cq
from ..errors import DimensionMismatchError
from ..lhs.feasibility import lhs_feasibility
from ..lhs.inner_solver import inner_inf_relative_entropy
from ..linalg import LN2
from .distances import restricted_trace_distance
from .restricted_res import RestrictedResSolver

logger = logging.getLogger(__name__)


def g_eps(eps: float) -> float:
    """
    g(ε) = (ε+1) log₂(ε+1) − ε log₂ ε，g(0) = 0

    异常:
        ValueError: ε 不在 [0, 1] 内
    """
    eps = float(eps)
    if not 0.0 <= eps <= 1.0 or np.isnan(eps):
        raise ValueError(f"g(ε) 要求 0 ≤ ε ≤ 1，实际: {eps}")
    return float((xlogy(eps + 1.0, eps + 1.0) - xlogy(eps, eps)) / LN2)


def continuity_bound(epsilon: float, n_outcomes: int, dim_b: int) -> float:
    """ε log₂ min{|A|, d_B} + g(ε)"""
    return float(epsilon * np.log2(min(n_outcomes, dim_b)) + g_eps(epsilon))


def continuity_bound_check(a1: Assemblage, a2: Assemblage,
                           config: Optional[Dict[str, Any]] = None,
                           lhs_config: Optional[Dict[str, Any]] = None,
                           intervals: Optional[tuple] = None) -> ContinuityReport:
    """
    一致连续性检查

    ε = Δ^R(ρ̂, θ̂)；两侧各求一个区间，差的认证下界
    max(0, lo₁ − hi₂, lo₂ − hi₁) 不得超过 ε log₂ min{|A|, d_B} + g(ε)。

    参数:
        intervals: 可选，已求得的 (区间₁, 区间₂)，避免重复求解
    """
    if a1.shape != a2.shape:
        raise DimensionMismatchError(f"集合形状不一致: {a1.shape} vs {a2.shape}")
    epsilon = restricted_trace_distance(a1, a2)
    if intervals is None:
        solver = RestrictedResSolver(config, lhs_config)
        intervals = (solver.solve(a1), solver.solve(a2))
    i1, i2 = intervals
    difference_lower = max(0.0, i1.lo - i2.hi, i2.lo - i1.hi)
    bound = continuity_bound(epsilon, a1.n_outcomes, a1.dim_b)
    passed = difference_lower <= bound + 1e-12
    if not passed:
        logger.warning(f"连续性界被违反: 差 ≥ {difference_lower:.6f} > 界 {bound:.6f}（ε={epsilon:.4f}）")
    return ContinuityReport(epsilon, i1, i2, difference_lower, bound, passed)


def lhs_trace_distance(assemblage: Assemblage, sigma_elements: np.ndarray) -> float:
    """(1/|X|) Σ_{x,a} ‖ρ̂^{a,x} − σ̂^{a,x}‖₁"""
    diff = assemblage.elements - sigma_elements
    h = 0.5 * (diff + np.conj(np.swapaxes(diff, -1, -2)))
    return float(np.sum(np.abs(np.linalg.eigvalsh(h)))) / assemblage.n_inputs


def lhs_proximity_upper_bound(assemblage: Assemblage, lhs_config: Optional[Dict[str, Any]] = None) -> float:
    """
    利用最近 LHS 集合的连续性上界

    取均匀 p_X 下内层求解的迭代模型 σ̂(m)，R_S^R(σ̂(m)) = 0，
    于是 R_S^R(ρ̂) ≤ ε log₂ min{|A|, d_B} + g(ε)，ε = Δ^R(ρ̂, σ̂(m))。
    """
    p = np.full(assemblage.n_inputs, 1.0 / assemblage.n_inputs)
    result = inner_inf_relative_entropy(assemblage, p, lhs_config)
    sigma = Assemblage(result.model.assemblage_elements())
    epsilon = restricted_trace_distance(assemblage, sigma)
    return continuity_bound(epsilon, assemblage.n_outcomes, assemblage.dim_b)


def faithfulness_check(assemblage: Assemblage, config: Optional[Dict[str, Any]] = None,
                       lhs_config: Optional[Dict[str, Any]] = None,
                       interval: Optional[Interval] = None) -> FaithfulnessReport:
    """
    忠实性检查

    1. 均匀 p_X 下内层迭代点 m 处的逐点 Pinsker：D(ρ_cq‖σ_cq(m)) ≥ ‖ρ_cq − σ_cq(m)‖₁²/(2 ln 2)；
    2. √(2 ln 2 (hi + gap)) ≥ (1/|X|) Σ_{x,a} ‖ρ̂ − σ̂(m)‖₁；
    3. hi ≤ faithful_zero_tol 时可行性求解不得判为不可行；
    4. 可行性求解判为可行时 hi ≤ faithful_lhs_tol。
    """
    cfg = {**QUANTIFIER_CONFIG, **(config or {})}
    p = np.full(assemblage.n_inputs, 1.0 / assemblage.n_inputs)
    inner = inner_inf_relative_entropy(assemblage, p, lhs_config)
    sigma_elements = inner.model.assemblage_elements()
    rho_cq = embed_cq(assemblage, p)
    sigma_cq = embed_cq(Assemblage(sigma_elements), p)
    divergence = float(rho_cq.relative_entropy(sigma_cq))
    norm = 2.0 * rho_cq.trace_distance(sigma_cq)
    pinsker_rhs = norm ** 2 / (2.0 * LN2)
    pinsker_ok = divergence >= pinsker_rhs - cfg['pinsker_slack']

    if interval is None:
        interval = RestrictedResSolver(config, lhs_config).solve(assemblage)
    feasibility = lhs_feasibility(assemblage, lhs_config)
    zero_implies_lhs = interval.hi > cfg['faithful_zero_tol'] or feasibility.status != "infeasible"
    lhs_implies_zero = (not feasibility.feasible) or interval.hi <= cfg['faithful_lhs_tol']
    distance = lhs_trace_distance(assemblage, sigma_elements)
    pinsker_distance_ok = np.sqrt(2.0 * LN2 * max(0.0, interval.hi + inner.gap)) + cfg['pinsker_slack'] >= distance
    report = FaithfulnessReport(
        relative_entropy=divergence,
        trace_norm=norm,
        pinsker_rhs=pinsker_rhs,
        pinsker_ok=bool(pinsker_ok),
        interval=interval,
        feasibility_status=feasibility.status,
        zero_implies_lhs=bool(zero_implies_lhs),
        lhs_implies_zero=bool(lhs_implies_zero),
        lhs_trace_distance=distance,
        pinsker_distance_ok=bool(pinsker_distance_ok),
    )
    if not report.passed:
        logger.warning(f"忠实性检查未通过: {report.to_dict()}")
    return report
