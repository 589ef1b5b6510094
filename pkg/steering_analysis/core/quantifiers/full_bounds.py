"""
一般 1W-LOCC 相对熵导向量 R_S 的下界

对每个给定策略 {p_{X|Y}, K_y}，求 inf_{LHS} D(ρ_{XĀB'Y}‖σ_{XĀB'Y}) 的认证下界，
σ 的块为 p(x|y) K_y(σ̂^{a,x})，复用 Frank–Wolfe 机制。
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from ...config import LHS_CONFIG, QUANTIFIER_CONFIG
from ...models.assemblage_models import Assemblage, MeasurementStrategy
from ...models.lhs_models import InnerSolveResult
from ..lhs.inner_solver import FrankWolfeSolver
from ..lhs.objective import LinearScalarization, SteeringObjective
from .upper_bounds import upper_bound_full

logger = logging.getLogger(__name__)


def strategy_inner_solve(assemblage: Assemblage, strategy: MeasurementStrategy,
                         config: Optional[Dict[str, Any]] = None,
                         lhs_config: Optional[Dict[str, Any]] = None) -> InnerSolveResult:
    """单个策略下的 inf_{LHS} D(ρ_{XĀB'Y}‖σ_{XĀB'Y})"""
    cfg = {**QUANTIFIER_CONFIG, **(config or {})}
    lhs_cfg = {**LHS_CONFIG, **(lhs_config or {})}
    objective = SteeringObjective.channelized(assemblage, strategy, lhs_cfg)
    weights = strategy.p_x_given_y.T  # (X, Y)
    if objective.n_branches == 1:
        weights = weights.sum(axis=1, keepdims=True)
    solver = FrankWolfeSolver(objective, LinearScalarization(weights), lhs_cfg)
    return solver.solve(max_iter=int(cfg['final_inner_iters']))


def res_lower_bound_full(assemblage: Assemblage, strategies: Sequence[MeasurementStrategy],
                         config: Optional[Dict[str, Any]] = None,
                         lhs_config: Optional[Dict[str, Any]] = None,
                         results: Optional[List[InnerSolveResult]] = None) -> float:
    """
    R_S 的认证下界：给定策略上 (value − gap) 的最大值

    参数:
        strategies: 策略列表，可为空（返回 0）
        results: 可选，传入列表时追加每个策略的求解结果

    返回:
        非负实数
    """
    best = 0.0
    for index, strategy in enumerate(strategies):
        result = strategy_inner_solve(assemblage, strategy, config, lhs_config)
        if results is not None:
            results.append(result)
        logger.debug(f"策略 {index}: value={result.value:.6f}, gap={result.gap:.2e}")
        best = max(best, result.lower_bound)
    return best


def full_bounds(assemblage: Assemblage, strategies: Sequence[MeasurementStrategy],
                config: Optional[Dict[str, Any]] = None,
                lhs_config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """下界与上界链的汇总（cli bounds 命令使用）"""
    lower = res_lower_bound_full(assemblage, strategies, config, lhs_config)
    chain = upper_bound_full(assemblage, strategies, config)
    return {"lower_bound": lower, "upper_chain": chain.to_dict()}
