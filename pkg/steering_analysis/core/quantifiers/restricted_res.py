"""
受限相对熵导向量 R_S^R

R_S^R = sup_{p_X} inf_{σ̂ ∈ LHS} Σ_x p(x) d_x(σ)，d_x(σ) = Σ_a D(ρ̂^{a,x}‖σ̂^{a,x})。
两种求值顺序给出同一个值：
- sup-inf：对 p 做乘性权重上升，内层暖启动 Frank–Wolfe；lo 取各探针的 value − gap；
- inf-sup：对 max_x d_x(σ) 的 log-sum-exp 松弛做退火 Frank–Wolfe；hi 取 max_x d_x(σ̃)。
hi 对任何 σ 都成立（交换顺序后的上界），所以两条路径的结果都是认证区间。
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ...config import LHS_CONFIG, QUANTIFIER_CONFIG
from ...models.assemblage_models import Assemblage
from ...models.lhs_models import InnerSolveResult, LhsModel
from ...models.results import Interval
from ..errors import BracketInversionError, ConfigError
from ..lhs.inner_solver import FrankWolfeSolver
from ..lhs.objective import LinearScalarization, LogSumExpScalarization, SteeringObjective

logger = logging.getLogger(__name__)


def _finite_subgradient(d: np.ndarray) -> np.ndarray:
    """把 inf 分量替换为有限值，避免乘性权重更新出现 nan"""
    finite = np.isfinite(d)
    if np.all(finite):
        return d
    cap = (float(np.max(d[finite])) if np.any(finite) else 0.0) + 1.0
    return np.where(finite, d, cap)


class RestrictedResSolver:
    """
    受限相对熵导向量的区间求解器

    参数:
        config: 覆盖 QUANTIFIER_CONFIG（outer_iters、beta_schedule 等）
        lhs_config: 覆盖 LHS_CONFIG（inner_tol、inner_max_iter 等）
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None, lhs_config: Optional[Dict[str, Any]] = None):
        self.config = {**QUANTIFIER_CONFIG, **(config or {})}
        self.lhs_config = {**LHS_CONFIG, **(lhs_config or {})}
        self._validate_config()

    def _validate_config(self) -> None:
        for key in ('outer_iters', 'probe_inner_iters', 'final_inner_iters', 'smoothing_iters'):
            if int(self.config[key]) < 1:
                raise ConfigError(f"{key} 必须为正整数，实际: {self.config[key]}")
        if float(self.config['mwu_step']) <= 0:
            raise ConfigError(f"mwu_step 必须为正，实际: {self.config['mwu_step']}")
        if not self.config['beta_schedule'] or any(float(b) <= 0 for b in self.config['beta_schedule']):
            raise ConfigError(f"beta_schedule 必须是正数序列，实际: {self.config['beta_schedule']}")
        if float(self.lhs_config['inner_tol']) <= 0:
            raise ConfigError(f"inner_tol 必须为正，实际: {self.lhs_config['inner_tol']}")

    # ---- 单次求解 ----
    def _linear_solve(self, objective: SteeringObjective, p: np.ndarray, warm: Optional[LhsModel],
                      max_iter: int) -> InnerSolveResult:
        solver = FrankWolfeSolver(objective, LinearScalarization(p[:, None]), self.lhs_config)
        return solver.solve(initial=warm, max_iter=max_iter)

    def _smoothing(self, objective: SteeringObjective, warm: Optional[LhsModel],
                   lo: float, hi: float) -> Tuple[float, float, Optional[LhsModel], List[Dict[str, float]]]:
        """
        逐级退火的 log-sum-exp 平滑

        每级结束时：hi ← min(hi, max_x d_x(σ̃))；
        以 q = softmax(β d) 为权重的线性目标与平滑目标梯度相同，
        因此 Σ_x q_x d_x − gap 是 inf_σ Σ q d ≤ R_S^R 的下界。
        """
        stages = []
        for beta in self.config['beta_schedule']:
            scalarization = LogSumExpScalarization(float(beta))
            solver = FrankWolfeSolver(objective, scalarization, self.lhs_config)
            result = solver.solve(initial=warm, max_iter=int(self.config['smoothing_iters']))
            warm = result.model
            d = result.per_input
            if np.all(np.isfinite(d)):
                hi = min(hi, float(np.max(d)))
                q = scalarization.coefficients(d[:, None])[:, 0]
                lo = max(lo, float(np.dot(q, d)) - result.gap)
            stages.append({
                "beta": float(beta),
                "smoothed_value": result.value,
                "gap": result.gap,
                "max_divergence": float(np.max(d)),
                "iterations": result.iterations,
            })
            logger.debug(f"平滑阶段 β={beta}: max d={float(np.max(d)):.6f}, gap={result.gap:.2e}")
        return lo, hi, warm, stages

    def _finish(self, lo: float, hi: float, diagnostics: Dict[str, Any]) -> Interval:
        tol = float(self.config['bracket_tol'])
        if lo > hi + tol:
            diagnostics.update({"lo": lo, "hi": hi})
            raise BracketInversionError(f"区间倒置: lo={lo:.12f} > hi={hi:.12f}", diagnostics)
        return Interval(max(0.0, min(lo, hi)), max(0.0, hi), diagnostics)

    # ---- 两种求值顺序 ----
    def solve(self, assemblage: Assemblage) -> Interval:
        """
        sup-inf 顺序 + 平滑上界

        返回:
            Interval，lo 为所有探针的认证下界最大值，hi 为所有候选 σ 的 max_x d_x 最小值

        异常:
            BracketInversionError: lo 超过 hi 多于 bracket_tol
        """
        objective = SteeringObjective.restricted(assemblage, self.lhs_config)
        n = assemblage.n_inputs
        p = np.full(n, 1.0 / n)
        p_sum = np.zeros(n)
        best_p = p.copy()
        lo, hi = 0.0, float('inf')
        warm: Optional[LhsModel] = None
        probes: List[Dict[str, Any]] = []
        inner_iterations = 0
        outer_iters = int(self.config['outer_iters'])

        for t in range(1, outer_iters + 1):
            result = self._linear_solve(objective, p, warm, int(self.config['probe_inner_iters']))
            inner_iterations += result.iterations
            warm = result.model
            d = result.per_input
            if result.lower_bound > lo:
                lo, best_p = result.lower_bound, p.copy()
            if np.all(np.isfinite(d)):
                hi = min(hi, float(np.max(d)))
            probes.append({"p": p.tolist(), "lower": result.lower_bound})
            p_sum += p
            eta = float(self.config['mwu_step']) / np.sqrt(t)
            g = _finite_subgradient(d)
            weights = p * np.exp(eta * (g - np.max(g)))
            p = weights / weights.sum()

        final = []
        average_p = p_sum / outer_iters
        for candidate in (average_p, best_p):
            result = self._linear_solve(objective, candidate, warm, int(self.config['final_inner_iters']))
            inner_iterations += result.iterations
            warm = result.model
            if result.lower_bound > lo:
                lo, best_p = result.lower_bound, candidate.copy()
            if np.all(np.isfinite(result.per_input)):
                hi = min(hi, float(np.max(result.per_input)))
            final.append({"p": candidate.tolist(), "value": result.value, "gap": result.gap,
                          "converged": result.converged})

        lo, hi, warm, stages = self._smoothing(objective, warm, lo, hi)
        diagnostics = {
            "order": "sup-inf",
            "outer_iterations": outer_iters,
            "inner_iterations": inner_iterations,
            "best_p": best_p.tolist(),
            "average_p": average_p.tolist(),
            "probes": probes,
            "final_solves": final,
            "smoothing": stages,
        }
        interval = self._finish(lo, hi, diagnostics)
        logger.info(f"R_S^R ∈ [{interval.lo:.6f}, {interval.hi:.6f}]（宽度 {interval.width:.2e}）")
        return interval

    def solve_exchanged(self, assemblage: Assemblage) -> Interval:
        """inf-sup 顺序：只用退火平滑，下界来自 softmax 权重处的 Frank–Wolfe 证书"""
        objective = SteeringObjective.restricted(assemblage, self.lhs_config)
        lo, hi, _, stages = self._smoothing(objective, None, 0.0, float('inf'))
        diagnostics = {"order": "inf-sup", "smoothing": stages}
        interval = self._finish(lo, hi, diagnostics)
        logger.info(f"R_S^R（inf-sup）∈ [{interval.lo:.6f}, {interval.hi:.6f}]")
        return interval


def restricted_res(assemblage: Assemblage, config: Optional[Dict[str, Any]] = None,
                   lhs_config: Optional[Dict[str, Any]] = None) -> Interval:
    """受限相对熵导向量（sup-inf 顺序）的认证区间"""
    return RestrictedResSolver(config, lhs_config).solve(assemblage)


def restricted_res_exchanged(assemblage: Assemblage, config: Optional[Dict[str, Any]] = None,
                             lhs_config: Optional[Dict[str, Any]] = None) -> Interval:
    """受限相对熵导向量（inf-sup 顺序）的认证区间"""
    return RestrictedResSolver(config, lhs_config).solve_exchanged(assemblage)
