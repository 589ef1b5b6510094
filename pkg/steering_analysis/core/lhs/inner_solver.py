"""
内层相对熵最小化

在谱单纯形 {σ_λ ⪰ 0, Σ_λ Tr σ_λ = 1} 上用 Frank–Wolfe 最小化 Φ(d(S))。
线性预言机的极点是某个 λ 槽位上的秩一投影 ψψ†，因此是精确的；
间隙 ⟨∇f, S⟩ − min_λ λ_min(G_λ) 给出 f(S) − inf f 的上界。
每步之后追加一次投影梯度修正步，只在目标下降时接受。
"""

import logging
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

from ...config import LHS_CONFIG
from ...models.assemblage_models import Assemblage
from ...models.lhs_models import InnerSolveResult, LhsModel
from ..errors import DimensionMismatchError, InnerSolverError, SupportError
from .objective import LinearScalarization, SteeringObjective
from .projections import project_spectraplex

logger = logging.getLogger(__name__)

IterateCallback = Callable[[int, np.ndarray, float], None]


def _inner(g: np.ndarray, s: np.ndarray) -> float:
    """Σ_λ Tr(G_λ S_λ)，G、S 均为厄米"""
    return float(np.real(np.sum(np.conj(g) * s)))


class FrankWolfeSolver:
    """
    谱单纯形上的 Frank–Wolfe 求解器

    参数:
        objective: SteeringObjective
        scalarization: LinearScalarization 或 LogSumExpScalarization
        config: 覆盖 LHS_CONFIG 的键
    """

    def __init__(self, objective: SteeringObjective, scalarization, config: Optional[Dict] = None):
        self.objective = objective
        self.scalarization = scalarization
        self.config = {**LHS_CONFIG, **(config or {})}

    # ---- 基本量 ----
    def evaluate(self, s: np.ndarray) -> Tuple[float, np.ndarray]:
        d = self.objective.group_values(s)
        return self.scalarization.value(d), d

    def linear_oracle(self, g: np.ndarray, s: np.ndarray) -> Tuple[float, np.ndarray, float]:
        """
        min_{V 极点} ⟨G, V⟩

        返回:
            (Frank–Wolfe 间隙, 极点 V, min_λ λ_min(G_λ))
        """
        w, v = np.linalg.eigh(g)
        lam = int(np.argmin(w[:, 0]))
        psi = v[lam, :, 0]
        vertex = np.zeros_like(s)
        vertex[lam] = np.outer(psi, psi.conj())
        lowest = float(w[lam, 0])
        gap = max(0.0, _inner(g, s) - lowest)
        return gap, vertex, lowest

    def _start(self, initial: Optional[Union[LhsModel, np.ndarray]]) -> Tuple[np.ndarray, float, np.ndarray]:
        cold = self.objective.initial_point()
        candidates = []
        if initial is not None:
            warm = initial.sigmas if isinstance(initial, LhsModel) else np.asarray(initial, dtype=complex)
            if warm.shape != cold.shape:
                raise DimensionMismatchError(f"暖启动形状 {warm.shape} 应为 {cold.shape}")
            candidates.extend([np.array(warm), 0.99 * warm + 0.01 * cold])
        candidates.append(cold)
        for s in candidates:
            f, d = self.evaluate(s)
            if np.isfinite(f):
                return s, f, d
        raise InnerSolverError("初始点目标值为 +∞（ρ̂ 的支撑不在 ρ_B 的支撑内）")

    # ---- 线搜索与修正步 ----
    def _line_search(self, s: np.ndarray, vertex: np.ndarray) -> float:
        """对单调方向导数二分，返回导数仍为负的区间左端"""
        sigma0 = self.objective.block_sigmas(s)
        delta = self.objective.block_sigmas(vertex) - sigma0

        def derivative(gamma: float) -> float:
            values, derivs = self.objective.line_evaluate(sigma0, delta, gamma)
            mask = self.scalarization.relevant(values)
            if np.any(~np.isfinite(values[mask])) or np.any(~np.isfinite(derivs[mask])):
                return float('inf')
            coeff = self.scalarization.coefficients(values)
            return float(np.sum(np.where(mask, coeff * derivs, 0.0)))

        high = self.config['max_step']
        if derivative(high) <= 0.0:
            return high
        low = 0.0
        for _ in range(self.config['line_search_iter']):
            if high - low <= self.config['line_search_width']:
                break
            mid = 0.5 * (low + high)
            if derivative(mid) < 0.0:
                low = mid
            else:
                high = mid
        return low

    def _corrective(self, s: np.ndarray, f: float, d: np.ndarray, step: float):
        """谱单纯形上的投影梯度步，Armijo 回溯"""
        try:
            g = self.objective.gradient(s, self.scalarization.coefficients(d))
        except SupportError:
            return s, f, d, step
        t = 2.0 * step
        for _ in range(self.config['corrective_backtrack']):
            trial = project_spectraplex(s - t * g)
            f_trial, d_trial = self.evaluate(trial)
            decrease = _inner(g, trial - s)
            if np.isfinite(f_trial) and f_trial <= f + self.config['armijo_c'] * decrease:
                if f_trial < f:
                    return trial, f_trial, d_trial, t
                break
            t *= 0.5
        return s, f, d, max(step * 0.5, 1e-12)

    # ---- 主循环 ----
    def solve(self, initial: Optional[Union[LhsModel, np.ndarray]] = None, max_iter: Optional[int] = None,
              tol: Optional[float] = None, callback: Optional[IterateCallback] = None) -> InnerSolveResult:
        """
        运行 Frank–Wolfe

        参数:
            initial: 暖启动（LhsModel 或 σ_λ 数组），目标为 +∞ 时回退到冷启动
            max_iter: 迭代上限，默认 inner_max_iter
            tol: 间隙阈值，默认 inner_tol
            callback: 每次接受迭代后调用 callback(iteration, S, f)

        返回:
            InnerSolveResult
        """
        max_iter = self.config['inner_max_iter'] if max_iter is None else int(max_iter)
        tol = self.config['inner_tol'] if tol is None else float(tol)
        s, f, d = self._start(initial)
        history = [f]
        step = 1.0
        gap = float('inf')
        gap_current = False
        converged = False
        iterations = 0

        for iterations in range(1, max_iter + 1):
            g = self.objective.gradient(s, self.scalarization.coefficients(d))
            gap, vertex, _ = self.linear_oracle(g, s)
            gap_current = True
            if gap <= tol:
                converged = True
                break
            gamma = self._line_search(s, vertex)
            if gamma <= 0.0:
                logger.debug(f"Frank–Wolfe 第 {iterations} 步线搜索步长为 0，停止")
                break
            s_new = s + gamma * (vertex - s)
            f_new, d_new = self.evaluate(s_new)
            if not np.isfinite(f_new) or f_new > f + self.config['descent_slack']:
                logger.debug(f"Frank–Wolfe 第 {iterations} 步未下降 ({f_new} > {f})，停止")
                break
            s, f, d = s_new, f_new, d_new
            if self.config['corrective_steps']:
                s, f, d, step = self._corrective(s, f, d, step)
            gap_current = False
            history.append(f)
            if callback is not None:
                callback(iterations, s, f)

        if not gap_current:
            g = self.objective.gradient(s, self.scalarization.coefficients(d))
            gap, _, _ = self.linear_oracle(g, s)
            converged = gap <= tol

        if not converged:
            logger.debug(f"Frank–Wolfe 在 {iterations} 次迭代后间隙 {gap:.3e} 仍高于 {tol:.1e}")
        model = LhsModel(self.objective.n_inputs, self.objective.n_outcomes, s)
        per_input = d[:, 0] if d.shape[1] == 1 else d.sum(axis=1)
        return InnerSolveResult(
            value=float(f),
            gap=float(gap),
            model=model,
            iterations=iterations,
            converged=converged,
            per_input=np.array(per_input, dtype=float),
            history=history,
        )


def inner_inf_relative_entropy(assemblage: Assemblage, p_x, config: Optional[Dict] = None,
                               warm_start: Optional[Union[LhsModel, np.ndarray]] = None,
                               max_iter: Optional[int] = None,
                               callback: Optional[IterateCallback] = None) -> InnerSolveResult:
    """
    inf_{σ̂ ∈ LHS} D(ρ_{XĀB} ‖ σ_{XĀB})，输入分布为 p_X

    参数:
        assemblage: 集合
        p_x: 输入分布
        config: 覆盖 LHS_CONFIG
        warm_start: 暖启动模型
        max_iter: 迭代上限
        callback: 迭代回调

    返回:
        InnerSolveResult，value 为上界，value − gap 为下界
    """
    p = np.asarray(p_x, dtype=float)
    if p.shape != (assemblage.n_inputs,) or np.any(p < -1e-12) or abs(p.sum() - 1.0) > 1e-9:
        raise DimensionMismatchError(f"p_X 不是长度 {assemblage.n_inputs} 的概率分布: {p.tolist()}")
    objective = SteeringObjective.restricted(assemblage, config)
    solver = FrankWolfeSolver(objective, LinearScalarization(np.clip(p, 0.0, None)[:, None]), config)
    return solver.solve(initial=warm_start, max_iter=max_iter, callback=callback)
