"""
LHS 可行性（导向性）判定

在 {σ_λ ⪰ 0} 上最小化 Σ_{x,a} ‖Σ_λ δ_{a,λ(x)} σ_λ − ρ̂^{a,x}‖_F²，
采用带自适应重启的加速投影梯度（FISTA），投影为本征值截断。

残差函数在投影点处的负梯度方向 G = ρ̂ − σ̂ 同时给出导向见证：
对任意 LHS 集合 σ̂ 有 ⟨G, σ̂⟩ ≤ max_λ λ_max(Σ_x G^{x,λ(x)})，
因此 ⟨G, ρ̂⟩ 超过右端即证明 ρ̂ 不在 LHS 集合内。
"""

import logging
from typing import Dict, Optional

import numpy as np

from ...config import LHS_CONFIG
from ...models.assemblage_models import Assemblage
from ...models.lhs_models import FeasibilityReport, LhsModel
from ..linalg import trace_norm
from .projections import project_psd
from .strategies import response_tensor

logger = logging.getLogger(__name__)


class LhsFeasibilitySolver:
    """
    LHS 可行性求解器

    参数:
        config: 覆盖 LHS_CONFIG 的键（feas_tol、feas_max_iter 等）
    """

    def __init__(self, config: Optional[Dict] = None):
        self.config = {**LHS_CONFIG, **(config or {})}

    def _setup(self, assemblage: Assemblage):
        self.target = assemblage.elements
        self.incidence = response_tensor(assemblage.n_inputs, assemblage.n_outcomes, self.config)
        # 正规方程矩阵 N[λ, μ] = #{x : λ(x) = μ(x)}
        overlap = np.einsum('lxa,mxa->lm', self.incidence, self.incidence)
        self.lipschitz = 2.0 * float(np.max(np.linalg.eigvalsh(overlap)))

    def _forward(self, s: np.ndarray) -> np.ndarray:
        return np.einsum('lxa,lij->xaij', self.incidence, s)

    def _objective(self, s: np.ndarray) -> float:
        r = self._forward(s) - self.target
        return float(np.real(np.sum(np.conj(r) * r)))

    def _gradient(self, s: np.ndarray) -> np.ndarray:
        return 2.0 * np.einsum('lxa,xaij->lij', self.incidence, self._forward(s) - self.target)

    def residual(self, s: np.ndarray) -> float:
        """归一化模型与目标的迹范数失配 Σ_{x,a} ‖σ̂ − ρ̂‖₁"""
        total = float(np.real(np.trace(s, axis1=-2, axis2=-1)).sum())
        if total <= 0.0:
            return float('inf')
        diff = self._forward(s / total) - self.target
        return float(sum(trace_norm(diff[x, a]) for x in range(diff.shape[0]) for a in range(diff.shape[1])))

    def witness(self, s: np.ndarray) -> float:
        """⟨G, ρ̂⟩ − max_λ λ_max(Σ_x G^{x,λ(x)})，G = ρ̂ − σ̂(S)"""
        g = self.target - self._forward(s)
        value = float(np.real(np.sum(np.conj(g) * self.target)))
        per_strategy = np.einsum('lxa,xaij->lij', self.incidence, g)
        per_strategy = 0.5 * (per_strategy + np.conj(np.swapaxes(per_strategy, -1, -2)))
        top = float(np.max(np.linalg.eigvalsh(per_strategy)[:, -1]))
        return value - top

    def solve(self, assemblage: Assemblage) -> FeasibilityReport:
        """
        判定集合是否存在 LHS 模型

        返回:
            FeasibilityReport；残差不超过 feas_tol 为 feasible，
            见证值超过 witness_tol 为 infeasible，否则 inconclusive
        """
        self._setup(assemblage)
        feas_tol = self.config['feas_tol']
        n_lambda = self.incidence.shape[0]
        s = np.repeat(assemblage.reduced_matrix(0)[None] / n_lambda, n_lambda, axis=0)
        y = s.copy()
        t = 1.0
        step = 1.0 / self.lipschitz
        f_prev = self._objective(s)
        best = f_prev
        stagnant = 0
        residual = self.residual(s)
        witness = self.witness(s)
        iterations = 0

        for iterations in range(1, self.config['feas_max_iter'] + 1):
            s_next = project_psd(y - step * self._gradient(y))
            f_next = self._objective(s_next)
            if f_next > f_prev:
                # 函数值重启
                t = 1.0
                y = s.copy()
                s_next = project_psd(s - step * self._gradient(s))
                f_next = self._objective(s_next)
            t_next = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))
            y = s_next + ((t - 1.0) / t_next) * (s_next - s)
            s, t, f_prev = s_next, t_next, f_next

            if f_next < best * (1.0 - self.config['stagnation_tol']):
                best = f_next
                stagnant = 0
            else:
                stagnant += 1

            if iterations % self.config['feas_check_every'] == 0:
                residual = self.residual(s)
                if residual <= feas_tol:
                    break
                witness = self.witness(s)
                if witness > self.config['witness_tol']:
                    break
                if stagnant >= self.config['stagnation_patience']:
                    logger.info(f"LHS 可行性求解在第 {iterations} 步停滞（目标 {f_prev:.3e}）")
                    break

        residual = self.residual(s)
        witness = self.witness(s)
        if residual <= feas_tol:
            total = float(np.real(np.trace(s, axis1=-2, axis2=-1)).sum())
            model = LhsModel(assemblage.n_inputs, assemblage.n_outcomes, s / total)
            report = FeasibilityReport("feasible", residual, witness, iterations, model, feas_tol)
        elif witness > self.config['witness_tol']:
            report = FeasibilityReport("infeasible", residual, witness, iterations, None, feas_tol)
        else:
            logger.warning(f"LHS 可行性不确定：残差 {residual:.3e}，见证值 {witness:.3e}，迭代 {iterations}")
            report = FeasibilityReport("inconclusive", residual, witness, iterations, None, feas_tol)
        logger.debug(f"LHS 可行性: {report.status}, residual={residual:.3e}, witness={witness:.3e}")
        return report


def lhs_feasibility(assemblage: Assemblage, config: Optional[Dict] = None) -> FeasibilityReport:
    """判定集合是否不展示导向（存在 LHS 分解）"""
    return LhsFeasibilitySolver(config).solve(assemblage)
