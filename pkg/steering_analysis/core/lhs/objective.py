"""
分块相对熵目标

LHS 变量为 S = (σ_λ)_λ，形状 (|Λ|, d_B, d_B)。对每个块 (x, a, y)：
    ρ_{xay} = K_y(ρ̂^{a,x}),   σ_{xay}(S) = K_y(Σ_λ δ_{a,λ(x)} σ_λ)
组值 d_{xy}(S) = Σ_a D(ρ_{xay} ‖ σ_{xay}(S))，整体目标由标量化 Φ(d) 给出：
线性 Σ w_{xy} d_{xy}（内层求解），或 log-sum-exp（inf-sup 平滑）。
受限情形 Y 只有一个分支且 K 为恒等。

全程不物化整块 cq 矩阵，只对小块做批量本征分解。
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.special import logsumexp, softmax

from ...config import LHS_CONFIG
from ...models.assemblage_models import Assemblage, Instrument, MeasurementStrategy
from ..errors import DimensionMismatchError, SupportError
from ..linalg import LN2, entropy_of_spectrum, log_divided_differences, support_mask
from .strategies import response_tensor

logger = logging.getLogger(__name__)


def _dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


class LinearScalarization:
    """Φ(d) = Σ w_{xy} d_{xy}；权重为 0 的组不参与"""

    def __init__(self, weights: np.ndarray):
        self.weights = np.asarray(weights, dtype=float)

    def relevant(self, d: np.ndarray) -> np.ndarray:
        return self.weights > 0

    def value(self, d: np.ndarray) -> float:
        mask = self.relevant(d)
        if np.any(~np.isfinite(d[mask])):
            return float('inf')
        return float(np.sum(self.weights[mask] * d[mask]))

    def coefficients(self, d: np.ndarray) -> np.ndarray:
        return self.weights


class LogSumExpScalarization:
    """
    Φ_β(d) = (1/β) ln Σ_x exp(β d_x)

    满足 max_x d_x ≤ Φ_β(d) ≤ max_x d_x + ln|X|/β，梯度系数为 softmax(β d)。
    """

    def __init__(self, beta: float):
        if beta <= 0:
            raise ValueError(f"温度参数 β 必须为正: {beta}")
        self.beta = float(beta)

    def relevant(self, d: np.ndarray) -> np.ndarray:
        return np.ones(d.shape, dtype=bool)

    def value(self, d: np.ndarray) -> float:
        if np.any(~np.isfinite(d)):
            return float('inf')
        return float(logsumexp(self.beta * d) / self.beta)

    def coefficients(self, d: np.ndarray) -> np.ndarray:
        return softmax(self.beta * d.ravel()).reshape(d.shape)

    def slack(self, n_groups: int) -> float:
        return float(np.log(n_groups) / self.beta)


class SteeringObjective:
    """
    相对熵目标的分块计算

    参数:
        assemblage: 原集合（提供 ρ_B 与字母表）
        rho_blocks: 形状 (|X|, |A|, |Y|, d', d') 的块 ρ_{xay}
        instrument: Bob 的仪器；None 表示恒等（|Y| = 1）
        config: 求解配置（strategy_cap 等）
    """

    def __init__(self, assemblage: Assemblage, rho_blocks: np.ndarray,
                 instrument: Optional[Instrument] = None, config: Optional[dict] = None):
        self.config = {**LHS_CONFIG, **(config or {})}
        self.assemblage = assemblage
        self.n_inputs = assemblage.n_inputs
        self.n_outcomes = assemblage.n_outcomes
        self.dim_b = assemblage.dim_b
        self.instrument = None if (instrument is not None and instrument.is_identity()) else instrument
        self.incidence = response_tensor(self.n_inputs, self.n_outcomes, self.config)
        self.rho_blocks = np.asarray(rho_blocks, dtype=complex)
        n_branches = 1 if self.instrument is None else self.instrument.n_branches
        expected = (self.n_inputs, self.n_outcomes, n_branches)
        if self.rho_blocks.shape[:3] != expected:
            raise DimensionMismatchError(f"块形状 {self.rho_blocks.shape[:3]} 应为 {expected}")
        self.rho_traces = np.real(np.trace(self.rho_blocks, axis1=-2, axis2=-1))
        self.active = self.rho_traces > 0.0
        self.neg_entropy = np.zeros(self.rho_traces.shape)
        for idx in zip(*np.nonzero(self.active)):
            self.neg_entropy[idx] = -entropy_of_spectrum(np.linalg.eigvalsh(self.rho_blocks[idx]))
        self.reduced = assemblage.reduced_matrix(0)

    # ---- 构造 ----
    @classmethod
    def restricted(cls, assemblage: Assemblage, config: Optional[dict] = None) -> 'SteeringObjective':
        """受限目标：块为 ρ̂^{a,x} 本身"""
        return cls(assemblage, assemblage.elements[:, :, None], None, config)

    @classmethod
    def channelized(cls, assemblage: Assemblage, strategy: MeasurementStrategy,
                    config: Optional[dict] = None) -> 'SteeringObjective':
        """一般 1W-LOCC 策略下的目标：块为 K_y(ρ̂^{a,x})"""
        instrument = strategy.instrument
        if instrument.input_dim != assemblage.dim_b:
            raise DimensionMismatchError(
                f"仪器输入维度 {instrument.input_dim} 与 d_B={assemblage.dim_b} 不一致")
        if strategy.n_inputs != assemblage.n_inputs:
            raise DimensionMismatchError(
                f"策略输入数 {strategy.n_inputs} 与集合输入数 {assemblage.n_inputs} 不一致")
        if instrument.is_identity():
            return cls.restricted(assemblage, config)
        images = np.stack([instrument.apply_branch(y, assemblage.elements)
                           for y in range(instrument.n_branches)], axis=2)
        return cls(assemblage, images, instrument, config)

    @property
    def n_strategies(self) -> int:
        return int(self.incidence.shape[0])

    @property
    def n_branches(self) -> int:
        return int(self.rho_blocks.shape[2])

    # ---- 线性映射 ----
    def sigma_hat(self, s: np.ndarray) -> np.ndarray:
        """σ̂^{a,x} = Σ_λ δ_{a,λ(x)} σ_λ"""
        return np.einsum('lxa,lij->xaij', self.incidence, s)

    def block_sigmas(self, s: np.ndarray) -> np.ndarray:
        sh = self.sigma_hat(s)
        if self.instrument is None:
            return sh[:, :, None]
        return np.stack([self.instrument.apply_branch(y, sh) for y in range(self.instrument.n_branches)], axis=2)

    def initial_point(self) -> np.ndarray:
        """σ_λ = ρ_B/|Λ|，保证 supp ρ̂^{a,x} ⊆ supp σ̂^{a,x}"""
        return np.repeat(self.reduced[None] / self.n_strategies, self.n_strategies, axis=0)

    # ---- 分块计算 ----
    def _spectral(self, sigmas: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        w, v = np.linalg.eigh(0.5 * (sigmas + _dagger(sigmas)))
        keep = support_mask(w)
        rho_t = _dagger(v) @ self.rho_blocks @ v
        diag = np.real(np.diagonal(rho_t, axis1=-2, axis2=-1))
        off_support = np.sum(np.where(keep, 0.0, np.abs(diag)), axis=-1)
        leak = self.active & (off_support > self.config.get('support_leak_tol', 1e-9) * np.maximum(self.rho_traces, 1e-300))
        return w, v, keep, rho_t, leak

    def _values_from_spectrum(self, w, keep, rho_t, leak) -> np.ndarray:
        diag = np.real(np.diagonal(rho_t, axis1=-2, axis2=-1))
        logw = np.where(keep, np.log2(np.where(keep, w, 1.0)), 0.0)
        cross = np.sum(np.where(keep, diag * logw, 0.0), axis=-1)
        values = np.where(self.active, self.neg_entropy - cross, 0.0)
        return np.where(leak, np.inf, values)

    def block_values(self, s: np.ndarray) -> np.ndarray:
        """各块 D(ρ_{xay}‖σ_{xay})，形状 (|X|, |A|, |Y|)，支撑不包含处为 inf"""
        w, v, keep, rho_t, leak = self._spectral(self.block_sigmas(s))
        return self._values_from_spectrum(w, keep, rho_t, leak)

    def group_values(self, s: np.ndarray) -> np.ndarray:
        """d_{xy} = Σ_a D(ρ_{xay}‖σ_{xay})，形状 (|X|, |Y|)"""
        return self.block_values(s).sum(axis=1)

    def gradient(self, s: np.ndarray, coefficients: np.ndarray) -> np.ndarray:
        """
        ∇_S Σ_{xy} c_{xy} d_{xy}(S)

        G_λ = −Σ_{x,a,y} c_{xy} δ_{a,λ(x)} K_y†(D log₂(σ_{xay})[ρ_{xay}])

        异常:
            SupportError: 某个参与的块支撑不包含
        """
        c = np.asarray(coefficients, dtype=float)
        w, v, keep, rho_t, leak = self._spectral(self.block_sigmas(s))
        mask = self.active & (c[:, None, :] > 0)
        if np.any(leak & mask):
            raise SupportError("梯度计算时 ρ 块超出 σ 块支撑")
        phi = log_divided_differences(w, keep)
        frechet = v @ (rho_t * phi) @ _dagger(v) / LN2
        frechet = np.where(mask[..., None, None], frechet, 0.0)
        weighted = c[:, None, :, None, None] * frechet
        if self.instrument is None:
            h = weighted[:, :, 0]
        else:
            h = sum(self.instrument.adjoint_branch(y, weighted[:, :, y]) for y in range(self.instrument.n_branches))
        g = -np.einsum('lxa,xaij->lij', self.incidence, h)
        return 0.5 * (g + _dagger(g))

    def line_evaluate(self, sigma0: np.ndarray, delta: np.ndarray, gamma: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        沿 σ(γ) = σ₀ + γΔ 求组值与组方向导数

        返回:
            (d(γ), d'(γ))，形状均为 (|X|, |Y|)；支撑不包含的组为 inf
        """
        w, v, keep, rho_t, leak = self._spectral(sigma0 + gamma * delta)
        values = self._values_from_spectrum(w, keep, rho_t, leak)
        phi = log_divided_differences(w, keep)
        delta_t = _dagger(v) @ delta @ v
        deriv = -np.real(np.sum(np.conj(rho_t) * phi * delta_t, axis=(-2, -1))) / LN2
        deriv = np.where(self.active, deriv, 0.0)
        deriv = np.where(leak, np.inf, deriv)
        return values.sum(axis=1), deriv.sum(axis=1)
