"""
集合的迹距离

Δ^R（受限）有闭式解：对 p_X 的线性函数取上确界落在顶点上。
一般 Δ 只给出下界：在给定策略或随机仪器上取最大。
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ...models.assemblage_models import Assemblage, Instrument, MeasurementStrategy
from ..assemblage.transforms import apply_measurement_strategy
from ..errors import DimensionMismatchError

logger = logging.getLogger(__name__)


def _batched_trace_norm(blocks: np.ndarray) -> np.ndarray:
    h = 0.5 * (blocks + np.conj(np.swapaxes(blocks, -1, -2)))
    return np.sum(np.abs(np.linalg.eigvalsh(h)), axis=-1)


def _check_shapes(a1: Assemblage, a2: Assemblage) -> None:
    if a1.shape != a2.shape:
        raise DimensionMismatchError(f"集合形状不一致: {a1.shape} vs {a2.shape}")


def per_input_distances(a1: Assemblage, a2: Assemblage) -> np.ndarray:
    """Σ_a ‖ρ̂^{a,x} − θ̂^{a,x}‖₁，形状 (|X|,)"""
    _check_shapes(a1, a2)
    return _batched_trace_norm(a1.elements - a2.elements).sum(axis=1)


def restricted_trace_distance(a1: Assemblage, a2: Assemblage) -> float:
    """
    Δ^R(ρ̂, θ̂) = ½ max_x Σ_a ‖ρ̂^{a,x} − θ̂^{a,x}‖₁

    返回:
        [0, 1] 内的实数
    """
    value = 0.5 * float(np.max(per_input_distances(a1, a2)))
    return min(1.0, max(0.0, value))


def strategy_trace_distance(a1: Assemblage, a2: Assemblage, strategy: MeasurementStrategy) -> float:
    """½‖ρ_{XĀB'Y} − θ_{XĀB'Y}‖₁"""
    _check_shapes(a1, a2)
    return apply_measurement_strategy(a1, strategy).trace_distance(apply_measurement_strategy(a2, strategy))


def trace_distance_lower_bound(a1: Assemblage, a2: Assemblage,
                               strategies: Sequence[MeasurementStrategy] = ()) -> float:
    """
    Δ(ρ̂, θ̂) 的下界：给定策略与平凡策略（均匀 p_X、恒等仪器）上的最大值
    """
    _check_shapes(a1, a2)
    trivial = MeasurementStrategy.trivial(a1.dim_b, np.full(a1.n_inputs, 1.0 / a1.n_inputs))
    return max(strategy_trace_distance(a1, a2, s) for s in (trivial, *strategies))


def best_response_distance(a1: Assemblage, a2: Assemblage,
                           instrument: Instrument) -> Tuple[float, MeasurementStrategy]:
    """
    固定仪器时对 p_{X|Y} 精确优化

    目标对 p_{X|Y}(·|y) 线性，每个 y 取使 Σ_a ‖K_y(ρ̂^{a,x} − θ̂^{a,x})‖₁ 最大的 x。
    """
    _check_shapes(a1, a2)
    diff = a1.elements - a2.elements
    scores = np.stack([_batched_trace_norm(instrument.apply_branch(y, diff)).sum(axis=1)
                       for y in range(instrument.n_branches)])  # (Y, X)
    choice = np.argmax(scores, axis=1)
    p = np.zeros((instrument.n_branches, a1.n_inputs))
    p[np.arange(instrument.n_branches), choice] = 1.0
    value = 0.5 * float(scores[np.arange(instrument.n_branches), choice].sum())
    return value, MeasurementStrategy(p, instrument)


def seesaw_trace_distance(a1: Assemblage, a2: Assemblage, n_rounds: int = 10,
                          rng: Optional[np.random.Generator] = None,
                          max_branches: int = 3) -> Tuple[float, MeasurementStrategy]:
    """
    Δ 的随机搜索下界

    从恒等仪器（此时等于 Δ^R）出发，每轮抽取一个随机仪器并对 p_{X|Y} 做精确最优响应。

    参数:
        n_rounds: 随机仪器个数
        rng: 随机数发生器（决定结果）
        max_branches: 随机仪器的最大分支数

    返回:
        (下界, 达到该下界的策略)
    """
    from ...pipeline.instance_generator import make_rng, random_instrument

    _check_shapes(a1, a2)
    if n_rounds < 0:
        raise ValueError(f"轮数不能为负: {n_rounds}")
    rng = rng if rng is not None else make_rng(0)
    best_value, best_strategy = best_response_distance(a1, a2, Instrument.identity(a1.dim_b))
    for round_index in range(n_rounds):
        n_branches = int(rng.integers(2, max_branches + 1))
        instrument = random_instrument(a1.dim_b, a1.dim_b, n_branches, rng)
        value, strategy = best_response_distance(a1, a2, instrument)
        if value > best_value:
            best_value, best_strategy = value, strategy
            logger.debug(f"随机搜索第 {round_index} 轮改进下界至 {value:.6f}")
    return min(1.0, best_value), best_strategy
