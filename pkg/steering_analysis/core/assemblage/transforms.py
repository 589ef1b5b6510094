"""
1W-LOCC 变换

一般测量策略把集合变成经典-量子态 ρ_{XĀB'Y}；
受限 1W-LOCC 操作把集合变成新集合。
"""

import logging
from typing import Optional

import numpy as np

from ...models.assemblage_models import (
    Assemblage,
    CqState,
    Instrument,
    MeasurementStrategy,
    RestrictedOneWayLocc,
)
from ..errors import DimensionMismatchError

logger = logging.getLogger(__name__)


def _branch_images(assemblage: Assemblage, instrument: Instrument) -> np.ndarray:
    """K_z(ρ̂^{a,x})，形状 (|Z|, |X|, |A|, d', d')"""
    if instrument.input_dim != assemblage.dim_b:
        raise DimensionMismatchError(
            f"仪器输入维度 {instrument.input_dim} 与 d_B={assemblage.dim_b} 不一致")
    return np.stack([instrument.apply_branch(z, assemblage.elements) for z in range(instrument.n_branches)])


def apply_measurement_strategy(assemblage: Assemblage, strategy: MeasurementStrategy) -> CqState:
    """
    ρ_{XĀB'Y} = Σ p_{X|Y}(x|y) [x] ⊗ [a] ⊗ K_y(ρ̂^{a,x}) ⊗ [y]

    参数:
        assemblage: 集合
        strategy: Bob 的仪器与 Alice 的输入选择

    返回:
        寄存器为 (X, A, Y) 的 CqState，量子维度为仪器输出维度
    """
    if strategy.n_inputs != assemblage.n_inputs:
        raise DimensionMismatchError(
            f"策略输入数 {strategy.n_inputs} 与集合输入数 {assemblage.n_inputs} 不一致")
    images = _branch_images(assemblage, strategy.instrument)  # (Y, X, A, d', d')
    blocks = np.einsum('yx,yxaij->xayij', strategy.p_x_given_y, images)
    registers = (("X", assemblage.n_inputs), ("A", assemblage.n_outcomes), ("Y", strategy.n_branches))
    return CqState(registers, blocks)


def apply_restricted_1wlocc(assemblage: Assemblage, op: RestrictedOneWayLocc,
                            n_final_inputs: Optional[int] = None,
                            n_final_outcomes: Optional[int] = None) -> Assemblage:
    """
    ω̂^{a_f,x_f} = Σ_{a,x,z} p(x|x_f) p(a_f|a,x,x_f,z) K_z(ρ̂^{a,x})

    参数:
        assemblage: 输入集合
        op: 受限 1W-LOCC 操作
        n_final_inputs / n_final_outcomes: 期望的 |X_f|、|A_f|，缺省时取自 op

    返回:
        新集合；构造时重新检查无信号等不变量

    异常:
        DimensionMismatchError: 字母表或维度不一致
        InvariantViolationError: 输出不满足集合不变量
    """
    if (op.n_inputs, op.n_outcomes) != (assemblage.n_inputs, assemblage.n_outcomes):
        raise DimensionMismatchError(
            f"操作作用于 (|X|,|A|)=({op.n_inputs},{op.n_outcomes})，集合为 "
            f"({assemblage.n_inputs},{assemblage.n_outcomes})")
    if n_final_inputs is not None and n_final_inputs != op.n_final_inputs:
        raise DimensionMismatchError(f"|X_f|={n_final_inputs} 与操作 {op.n_final_inputs} 不一致")
    if n_final_outcomes is not None and n_final_outcomes != op.n_final_outcomes:
        raise DimensionMismatchError(f"|A_f|={n_final_outcomes} 与操作 {op.n_final_outcomes} 不一致")
    images = _branch_images(assemblage, op.instrument)  # (Z, X, A, d', d')
    elements = np.einsum('fx,axfzg,zxaij->fgij', op.p_x_given_xf, op.p_af, images)
    return Assemblage(elements)


def compose_restricted(first: RestrictedOneWayLocc, second: RestrictedOneWayLocc) -> RestrictedOneWayLocc:
    """
    先 first 后 second 的复合受限操作

    中间输入 x₁ 在复合中被边缘化：
    p(x|x₂) = Σ_{x₁} p₂(x₁|x₂) p₁(x|x₁)，
    p(a₂|a,x,x₂,z₁z₂) = Σ_{x₁} P(x₁|x,x₂) Σ_{a₁} p₁(a₁|a,x,x₁,z₁) p₂(a₂|a₁,x₁,x₂,z₂)，
    其中 P(x₁|x,x₂) 由贝叶斯公式给出；p(x|x₂)=0 时取 p₂(x₁|x₂)。
    分支按 z = z₁·|Z₂| + z₂ 展平，与 Instrument.compose 一致。
    """
    if (second.n_inputs, second.n_outcomes) != (first.n_final_inputs, first.n_final_outcomes):
        raise DimensionMismatchError("复合操作的中间字母表不一致")
    p1x, p2x = first.p_x_given_xf, second.p_x_given_xf  # (X1, X), (X2, X1)
    p_x = p2x @ p1x  # (X2, X)
    joint = p2x[:, :, None] * p1x[None, :, :]  # (X2, X1, X)
    with np.errstate(divide='ignore', invalid='ignore'):
        posterior = np.where(p_x[:, None, :] > 0, joint / p_x[:, None, :], p2x[:, :, None])  # P(x1|x, x2)
    # p1_af: (A, X, X1, Z1, A1); p2_af: (A1, X1, X2, Z2, A2)
    inner = np.einsum('axpzb,bpqwg->axqpzwg', first.p_af, second.p_af)  # (A, X, X2, X1, Z1, Z2, A2)
    p_af = np.einsum('qpx,axqpzwg->axqzwg', posterior, inner)
    n_a, n_x, n_x2, n_z1, n_z2, n_a2 = p_af.shape
    p_af = p_af.reshape(n_a, n_x, n_x2, n_z1 * n_z2, n_a2)
    instrument = first.instrument.compose(second.instrument)
    return RestrictedOneWayLocc(p_x, p_af, instrument)
