"""
集合构造

由两体态与测量、由 LHS 模型构造集合，嵌入经典-量子态，
以及混合、退极化、输出重标记等派生操作。
"""

import logging
from typing import Sequence

import numpy as np

from ...models.assemblage_models import Assemblage, CqState, Povm
from ...models.lhs_models import LhsModel
from ...models.operators import DensityOperator, as_array
from ..errors import DimensionMismatchError

logger = logging.getLogger(__name__)


def assemblage_from_state(rho_ab, dims: Sequence[int], povms: Sequence[Povm]) -> Assemblage:
    """
    ρ̂_B^{a,x} = Tr_A[(Λ_a^{(x)} ⊗ I_B) ρ_AB]

    参数:
        rho_ab: 两体密度算符
        dims: (d_A, d_B)
        povms: 每个输入 x 一个 POVM，输出数需一致

    返回:
        Assemblage（构造时检查不变量）

    异常:
        DimensionMismatchError: 维度或输出数不一致
    """
    rho = as_array(rho_ab)
    d_a, d_b = (int(d) for d in dims)
    if rho.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatchError(f"态维度 {rho.shape} 与 dims={dims} 不匹配")
    if not povms:
        raise DimensionMismatchError("至少需要一个输入的 POVM")
    n_outcomes = povms[0].n_outcomes
    for x, povm in enumerate(povms):
        if povm.dim != d_a:
            raise DimensionMismatchError(f"输入 {x} 的 POVM 作用于 {povm.dim} 维，应为 {d_a}")
        if povm.n_outcomes != n_outcomes:
            raise DimensionMismatchError(f"输入 {x} 的输出数 {povm.n_outcomes} ≠ {n_outcomes}，请用零算符补齐")
    effects = np.stack([p.outcomes for p in povms])  # (X, A, dA, dA)
    r = rho.reshape(d_a, d_b, d_a, d_b)
    # Tr_A[(Λ ⊗ I) ρ]_{bc} = Σ_{ij} Λ_{ij} ρ_{j b, i c}
    elements = np.einsum('xaij,jbic->xabc', effects, r)
    return Assemblage(elements)


def lhs_assemblage(model: LhsModel) -> Assemblage:
    """σ̂^{a,x} = Σ_λ δ_{a,λ(x)} σ_λ"""
    return Assemblage(model.assemblage_elements())


def reduced_state(assemblage: Assemblage, x: int = 0) -> DensityOperator:
    """ρ_B = Σ_a ρ̂^{a,x}（无信号保证与 x 无关）"""
    return DensityOperator.from_matrix(assemblage.reduced_matrix(x))


def conditional_probs(assemblage: Assemblage) -> np.ndarray:
    """p(a|x) = Tr ρ̂^{a,x}，行和为 1"""
    return assemblage.conditional_probs()


def _check_distribution(p_x, n_inputs: int) -> np.ndarray:
    p = np.asarray(p_x, dtype=float)
    if p.shape != (n_inputs,):
        raise DimensionMismatchError(f"p_X 长度 {p.shape} 与输入数 {n_inputs} 不一致")
    if np.any(p < -1e-12) or abs(p.sum() - 1.0) > 1e-9:
        raise DimensionMismatchError(f"p_X 不是概率分布: {p.tolist()}")
    return np.clip(p, 0.0, None)


def embed_cq(assemblage: Assemblage, p_x) -> CqState:
    """
    ρ_{XĀB} = Σ_{x,a} p(x) |x⟩⟨x| ⊗ |a⟩⟨a| ⊗ ρ̂^{a,x}

    参数:
        assemblage: 集合
        p_x: 输入分布

    返回:
        寄存器为 (X, A) 的 CqState
    """
    p = _check_distribution(p_x, assemblage.n_inputs)
    blocks = p[:, None, None, None] * assemblage.elements
    return CqState((("X", assemblage.n_inputs), ("A", assemblage.n_outcomes)), blocks)


def mix_assemblages(a1: Assemblage, a2: Assemblage, weight: float) -> Assemblage:
    """weight·a1 + (1 − weight)·a2"""
    if a1.shape != a2.shape:
        raise DimensionMismatchError(f"集合形状不一致: {a1.shape} vs {a2.shape}")
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"混合权重必须在 [0, 1] 内: {weight}")
    return Assemblage(weight * a1.elements + (1.0 - weight) * a2.elements)


def lhs_shadow(assemblage: Assemblage) -> Assemblage:
    """同条件概率的平凡集合 p(a|x)·ρ_B"""
    probs = assemblage.conditional_probs()
    rho_b = assemblage.reduced_matrix(0)
    return Assemblage(probs[:, :, None, None] * rho_b[None, None])


def depolarize(assemblage: Assemblage, weight: float) -> Assemblage:
    """(1 − weight)·ρ̂ + weight·p(a|x)ρ_B"""
    return mix_assemblages(lhs_shadow(assemblage), assemblage, weight)


def relabel_outcomes(assemblage: Assemblage, permutation: Sequence[int]) -> Assemblage:
    """输出重标记：新集合第 a 个元素为原集合第 permutation[a] 个元素"""
    perm = np.asarray(permutation, dtype=int)
    if sorted(perm.tolist()) != list(range(assemblage.n_outcomes)):
        raise DimensionMismatchError(f"非法置换: {perm.tolist()}")
    return Assemblage(assemblage.elements[:, perm])
