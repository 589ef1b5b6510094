"""
熵类泛函

迹范数、冯·诺依曼熵、量子相对熵、条件互信息、偏迹以及 Kraus 映射。
对数一律以 2 为底。
"""

import logging
from typing import Sequence, Tuple

import numpy as np
from scipy.special import entr

from ...config import LINALG_CONFIG
from ...models.operators import ExtendedReal, HermitianOperator, as_array
from ..errors import DimensionMismatchError
from .eigen import eig_hermitian, support_mask

logger = logging.getLogger(__name__)

LN2 = float(np.log(2.0))


def trace_norm(m) -> float:
    """迹范数 ‖M‖₁ = Σ|λᵢ|"""
    a = as_array(m)
    if a.size == 0:
        return 0.0
    return float(np.sum(np.abs(np.linalg.eigvalsh(0.5 * (a + a.conj().T)))))


def entropy_of_spectrum(eigenvalues: np.ndarray) -> float:
    """−Σ λ log₂ λ，只计入支撑内的本征值；支持未归一化谱（分块熵求和）"""
    w = np.asarray(eigenvalues, dtype=float)
    keep = support_mask(w) if w.size else np.zeros(0, dtype=bool)
    return float(np.sum(entr(w[keep])) / LN2)


def von_neumann_entropy(rho) -> float:
    """
    冯·诺依曼熵 H(ρ) = −Tr ρ log₂ ρ

    参数:
        rho: 密度算符

    返回:
        非负实数（比特），数值负值截断为 0
    """
    a = as_array(rho)
    value = entropy_of_spectrum(np.linalg.eigvalsh(0.5 * (a + a.conj().T)))
    return max(0.0, value)


def _relative_entropy_value(rho: np.ndarray, sigma: np.ndarray) -> float:
    """
    Tr ρ(log₂ρ − log₂σ)，支撑不包含时返回 inf

    ρ、σ 可以是未归一化的半正定块（分块相对熵直接求和）。
    """
    if np.real(np.trace(rho)) <= 0.0:
        return 0.0
    w_rho = np.linalg.eigvalsh(rho)
    dec = eig_hermitian(sigma)
    w, v = dec.eigenvalues, dec.eigenvectors
    keep = support_mask(w)
    rho_t = v.conj().T @ rho @ v
    diag = np.real(np.diag(rho_t))
    scale = max(float(np.real(np.trace(rho))), 1e-300)
    off_support = float(np.sum(diag[~keep]))
    if off_support > LINALG_CONFIG['support_cut'] * scale * max(1, len(w)) * 10:
        return float('inf')
    cross = float(np.sum(diag[keep] * np.log2(w[keep])))
    neg_entropy = -entropy_of_spectrum(w_rho)
    return neg_entropy - cross


def relative_entropy(rho, sigma) -> ExtendedReal:
    """
    量子相对熵 D(ρ‖σ)

    参数:
        rho: 密度算符
        sigma: 密度算符

    返回:
        ExtendedReal，supp(ρ) ⊄ supp(σ) 时为 +∞ 标记

    异常:
        DimensionMismatchError: 维度不一致
    """
    r, s = as_array(rho), as_array(sigma)
    if r.shape != s.shape:
        raise DimensionMismatchError(f"相对熵维度不一致: {r.shape} vs {s.shape}")
    value = _relative_entropy_value(r, s)
    if not np.isfinite(value):
        return ExtendedReal.infinity()
    if value < -LINALG_CONFIG['entropy_slack']:
        logger.debug(f"相对熵出现数值负值 {value:.3e}，截断为 0")
    return ExtendedReal.finite(max(0.0, value))


def _check_register_dims(dim: int, dims: Sequence[int]) -> Tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims) or int(np.prod(dims)) != dim:
        raise DimensionMismatchError(f"寄存器维度 {dims} 与矩阵维度 {dim} 不匹配")
    return dims


def partial_trace_array(a: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """partial_trace 的 ndarray 版本，保留寄存器按原顺序排列"""
    dims = _check_register_dims(a.shape[0], dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise DimensionMismatchError(f"保留寄存器 {keep} 超出范围 0..{n - 1}")
    t = a.reshape(dims + dims)
    current = n
    for reg in reversed(range(n)):
        if reg in keep:
            continue
        t = np.trace(t, axis1=reg, axis2=reg + current)
        current -= 1
    kept_dim = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(kept_dim, kept_dim)


def partial_trace(m, dims: Sequence[int], keep: Sequence[int]) -> HermitianOperator:
    """
    偏迹

    参数:
        m: 多体算符
        dims: 各寄存器维度，乘积须等于矩阵维度
        keep: 保留的寄存器下标（空集得到 1×1 的 [Tr m]）

    返回:
        保留寄存器上的 HermitianOperator
    """
    return HermitianOperator(partial_trace_array(as_array(m), dims, keep))


def conditional_mutual_information(rho, dims: Sequence[int]) -> float:
    """
    三体态的条件互信息 I(K;L|M) = H(KM) + H(LM) − H(M) − H(KLM)

    参数:
        rho: 三体密度算符
        dims: (|K|, |L|, |M|)

    返回:
        比特值，数值负值截断为 0
    """
    a = as_array(rho)
    if len(dims) != 3:
        raise DimensionMismatchError(f"条件互信息需要三个寄存器，实际: {dims}")
    dims = _check_register_dims(a.shape[0], dims)
    h_km = von_neumann_entropy(partial_trace_array(a, dims, (0, 2)))
    h_lm = von_neumann_entropy(partial_trace_array(a, dims, (1, 2)))
    h_m = von_neumann_entropy(partial_trace_array(a, dims, (2,)))
    h_klm = von_neumann_entropy(a)
    value = h_km + h_lm - h_m - h_klm
    return max(0.0, value)


def apply_kraus(m: np.ndarray, kraus: Sequence[np.ndarray]) -> np.ndarray:
    """Σ_t K_t M K_t†；m 可带任意前导批量维度"""
    m = np.asarray(m, dtype=complex)
    out = None
    for k in kraus:
        term = k @ m @ k.conj().T
        out = term if out is None else out + term
    return out
