"""
矩阵对数的 Fréchet 导数

在 σ 的本征基下用差商矩阵 φ(a,b) = (ln a − ln b)/(a − b)、φ(a,a) = 1/a
作 Hadamard 积（Daleckii–Krein 公式），结果按 1/ln 2 换算为以 2 为底。
自然对数只出现在本模块。
"""

import numpy as np

from ...config import LINALG_CONFIG
from ...models.operators import HermitianOperator, as_array
from ..errors import DimensionMismatchError, SupportError
from .eigen import eig_hermitian, support_mask

LN2 = float(np.log(2.0))


def log_divided_differences(w: np.ndarray, keep: np.ndarray) -> np.ndarray:
    """
    ln 的一阶差商矩阵

    参数:
        w: 本征值，形状 (..., d)
        keep: 支撑掩码，形状同 w

    返回:
        形状 (..., d, d) 的实矩阵，支撑外的行列置 0
    """
    w = np.asarray(w, dtype=float)
    safe = np.where(keep, w, 1.0)
    a = safe[..., :, None]
    b = safe[..., None, :]
    diff = a - b
    close = np.abs(diff) <= LINALG_CONFIG['frechet_equal_tol'] * np.maximum(a, b)
    denom = np.where(close, 1.0, diff)
    with np.errstate(divide='ignore', invalid='ignore'):
        quotient = np.where(close, 0.0, np.log1p(diff / b) / denom)
    # 近简并时取对数平均的倒数的二阶近似 2/(a+b)
    phi = np.where(close, 2.0 / (a + b), quotient)
    mask = keep[..., :, None] & keep[..., None, :]
    return np.where(mask, phi, 0.0)


def log_frechet_apply(sigma, h) -> HermitianOperator:
    """
    D log₂(σ)[h]：矩阵对数在 σ 处沿 h 的方向导数

    参数:
        sigma: 支撑上正定的厄米算符
        h: 支撑包含于 supp(σ) 的厄米算符

    返回:
        HermitianOperator

    异常:
        SupportError: h 在 σ 的核上有分量
    """
    s, hm = as_array(sigma), as_array(h)
    if s.shape != hm.shape:
        raise DimensionMismatchError(f"σ 与 h 维度不一致: {s.shape} vs {hm.shape}")
    dec = eig_hermitian(s)
    w, v = dec.eigenvalues, dec.eigenvectors
    keep = support_mask(w)
    h_t = v.conj().T @ hm @ v
    outside = ~(keep[:, None] & keep[None, :])
    leak = float(np.max(np.abs(h_t[outside]))) if np.any(outside) else 0.0
    scale = max(1.0, float(np.max(np.abs(h_t))))
    if leak > 1e-9 * scale:
        raise SupportError(f"h 在 σ 的核上有分量 {leak:.3e}")
    phi = log_divided_differences(w, keep)
    return HermitianOperator(v @ (h_t * phi) @ v.conj().T / LN2)
