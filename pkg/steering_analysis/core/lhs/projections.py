"""
投影算子

概率单纯形、半正定锥以及谱单纯形 {σ_λ ⪰ 0, Σ_λ Tr σ_λ = 1} 上的欧氏投影。
"""

import numpy as np


def project_simplex(v: np.ndarray) -> np.ndarray:
    """向量到概率单纯形的欧氏投影（排序法）"""
    v = np.asarray(v, dtype=float).ravel()
    n = v.size
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, n + 1)
    cond = u - css / ind > 0
    rho = ind[cond][-1]
    theta = css[cond][-1] / rho
    return np.maximum(v - theta, 0.0)


def project_psd(blocks: np.ndarray) -> np.ndarray:
    """批量厄米矩阵到半正定锥的投影（负本征值截断为 0）"""
    h = 0.5 * (blocks + np.conj(np.swapaxes(blocks, -1, -2)))
    w, v = np.linalg.eigh(h)
    w = np.clip(w, 0.0, None)
    return (v * w[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))


def project_spectraplex(blocks: np.ndarray) -> np.ndarray:
    """
    谱单纯形投影

    所有块的本征值拼接后一起投影到单纯形，本征向量保持不变。
    """
    h = 0.5 * (blocks + np.conj(np.swapaxes(blocks, -1, -2)))
    w, v = np.linalg.eigh(h)
    projected = project_simplex(w.ravel()).reshape(w.shape)
    return (v * projected[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))
