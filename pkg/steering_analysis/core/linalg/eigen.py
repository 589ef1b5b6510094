"""
厄米本征分解与矩阵函数

默认使用 LAPACK（numpy.linalg.eigh），失败时回退到循环复 Jacobi 旋转。
两条路径都对重构残差与酉性残差做检查。
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np

from ...config import LINALG_CONFIG
from ...models.operators import EigenDecomposition, HermitianOperator, as_array
from ..errors import EigenSolverError, MatrixDomainError

logger = logging.getLogger(__name__)


def _residuals(m: np.ndarray, w: np.ndarray, v: np.ndarray) -> Tuple[float, float]:
    """返回 (相对重构残差, 酉性残差)"""
    norm = np.linalg.norm(m)
    recon = np.linalg.norm((v * w) @ v.conj().T - m)
    unitarity = np.linalg.norm(v.conj().T @ v - np.eye(m.shape[0]))
    return float(recon / norm) if norm > 0 else float(recon), float(unitarity)


def jacobi_eigh(m: np.ndarray, max_sweeps: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    循环复 Jacobi 旋转求厄米矩阵本征分解

    参数:
        m: 厄米矩阵
        max_sweeps: 扫描次数上限，默认取 LINALG_CONFIG['jacobi_max_sweeps']

    返回:
        (升序本征值, 按列排列的本征向量)

    异常:
        EigenSolverError: 扫描上限内非对角范数未降到阈值以下
    """
    max_sweeps = max_sweeps or LINALG_CONFIG['jacobi_max_sweeps']
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    threshold = 1e-14 * n * scale if scale > 0 else 0.0

    def off_norm(x: np.ndarray) -> float:
        return float(np.linalg.norm(x - np.diag(np.diag(x))))

    for sweep in range(max_sweeps):
        if off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                r = abs(b)
                if r <= threshold / n:
                    continue
                phase = b / r
                # 先用相位把 2x2 块化为实对称，再做实 Givens 旋转
                theta = 0.5 * np.arctan2(2.0 * r, (a[q, q] - a[p, p]).real)
                c, s = np.cos(theta), np.sin(theta)
                u2 = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=complex)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u2
                a[idx, :] = u2.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ u2
    else:
        residual = off_norm(a)
        if residual > threshold:
            raise EigenSolverError(f"Jacobi 在 {max_sweeps} 次扫描内未收敛", residual)

    w = np.real(np.diag(a))
    order = np.argsort(w, kind='stable')
    return w[order], v[:, order]


def eig_hermitian(m, method: str = "numpy") -> EigenDecomposition:
    """
    厄米本征分解

    参数:
        m: HermitianOperator 或厄米 ndarray
        method: "numpy"（LAPACK，失败时回退 Jacobi）或 "jacobi"

    返回:
        EigenDecomposition，本征值升序

    异常:
        EigenSolverError: 残差超出 LINALG_CONFIG 给出的容差
    """
    a = as_array(m)
    a = 0.5 * (a + a.conj().T)
    if method == "jacobi":
        w, v = jacobi_eigh(a)
    else:
        try:
            w, v = np.linalg.eigh(a)
        except np.linalg.LinAlgError as e:
            logger.warning(f"LAPACK eigh 失败，回退到 Jacobi: {e}")
            w, v = jacobi_eigh(a)

    recon, unitarity = _residuals(a, w, v)
    if recon > LINALG_CONFIG['reconstruction_tol']:
        raise EigenSolverError("本征分解重构残差超限", recon)
    if unitarity > LINALG_CONFIG['unitarity_tol']:
        raise EigenSolverError("本征向量酉性残差超限", unitarity)
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)


def support_mask(eigenvalues: np.ndarray, support_cut: Optional[float] = None) -> np.ndarray:
    """
    数值支撑：本征值大于 support_cut × 最大本征值

    支持批量输入（最后一维为本征值），全部支撑逻辑集中在此处。
    """
    cut = LINALG_CONFIG['support_cut'] if support_cut is None else support_cut
    w = np.asarray(eigenvalues)
    top = np.max(w, axis=-1, keepdims=True) if w.size else np.zeros(w.shape[:-1] + (1,))
    return (w > cut * np.maximum(top, 0.0)) & (w > 0)


def matrix_function(m, f: Callable[[np.ndarray], np.ndarray], support_restricted: bool = False) -> HermitianOperator:
    """
    厄米矩阵函数 V f(diag) V†

    参数:
        m: 厄米算符
        f: 逐元素作用于本征值的实函数（需接受 ndarray）
        support_restricted: 为 True 时支撑外的本征值映射为 0，f 只作用于支撑内

    返回:
        HermitianOperator

    异常:
        MatrixDomainError: f 在保留的本征值上给出非有限值
    """
    decomposition = eig_hermitian(m)
    w, v = decomposition.eigenvalues, decomposition.eigenvectors
    fw = np.zeros_like(w)
    if support_restricted:
        keep = support_mask(w)
    else:
        keep = np.ones_like(w, dtype=bool)
    if np.any(keep):
        with np.errstate(divide='ignore', invalid='ignore'):
            values = np.asarray(f(w[keep]), dtype=float)
        if not np.all(np.isfinite(values)):
            bad = w[keep][~np.isfinite(values)]
            raise MatrixDomainError(f"矩阵函数在本征值 {bad.tolist()} 处无定义")
        fw[keep] = values
    return HermitianOperator((v * fw) @ v.conj().T)
