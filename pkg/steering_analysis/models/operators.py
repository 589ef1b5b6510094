"""
算符数据模型

定义厄米算符、密度算符、本征分解以及带 +∞ 标记的扩展实数。
所有数值载荷在校验后设为只读，保证构造后不可变。
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Any, Dict, List, Union

import numpy as np

from ..config import LINALG_CONFIG
from ..core.errors import DimensionMismatchError, InvariantViolationError, NotHermitianError

ArrayLike = Union[np.ndarray, "HermitianOperator", List[List[complex]]]


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def as_array(m: Any) -> np.ndarray:
    """把 HermitianOperator / DensityOperator / 嵌套列表统一成复数 ndarray"""
    if isinstance(m, DensityOperator):
        return m.op.matrix
    if isinstance(m, HermitianOperator):
        return m.matrix
    return np.asarray(m, dtype=complex)


@dataclass(frozen=True)
class HermitianOperator:
    """厄米算符：所有态与集合元素的基本单元"""
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"厄米算符必须是方阵，实际形状: {m.shape}")
        scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
        asym = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
        if asym > LINALG_CONFIG['hermitian_admission_tol'] * scale:
            raise NotHermitianError(f"矩阵偏离厄米性 {asym:.3e}，无法接纳")
        # 入口对称化
        m = 0.5 * (m + m.conj().T)
        object.__setattr__(self, 'matrix', _readonly(m))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @classmethod
    def zeros(cls, dim: int) -> 'HermitianOperator':
        return cls(np.zeros((dim, dim), dtype=complex))

    @classmethod
    def identity(cls, dim: int) -> 'HermitianOperator':
        return cls(np.eye(dim, dtype=complex))

    @classmethod
    def diag(cls, values) -> 'HermitianOperator':
        return cls(np.diag(np.asarray(values, dtype=complex)))

    def __add__(self, other: 'HermitianOperator') -> 'HermitianOperator':
        return HermitianOperator(self.matrix + as_array(other))

    def __sub__(self, other: 'HermitianOperator') -> 'HermitianOperator':
        return HermitianOperator(self.matrix - as_array(other))

    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))


@dataclass(frozen=True)
class DensityOperator:
    """密度算符：半正定且迹为 1"""
    op: HermitianOperator

    def __post_init__(self):
        op = self.op if isinstance(self.op, HermitianOperator) else HermitianOperator(self.op)
        object.__setattr__(self, 'op', op)
        eigenvalues = np.linalg.eigvalsh(op.matrix)
        if eigenvalues.size and eigenvalues[0] < -LINALG_CONFIG['density_psd_tol']:
            raise InvariantViolationError(
                "density_psd", f"最小本征值 {eigenvalues[0]:.3e} 低于 -{LINALG_CONFIG['density_psd_tol']}")
        if abs(op.trace() - 1.0) > LINALG_CONFIG['density_trace_tol']:
            raise InvariantViolationError("density_trace", f"迹为 {op.trace():.12f}，应为 1")

    @classmethod
    def from_matrix(cls, matrix) -> 'DensityOperator':
        return cls(HermitianOperator(matrix))

    @classmethod
    def maximally_mixed(cls, dim: int) -> 'DensityOperator':
        return cls(HermitianOperator(np.eye(dim, dtype=complex) / dim))

    @classmethod
    def pure(cls, vector) -> 'DensityOperator':
        v = np.asarray(vector, dtype=complex)
        v = v / np.linalg.norm(v)
        return cls(HermitianOperator(np.outer(v, v.conj())))

    @property
    def dim(self) -> int:
        return self.op.dim

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix


@dataclass(frozen=True)
class EigenDecomposition:
    """本征分解：本征值升序，本征向量按列排列"""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


@total_ordering
@dataclass(frozen=True)
class ExtendedReal:
    """
    扩展非负实数

    相对熵在支撑不包含时取 +∞，用显式标记而非浮点 inf 表示，
    比较运算因此是显式的。
    """
    value: float = 0.0
    infinite: bool = False

    @classmethod
    def finite(cls, value: float) -> 'ExtendedReal':
        return cls(float(value), False)

    @classmethod
    def infinity(cls) -> 'ExtendedReal':
        return cls(0.0, True)

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    def __float__(self) -> float:
        return float('inf') if self.infinite else self.value

    def _key(self, other):
        if isinstance(other, ExtendedReal):
            return float(other)
        return float(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtendedReal):
            return self.infinite == other.infinite and (self.infinite or self.value == other.value)
        if isinstance(other, (int, float)):
            return float(self) == float(other)
        return NotImplemented

    def __lt__(self, other) -> bool:
        if self.infinite:
            return False
        if isinstance(other, ExtendedReal) and other.infinite:
            return True
        return self.value < self._key(other)

    def __hash__(self) -> int:
        return hash((self.value, self.infinite))

    def to_dict(self) -> Dict[str, Any]:
        return {"value": None if self.infinite else self.value, "infinite": self.infinite}
