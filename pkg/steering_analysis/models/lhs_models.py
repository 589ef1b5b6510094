"""
LHS 模型数据定义

确定性策略 λ: X → A 按字典序隐式编号；权重 p_Λ(λ) 吸收进亚归一化态 σ_λ。
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..config import ASSEMBLAGE_CONFIG
from ..core.errors import DimensionMismatchError, InvariantViolationError


def response_table(n_inputs: int, n_outcomes: int) -> np.ndarray:
    """
    所有确定性策略的响应表

    返回:
        整数数组，形状 (|A|^|X|, |X|)，第 λ 行为 (λ(0), ..., λ(|X|-1))，按字典序排列
    """
    rows = list(itertools.product(range(n_outcomes), repeat=n_inputs))
    return np.array(rows, dtype=int).reshape(len(rows), n_inputs)


def response_tensor(n_inputs: int, n_outcomes: int) -> np.ndarray:
    """D[λ, x, a] = δ_{a, λ(x)}，形状 (|Λ|, |X|, |A|)"""
    table = response_table(n_inputs, n_outcomes)
    return (table[:, :, None] == np.arange(n_outcomes)[None, None, :]).astype(float)


@dataclass(frozen=True)
class DeterministicStrategy:
    """确定性策略：response[x] = λ(x)"""
    response: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'response', tuple(int(a) for a in self.response))
        if any(a < 0 for a in self.response):
            raise InvariantViolationError("strategy_total", f"策略输出非法: {self.response}")

    def __call__(self, x: int) -> int:
        return self.response[x]

    @property
    def n_inputs(self) -> int:
        return len(self.response)

    def index(self, n_outcomes: int) -> int:
        """在字典序枚举中的编号"""
        idx = 0
        for a in self.response:
            if a >= n_outcomes:
                raise DimensionMismatchError(f"输出 {a} 超出字母表大小 {n_outcomes}")
            idx = idx * n_outcomes + a
        return idx


@dataclass(frozen=True)
class LhsModel:
    """
    LHS 模型

    sigmas 形状为 (|A|^|X|, d_B, d_B)，第 λ 个块为 p_Λ(λ)·ρ_B^λ。
    """
    n_inputs: int
    n_outcomes: int
    sigmas: np.ndarray
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        s = np.array(self.sigmas, dtype=complex)
        n_lambda = self.n_outcomes ** self.n_inputs
        if s.ndim != 3 or s.shape[0] != n_lambda or s.shape[1] != s.shape[2]:
            raise DimensionMismatchError(
                f"LHS 模型需要 {n_lambda} 个方阵块，实际形状: {s.shape}")
        s = 0.5 * (s + np.conj(np.swapaxes(s, -1, -2)))
        s.setflags(write=False)
        object.__setattr__(self, 'sigmas', s)
        if self.validate:
            self.check_invariants()

    @property
    def n_strategies(self) -> int:
        return int(self.sigmas.shape[0])

    @property
    def dim_b(self) -> int:
        return int(self.sigmas.shape[1])

    def check_invariants(self) -> None:
        min_eig = float(np.min(np.linalg.eigvalsh(self.sigmas)))
        if min_eig < -ASSEMBLAGE_CONFIG['psd_tol']:
            raise InvariantViolationError("lhs_psd", f"σ_λ 最小本征值 {min_eig:.3e}")
        total = self.total_trace()
        if abs(total - 1.0) > ASSEMBLAGE_CONFIG['trace_tol']:
            raise InvariantViolationError("lhs_trace", f"Σ_λ Tr σ_λ = {total:.12f}")

    def total_trace(self) -> float:
        return float(np.real(np.trace(self.sigmas, axis1=-2, axis2=-1)).sum())

    def strategies(self) -> List[DeterministicStrategy]:
        return [DeterministicStrategy(tuple(row)) for row in response_table(self.n_inputs, self.n_outcomes)]

    def assemblage_elements(self) -> np.ndarray:
        """σ̂^{a,x} = Σ_λ δ_{a,λ(x)} σ_λ，形状 (|X|, |A|, d, d)"""
        d = response_tensor(self.n_inputs, self.n_outcomes)
        return np.einsum('lxa,lij->xaij', d, self.sigmas)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "n_inputs": self.n_inputs,
            "n_outcomes": self.n_outcomes,
            "dim_b": self.dim_b,
            "strategies": [list(r) for r in response_table(self.n_inputs, self.n_outcomes).tolist()],
            "sigmas": [[[[float(z.real), float(z.imag)] for z in row] for row in block] for block in self.sigmas],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LhsModel':
        """从字典创建实例"""
        sigmas = np.array(
            [[[complex(re, im) for re, im in row] for row in block] for block in data.get('sigmas', [])],
            dtype=complex,
        )
        return cls(int(data['n_inputs']), int(data['n_outcomes']), sigmas)


@dataclass
class FeasibilityReport:
    """
    LHS 可行性判定结果

    status 取 feasible / infeasible / inconclusive。
    witness_value > 0 表示找到了分离泛函（导向见证）。
    """
    status: str
    residual: float
    witness_value: float
    iterations: int
    model: Optional[LhsModel] = None
    feas_tol: float = 1e-6

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"

    @property
    def inconclusive(self) -> bool:
        return self.status == "inconclusive"

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "status": self.status,
            "feasible": self.feasible,
            "residual": self.residual,
            "witness_value": self.witness_value,
            "iterations": self.iterations,
            "feas_tol": self.feas_tol,
        }


@dataclass
class InnerSolveResult:
    """
    内层 inf_{LHS} 相对熵求解结果

    value 为迭代点目标值（上界），value − gap 为下界。
    per_input 给出 d_x(σ) = Σ_a D(ρ̂^{a,x}‖σ̂^{a,x})，用于外层次梯度。
    """
    value: float
    gap: float
    model: LhsModel
    iterations: int
    converged: bool = False
    per_input: Optional[np.ndarray] = None
    history: List[float] = field(default_factory=list)

    @property
    def lower_bound(self) -> float:
        return max(0.0, self.value - self.gap)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "value": self.value,
            "gap": self.gap,
            "lower_bound": self.lower_bound,
            "iterations": self.iterations,
            "converged": self.converged,
        }
