"""
集合（assemblage）相关数据模型

定义集合、POVM、量子仪器、经典-量子态以及两类 1W-LOCC 策略。
下标 x, a, y, z 一律从 0 开始。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from ..config import ASSEMBLAGE_CONFIG
from ..core.errors import DimensionMismatchError, InvariantViolationError
from .operators import HermitianOperator


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _hermitize(blocks: np.ndarray) -> np.ndarray:
    return 0.5 * (blocks + np.conj(np.swapaxes(blocks, -1, -2)))


def _batched_trace_norm(blocks: np.ndarray) -> np.ndarray:
    return np.sum(np.abs(np.linalg.eigvalsh(_hermitize(blocks))), axis=-1)


def _check_stochastic(matrix: np.ndarray, name: str, tol: Optional[float] = None) -> np.ndarray:
    """校验最后一维为概率分布"""
    tol = ASSEMBLAGE_CONFIG['stochastic_tol'] if tol is None else tol
    m = np.asarray(matrix, dtype=float)
    if np.any(m < -tol):
        raise InvariantViolationError("stochastic_nonnegative", f"{name} 含负概率 {m.min():.3e}")
    sums = m.sum(axis=-1)
    if m.size and np.max(np.abs(sums - 1.0)) > max(tol, 1e-12) * 10 * m.shape[-1]:
        raise InvariantViolationError("stochastic_normalized", f"{name} 未归一化，最大偏差 {np.max(np.abs(sums - 1.0)):.3e}")
    return _freeze(np.clip(m, 0.0, None))


@dataclass(frozen=True)
class Assemblage:
    """
    集合 {ρ̂_B^{a,x}}

    elements 形状为 (|X|, |A|, d_B, d_B)，零元素显式保留。
    构造时检查半正定、无信号与归一化三个不变量。
    """
    elements: np.ndarray
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        e = np.array(self.elements, dtype=complex)
        if e.ndim != 4 or e.shape[2] != e.shape[3]:
            raise DimensionMismatchError(f"集合元素形状应为 (X, A, d, d)，实际: {e.shape}")
        e = _hermitize(e)
        object.__setattr__(self, 'elements', _freeze(e))
        if self.validate:
            self.check_invariants()

    # ---- 形状 ----
    @property
    def n_inputs(self) -> int:
        return int(self.elements.shape[0])

    @property
    def n_outcomes(self) -> int:
        return int(self.elements.shape[1])

    @property
    def dim_b(self) -> int:
        return int(self.elements.shape[2])

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.n_inputs, self.n_outcomes, self.dim_b

    def element(self, x: int, a: int) -> HermitianOperator:
        return HermitianOperator(self.elements[x, a])

    # ---- 不变量 ----
    def no_signaling_residual(self) -> float:
        """max_{x,x'} ‖Σ_a ρ̂^{a,x} − Σ_a ρ̂^{a,x'}‖₁"""
        marginals = self.elements.sum(axis=1)
        if self.n_inputs < 2:
            return 0.0
        diffs = marginals[:, None] - marginals[None, :]
        return float(np.max(_batched_trace_norm(diffs)))

    def check_invariants(self) -> None:
        """
        检查集合不变量

        异常:
            InvariantViolationError: invariant 字段为 psd / no_signaling / normalization
        """
        min_eig = float(np.min(np.linalg.eigvalsh(self.elements))) if self.elements.size else 0.0
        if min_eig < -ASSEMBLAGE_CONFIG['psd_tol']:
            raise InvariantViolationError("psd", f"集合元素最小本征值 {min_eig:.3e}")
        residual = self.no_signaling_residual()
        if residual > ASSEMBLAGE_CONFIG['no_signaling_tol']:
            raise InvariantViolationError("no_signaling", f"无信号残差 {residual:.3e}")
        traces = np.real(np.trace(self.elements.sum(axis=1), axis1=-2, axis2=-1))
        worst = float(np.max(np.abs(traces - 1.0)))
        if worst > ASSEMBLAGE_CONFIG['trace_tol']:
            raise InvariantViolationError("normalization", f"Tr Σ_a ρ̂^(a,x) 偏离 1 达 {worst:.3e}")

    # ---- 派生量 ----
    def reduced_matrix(self, x: int = 0) -> np.ndarray:
        return self.elements[x].sum(axis=0)

    def conditional_probs(self) -> np.ndarray:
        """p(a|x) = Tr ρ̂^{a,x}，形状 (|X|, |A|)"""
        return np.clip(np.real(np.trace(self.elements, axis1=-2, axis2=-1)), 0.0, None)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典（与 JSON 文档同构）"""
        return {
            "n_inputs": self.n_inputs,
            "n_outcomes": self.n_outcomes,
            "dim_b": self.dim_b,
            "elements": [
                [[[[float(z.real), float(z.imag)] for z in row] for row in self.elements[x, a]]
                 for a in range(self.n_outcomes)]
                for x in range(self.n_inputs)
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Assemblage':
        """从字典创建实例"""
        raw = data.get('elements', [])
        elements = np.array(
            [[[[complex(re, im) for re, im in row] for row in mat] for mat in per_x] for per_x in raw],
            dtype=complex,
        )
        assemblage = cls(elements)
        expected = (data.get('n_inputs'), data.get('n_outcomes'), data.get('dim_b'))
        if None not in expected and tuple(expected) != assemblage.shape:
            raise DimensionMismatchError(f"文档声明形状 {expected} 与元素形状 {assemblage.shape} 不一致")
        return assemblage


@dataclass(frozen=True)
class Povm:
    """POVM {Λ_a}：各元素半正定且求和为单位阵"""
    outcomes: np.ndarray

    def __post_init__(self):
        ops = _hermitize(np.array(self.outcomes, dtype=complex))
        if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
            raise DimensionMismatchError(f"POVM 形状应为 (A, d, d)，实际: {ops.shape}")
        tol = ASSEMBLAGE_CONFIG['povm_tol']
        if float(np.min(np.linalg.eigvalsh(ops))) < -tol:
            raise InvariantViolationError("povm_psd", "POVM 元素非半正定")
        completeness = float(np.max(np.abs(ops.sum(axis=0) - np.eye(ops.shape[1]))))
        if completeness > tol:
            raise InvariantViolationError("povm_completeness", f"Σ_a Λ_a 偏离单位阵 {completeness:.3e}")
        object.__setattr__(self, 'outcomes', _freeze(ops))

    @property
    def dim(self) -> int:
        return int(self.outcomes.shape[1])

    @property
    def n_outcomes(self) -> int:
        return int(self.outcomes.shape[0])

    @classmethod
    def projective(cls, basis: np.ndarray) -> 'Povm':
        """由酉矩阵的列向量构造投影测量"""
        b = np.asarray(basis, dtype=complex)
        return cls(np.array([np.outer(b[:, i], b[:, i].conj()) for i in range(b.shape[1])]))

    @classmethod
    def trivial(cls, dim: int) -> 'Povm':
        return cls(np.eye(dim, dtype=complex)[None])


@dataclass(frozen=True)
class Instrument:
    """
    量子仪器 {K_z}：分支 z 的 Kraus 算符列表

    branches[z][t] 形状为 (output_dim, input_dim)。
    求和映射迹保持，各分支迹不增。
    """
    branches: Tuple[Tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        if not self.branches:
            raise DimensionMismatchError("仪器至少需要一个分支")
        frozen = []
        shape = None
        for branch in self.branches:
            ops = []
            for k in branch:
                k = np.array(k, dtype=complex)
                if k.ndim != 2 or (shape is not None and k.shape != shape):
                    raise DimensionMismatchError(f"Kraus 算符形状不一致: {k.shape} vs {shape}")
                shape = k.shape
                ops.append(_freeze(k))
            if not ops:
                raise DimensionMismatchError("仪器分支不能为空")
            frozen.append(tuple(ops))
        object.__setattr__(self, 'branches', tuple(frozen))
        tol = ASSEMBLAGE_CONFIG['instrument_tol']
        total = np.zeros((self.input_dim, self.input_dim), dtype=complex)
        for z in range(self.n_branches):
            effect = self.branch_effect(z)
            if float(np.max(np.linalg.eigvalsh(effect))) > 1.0 + tol:
                raise InvariantViolationError("instrument_branch_trace", f"分支 {z} 迹增加")
            total += effect
        deviation = float(np.max(np.abs(total - np.eye(self.input_dim))))
        if deviation > tol:
            raise InvariantViolationError("instrument_trace_preserving", f"Σ K†K 偏离单位阵 {deviation:.3e}")

    @property
    def n_branches(self) -> int:
        return len(self.branches)

    @property
    def input_dim(self) -> int:
        return int(self.branches[0][0].shape[1])

    @property
    def output_dim(self) -> int:
        return int(self.branches[0][0].shape[0])

    def branch_effect(self, z: int) -> np.ndarray:
        """Σ_t K_{z,t}† K_{z,t}"""
        return sum(k.conj().T @ k for k in self.branches[z])

    def apply_branch(self, z: int, m: np.ndarray) -> np.ndarray:
        """K_z(m)，m 可带前导批量维度"""
        out = None
        for k in self.branches[z]:
            term = k @ m @ k.conj().T
            out = term if out is None else out + term
        return out

    def adjoint_branch(self, z: int, m: np.ndarray) -> np.ndarray:
        """K_z†(m)"""
        out = None
        for k in self.branches[z]:
            term = k.conj().T @ m @ k
            out = term if out is None else out + term
        return out

    def apply_sum(self, m: np.ndarray) -> np.ndarray:
        return sum(self.apply_branch(z, m) for z in range(self.n_branches))

    def is_identity(self) -> bool:
        return (self.n_branches == 1 and len(self.branches[0]) == 1
                and self.input_dim == self.output_dim
                and np.allclose(self.branches[0][0], np.eye(self.input_dim), atol=1e-14))

    def compose(self, after: 'Instrument') -> 'Instrument':
        """先作用 self 再作用 after，分支按 z = z1·|Z2| + z2 展平"""
        if after.input_dim != self.output_dim:
            raise DimensionMismatchError(f"仪器复合维度不匹配: {self.output_dim} → {after.input_dim}")
        branches = []
        for b1 in self.branches:
            for b2 in after.branches:
                branches.append(tuple(k2 @ k1 for k1 in b1 for k2 in b2))
        return Instrument(tuple(branches))

    @classmethod
    def identity(cls, dim: int) -> 'Instrument':
        return cls(((np.eye(dim, dtype=complex),),))

    @classmethod
    def trace_out(cls, dim: int) -> 'Instrument':
        """单分支，Kraus 为计算基的行向量 ⟨i|，输出维度 1"""
        basis = np.eye(dim, dtype=complex)
        return cls((tuple(basis[i:i + 1, :] for i in range(dim)),))

    @classmethod
    def from_kraus_lists(cls, branches: Sequence[Sequence[np.ndarray]]) -> 'Instrument':
        return cls(tuple(tuple(np.asarray(k, dtype=complex) for k in b) for b in branches))


@dataclass(frozen=True)
class CqState:
    """
    经典-量子态

    registers 为 (名称, 字母表大小) 的元组；blocks 形状为 (*sizes, d, d)。
    经典寄存器以显式块下标存储，不拼成整块大矩阵。
    """
    registers: Tuple[Tuple[str, int], ...]
    blocks: np.ndarray

    def __post_init__(self):
        b = _hermitize(np.array(self.blocks, dtype=complex))
        sizes = tuple(int(s) for _, s in self.registers)
        if b.shape[:-2] != sizes or b.shape[-1] != b.shape[-2]:
            raise DimensionMismatchError(f"cq 块形状 {b.shape} 与寄存器 {self.registers} 不匹配")
        object.__setattr__(self, 'registers', tuple((str(n), int(s)) for n, s in self.registers))
        object.__setattr__(self, 'blocks', _freeze(b))
        if b.size and float(np.min(np.linalg.eigvalsh(b.reshape(-1, b.shape[-1], b.shape[-1])))) < -1e-9:
            raise InvariantViolationError("cq_psd", "cq 态块非半正定")
        if abs(self.trace() - 1.0) > 1e-9:
            raise InvariantViolationError("cq_trace", f"cq 态迹为 {self.trace():.12f}")

    @property
    def quantum_dim(self) -> int:
        return int(self.blocks.shape[-1])

    @property
    def register_names(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.registers)

    def trace(self) -> float:
        return float(np.real(np.trace(self.blocks, axis1=-2, axis2=-1)).sum())

    def flat_blocks(self) -> np.ndarray:
        d = self.quantum_dim
        return self.blocks.reshape(-1, d, d)

    def classical_distribution(self) -> np.ndarray:
        return np.real(np.trace(self.blocks, axis1=-2, axis2=-1))

    def quantum_marginal(self) -> np.ndarray:
        return self.flat_blocks().sum(axis=0)

    def marginal(self, keep: Sequence[str], keep_quantum: bool = True) -> 'CqState':
        """
        对未保留的经典寄存器求和；keep_quantum=False 时再对量子部分求迹（量子维度变为 1）
        """
        names = self.register_names
        unknown = [k for k in keep if k not in names]
        if unknown:
            raise DimensionMismatchError(f"未知经典寄存器: {unknown}")
        drop = tuple(i for i, n in enumerate(names) if n not in keep)
        blocks = self.blocks.sum(axis=drop) if drop else self.blocks
        registers = tuple(r for r in self.registers if r[0] in keep)
        if not keep_quantum:
            traces = np.trace(blocks, axis1=-2, axis2=-1)
            blocks = traces[..., None, None]
        return CqState(registers, blocks)

    def entropy(self) -> float:
        """H(cq) = H(p) + Σ p H(块/p)，即所有块本征值一起求熵"""
        from ..core.linalg import entropy_of_spectrum

        return max(0.0, entropy_of_spectrum(np.linalg.eigvalsh(self.flat_blocks()).ravel()))

    def relative_entropy(self, other: 'CqState'):
        """
        分块相对熵 Σ_blocks Tr ρ_b(log ρ_b − log σ_b)

        返回:
            ExtendedReal，任一块支撑不包含即为 +∞
        """
        from ..core.linalg.entropy import _relative_entropy_value
        from .operators import ExtendedReal

        if self.blocks.shape != other.blocks.shape:
            raise DimensionMismatchError(f"cq 态形状不一致: {self.blocks.shape} vs {other.blocks.shape}")
        total = 0.0
        for rho, sigma in zip(self.flat_blocks(), other.flat_blocks()):
            value = _relative_entropy_value(rho, sigma)
            if not np.isfinite(value):
                return ExtendedReal.infinity()
            total += value
        return ExtendedReal.finite(max(0.0, total))

    def trace_distance(self, other: 'CqState') -> float:
        """½‖ρ − σ‖₁，对分块对角矩阵逐块求和"""
        if self.blocks.shape != other.blocks.shape:
            raise DimensionMismatchError(f"cq 态形状不一致: {self.blocks.shape} vs {other.blocks.shape}")
        return 0.5 * float(np.sum(_batched_trace_norm(self.flat_blocks() - other.flat_blocks())))

    def to_matrix(self) -> np.ndarray:
        """物化为分块对角大矩阵（经典寄存器按字典序在前）"""
        flat = self.flat_blocks()
        n, d = flat.shape[0], self.quantum_dim
        out = np.zeros((n * d, n * d), dtype=complex)
        for i in range(n):
            out[i * d:(i + 1) * d, i * d:(i + 1) * d] = flat[i]
        return out


@dataclass(frozen=True)
class MeasurementStrategy:
    """
    一般 1W-LOCC 测量策略：Bob 作用仪器 {K_y} 并把 y 发给 Alice，
    Alice 按 p_{X|Y}(x|y) 选择输入。p_x_given_y 形状为 (|Y|, |X|)。
    """
    p_x_given_y: np.ndarray
    instrument: Instrument

    def __post_init__(self):
        p = _check_stochastic(self.p_x_given_y, "p_{X|Y}")
        if p.ndim != 2 or p.shape[0] != self.instrument.n_branches:
            raise DimensionMismatchError(
                f"p_(X|Y) 形状 {p.shape} 与仪器分支数 {self.instrument.n_branches} 不匹配")
        object.__setattr__(self, 'p_x_given_y', p)

    @property
    def n_inputs(self) -> int:
        return int(self.p_x_given_y.shape[1])

    @property
    def n_branches(self) -> int:
        return self.instrument.n_branches

    @classmethod
    def trivial(cls, dim_b: int, p_x: Sequence[float]) -> 'MeasurementStrategy':
        """恒等仪器 + 输入分布 p_X（单个 y）"""
        return cls(np.asarray(p_x, dtype=float)[None, :], Instrument.identity(dim_b))


@dataclass(frozen=True)
class RestrictedOneWayLocc:
    """
    受限 1W-LOCC 操作

    p_x_given_xf: 形状 (|X_f|, |X|)
    p_af: p(a_f|a, x, x_f, z)，形状 (|A|, |X|, |X_f|, |Z|, |A_f|)
    instrument: 分支数 |Z|
    """
    p_x_given_xf: np.ndarray
    p_af: np.ndarray
    instrument: Instrument

    def __post_init__(self):
        px = _check_stochastic(self.p_x_given_xf, "p_{X|X_f}")
        paf = _check_stochastic(self.p_af, "p_{A_f|A X X_f Z}")
        if px.ndim != 2 or paf.ndim != 5:
            raise DimensionMismatchError(f"条件概率维度错误: {px.shape}, {paf.shape}")
        n_a, n_x, n_xf, n_z, _ = paf.shape
        if (n_xf, n_x) != px.shape or n_z != self.instrument.n_branches:
            raise DimensionMismatchError(
                f"受限 1W-LOCC 形状不一致: p_X|Xf {px.shape}, p_Af {paf.shape}, |Z|={self.instrument.n_branches}")
        object.__setattr__(self, 'p_x_given_xf', px)
        object.__setattr__(self, 'p_af', paf)

    @property
    def n_inputs(self) -> int:
        return int(self.p_af.shape[1])

    @property
    def n_outcomes(self) -> int:
        return int(self.p_af.shape[0])

    @property
    def n_final_inputs(self) -> int:
        return int(self.p_af.shape[2])

    @property
    def n_final_outcomes(self) -> int:
        return int(self.p_af.shape[4])

    @classmethod
    def identity(cls, n_inputs: int, n_outcomes: int, dim_b: int) -> 'RestrictedOneWayLocc':
        px = np.eye(n_inputs)
        paf = np.zeros((n_outcomes, n_inputs, n_inputs, 1, n_outcomes))
        for a in range(n_outcomes):
            paf[a, :, :, 0, a] = 1.0
        return cls(px, paf, Instrument.identity(dim_b))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p_x_given_xf": self.p_x_given_xf.tolist(),
            "p_af_shape": list(self.p_af.shape),
            "n_branches": self.instrument.n_branches,
        }
