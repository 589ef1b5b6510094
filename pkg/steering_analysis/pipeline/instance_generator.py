"""
随机实例生成

所有生成器只通过传入的 numpy Generator 取随机数；
发生器为计数器型 Philox，种子相同则输出逐字节相同。
"""

import logging
import zlib
from typing import Optional, Sequence, Tuple

import numpy as np

from ..config import HARNESS_CONFIG
from ..core.assemblage.construction import assemblage_from_state
from ..core.errors import DimensionMismatchError
from ..core.linalg import matrix_function
from ..models.assemblage_models import (
    Assemblage,
    Instrument,
    MeasurementStrategy,
    Povm,
    RestrictedOneWayLocc,
)
from ..models.lhs_models import LhsModel
from ..models.operators import DensityOperator

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """由 64 位种子构造 Philox 发生器"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF)))


def trial_rng(seed: int, name: str, trial: int) -> np.random.Generator:
    """
    性质测试单次试验的独立随机流

    种子序列为 (seed, crc32(name), trial)，与线程调度无关。
    """
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(name.encode('utf-8')), int(trial)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def _ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def _check_dim(dim: int) -> int:
    dim = int(dim)
    if not 1 <= dim <= HARNESS_CONFIG['max_dim']:
        raise DimensionMismatchError(f"维度 {dim} 超出 [1, {HARNESS_CONFIG['max_dim']}]")
    return dim


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = _ginibre(_check_dim(dim), dim, rng)
    return 0.5 * (g + g.conj().T)


def random_density(dim: int, rank: Optional[int], rng: np.random.Generator) -> DensityOperator:
    """
    随机密度算符 ρ = GG†/Tr(GG†)，G 为 dim×rank 复高斯矩阵

    参数:
        dim: 维度
        rank: 秩，None 表示满秩
        rng: 随机数发生器

    返回:
        DensityOperator

    异常:
        ValueError: rank 不在 [1, dim] 内
    """
    dim = _check_dim(dim)
    rank = dim if rank is None else int(rank)
    if not 1 <= rank <= dim:
        raise ValueError(f"秩必须满足 1 ≤ rank ≤ {dim}，实际: {rank}")
    g = _ginibre(dim, rank, rng)
    rho = g @ g.conj().T
    return DensityOperator.from_matrix(rho / np.real(np.trace(rho)))


def random_povm(dim: int, n_outcomes: int, rng: np.random.Generator) -> Povm:
    """
    随机 POVM：Λ_a = S^{-1/2} G_a G_a† S^{-1/2}，S = Σ_a G_a G_a†
    """
    dim = _check_dim(dim)
    if n_outcomes < 1:
        raise ValueError(f"输出数必须为正: {n_outcomes}")
    positives = np.stack([g @ g.conj().T for g in (_ginibre(dim, dim, rng) for _ in range(n_outcomes))])
    inv_sqrt = matrix_function(positives.sum(axis=0), lambda w: w ** -0.5).matrix
    return Povm(inv_sqrt @ positives @ inv_sqrt)


def random_instrument(d_in: int, d_out: int, n_branches: int, rng: np.random.Generator,
                      kraus_per_branch: Optional[int] = None) -> Instrument:
    """
    随机仪器：随机等距 V: C^{d_in} → C^{d_out·|Z|·k}，按行切成 Kraus 算符

    Σ K†K = V†V = I，因此求和映射迹保持。

    参数:
        d_in / d_out: 输入、输出维度
        n_branches: 分支数 |Z|
        rng: 随机数发生器
        kraus_per_branch: 每分支 Kraus 个数，缺省取使等距存在的最小值
    """
    d_in, d_out = _check_dim(d_in), _check_dim(d_out)
    if n_branches < 1:
        raise ValueError(f"分支数必须为正: {n_branches}")
    needed = -(-d_in // (d_out * n_branches))
    k = needed if kraus_per_branch is None else max(needed, int(kraus_per_branch))
    rows = d_out * n_branches * k
    q, r = np.linalg.qr(_ginibre(rows, d_in, rng))
    # 固定 QR 的相位自由度
    phases = np.diag(r) / np.abs(np.diag(r))
    q = q * phases[None, :]
    blocks = q.reshape(n_branches, k, d_out, d_in)
    return Instrument(tuple(tuple(blocks[z, t] for t in range(k)) for z in range(n_branches)))


def random_assemblage(n_inputs: int, n_outcomes: int, dim_b: int, rng: np.random.Generator,
                      dim_a: Optional[int] = None, rank: Optional[int] = None) -> Assemblage:
    """
    由随机两体态与随机 POVM 构造的集合

    参数:
        dim_a: Alice 一侧维度，缺省为 max(2, |A|)
        rank: ρ_AB 的秩，缺省满秩
    """
    dim_a = max(2, n_outcomes) if dim_a is None else int(dim_a)
    rho = random_density(dim_a * dim_b, rank, rng)
    povms = [random_povm(dim_a, n_outcomes, rng) for _ in range(n_inputs)]
    return assemblage_from_state(rho, (dim_a, dim_b), povms)


def random_lhs_model(n_inputs: int, n_outcomes: int, dim_b: int, rng: np.random.Generator) -> LhsModel:
    """σ_λ = p(λ) ρ_λ，p 取 Dirichlet(1)，ρ_λ 为随机满秩态"""
    n_lambda = n_outcomes ** n_inputs
    weights = rng.dirichlet(np.ones(n_lambda))
    sigmas = np.stack([w * random_density(dim_b, None, rng).matrix for w in weights])
    return LhsModel(n_inputs, n_outcomes, sigmas)


def random_stochastic(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """行随机矩阵（每行 Dirichlet(1)）"""
    return rng.dirichlet(np.ones(cols), size=rows)


def random_measurement_strategy(n_inputs: int, dim_b: int, rng: np.random.Generator,
                                n_branches: Optional[int] = None,
                                dim_out: Optional[int] = None) -> MeasurementStrategy:
    """随机仪器 + 随机 p_{X|Y}"""
    n_branches = int(rng.integers(1, 4)) if n_branches is None else int(n_branches)
    dim_out = dim_b if dim_out is None else int(dim_out)
    instrument = random_instrument(dim_b, dim_out, n_branches, rng)
    return MeasurementStrategy(random_stochastic(n_branches, n_inputs, rng), instrument)


def random_restricted_op(shape: Sequence[int], rng: np.random.Generator,
                         n_final_inputs: Optional[int] = None,
                         n_final_outcomes: Optional[int] = None,
                         n_branches: Optional[int] = None) -> RestrictedOneWayLocc:
    """
    随机受限 1W-LOCC 操作

    参数:
        shape: 作用对象的 (|X|, |A|, d_B)
        n_final_inputs / n_final_outcomes: 输出字母表，缺省与输入相同
        n_branches: 仪器分支数 |Z|，缺省在 {1, 2} 中随机

    返回:
        RestrictedOneWayLocc（仪器输出维度等于 d_B）
    """
    n_inputs, n_outcomes, dim_b = (int(v) for v in shape)
    n_xf = n_inputs if n_final_inputs is None else int(n_final_inputs)
    n_af = n_outcomes if n_final_outcomes is None else int(n_final_outcomes)
    n_z = int(rng.integers(1, 3)) if n_branches is None else int(n_branches)
    p_x = random_stochastic(n_xf, n_inputs, rng)
    p_af = rng.dirichlet(np.ones(n_af), size=(n_outcomes, n_inputs, n_xf, n_z))
    instrument = random_instrument(dim_b, dim_b, n_z, rng)
    return RestrictedOneWayLocc(p_x, p_af, instrument)


def random_desk_shape(rng: np.random.Generator) -> Tuple[int, int, int]:
    """从桌面规模中抽取 (|X|, |A|, d_B)"""
    n_inputs = int(rng.choice(HARNESS_CONFIG['desk_inputs']))
    n_outcomes = int(rng.choice(HARNESS_CONFIG['desk_outcomes']))
    dim_b = int(rng.choice(HARNESS_CONFIG['desk_dim_b']))
    return n_inputs, n_outcomes, dim_b


def werner_assemblage(visibility: float) -> Assemblage:
    """
    Werner 态 η|Φ⁻⟩⟨Φ⁻| + (1−η)I/4 在 Z、X 测量下的集合

    参数:
        visibility: η ∈ [0, 1]

    返回:
        |X| = |A| = d_B = 2 的集合

    异常:
        ValueError: η 不在 [0, 1] 内
    """
    eta = float(visibility)
    if not 0.0 <= eta <= 1.0 or np.isnan(eta):
        raise ValueError(f"可见度必须在 [0, 1] 内: {visibility}")
    phi = np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) / np.sqrt(2.0)
    rho = eta * np.outer(phi, phi.conj()) + (1.0 - eta) * np.eye(4) / 4.0
    z_basis = np.eye(2, dtype=complex)
    x_basis = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
    povms = [Povm.projective(z_basis), Povm.projective(x_basis)]
    return assemblage_from_state(rho, (2, 2), povms)
