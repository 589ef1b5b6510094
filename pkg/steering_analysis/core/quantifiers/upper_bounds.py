"""
上界链

受限量：R_S^R ≤ sup_p I(Ā;B|X) ≤ min{sup_p H(Ā), H(B)} ≤ min{log₂|A|, log₂ d_B}
一般量：R_S ≤ I(XB'Y;Ā) ≤ sup_p H(Ā) ≤ log₂|A|
"""

import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ...config import QUANTIFIER_CONFIG
from ...models.assemblage_models import Assemblage, MeasurementStrategy
from ...models.results import BoundChain, FullBoundChain
from ..assemblage.transforms import apply_measurement_strategy
from ..errors import InvariantViolationError
from ..lhs.projections import project_simplex
from ..linalg import LN2, conditional_mutual_information, von_neumann_entropy

logger = logging.getLogger(__name__)


def _shannon(q: np.ndarray) -> float:
    q = np.clip(np.asarray(q, dtype=float), 0.0, None)
    nz = q[q > 0]
    return float(-np.sum(nz * np.log2(nz)))


def sup_outcome_entropy(probs: np.ndarray, config: Optional[Dict] = None) -> Tuple[float, float, np.ndarray]:
    """
    sup_p H(Σ_x p(x) p(·|x))

    H 关于 p 是凹函数：单纯形上做投影梯度上升，顶点只作为下界参与比较。
    凹性给出认证上界 H(p) + max_x ∂_x H − ⟨∇H, p⟩。

    参数:
        probs: p(a|x)，形状 (|X|, |A|)

    返回:
        (达到的值, 认证上界, 最优 p)
    """
    cfg = {**QUANTIFIER_CONFIG, **(config or {})}
    probs = np.asarray(probs, dtype=float)
    n_inputs, n_outcomes = probs.shape

    def entropy_and_gradient(p: np.ndarray) -> Tuple[float, np.ndarray]:
        q = probs.T @ p
        logq = np.log2(np.clip(q, 1e-300, None))
        grad = -(probs @ (logq + 1.0 / LN2))
        return _shannon(q), grad

    p = np.full(n_inputs, 1.0 / n_inputs)
    value, grad = entropy_and_gradient(p)
    best_value, best_p = value, p.copy()
    for x in range(n_inputs):
        vertex_value = _shannon(probs[x])
        if vertex_value > best_value:
            best_value, best_p = vertex_value, np.eye(n_inputs)[x]
    step = float(cfg['entropy_ascent_step'])
    for _ in range(int(cfg['entropy_ascent_iters'])):
        trial = project_simplex(p + step * grad)
        trial_value, trial_grad = entropy_and_gradient(trial)
        if trial_value + 1e-15 < value:
            step *= 0.5
            continue
        p, value, grad = trial, trial_value, trial_grad
        if value > best_value:
            best_value, best_p = value, p.copy()
    _, grad = entropy_and_gradient(best_p)
    certified = best_value + max(0.0, float(np.max(grad) - np.dot(grad, best_p)))
    certified = min(certified, float(np.log2(n_outcomes)))
    return best_value, max(certified, best_value), best_p


def _cq_tripartite(assemblage: Assemblage, p_x: np.ndarray) -> np.ndarray:
    """ρ_{ĀBX} = Σ p(x) |a⟩⟨a| ⊗ ρ̂^{a,x} ⊗ |x⟩⟨x| 的整块矩阵"""
    n_x, n_a, d = assemblage.shape
    out = np.zeros((n_a * d * n_x, n_a * d * n_x), dtype=complex)
    for x in range(n_x):
        for a in range(n_a):
            e_a = np.zeros((n_a, n_a))
            e_a[a, a] = 1.0
            e_x = np.zeros((n_x, n_x))
            e_x[x, x] = 1.0
            out += p_x[x] * np.kron(np.kron(e_a, assemblage.elements[x, a]), e_x)
    return out


def restricted_upper_bound(assemblage: Assemblage, config: Optional[Dict] = None) -> BoundChain:
    """
    受限量的三层上界

    sup_p I(Ā;B|X) 关于 p 线性，因此在顶点 p = δ_x 处取到。

    返回:
        BoundChain，value 为最紧的一层

    异常:
        InvariantViolationError: 链的顺序被破坏（超出 chain_tol）
    """
    cfg = {**QUANTIFIER_CONFIG, **(config or {})}
    n_x, n_a, d_b = assemblage.shape
    cmi_values = []
    for x in range(n_x):
        rho = _cq_tripartite(assemblage, np.eye(n_x)[x])
        cmi_values.append(conditional_mutual_information(rho, (n_a, d_b, n_x)))
    best_input = int(np.argmax(cmi_values))
    cmi_layer = float(cmi_values[best_input])
    _, sup_h, argmax_p = sup_outcome_entropy(assemblage.conditional_probs(), cfg)
    h_b = von_neumann_entropy(assemblage.reduced_matrix(0))
    entropy_layer = min(sup_h, h_b)
    dimension_layer = float(min(np.log2(n_a), np.log2(d_b)))
    tol = float(cfg['chain_tol'])
    if cmi_layer > entropy_layer + tol or entropy_layer > dimension_layer + tol:
        raise InvariantViolationError(
            "bound_chain", f"上界链顺序被破坏: {cmi_layer:.12f}, {entropy_layer:.12f}, {dimension_layer:.12f}")
    return BoundChain(
        cmi_layer=cmi_layer,
        entropy_layer=entropy_layer,
        dimension_layer=dimension_layer,
        sup_entropy_a=sup_h,
        entropy_b=h_b,
        best_input=best_input,
        argmax_p=argmax_p.tolist(),
    )


def strategy_mutual_information(assemblage: Assemblage, strategy: MeasurementStrategy) -> float:
    """I(XB'Y;Ā) = H(Ā) + H(XB'Y) − H(XĀB'Y)"""
    cq = apply_measurement_strategy(assemblage, strategy)
    h_a = cq.marginal(("A",), keep_quantum=False).entropy()
    h_rest = cq.marginal(("X", "Y"), keep_quantum=True).entropy()
    return max(0.0, h_a + h_rest - cq.entropy())


def upper_bound_full(assemblage: Assemblage, strategies: Sequence[MeasurementStrategy] = (),
                     config: Optional[Dict] = None) -> FullBoundChain:
    """
    一般量的上界链

    第一层只对给定策略取最大，因此它界住的是"限于这些策略"的量
    （即 res_lower_bound_full 的同一策略集）；后两层对所有策略成立。
    """
    mi = None
    if strategies:
        mi = max(strategy_mutual_information(assemblage, s) for s in strategies)
    _, sup_h, _ = sup_outcome_entropy(assemblage.conditional_probs(), config)
    return FullBoundChain(mutual_information=mi, sup_entropy_a=sup_h, log_outcomes=float(np.log2(assemblage.n_outcomes)))
