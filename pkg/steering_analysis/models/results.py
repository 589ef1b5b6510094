"""
结果数据模型

区间（带诊断信息的上下界）、上界链、定理检查报告与性质测试报告。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core.errors import InvariantViolationError

INTERVAL_TOL = 1e-12


@dataclass
class Interval:
    """被优化量的认证区间 [lo, hi]"""
    lo: float
    hi: float
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.lo = float(self.lo)
        self.hi = float(self.hi)
        if self.lo > self.hi + INTERVAL_TOL:
            raise InvariantViolationError("interval_order", f"区间下界 {self.lo} 超过上界 {self.hi}")

    @property
    def width(self) -> float:
        return max(0.0, self.hi - self.lo)

    def overlaps(self, other: 'Interval', tol: float = 0.0) -> bool:
        return self.lo <= other.hi + tol and other.lo <= self.hi + tol

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {"lo": self.lo, "hi": self.hi, "diagnostics": self.diagnostics}


@dataclass
class BoundChain:
    """
    受限量的上界链

    cmi_layer:      sup_p I(Ā;B|X)
    entropy_layer:  min{sup_p H(Ā), H(B)}
    dimension_layer: min{log₂|A|, log₂ d_B}
    """
    cmi_layer: float
    entropy_layer: float
    dimension_layer: float
    sup_entropy_a: float
    entropy_b: float
    best_input: int
    argmax_p: List[float] = field(default_factory=list)

    @property
    def value(self) -> float:
        return min(self.cmi_layer, self.entropy_layer, self.dimension_layer)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "value": self.value,
            "layers": [
                {"label": "sup_p I(A;B|X)", "value": self.cmi_layer},
                {"label": "min{sup_p H(A), H(B)}", "value": self.entropy_layer},
                {"label": "min{log2|A|, log2 d_B}", "value": self.dimension_layer},
            ],
            "sup_entropy_a": self.sup_entropy_a,
            "entropy_b": self.entropy_b,
            "best_input": self.best_input,
            "argmax_p": self.argmax_p,
        }


@dataclass
class FullBoundChain:
    """
    一般 1W-LOCC 量的上界链

    mutual_information 仅对给定策略取最大，未给策略时为 None。
    """
    mutual_information: Optional[float]
    sup_entropy_a: float
    log_outcomes: float

    @property
    def value(self) -> float:
        layers = [self.sup_entropy_a, self.log_outcomes]
        if self.mutual_information is not None:
            layers.append(self.mutual_information)
        return min(layers)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "value": self.value,
            "layers": [
                {"label": "max_strategies I(XB'Y;A)", "value": self.mutual_information},
                {"label": "sup_p H(A)", "value": self.sup_entropy_a},
                {"label": "log2|A|", "value": self.log_outcomes},
            ],
        }


@dataclass
class ContinuityReport:
    """一致连续性检查：两个受限量的差不超过 ε log₂ min{|A|, d_B} + g(ε)"""
    epsilon: float
    interval_1: Interval
    interval_2: Interval
    difference_lower: float
    bound: float
    passed: bool

    @property
    def margin(self) -> float:
        """带符号余量，正值表示通过"""
        return self.bound - self.difference_lower

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "epsilon": self.epsilon,
            "interval_1": self.interval_1.to_dict(),
            "interval_2": self.interval_2.to_dict(),
            "difference_lower": self.difference_lower,
            "bound": self.bound,
            "margin": self.margin,
            "passed": self.passed,
        }


@dataclass
class FaithfulnessReport:
    """
    忠实性检查

    pinsker_*: 迭代点处逐点 Pinsker 不等式 D ≥ ‖ρ−σ‖₁²/(2 ln 2) 的两侧
    zero_implies_lhs / lhs_implies_zero: 两个方向的一致性
    """
    relative_entropy: float
    trace_norm: float
    pinsker_rhs: float
    pinsker_ok: bool
    interval: Interval
    feasibility_status: str
    zero_implies_lhs: bool
    lhs_implies_zero: bool
    lhs_trace_distance: float
    pinsker_distance_ok: bool

    @property
    def passed(self) -> bool:
        return self.pinsker_ok and self.zero_implies_lhs and self.lhs_implies_zero and self.pinsker_distance_ok

    @property
    def margin(self) -> float:
        return self.relative_entropy - self.pinsker_rhs

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "relative_entropy": self.relative_entropy,
            "trace_norm": self.trace_norm,
            "pinsker_rhs": self.pinsker_rhs,
            "pinsker_ok": self.pinsker_ok,
            "interval": self.interval.to_dict(),
            "feasibility_status": self.feasibility_status,
            "zero_implies_lhs": self.zero_implies_lhs,
            "lhs_implies_zero": self.lhs_implies_zero,
            "lhs_trace_distance": self.lhs_trace_distance,
            "pinsker_distance_ok": self.pinsker_distance_ok,
            "passed": self.passed,
        }


@dataclass
class PropertyResult:
    """单个性质的汇总；worst_margin 为带符号余量（负值即违反）"""
    name: str
    trials: int = 0
    failures: int = 0
    worst_margin: Optional[float] = None
    runtime: float = 0.0
    notes: List[str] = field(default_factory=list)

    def record(self, margin: float, passed: Optional[bool] = None) -> None:
        """记录一次试验结果，passed 缺省时按 margin ≥ 0 判定"""
        self.trials += 1
        ok = margin >= 0.0 if passed is None else passed
        if not ok:
            self.failures += 1
        if self.worst_margin is None or margin < self.worst_margin:
            self.worst_margin = float(margin)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self, include_runtime: bool = False) -> Dict[str, Any]:
        """转换为字典；报告文件默认不含运行时间以保证可复现"""
        data = {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "worst_margin": self.worst_margin,
            "passed": self.passed,
        }
        if self.notes:
            data["notes"] = list(self.notes)
        if include_runtime:
            data["runtime"] = self.runtime
        return data


@dataclass
class SuiteReport:
    """性质测试报告"""
    seed: int
    trials: int
    properties: List[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    @property
    def total_failures(self) -> int:
        return sum(p.failures for p in self.properties)

    def get(self, name: str) -> Optional[PropertyResult]:
        for p in self.properties:
            if p.name == name:
                return p
        return None

    def to_dict(self, include_runtime: bool = False) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failures": self.total_failures,
            "properties": [p.to_dict(include_runtime) for p in self.properties],
        }
