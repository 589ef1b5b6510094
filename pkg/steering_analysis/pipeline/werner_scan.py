"""
Werner 族的可导向转变扫描

在 η ∈ [low, high] 上二分，用 LHS 可行性判定夹出可导向阈值。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..config import WERNER_SCAN_CONFIG
from ..core.lhs.feasibility import lhs_feasibility
from .instance_generator import werner_assemblage

logger = logging.getLogger(__name__)


@dataclass
class WernerTransition:
    """二分结果：low 处可行，high 处不可行（或无法判定）"""
    low: float
    high: float
    evaluations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def width(self) -> float:
        return self.high - self.low

    def to_dict(self) -> Dict[str, Any]:
        return {
            "low": self.low,
            "high": self.high,
            "width": self.width,
            "evaluations": list(self.evaluations),
        }


def werner_status(visibility: float, lhs_config: Optional[Dict] = None) -> str:
    """η 处的可行性状态：feasible / infeasible / inconclusive"""
    return lhs_feasibility(werner_assemblage(visibility), lhs_config).status


def werner_transition(low: Optional[float] = None, high: Optional[float] = None,
                      resolution: Optional[float] = None,
                      lhs_config: Optional[Dict] = None) -> WernerTransition:
    """
    二分定位 Werner 族的可导向阈值

    inconclusive 按不可行处理，即只有明确可行的 η 才会抬高下端。

    参数:
        low: 下端（需可行），默认 WERNER_SCAN_CONFIG['low']
        high: 上端（需不可行），默认 WERNER_SCAN_CONFIG['high']
        resolution: 区间宽度阈值
        lhs_config: 覆盖 LHS_CONFIG

    返回:
        WernerTransition

    异常:
        ValueError: 端点状态不能夹住转变，或区间非法
    """
    low = WERNER_SCAN_CONFIG['low'] if low is None else float(low)
    high = WERNER_SCAN_CONFIG['high'] if high is None else float(high)
    resolution = WERNER_SCAN_CONFIG['resolution'] if resolution is None else float(resolution)
    if not 0.0 <= low < high <= 1.0 or resolution <= 0.0:
        raise ValueError(f"非法扫描区间: low={low}, high={high}, resolution={resolution}")

    result = WernerTransition(low, high)
    for eta, expected in ((low, "feasible"), (high, "infeasible")):
        status = werner_status(eta, lhs_config)
        result.evaluations.append({"visibility": eta, "status": status})
        if status != expected:
            raise ValueError(f"η={eta} 处状态为 {status}，应为 {expected}，无法二分")

    while result.high - result.low > resolution:
        mid = 0.5 * (result.low + result.high)
        status = werner_status(mid, lhs_config)
        result.evaluations.append({"visibility": mid, "status": status})
        logger.info(f"η={mid:.4f}: {status}")
        if status == "feasible":
            result.low = mid
        else:
            result.high = mid
    return result
