"""
异常定义

所有数值模块抛出的异常都派生自 SteeringError，
同时继承对应的内置异常，调用方可以按 ValueError / RuntimeError 捕获。
"""

from typing import Any, Dict, Optional


class SteeringError(Exception):
    """steering_analysis 的异常基类"""


class DimensionMismatchError(SteeringError, ValueError):
    """维度或寄存器划分不一致"""


class NotHermitianError(SteeringError, ValueError):
    """输入矩阵偏离厄米性过大"""


class InvariantViolationError(SteeringError, ValueError):
    """数据模型不变量被破坏，invariant 字段给出不变量名称"""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"[{invariant}] {message}")
        self.invariant = invariant


class EigenSolverError(SteeringError, RuntimeError):
    """本征分解未收敛或残差超限"""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


class MatrixDomainError(SteeringError, ValueError):
    """矩阵函数在保留的本征值上无定义"""


class SupportError(SteeringError, ValueError):
    """支撑包含关系不成立"""


class StrategyCapExceededError(SteeringError, ValueError):
    """确定性策略数超出上限"""


class InnerSolverError(SteeringError, RuntimeError):
    """内层相对熵求解的内部错误（例如初值目标为 +∞）"""


class BracketInversionError(SteeringError, RuntimeError):
    """求解得到的下界超过上界"""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ConfigError(SteeringError, ValueError):
    """非法配置参数"""
