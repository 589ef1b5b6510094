# Steering Analysis Module
"""
量子导向量化模块

提供集合（assemblage）的 LHS 判定、受限与一般 1W-LOCC 相对熵导向量的认证区间、
集合迹距离、上界链，以及逐条定理的性质测试。
"""

__version__ = "1.0.0"
__author__ = "SteerLib Team"

# 数据模型须先于 core 导入
from .models import Assemblage, CqState, Instrument, LhsModel, MeasurementStrategy, Povm, RestrictedOneWayLocc
from .core.errors import SteeringError
from .core.assemblage import apply_measurement_strategy, apply_restricted_1wlocc, assemblage_from_state, embed_cq
from .core.lhs import inner_inf_relative_entropy, lhs_feasibility
from .core.quantifiers import (
    continuity_bound_check,
    faithfulness_check,
    g_eps,
    restricted_res,
    restricted_res_exchanged,
    restricted_trace_distance,
    restricted_upper_bound,
    trace_distance_lower_bound,
    upper_bound_full,
)
from .pipeline import run_suite, werner_assemblage

__all__ = [
    # 数据模型
    "Assemblage",
    "CqState",
    "Instrument",
    "LhsModel",
    "MeasurementStrategy",
    "Povm",
    "RestrictedOneWayLocc",
    "SteeringError",

    # 集合与变换
    "apply_measurement_strategy",
    "apply_restricted_1wlocc",
    "assemblage_from_state",
    "embed_cq",

    # LHS
    "inner_inf_relative_entropy",
    "lhs_feasibility",

    # 量化器
    "continuity_bound_check",
    "faithfulness_check",
    "g_eps",
    "restricted_res",
    "restricted_res_exchanged",
    "restricted_trace_distance",
    "restricted_upper_bound",
    "trace_distance_lower_bound",
    "upper_bound_full",

    # 性质测试
    "run_suite",
    "werner_assemblage",
]
