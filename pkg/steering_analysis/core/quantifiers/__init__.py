"""
量化器子模块

受限相对熵导向量的认证区间、一般量的上下界、集合迹距离、g(ε) 与定理检查。
"""

from .continuity import (
    continuity_bound,
    continuity_bound_check,
    faithfulness_check,
    g_eps,
    lhs_proximity_upper_bound,
    lhs_trace_distance,
)
from .distances import (
    best_response_distance,
    restricted_trace_distance,
    seesaw_trace_distance,
    strategy_trace_distance,
    trace_distance_lower_bound,
)
from .full_bounds import full_bounds, res_lower_bound_full, strategy_inner_solve
from .restricted_res import RestrictedResSolver, restricted_res, restricted_res_exchanged
from .upper_bounds import (
    restricted_upper_bound,
    strategy_mutual_information,
    sup_outcome_entropy,
    upper_bound_full,
)

__all__ = [
    'continuity_bound',
    'continuity_bound_check',
    'faithfulness_check',
    'g_eps',
    'lhs_proximity_upper_bound',
    'lhs_trace_distance',
    'best_response_distance',
    'restricted_trace_distance',
    'seesaw_trace_distance',
    'strategy_trace_distance',
    'trace_distance_lower_bound',
    'full_bounds',
    'res_lower_bound_full',
    'strategy_inner_solve',
    'RestrictedResSolver',
    'restricted_res',
    'restricted_res_exchanged',
    'restricted_upper_bound',
    'strategy_mutual_information',
    'sup_outcome_entropy',
    'upper_bound_full',
]
