"""
LHS 子模块

确定性策略参数化、LHS 可行性判定，以及 LHS 集合上相对熵下确界的 Frank–Wolfe 求解。
"""

from .feasibility import LhsFeasibilitySolver, lhs_feasibility
from .inner_solver import FrankWolfeSolver, inner_inf_relative_entropy
from .objective import LinearScalarization, LogSumExpScalarization, SteeringObjective
from .projections import project_psd, project_simplex, project_spectraplex
from .strategies import check_strategy_cap, enumerate_strategies, response_tensor

__all__ = [
    'LhsFeasibilitySolver',
    'lhs_feasibility',
    'FrankWolfeSolver',
    'inner_inf_relative_entropy',
    'LinearScalarization',
    'LogSumExpScalarization',
    'SteeringObjective',
    'project_psd',
    'project_simplex',
    'project_spectraplex',
    'check_strategy_cap',
    'enumerate_strategies',
    'response_tensor',
]
