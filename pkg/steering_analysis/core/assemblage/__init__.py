"""
集合子模块

集合构造（由态与测量、由 LHS 模型）以及 1W-LOCC 变换。
"""

from .construction import (
    assemblage_from_state,
    conditional_probs,
    depolarize,
    embed_cq,
    lhs_assemblage,
    lhs_shadow,
    mix_assemblages,
    reduced_state,
    relabel_outcomes,
)
from .transforms import apply_measurement_strategy, apply_restricted_1wlocc, compose_restricted

__all__ = [
    'assemblage_from_state',
    'conditional_probs',
    'depolarize',
    'embed_cq',
    'lhs_assemblage',
    'lhs_shadow',
    'mix_assemblages',
    'reduced_state',
    'relabel_outcomes',
    'apply_measurement_strategy',
    'apply_restricted_1wlocc',
    'compose_restricted',
]
