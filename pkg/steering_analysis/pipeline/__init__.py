"""
处理管道模块

提供随机实例生成、逐条定理的性质测试以及 Werner 族阈值扫描。
"""

from .instance_generator import (
    make_rng,
    random_assemblage,
    random_density,
    random_desk_shape,
    random_hermitian,
    random_instrument,
    random_lhs_model,
    random_measurement_strategy,
    random_povm,
    random_restricted_op,
    trial_rng,
    werner_assemblage,
)
from .suite_pipeline import SuitePipeline, run_suite
from .werner_scan import WernerTransition, werner_status, werner_transition

__all__ = [
    'make_rng',
    'random_assemblage',
    'random_density',
    'random_desk_shape',
    'random_hermitian',
    'random_instrument',
    'random_lhs_model',
    'random_measurement_strategy',
    'random_povm',
    'random_restricted_op',
    'trial_rng',
    'werner_assemblage',
    'SuitePipeline',
    'run_suite',
    'WernerTransition',
    'werner_status',
    'werner_transition',
]
