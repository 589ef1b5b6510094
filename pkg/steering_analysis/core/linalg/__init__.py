"""
线性代数子模块

精确形状的复厄米线性代数与熵类泛函，所有求解器都建立在其上。
"""

from .eigen import eig_hermitian, jacobi_eigh, matrix_function, support_mask
from .entropy import (
    LN2,
    apply_kraus,
    conditional_mutual_information,
    entropy_of_spectrum,
    partial_trace,
    partial_trace_array,
    relative_entropy,
    trace_norm,
    von_neumann_entropy,
)
from .frechet import log_divided_differences, log_frechet_apply

__all__ = [
    'eig_hermitian',
    'jacobi_eigh',
    'matrix_function',
    'support_mask',
    'LN2',
    'apply_kraus',
    'conditional_mutual_information',
    'entropy_of_spectrum',
    'partial_trace',
    'partial_trace_array',
    'relative_entropy',
    'trace_norm',
    'von_neumann_entropy',
    'log_divided_differences',
    'log_frechet_apply',
]
