"""
数据模型模块

定义算符、集合、LHS 模型、求解结果与交换文档的数据模型。
"""

from .operators import (
    DensityOperator,
    EigenDecomposition,
    ExtendedReal,
    HermitianOperator,
)
from .assemblage_models import (
    Assemblage,
    CqState,
    Instrument,
    MeasurementStrategy,
    Povm,
    RestrictedOneWayLocc,
)
from .lhs_models import (
    DeterministicStrategy,
    FeasibilityReport,
    InnerSolveResult,
    LhsModel,
)
from .results import (
    BoundChain,
    ContinuityReport,
    FaithfulnessReport,
    FullBoundChain,
    Interval,
    PropertyResult,
    SuiteReport,
)

__all__ = [
    'DensityOperator',
    'EigenDecomposition',
    'ExtendedReal',
    'HermitianOperator',
    'Assemblage',
    'CqState',
    'Instrument',
    'MeasurementStrategy',
    'Povm',
    'RestrictedOneWayLocc',
    'DeterministicStrategy',
    'FeasibilityReport',
    'InnerSolveResult',
    'LhsModel',
    'BoundChain',
    'ContinuityReport',
    'FaithfulnessReport',
    'FullBoundChain',
    'Interval',
    'PropertyResult',
    'SuiteReport',
]
