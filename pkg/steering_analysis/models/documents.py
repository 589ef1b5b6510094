"""
JSON 交换文档模型

集合与 LHS 模型的文档格式。复数写作 [re, im]，浮点数用 JSON 数值表示
（json 模块按最短可还原表示输出，保证序列化往返逐位一致）。
"""

from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import CLI_CONFIG
from .assemblage_models import Assemblage
from .lhs_models import LhsModel, response_table

ComplexEntry = List[float]
ComplexMatrixDoc = List[List[ComplexEntry]]

DOCUMENT_VERSION: str = CLI_CONFIG['document_version']


def _check_version(version: str) -> str:
    if version != DOCUMENT_VERSION:
        raise ValueError(f"不支持的文档版本 {version!r}，当前版本为 {DOCUMENT_VERSION!r}")
    return version


def _matrix_to_doc(m: np.ndarray) -> ComplexMatrixDoc:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _check_matrix(m: ComplexMatrixDoc, dim: int, where: str) -> None:
    if len(m) != dim or any(len(row) != dim for row in m):
        raise ValueError(f"{where} 应为 {dim}x{dim} 矩阵")
    if any(len(entry) != 2 for row in m for entry in row):
        raise ValueError(f"{where} 的复数元素必须写作 [re, im]")


class AssemblageDocument(BaseModel):
    """集合文档：elements 按 [x][a] 索引"""
    version: str = DOCUMENT_VERSION
    n_inputs: int = Field(ge=1)
    n_outcomes: int = Field(ge=1)
    dim_b: int = Field(ge=1, le=64)
    elements: List[List[ComplexMatrixDoc]]

    check_version = field_validator('version')(_check_version)

    @model_validator(mode='after')
    def check_shape(self) -> 'AssemblageDocument':
        if len(self.elements) != self.n_inputs:
            raise ValueError(f"elements 需要 {self.n_inputs} 个输入，实际 {len(self.elements)}")
        for x, per_x in enumerate(self.elements):
            if len(per_x) != self.n_outcomes:
                raise ValueError(f"输入 {x} 需要 {self.n_outcomes} 个输出，实际 {len(per_x)}")
            for a, m in enumerate(per_x):
                _check_matrix(m, self.dim_b, f"elements[{x}][{a}]")
        return self

    def to_assemblage(self) -> Assemblage:
        """转换为 Assemblage（触发不变量检查）"""
        elements = np.array(
            [[[[complex(re, im) for re, im in row] for row in m] for m in per_x] for per_x in self.elements],
            dtype=complex,
        ).reshape(self.n_inputs, self.n_outcomes, self.dim_b, self.dim_b)
        return Assemblage(elements)

    @classmethod
    def from_assemblage(cls, assemblage: Assemblage) -> 'AssemblageDocument':
        return cls(
            n_inputs=assemblage.n_inputs,
            n_outcomes=assemblage.n_outcomes,
            dim_b=assemblage.dim_b,
            elements=[[_matrix_to_doc(assemblage.elements[x, a]) for a in range(assemblage.n_outcomes)]
                      for x in range(assemblage.n_inputs)],
        )


class LhsModelDocument(BaseModel):
    """LHS 模型文档：strategies 第 λ 行是 (λ(0), ..., λ(|X|-1))"""
    version: str = DOCUMENT_VERSION
    n_inputs: int = Field(ge=1)
    n_outcomes: int = Field(ge=1)
    dim_b: int = Field(ge=1, le=64)
    strategies: List[List[int]]
    sigmas: List[ComplexMatrixDoc]

    check_version = field_validator('version')(_check_version)

    @model_validator(mode='after')
    def check_shape(self) -> 'LhsModelDocument':
        expected = response_table(self.n_inputs, self.n_outcomes).tolist()
        if self.strategies != expected:
            raise ValueError("strategies 必须是按字典序的完整确定性策略枚举")
        if len(self.sigmas) != len(expected):
            raise ValueError(f"sigmas 需要 {len(expected)} 个块，实际 {len(self.sigmas)}")
        for lam, m in enumerate(self.sigmas):
            _check_matrix(m, self.dim_b, f"sigmas[{lam}]")
        return self

    def to_model(self) -> LhsModel:
        return LhsModel.from_dict(self.model_dump())

    @classmethod
    def from_model(cls, model: LhsModel) -> 'LhsModelDocument':
        data: Dict[str, Any] = model.to_dict()
        return cls(**data)
