"""
核心计算引擎模块

linalg（厄米线性代数与熵）、assemblage（集合构造与 1W-LOCC 变换）、
lhs（LHS 可行性与内层相对熵）、quantifiers（导向量化器与界）。
子包按需导入，数据模型依赖 errors，本文件不做聚合导入。
"""
