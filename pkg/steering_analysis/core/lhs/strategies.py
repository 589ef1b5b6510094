"""
确定性策略枚举
"""

from typing import Dict, List, Optional

import numpy as np

from ...config import LHS_CONFIG
from ...models.lhs_models import DeterministicStrategy, response_table
from ...models.lhs_models import response_tensor as _response_tensor
from ..errors import StrategyCapExceededError


def check_strategy_cap(n_inputs: int, n_outcomes: int, cap: Optional[int] = None) -> int:
    """返回 |A|^|X|，超过上限时抛出 StrategyCapExceededError"""
    cap = LHS_CONFIG['strategy_cap'] if cap is None else cap
    if n_inputs < 1 or n_outcomes < 1:
        raise StrategyCapExceededError(f"字母表大小必须为正: |X|={n_inputs}, |A|={n_outcomes}")
    count = n_outcomes ** n_inputs
    if count > cap:
        raise StrategyCapExceededError(f"|A|^|X| = {count} 超过策略上限 {cap}")
    return count


def enumerate_strategies(n_inputs: int, n_outcomes: int, config: Optional[Dict] = None) -> List[DeterministicStrategy]:
    """
    按字典序枚举全部确定性策略 λ: X → A

    参数:
        n_inputs: |X|
        n_outcomes: |A|
        config: 可选，覆盖 strategy_cap

    返回:
        长度为 |A|^|X| 的策略列表，无重复
    """
    cap = (config or LHS_CONFIG).get('strategy_cap', LHS_CONFIG['strategy_cap'])
    check_strategy_cap(n_inputs, n_outcomes, cap)
    return [DeterministicStrategy(tuple(row)) for row in response_table(n_inputs, n_outcomes).tolist()]


def response_tensor(n_inputs: int, n_outcomes: int, config: Optional[Dict] = None) -> np.ndarray:
    """D[λ, x, a] = δ_{a,λ(x)}，带策略上限检查"""
    cap = (config or LHS_CONFIG).get('strategy_cap', LHS_CONFIG['strategy_cap'])
    check_strategy_cap(n_inputs, n_outcomes, cap)
    return _response_tensor(n_inputs, n_outcomes)
