"""
测试公共夹具

耗时的验收测试标记为 slow，默认跳过，使用 --runslow 运行。
"""

import pytest

from steering_analysis.pipeline import make_rng


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="运行 slow 标记的验收测试")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="需要 --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return make_rng(20240917)


@pytest.fixture
def solver_config():
    """与性质测试相同的缩减外层配置"""
    return {
        'outer_iters': 30,
        'probe_inner_iters': 15,
        'final_inner_iters': 1500,
        'smoothing_iters': 60,
    }


@pytest.fixture
def lhs_config():
    return {
        'inner_max_iter': 1500,
        'feas_max_iter': 8000,
    }


@pytest.fixture
def tiny_suite_config():
    """只验证管道结构与可复现性的极小求解配置"""
    return {
        'trials': 1,
        'light_trial_factor': 1,
        'max_workers': 1,
        'solver_overrides': {
            'outer_iters': 2,
            'probe_inner_iters': 5,
            'final_inner_iters': 40,
            'smoothing_iters': 5,
            'beta_schedule': (10.0, 100.0),
        },
        'lhs_overrides': {
            'inner_max_iter': 40,
            'feas_max_iter': 300,
        },
    }
