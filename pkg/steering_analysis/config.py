"""
配置模块

管理 steering_analysis 模块的配置参数
支持通过环境变量覆盖数据目录与并行线程数，便于测试与部署隔离。
"""

import os
from pathlib import Path
from typing import Dict, Any

# ======================
# 路径配置（支持环境变量覆盖）
# ======================

BASE_DIR = Path(__file__).parent.resolve()
PROJECT_ROOT = BASE_DIR.parent

# 允许通过环境变量指定数据目录（例如：export STEERLIB_DATA_DIR=/custom/path）
CUSTOM_DATA_DIR = os.getenv("STEERLIB_DATA_DIR")
if CUSTOM_DATA_DIR:
    DATA_DIR = Path(CUSTOM_DATA_DIR).resolve()
else:
    DATA_DIR = PROJECT_ROOT / "data"

LOGS_DIR = DATA_DIR / "logs"


def _env_threads() -> int:
    """读取 STEERLIB_THREADS，非法值回退为 1"""
    raw = os.getenv("STEERLIB_THREADS", "1").strip()
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ======================
# 配置类型定义
# ======================

LinalgConfig = Dict[str, Any]
SolverConfig = Dict[str, Any]

# ======================
# 线性代数配置
# ======================

LINALG_CONFIG: LinalgConfig = {
    'support_cut': 1e-10,  # 相对最大本征值的支撑截断
    'hermitian_admission_tol': 1e-8,  # 超过此值视为非厄米输入
    'density_psd_tol': 1e-10,  # 密度算符最小本征值下限
    'density_trace_tol': 1e-10,  # 密度算符迹偏差
    'reconstruction_tol': 1e-9,  # V diag V† 重构相对残差
    'unitarity_tol': 1e-10,  # V†V − I 残差
    'jacobi_max_sweeps': 64,  # Jacobi 循环扫描上限
    'entropy_slack': 1e-9,  # 熵类量的负值容差（截断为 0）
    'frechet_equal_tol': 1e-9,  # 判定本征值相等（用 1/a 代替差商）的相对阈值
}

# ======================
# 集合（assemblage）配置
# ======================

ASSEMBLAGE_CONFIG: Dict[str, float] = {
    'psd_tol': 1e-10,  # 元素半正定容差
    'no_signaling_tol': 1e-9,  # 无信号约束残差（迹范数）
    'trace_tol': 1e-9,  # 归一化容差
    'povm_tol': 1e-10,  # POVM 完备性容差
    'instrument_tol': 1e-9,  # 仪器迹保持容差
    'stochastic_tol': 1e-12,  # 条件概率归一化容差
}

# ======================
# LHS 求解器配置
# ======================

LHS_CONFIG: SolverConfig = {
    'strategy_cap': 4096,  # 确定性策略数上限 |A|^|X|
    'feas_tol': 1e-6,  # 可行性判定（迹范数残差）
    'feas_max_iter': 20000,  # 投影梯度迭代上限
    'feas_check_every': 25,  # 每隔多少步计算残差与见证
    'witness_tol': 1e-10,  # 见证值大于此值即判定不可行
    'stagnation_tol': 1e-13,  # 目标相对下降低于此值视为停滞
    'stagnation_patience': 2000,  # 连续停滞步数
    'inner_tol': 1e-5,  # Frank–Wolfe 间隙（比特）
    'inner_max_iter': 5000,  # Frank–Wolfe 迭代上限
    'line_search_iter': 60,  # 线搜索二分次数
    'line_search_width': 1e-12,  # 二分区间提前终止宽度
    'max_step': 1.0 - 1e-9,  # 步长上限，保证支撑不收缩
    'corrective_steps': True,  # 是否在每步后做投影梯度修正
    'corrective_backtrack': 30,  # Armijo 回溯次数上限
    'armijo_c': 1e-4,
    'descent_slack': 1e-12,  # 单调下降检查的松弛
    'support_leak_tol': 1e-9,  # ρ 块落在 σ 块支撑外的相对迹超过此值即视为 +∞
}

# ======================
# 量化器配置
# ======================

QUANTIFIER_CONFIG: SolverConfig = {
    'outer_iters': 200,  # 乘性权重外层迭代
    'mwu_step': 0.1,  # 步长 0.1/√t
    'probe_inner_iters': 25,  # 外层每步内层 FW 迭代数（暖启动）
    'final_inner_iters': 5000,  # 最终精确内层求解迭代上限
    'beta_schedule': (10.0, 30.0, 100.0, 300.0, 1000.0),  # log-sum-exp 温度（比特⁻¹）
    'smoothing_iters': 200,  # 每个温度阶段的 FW 迭代数
    'bracket_tol': 1e-9,  # 下界超过上界多于此值即判定求解失败
    'chain_tol': 1e-9,  # 上界链顺序容差
    'entropy_ascent_iters': 200,  # sup_p H(Ā) 投影梯度步数
    'entropy_ascent_step': 0.5,
    'faithful_zero_tol': 1e-4,  # hi ≤ 此值时要求 LHS 可行
    'faithful_lhs_tol': 1e-3,  # LHS 可行时要求 hi ≤ 此值
    'pinsker_slack': 1e-8,
}

# ======================
# 实例生成与性质测试配置
# ======================

HARNESS_CONFIG: Dict[str, Any] = {
    'desk_inputs': (2, 3),  # |X| 取值
    'desk_outcomes': (2, 3),  # |A| 取值
    'desk_dim_b': (2, 2, 2, 3),  # d_B 取值（偶尔为 3）
    'max_dim': 64,
}

SUITE_CONFIG: Dict[str, Any] = {
    'trials': 3,  # 每个求解类性质的试验次数
    'light_trial_factor': 10,  # 轻量性质（线性代数、变换、度量）的试验次数倍数
    'max_workers': _env_threads(),  # 受 STEERLIB_THREADS 约束
    # 性质测试中使用的缩减求解配置（保证单次求解在秒级完成）
    'solver_overrides': {
        'outer_iters': 30,
        'probe_inner_iters': 15,
        'final_inner_iters': 1500,
        'smoothing_iters': 60,
    },
    'lhs_overrides': {
        'inner_max_iter': 1500,
        'feas_max_iter': 8000,
    },
    'mixing_weights': (0.25, 0.5, 0.75),
    'continuity_mix': 0.05,
    'convexity_slack': 1e-3,
    'monotonicity_slack': 1e-3,
    'minimax_slack': 2e-3,
    'pinsker_samples_per_solve': 10,
    'certificate_samples': 20,  # 每次求解抽取的随机 LHS 模型数
    'bound_chain_slack': 1e-6,
    'zero_value_tol': 1e-5,  # LHS 集合上内层值的上限
    'lhs_hi_tol': 1e-3,  # LHS 集合上区间上端的上限
    'exact_tol': 1e-12,  # 解析恒等式（无信号、恒等策略）
    'composition_tol': 1e-10,
    'metric_tol': 1e-9,
    'data_processing_slack': 1e-8,
    'block_tol': 1e-8,
    'frechet_rel_tol': 1e-4,
    'frechet_step': 1e-6,
    'max_eig_dim': 8,
    'werner_feasible': 0.5,
    'werner_infeasible': 0.9,
}

WERNER_SCAN_CONFIG: Dict[str, float] = {
    'low': 0.5,
    'high': 0.9,
    'resolution': 0.01,
}

# ======================
# 命令行配置
# ======================

CLI_CONFIG: Dict[str, Any] = {
    'document_version': "1",
    'exit_codes': {
        'ok': 0,
        'error': 1,
        'infeasible': 2,
        'inconclusive': 3,
    },
}

# ======================
# 日志配置
# ======================

LOG_CONFIG: Dict[str, str] = {
    'encoding': 'utf-8',
    'suite_log_file': 'suite_log_{timestamp}.csv',
    'suite_report_file': 'suite_report_{timestamp}.json',
    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
}
