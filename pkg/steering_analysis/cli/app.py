"""
命令行应用

子命令: check-lhs, rres, distance, bounds, suite, gen
结果以 UTF-8 JSON 写到标准输出，诊断信息写到标准错误。
退出码: 0 成功/可行, 1 输入或参数错误, 2 不可行（可导向）, 3 无法判定
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

import numpy as np

from ..config import CLI_CONFIG, LHS_CONFIG
from ..core.assemblage import lhs_assemblage
from ..core.errors import SteeringError
from ..core.lhs import lhs_feasibility
from ..core.quantifiers import (
    restricted_res,
    restricted_res_exchanged,
    restricted_trace_distance,
    restricted_upper_bound,
    seesaw_trace_distance,
    upper_bound_full,
)
from ..pipeline import make_rng, random_assemblage, random_lhs_model, run_suite, werner_assemblage
from ..utils.logger import SuiteLogger, report_json, setup_logging
from .serialization import DocumentError, assemblage_json, dumps, lhs_model_payload, read_assemblage, write_text

logger = logging.getLogger(__name__)

EXIT_CODES = CLI_CONFIG['exit_codes']
STATUS_EXIT_CODES = {
    "feasible": EXIT_CODES['ok'],
    "infeasible": EXIT_CODES['infeasible'],
    "inconclusive": EXIT_CODES['inconclusive'],
}


class UsageError(ValueError):
    """命令行参数错误"""


class _Parser(argparse.ArgumentParser):
    """参数错误按退出码 1 处理（2 留给“不可行”）"""

    def error(self, message: str):
        raise UsageError(message)


def _print(payload) -> None:
    write_text(dumps(payload))


# ========== 子命令 ==========

def cmd_check_lhs(args: argparse.Namespace) -> int:
    """LHS 可行性判定：0 可行，2 不可行，3 无法判定"""
    assemblage = read_assemblage(args.path)
    lhs_config = {}
    if args.tol is not None:
        lhs_config['feas_tol'] = args.tol
    if args.max_iter is not None:
        lhs_config['feas_max_iter'] = args.max_iter
    report = lhs_feasibility(assemblage, lhs_config)
    payload = report.to_dict()
    if report.feasible and report.model is not None:
        payload["model"] = lhs_model_payload(report.model)
    _print(payload)
    return STATUS_EXIT_CODES[report.status]


def cmd_rres(args: argparse.Namespace) -> int:
    """受限相对熵导向量的认证区间"""
    assemblage = read_assemblage(args.path)
    config, lhs_config = {}, {}
    if args.outer_iters is not None:
        config['outer_iters'] = args.outer_iters
    if args.inner_tol is not None:
        lhs_config['inner_tol'] = args.inner_tol
    solve = restricted_res_exchanged if args.exchanged else restricted_res
    interval = solve(assemblage, config, lhs_config)
    _print(interval.to_dict())
    return EXIT_CODES['ok']


def cmd_distance(args: argparse.Namespace) -> int:
    """集合间迹距离：--restricted 给出 Δ^R，--seesaw N 另外给出 Δ 的下界"""
    a1, a2 = read_assemblage(args.path1), read_assemblage(args.path2)
    restricted = restricted_trace_distance(a1, a2)
    if args.seesaw is None:
        _print({"value": restricted})
        return EXIT_CODES['ok']
    if args.seesaw < 0:
        raise UsageError(f"--seesaw 轮数不能为负: {args.seesaw}")
    lower, strategy = seesaw_trace_distance(a1, a2, args.seesaw, make_rng(args.seed))
    _print({
        "lower_bound": lower,
        "restricted_value": restricted,
        "rounds": args.seesaw,
        "seed": args.seed,
        "best_strategy": {"p_x_given_y": strategy.p_x_given_y.tolist(), "n_branches": strategy.n_branches},
    })
    return EXIT_CODES['ok']


def cmd_bounds(args: argparse.Namespace) -> int:
    """两条上界链，每层附带对应的不等式标签"""
    assemblage = read_assemblage(args.path)
    _print({
        "restricted": restricted_upper_bound(assemblage).to_dict(),
        "full": upper_bound_full(assemblage).to_dict(),
    })
    return EXIT_CODES['ok']


def cmd_suite(args: argparse.Namespace) -> int:
    """性质测试；失败是数据，退出码始终为 0"""
    config = {}
    if args.trials is not None:
        if args.trials < 0:
            raise UsageError(f"--trials 不能为负: {args.trials}")
        config['trials'] = args.trials
    if args.threads is not None:
        config['max_workers'] = max(1, args.threads)
    report = run_suite(config, args.seed)
    if args.out is not None:
        write_text(report_json(report), args.out)
    if args.log_dir is not None:
        suite_logger = SuiteLogger(args.log_dir)
        suite_logger.log_report(report)
        logger.info(f"CSV 日志: {suite_logger.get_csv_path()}, JSON 报告: {suite_logger.get_json_path()}")
    write_text(report_json(report))
    return EXIT_CODES['ok']


def _parse_shape(params: Optional[str]) -> List[int]:
    if not params:
        return [2, 2, 2]
    try:
        shape = [int(v) for v in params.split(",")]
    except ValueError as e:
        raise UsageError(f"--params 应为 'X,A,D'，实际: {params}") from e
    if len(shape) != 3 or min(shape) < 1:
        raise UsageError(f"--params 应为三个正整数 'X,A,D'，实际: {params}")
    if shape[1] ** shape[0] > LHS_CONFIG['strategy_cap']:
        raise UsageError(f"|A|^|X| = {shape[1] ** shape[0]} 超过策略上限 {LHS_CONFIG['strategy_cap']}")
    return shape


def cmd_gen(args: argparse.Namespace) -> int:
    """生成集合文档：random（X,A,D）、lhs（X,A,D）或 werner（η）"""
    rng = make_rng(args.seed)
    if args.kind == "werner":
        try:
            eta = float(args.params) if args.params else 1.0
        except ValueError as e:
            raise UsageError(f"werner 的 --params 应为可见度 η，实际: {args.params}") from e
        if not 0.0 <= eta <= 1.0 or np.isnan(eta):
            raise UsageError(f"可见度必须在 [0, 1] 内: {eta}")
        assemblage = werner_assemblage(eta)
    elif args.kind == "lhs":
        assemblage = lhs_assemblage(random_lhs_model(*_parse_shape(args.params), rng))
    else:
        assemblage = random_assemblage(*_parse_shape(args.params), rng)
    write_text(assemblage_json(assemblage), args.out)
    return EXIT_CODES['ok']


# ========== 参数解析 ==========

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="steering_analysis", description="量子导向量化工具")
    parser.add_argument("--log-level", default="WARNING", help="标准错误上的日志级别")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check-lhs", help="LHS 可行性判定")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=None, help="迹范数残差阈值")
    p.add_argument("--max-iter", type=int, default=None)
    p.set_defaults(handler=cmd_check_lhs)

    p = sub.add_parser("rres", help="受限相对熵导向量区间")
    p.add_argument("path")
    p.add_argument("--inner-tol", type=float, default=None)
    p.add_argument("--outer-iters", type=int, default=None)
    p.add_argument("--exchanged", action="store_true", help="使用 inf-sup 顺序")
    p.set_defaults(handler=cmd_rres)

    p = sub.add_parser("distance", help="集合间迹距离")
    p.add_argument("path1")
    p.add_argument("path2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--restricted", action="store_true", help="只计算 Δ^R（默认）")
    mode.add_argument("--seesaw", type=int, default=None, metavar="N", help="随机仪器轮数")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("bounds", help="上界链")
    p.add_argument("path")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("suite", help="性质测试")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--threads", type=int, default=None, help="覆盖 STEERLIB_THREADS")
    p.add_argument("--out", default=None, help="JSON 报告路径")
    p.add_argument("--log-dir", default=None, help="CSV 日志目录")
    p.set_defaults(handler=cmd_suite)

    p = sub.add_parser("gen", help="生成集合文档")
    p.add_argument("--kind", choices=("random", "lhs", "werner"), default="random")
    p.add_argument("--params", default=None, help="random/lhs: 'X,A,D'；werner: η")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    命令行入口

    返回:
        退出码
    """
    try:
        args = build_parser().parse_args(argv)
        setup_logging(args.log_level)
        return int(args.handler(args))
    except UsageError as e:
        _stderr(f"参数错误: {e}")
    except DocumentError as e:
        _stderr(f"文档错误: {e}")
    except SteeringError as e:
        _stderr(f"{type(e).__name__}: {e}")
    except ValueError as e:
        _stderr(f"输入错误: {e}")
    except OSError as e:
        _stderr(f"文件错误: {e}")
    return EXIT_CODES['error']


def _stderr(message: str) -> None:
    sys.stderr.write(message + "\n")
    sys.stderr.flush()
