"""
日志工具模块

提供结构化日志记录功能，用于记录性质测试的逐项结果与完整报告。
CSV 供机器分析（含运行时间），JSON 报告不含运行时间，相同种子逐字节一致。
"""

import csv
import json
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..config import LOG_CONFIG, LOGS_DIR
from ..models.results import PropertyResult, SuiteReport

logger = logging.getLogger(__name__)


def setup_logging(level: Union[int, str] = logging.WARNING) -> None:
    """
    配置根日志器输出到标准错误

    标准输出只用于 JSON 结果。

    参数:
        level: 日志级别（整数或 'DEBUG' / 'INFO' 等名称）
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f"未知日志级别: {level}")
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, '_steerlib', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_CONFIG['format']))
    handler._steerlib = True
    root.addHandler(handler)
    root.setLevel(level)


class SuiteLogger:
    """性质测试结构化日志记录器"""

    def __init__(self, log_dir: Optional[Union[str, Path]] = None, timestamp: Optional[str] = None):
        """
        初始化日志记录器

        参数:
            log_dir: 日志目录路径，若为 None 则使用 config.LOGS_DIR
            timestamp: 文件名时间戳，缺省为当前时间
        """
        self.log_dir = Path(log_dir) if log_dir else Path(LOGS_DIR)
        self.log_dir.mkdir(parents=True, exist_ok=True)

        # 生成带时间戳的日志文件名
        timestamp = timestamp or datetime.now().strftime('%Y%m%d_%H%M%S')
        self.csv_file = self.log_dir / LOG_CONFIG['suite_log_file'].format(timestamp=timestamp)
        self.json_file = self.log_dir / LOG_CONFIG['suite_report_file'].format(timestamp=timestamp)

        # 定义 CSV 字段
        self.fieldnames = [
            "unix_timestamp",  # Unix 时间戳
            "timestamp",  # ISO 8601 时间戳
            "seed",  # 套件种子
            "property",  # 性质名称
            "trials",  # 试验次数
            "failures",  # 失败次数
            "worst_margin",  # 最差带符号余量
            "runtime",  # 运行时间（秒）
            "passed"  # 是否通过
        ]

        # 写入 CSV 文件头
        self._write_csv_header()

    def _write_csv_header(self) -> None:
        """写入 CSV 文件头（幂等操作）"""
        if not self.csv_file.exists():
            with open(self.csv_file, 'w', newline='', encoding=LOG_CONFIG['encoding']) as f:
                writer = csv.DictWriter(f, fieldnames=self.fieldnames)
                writer.writeheader()

    def log_property(self, result: PropertyResult, seed: int) -> bool:
        """
        记录单个性质的结果

        参数:
            result: 性质汇总
            seed: 套件种子

        返回:
            是否成功写入
        """
        try:
            now = datetime.now()
            row: Dict[str, Any] = {
                "unix_timestamp": now.timestamp(),
                "timestamp": now.isoformat(),
                "seed": seed,
                "property": result.name,
                "trials": result.trials,
                "failures": result.failures,
                "worst_margin": "" if result.worst_margin is None else repr(result.worst_margin),
                "runtime": f"{result.runtime:.3f}",
                "passed": result.passed,
            }
            with open(self.csv_file, 'a', newline='', encoding=LOG_CONFIG['encoding']) as f:
                writer = csv.DictWriter(f, fieldnames=self.fieldnames)
                writer.writerow(row)
            return True
        except OSError as e:
            logger.error(f"性质日志记录失败: {e}")
            return False

    def log_report(self, report: SuiteReport) -> bool:
        """逐项写入 CSV 并输出 JSON 报告"""
        ok = all(self.log_property(p, report.seed) for p in report.properties)
        return write_report(report, self.json_file) and ok

    def get_csv_path(self) -> str:
        """获取 CSV 日志文件路径"""
        return str(self.csv_file)

    def get_json_path(self) -> str:
        """获取 JSON 报告文件路径"""
        return str(self.json_file)


def report_json(report: SuiteReport) -> str:
    """报告的规范 JSON 文本（键有序、不含运行时间）"""
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def write_report(report: SuiteReport, path: Union[str, Path]) -> bool:
    """
    写出 JSON 报告

    返回:
        是否成功写入
    """
    try:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report_json(report), encoding=LOG_CONFIG['encoding'])
        return True
    except OSError as e:
        logger.error(f"报告写出失败 {path}: {e}")
        return False
