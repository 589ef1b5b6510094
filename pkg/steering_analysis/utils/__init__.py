# Utils模块初始化
"""
工具模块

提供日志配置与性质测试的结构化记录
"""

from .logger import SuiteLogger, report_json, setup_logging, write_report

__all__ = ['SuiteLogger', 'report_json', 'setup_logging', 'write_report']
