# CLI模块初始化
"""
命令行模块

提供 check-lhs / rres / distance / bounds / suite / gen 子命令与 JSON 文档读写
"""

from .app import build_parser, main

__all__ = ['build_parser', 'main']
