"""
文档读写

JSON 文本 ↔ pydantic 文档 ↔ 数据模型。
浮点数由 json 模块按最短可还原表示输出，读回后逐位一致。
"""

import json
import sys
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import ValidationError

from ..models.assemblage_models import Assemblage
from ..models.documents import AssemblageDocument, LhsModelDocument
from ..models.lhs_models import LhsModel


class DocumentError(ValueError):
    """文档无法解析或不满足模型约束"""


def dumps(payload: Any) -> str:
    """统一的 JSON 输出格式（UTF-8、键有序）"""
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"JSON 解析失败（第 {e.lineno} 行第 {e.colno} 列）: {e.msg}") from e


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(p) for p in first.get('loc', ())) or "document"
    return f"{location}: {first.get('msg', 'invalid')}"


def parse_assemblage(text: str) -> Assemblage:
    """
    由 JSON 文本构造集合

    异常:
        DocumentError: JSON 非法或形状不符
        InvariantViolationError: 元素不满足集合不变量（消息中带不变量名，来自 core.errors）
    """
    try:
        document = AssemblageDocument.model_validate(_load_json(text))
    except ValidationError as e:
        raise DocumentError(f"集合文档非法 ({_describe(e)})") from e
    return document.to_assemblage()


def read_assemblage(path: Union[str, Path]) -> Assemblage:
    """读取集合文档；path 为 '-' 时从标准输入读取"""
    if str(path) == "-":
        return parse_assemblage(sys.stdin.read())
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise DocumentError(f"无法读取 {path}: {e}") from e
    return parse_assemblage(text)


def assemblage_json(assemblage: Assemblage) -> str:
    return dumps(AssemblageDocument.from_assemblage(assemblage).model_dump())


def lhs_model_payload(model: LhsModel) -> dict:
    return LhsModelDocument.from_model(model).model_dump()


def parse_lhs_model(text: str) -> LhsModel:
    try:
        document = LhsModelDocument.model_validate(_load_json(text))
    except ValidationError as e:
        raise DocumentError(f"LHS 模型文档非法 ({_describe(e)})") from e
    return document.to_model()


def write_text(text: str, out: Optional[Union[str, Path]] = None) -> None:
    """写到文件；out 为空时写到标准输出"""
    if not text.endswith("\n"):
        text += "\n"
    if out is None or str(out) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')


__all__ = [
    'DocumentError',
    'assemblage_json',
    'dumps',
    'lhs_model_payload',
    'parse_assemblage',
    'parse_lhs_model',
    'read_assemblage',
    'write_text',
]
