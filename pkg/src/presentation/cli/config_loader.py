"""Reader for flat ``key = value`` run configuration files.

Values stay strings here; typing and range checks happen on the run config.
Numbers may be written as ``pi`` expressions such as ``pi/5`` or ``3*pi/16``.
"""

import ast
import math
import operator
from pathlib import Path
from typing import Dict, Iterable, Optional, Union

COMMENT = "#"

_BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}
_UNARY = {
    ast.UAdd: operator.pos,
    ast.USub: operator.neg,
}
_NAMES = {"pi": math.pi}


class ConfigFileError(ValueError):
    """Raised for unreadable config files, malformed lines and bad expressions."""


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    """Parse config text into an ordered ``key -> raw value`` mapping.

    Blank lines and ``#`` comments are skipped; a repeated key keeps its last value.
    """
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigFileError(f"{source}:{number}: expected 'key = value', got {raw.strip()!r}")
        if not key.isidentifier():
            raise ConfigFileError(f"{source}:{number}: invalid key {key!r}")
        values[key] = value
    return values


def load_config_file(path: Union[str, Path]) -> Dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigFileError(f"Cannot read config file {path}: {e}") from e
    return parse_config_text(text, source=str(path))


def parse_overrides(items: Optional[Iterable[str]]) -> Dict[str, str]:
    """``--set key=value`` items as a mapping."""
    return parse_config_text("\n".join(items or ()), source="--set")


def evaluate_number(text: str) -> float:
    """Evaluate a decimal or an arithmetic expression in ``pi``.

    Only numbers, ``pi``, ``+ - * /`` and parentheses are accepted.
    """
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise ConfigFileError(f"Not a number or pi expression: {text!r}") from e
    return float(_evaluate(tree.body, text))


def _evaluate(node: ast.AST, text: str) -> float:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        left, right = _evaluate(node.left, text), _evaluate(node.right, text)
        try:
            return _BINARY[type(node.op)](left, right)
        except ZeroDivisionError as e:
            raise ConfigFileError(f"Division by zero in {text!r}") from e
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
        return _UNARY[type(node.op)](_evaluate(node.operand, text))
    raise ConfigFileError(f"Not a number or pi expression: {text!r}")
