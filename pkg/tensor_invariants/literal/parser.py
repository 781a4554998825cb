import math
from typing import Iterator, List, Optional, Tuple
from ..common.parser_utils import ParseError, Peekable, expect, expect_value
from .lexer import LiteralTokenType, LiteralToken, lex_literal

METRIC_SHORTCUTS = ("minkowski", "euclidean")


def _number(tokens: Peekable[LiteralToken]) -> float:
    value = float(expect_value(tokens, LiteralTokenType.NUMBER))
    if not math.isfinite(value):
        raise ParseError(f"Non-finite number {value!r}")
    return value


def parse_number_list(tokens: Iterator[LiteralToken], length: Optional[int] = None) -> List[float]:
    """Parse `x,y,...` into floats, optionally requiring an exact length."""
    tokens = Peekable(tokens)
    values = [_number(tokens)]
    while tokens.peek().type == LiteralTokenType.COMMA:
        tokens.next()
        values.append(_number(tokens))
    expect(tokens, LiteralTokenType.EOF)
    if length is not None and len(values) != length:
        raise ParseError(f"Expected {length} comma-separated numbers, got {len(values)}")
    return values


def parse_metric_shortcut(tokens: Iterator[LiteralToken]) -> Tuple[str, Optional[int]]:
    """Parse `minkowski` or `euclidean:<n>` into (name, dimension)."""
    tokens = Peekable(tokens)
    name = expect_value(tokens, LiteralTokenType.WORD).lower()
    dim: Optional[int] = None
    match name:
        case "minkowski":
            pass
        case "euclidean":
            expect(tokens, LiteralTokenType.COLON)
            raw = expect_value(tokens, LiteralTokenType.NUMBER)
            if not raw.isdigit():
                raise ParseError(f"Dimension must be a positive integer, got {raw!r}")
            dim = int(raw)
        case _:
            raise ParseError(f"Unknown metric shortcut {name!r}; expected one of {METRIC_SHORTCUTS}")
    expect(tokens, LiteralTokenType.EOF)
    return name, dim


def numbers(src: str, length: Optional[int] = None) -> List[float]:
    """Lex and parse an inline number list."""
    return parse_number_list(lex_literal(src), length)


def metric_shortcut(src: str) -> Tuple[str, Optional[int]]:
    """Lex and parse an inline metric shortcut."""
    return parse_metric_shortcut(lex_literal(src))
