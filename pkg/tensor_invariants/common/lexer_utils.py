from typing import Iterator, Callable, Type, Tuple
from .token import Token, TokenTypeT


class LexerError(Exception):
    code = "ParseError"


def generic_lexer(
    src: str,
    next_token_func: Callable[[str, int], Tuple[Token[TokenTypeT], int]],
    token_type_cls: Type[TokenTypeT]
) -> Iterator[Token[TokenTypeT]]:
    """A generic lexer that uses the provided next_token_func to tokenize the input string."""
    i = 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        token, i = next_token_func(src, i)
        yield token
    yield Token.eof(token_type_cls.EOF, len(src))  # type: ignore


def scan_number(src: str, i: int) -> Tuple[str, int]:
    """Scan a signed decimal literal (with optional fraction and exponent) starting at i."""
    start = i
    if i < len(src) and src[i] in "+-":
        i += 1
    digits = 0
    while i < len(src) and src[i].isdigit():
        i, digits = i + 1, digits + 1
    if i < len(src) and src[i] == '.':
        i += 1
        while i < len(src) and src[i].isdigit():
            i, digits = i + 1, digits + 1
    if digits == 0:
        raise LexerError(f"Malformed number at position {start}")
    if i < len(src) and src[i] in "eE":
        i += 1
        if i < len(src) and src[i] in "+-":
            i += 1
        exp_start = i
        while i < len(src) and src[i].isdigit():
            i += 1
        if i == exp_start:
            raise LexerError(f"Malformed exponent at position {exp_start}")
    return src[start:i], i


def scan_word(src: str, i: int) -> Tuple[str, int]:
    """Scan an identifier made of letters, digits and underscores (first char a letter)."""
    start = i
    while i < len(src) and (src[i].isalnum() or src[i] == '_'):
        i += 1
    return src[start:i], i
