from enum import Enum, auto
from typing import Tuple, Iterator
from ..common.token import Token
from ..common.lexer_utils import LexerError, generic_lexer, scan_number, scan_word


class LiteralTokenType(Enum):
    """Token types for inline command-line literals (`1,0,-2.5e-1`, `euclidean:3`)."""
    NUMBER = auto()
    WORD = auto()
    COMMA = auto()
    COLON = auto()
    EOF = auto()


LiteralToken = Token[LiteralTokenType]


def literal_next_token(src: str, i: int) -> Tuple[LiteralToken, int]:
    """Get the next token from the source string starting at index i."""
    match c := src[i]:
        case ',':
            return Token(LiteralTokenType.COMMA, None, i), i + 1
        case ':':
            return Token(LiteralTokenType.COLON, None, i), i + 1
        case _ if c.isdigit() or c in "+-.":
            text, j = scan_number(src, i)
            return Token(LiteralTokenType.NUMBER, text, i), j
        case _ if c.isalpha():
            text, j = scan_word(src, i)
            return Token(LiteralTokenType.WORD, text, i), j
        case _:
            raise LexerError(f"Unexpected character {c!r} at position {i}")


def lex_literal(src: str) -> Iterator[LiteralToken]:
    """Lex an inline literal into tokens."""
    return generic_lexer(src, literal_next_token, LiteralTokenType)
