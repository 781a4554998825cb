from typing import Generic, Iterator, List, TypeVar
from .token import Token, TokenTypeT


class ParseError(Exception):
    """Malformed input: JSON, inline literal or command-line flag."""
    code = "ParseError"


T = TypeVar("T")


class Peekable(Iterator[T], Generic[T]):
    """An iterator with one-element lookahead."""

    def __init__(self, it: Iterator[T]) -> None:
        self._it = it
        self._buffer: List[T] = []

    def __next__(self) -> T:
        if self._buffer:
            return self._buffer.pop()
        return next(self._it)

    def peek(self) -> T:
        if not self._buffer:
            self._buffer.append(next(self._it))
        return self._buffer[-1]

    def next(self) -> T:
        return self.__next__()


def expect(tokens: Peekable[Token[TokenTypeT]], expected_type: TokenTypeT) -> Token[TokenTypeT]:
    """Expect the next token to be of the given type, otherwise raise ParseError."""
    token = tokens.next()
    if token.type != expected_type:
        raise ParseError(
            f"Expected {expected_type.name} at position {token.pos}, got {token!r}"
        )
    return token


def expect_value(tokens: Peekable[Token[TokenTypeT]], ttype: TokenTypeT) -> str:
    """Expect the next token to be of the given type and return its value."""
    token = expect(tokens, ttype)
    if token.value is None:
        raise ParseError(f"Token {ttype.name} has no value")
    return token.value
