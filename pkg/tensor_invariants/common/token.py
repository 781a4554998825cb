from __future__ import annotations
from typing import TypeVar, Generic, Optional
from dataclasses import dataclass
from enum import Enum


# Token type must define EOF
TokenTypeT = TypeVar("TokenTypeT", bound=Enum)


@dataclass(frozen=True, slots=True)
class Token(Generic[TokenTypeT]):
    """A lexed token; `pos` is the offset of its first character in the source."""
    type: TokenTypeT
    value: Optional[str] = None
    pos: int = 0

    @classmethod
    def eof(cls, token_type: TokenTypeT, pos: int) -> Token[TokenTypeT]:
        return cls(token_type, None, pos)

    def __repr__(self) -> str:
        if self.value is None:
            return self.type.name
        return f"{self.type.name}({self.value!r})"
