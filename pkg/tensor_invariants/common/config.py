from __future__ import annotations
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional
from .errors import ConfigError

TOLERANCE_ENV = "TENSOR_INVARIANTS_TOL"
"""Environment variable overriding the default classification tolerance."""


def _positive(name: str, value: float) -> float:
    if not value > 0.0:
        raise ConfigError(f"{name} must be positive, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class Tolerances:
    """Tolerances used across the library; flag > environment > default."""
    classify: float = 1e-9
    invariance: float = 1e-8
    audit: float = 1e-9

    def __post_init__(self) -> None:
        _positive("classify", self.classify)
        _positive("invariance", self.invariance)
        _positive("audit", self.audit)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> Tolerances:
        env = os.environ if environ is None else environ
        raw = env.get(TOLERANCE_ENV)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            value = float(raw)
        except ValueError as e:
            raise ConfigError(f"{TOLERANCE_ENV}={raw!r} is not a number") from e
        return cls(classify=_positive(TOLERANCE_ENV, value))

    def with_classify(self, value: Optional[float]) -> Tolerances:
        return self if value is None else replace(self, classify=_positive("--tol", value))
