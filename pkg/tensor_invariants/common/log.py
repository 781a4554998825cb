import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int) -> None:
    """Attach a stderr handler to the package logger; 0 = warnings, 1 = info, 2+ = debug."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    root = logging.getLogger("tensor_invariants")
    root.setLevel(level)
    if not any(getattr(h, "_tensor_invariants", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._tensor_invariants = True  # type: ignore[attr-defined]
        root.addHandler(handler)
