from __future__ import annotations

from typing import Dict, List, Optional


class QuiverToolError(Exception):
    """Base class for every error raised by the library."""


class ParseError(QuiverToolError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class InvalidQuiverError(QuiverToolError):
    pass


class DimensionMismatchError(QuiverToolError):
    pass


class PreconditionError(QuiverToolError):
    """Raised with every violated precondition listed individually."""

    def __init__(self, violations: List[str]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SymbolicLimitExceeded(QuiverToolError):
    def __init__(self, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"symbolic limit exceeded ({size} > {limit})")


class UnstableDecompositionError(QuiverToolError):
    def __init__(self, per_seed: Dict[int, List[tuple]]) -> None:
        self.per_seed = per_seed
        lines = ", ".join(f"seed {s}: {parts}" for s, parts in per_seed.items())
        super().__init__(f"canonical decomposition disagrees across seeds: {lines}")


class CertificateError(QuiverToolError):
    pass


class WitnessSearchError(QuiverToolError):
    """A nonzero determinant whose sampled points all vanished."""
