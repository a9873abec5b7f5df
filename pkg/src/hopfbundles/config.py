from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import DomainError

DEFAULT_TOL = 1e-9
DEFAULT_EXP_BOUND = 32

THEOREM = "theorem"
LEMMA = "lemma"


@dataclass(frozen=True)
class Config:
    """Numerical and convention settings threaded through the CLI."""

    tol: float = DEFAULT_TOL
    exp_bound: int = DEFAULT_EXP_BOUND
    det_convention: str = THEOREM
    classical_base_dim: Optional[int] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.exp_bound < 1:
            raise DomainError("exp_bound must be >= 1")
        if self.det_convention not in (THEOREM, LEMMA):
            raise DomainError(f"unknown det convention {self.det_convention!r}")
        if self.classical_base_dim is not None and self.classical_base_dim < 1:
            raise DomainError("classical_base_dim must be >= 1")

    def as_meta(self) -> dict:
        return asdict(self)
