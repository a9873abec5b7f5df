"""Holomorphic vector bundles on diagonal Hopf manifolds."""
from .config import Config
from .errors import (
    ClassificationError,
    CodecError,
    DomainError,
    HopfError,
    ModelInconsistencyError,
    PreconditionError,
    UndefinedCasimirError,
    UnsupportedKindError,
)
from .factors import Factor, detect_monomial
from .kernels import BACKEND
from .manifold import HopfManifold, Kind, classify_manifold

__all__ = [
    "BACKEND",
    "ClassificationError",
    "CodecError",
    "Config",
    "DomainError",
    "Factor",
    "HopfError",
    "HopfManifold",
    "Kind",
    "ModelInconsistencyError",
    "PreconditionError",
    "UndefinedCasimirError",
    "UnsupportedKindError",
    "classify_manifold",
    "detect_monomial",
]

__version__ = "0.1.0"
