"""Numerical library for the generalized modified Bessel function
K_{z,w}(x), its representations, and the exact identities it satisfies."""

from .backend import backend_name
from .config import DEFAULT_CONFIG, EvalConfig, Evaluation
from .errors import BesselKzwError, DomainError, NonConvergence, PoleError

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "DEFAULT_CONFIG",
    "EvalConfig",
    "Evaluation",
    "BesselKzwError",
    "DomainError",
    "NonConvergence",
    "PoleError",
    "__version__",
]
