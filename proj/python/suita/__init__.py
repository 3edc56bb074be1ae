"""Green's function, capacity and Bergman kernel on complex tori.

Thin wrapper over the C++ core; ``tau`` arguments are Python complex numbers
with positive imaginary part.
"""
from ._core import (  # noqa: F401
    IM_FLOOR,
    DomainError,
    NonConvergenceError,
    PreconditionError,
    bergman_density,
    capacity,
    check_theta_identity,
    eta,
    f_ratio,
    green_function,
    minimize,
    nome,
    sweep,
    theta_product,
    theta_series,
)

__all__ = [
    "IM_FLOOR",
    "DomainError",
    "NonConvergenceError",
    "PreconditionError",
    "bergman_density",
    "capacity",
    "check_theta_identity",
    "eta",
    "f_ratio",
    "green_function",
    "minimize",
    "nome",
    "sweep",
    "theta_product",
    "theta_series",
]
