"""Memory-cap resolution for arity-sized buffers."""

from .settings import get_settings


def resolve_max_n(cap: int | None = None) -> int:
    """Explicit cap if given, otherwise the environment/settings value."""
    if cap is not None:
        return int(cap)
    return get_settings().max_n


def check_arity(n: int, cap: int | None = None) -> None:
    """Refuse arities whose 2^n buffers would exceed the memory cap."""
    from ..errors import ParameterError, ResourceError

    if n < 1:
        raise ParameterError(f"arity must be >= 1, got {n}")
    max_n = resolve_max_n(cap)
    if n > max_n:
        raise ResourceError(n, max_n)
