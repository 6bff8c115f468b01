"""
Named models of rational homogeneous varieties.

    projective n        A_n / {1}
    quadric n           B_{(n+1)/2} / {1} (n odd), D_{(n+2)/2} / {1} (n even)
    grassmannian k,n    A_{n-1} / {k}
    flag k_1,...,k_p    A_{n-1} / {k_1, k_1+k_2, ...}
    spinor n            D_n / {n}
    lagrangian n        C_n / {n}
"""

import inspect
import logging
from typing import Optional, Sequence

from .errors import ModelSpecError
from .parabolic import FlagShape, Parabolic, make_parabolic
from .registry import ModelRegistry, ModelSpec, parse_model_spec, register_model
from .root_system import Family, LieType, Root, build

logger = logging.getLogger(__name__)


def _classical(family: Family, rank: int, crossed: Sequence[int], label: str) -> Parabolic:
    rs = build(LieType(family=family, rank=rank))
    return make_parabolic(rs, crossed, label=label)


@register_model("projective")
def projective(n: int) -> Parabolic:
    if n < 1:
        raise ModelSpecError(f"projective needs n >= 1, got {n}")
    return _classical(Family.A, n, [1], f"projective:{n}")


@register_model("quadric")
def quadric(n: int) -> Parabolic:
    """Smooth quadric Q^n in P^{n+1}; degenerate n <= 2 rejected."""
    if n < 3:
        raise ModelSpecError(f"quadric needs n >= 3 (Q^1, Q^2 are degenerate cases), got {n}")
    if n % 2:
        return _classical(Family.B, (n + 1) // 2, [1], f"quadric:{n}")
    return _classical(Family.D, (n + 2) // 2, [1], f"quadric:{n}")


@register_model("grassmannian")
def grassmannian(k: int, n: int) -> Parabolic:
    """Gr(k, n); Gr(1, n) is returned as projective n-1."""
    if not 1 <= k < n:
        raise ModelSpecError(f"grassmannian needs 1 <= k < n, got k={k}, n={n}")
    if k == 1:
        logger.debug(f"grassmannian:1,{n} normalized to projective:{n - 1}")
        return projective(n - 1)
    return _classical(Family.A, n - 1, [k], f"grassmannian:{k},{n}")


@register_model("flag")
def flag(*block_sizes: int) -> Parabolic:
    try:
        shape = FlagShape(block_sizes=tuple(block_sizes))
    except ValueError as e:
        raise ModelSpecError(f"Bad flag block sizes {list(block_sizes)}: {e}")
    label = f"flag:{shape}"
    return _classical(Family.A, shape.n - 1, shape.crossed, label)


@register_model("spinor")
def spinor(n: int) -> Parabolic:
    if n < 3:
        raise ModelSpecError(f"spinor needs n >= 3, got {n}")
    return _classical(Family.D, n, [n], f"spinor:{n}")


@register_model("lagrangian")
def lagrangian(n: int) -> Parabolic:
    if n < 2:
        raise ModelSpecError(f"lagrangian needs n >= 2, got {n}")
    return _classical(Family.C, n, [n], f"lagrangian:{n}")


def named_model(name: str, parameters: Sequence[int]) -> Parabolic:
    """
    Build a named model.

    Args:
        name: Registered model name
        parameters: Integer parameters in the order the factory takes them

    Returns:
        Parabolic labelled with the model name

    Raises:
        ModelSpecError: for unknown names or the wrong number of parameters
    """
    factory = ModelRegistry.get_factory(name)
    if factory is None:
        known = ", ".join(ModelRegistry.list_models())
        raise ModelSpecError(f"Unknown model '{name}' (known: {known})")
    parameters = tuple(parameters)
    if name != "flag":
        expected = len(inspect.signature(factory).parameters)
        if len(parameters) != expected:
            raise ModelSpecError(f"Model '{name}' takes {expected} parameter(s), got {len(parameters)}")
    elif len(parameters) < 2:
        raise ModelSpecError(f"Model 'flag' needs at least two block sizes, got {len(parameters)}")
    return factory(*parameters)


def resolve(spec: ModelSpec) -> Parabolic:
    """The parabolic a ModelSpec describes (alpha is ignored here)."""
    if spec.is_named:
        return named_model(spec.name, spec.parameters)
    return make_parabolic(build(spec.lie_type), spec.crossed)


def resolve_text(text: str) -> Parabolic:
    return resolve(parse_model_spec(text))


def spec_alpha(parabolic: Parabolic, spec: ModelSpec) -> Optional[Root]:
    """The alpha carried by a spec, validated against the parabolic."""
    if spec.alpha is None:
        return None
    return parabolic.require_omitted(parabolic.root_system.root(spec.alpha), "alpha")
