"""
Registries for named models and formula audits.

Named models ('projective', 'spinor', ...) map parameters to a Parabolic;
audits compare closed-form splitting formulas with computed ones. Both are
looked up by name and registered with decorators, e.g.:

    @register_model("spinor")
    def spinor(n: int) -> Parabolic:
        ...

    @register_audit("lagrangian")
    class LagrangianAudit(BaseAudit):
        ...

This module also parses model specifications of the form
'name:p1,p2[@alpha]' or 'TYPE/i,j[@alpha]'.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple, Type

from pydantic import BaseModel, ConfigDict, Field

from .base_audit import BaseAudit
from .errors import ModelSpecError
from .parabolic import Parabolic
from .root_system import LieType

logger = logging.getLogger(__name__)

ModelFactory = Callable[..., Parabolic]


class ModelRegistry:
    """
    Registry of named model factories.

    Usage:
        ModelRegistry.register("projective", projective)
        factory = ModelRegistry.get_factory("projective")
    """

    _factories: Dict[str, ModelFactory] = {}

    @classmethod
    def register(cls, name: str, factory: ModelFactory) -> None:
        cls._factories[name.lower()] = factory
        logger.debug(f"Registered model {name}: {factory.__name__}")

    @classmethod
    def get_factory(cls, name: str) -> Optional[ModelFactory]:
        return cls._factories.get(name.lower())

    @classmethod
    def list_models(cls) -> List[str]:
        return sorted(cls._factories)

    @classmethod
    def is_registered(cls, name: str) -> bool:
        return name.lower() in cls._factories

    @classmethod
    def clear(cls) -> None:
        """Clear all registered models (mainly for testing)."""
        cls._factories.clear()


class AuditRegistry:
    """Registry of audit classes keyed by the model names they cover."""

    _audits: Dict[str, Type[BaseAudit]] = {}

    @classmethod
    def register(cls, name: str, audit_class: Type[BaseAudit]) -> None:
        if not issubclass(audit_class, BaseAudit):
            raise TypeError(f"{audit_class} must be a subclass of BaseAudit")
        cls._audits[name.lower()] = audit_class
        logger.debug(f"Registered audit for {name}: {audit_class.__name__}")

    @classmethod
    def get_audit_class(cls, name: str) -> Optional[Type[BaseAudit]]:
        return cls._audits.get(name.lower())

    @classmethod
    def list_audits(cls) -> List[str]:
        return sorted(cls._audits)

    @classmethod
    def clear(cls) -> None:
        cls._audits.clear()


def register_model(name: str):
    """Decorator to register a named model factory."""
    def decorator(factory: ModelFactory) -> ModelFactory:
        ModelRegistry.register(name, factory)
        return factory
    return decorator


def register_audit(*names: str):
    """
    Decorator to register an audit class under one or more model names.

    Usage:
        @register_audit("flag", "grassmannian")
        class FlagAudit(BaseAudit):
            ...
    """
    def decorator(cls: Type[BaseAudit]) -> Type[BaseAudit]:
        for name in names:
            AuditRegistry.register(name, cls)
        return cls
    return decorator


# === Model specifications ===

def parse_int_list(text: str, what: str, original: Optional[str] = None) -> Tuple[int, ...]:
    """Parse "1,-2,3"; an empty string gives ()."""
    original = text if original is None else original
    text = text.strip()
    if not text:
        return ()
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ModelSpecError(f"Bad {what} '{token}' in '{original}'")
    return tuple(values)


class ModelSpec(BaseModel):
    """
    A parsed model specification.

    Either a named model with integer parameters ('grassmannian:2,4') or a
    Lie type with crossed nodes ('A3/2'); both may carry an alpha as
    simple-root coefficients after '@' ('A3/2@0,-1,0').
    """
    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    parameters: Tuple[int, ...] = ()
    lie_type: Optional[LieType] = None
    crossed: Tuple[int, ...] = ()
    alpha: Optional[Tuple[int, ...]] = Field(default=None, description="Simple-root coefficients")

    @property
    def is_named(self) -> bool:
        return self.name is not None

    def format(self) -> str:
        """Canonical text form; parse(format()) gives back an equal spec."""
        if self.is_named:
            body = f"{self.name}:{','.join(str(p) for p in self.parameters)}"
        else:
            body = f"{self.lie_type}/{','.join(str(i) for i in self.crossed)}"
        if self.alpha is not None:
            body += "@" + ",".join(str(c) for c in self.alpha)
        return body

    def __str__(self) -> str:
        return self.format()


def parse_model_spec(text: str) -> ModelSpec:
    """
    Parse 'name:params', 'TYPE/crossed' or either form followed by '@alpha'.

    Raises:
        ModelSpecError: on malformed input, naming the offending token
    """
    original = text
    text = text.strip()
    if not text:
        raise ModelSpecError("Empty model spec")

    alpha = None
    if "@" in text:
        text, alpha_text = text.split("@", 1)
        alpha = parse_int_list(alpha_text, "alpha coefficient", original)
        if not alpha:
            raise ModelSpecError(f"Empty alpha after '@' in model spec '{original}'")

    if "/" in text:
        type_text, crossed_text = text.split("/", 1)
        lie_type = LieType.parse(type_text)
        crossed = tuple(sorted(set(parse_int_list(crossed_text, "crossed index", original))))
        return ModelSpec(lie_type=lie_type, crossed=crossed, alpha=alpha)

    name, _, params_text = text.partition(":")
    name = name.strip().lower()
    if not name.isidentifier():
        raise ModelSpecError(f"Bad model name '{name}' in model spec '{original}'")
    parameters = parse_int_list(params_text, "parameter", original)
    return ModelSpec(name=name, parameters=parameters, alpha=alpha)
