"""
Parabolic subalgebras given by crossed simple roots.

A crossed set S defines the grading deg_S(beta) = sum of the S-coefficients
of beta. The parabolic p contains every root of degree >= 0 (so the whole
Borel of positive roots); the roots of negative degree are the omitted
roots, whose root spaces form a basis of the tangent space g/p.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import AuditIndexError, NotARootError, NotOmittedError, ParabolicIndexError
from .root_system import Root, RootSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Parabolic:
    """
    A parabolic subalgebra p of g, described at root level.

    Attributes:
        root_system: The root system of g
        crossed: Sorted 1-based indices of the crossed simple roots
        label: Human-readable name (e.g. 'projective:3' or 'D4/{4}')
    """
    root_system: RootSystem
    crossed: Tuple[int, ...]
    label: str = ""

    def grading(self, beta: Root) -> int:
        """deg_S(beta): sum of the coefficients at crossed nodes."""
        return sum(beta.coefficients[i - 1] for i in self.crossed)

    def is_omitted(self, beta: Root) -> bool:
        return self.grading(beta) < 0

    def in_p(self, beta: Root) -> bool:
        """True for p-roots and for the zero node (the Cartan part)."""
        return self.grading(beta) >= 0

    @property
    def omitted_roots(self) -> Tuple[Root, ...]:
        """Omitted roots in enumeration order (negated positive-root order)."""
        return tuple(r for r in self.root_system.negative_roots if self.is_omitted(r))

    @property
    def p_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.root_system.roots if not self.is_omitted(r))

    @property
    def levi_roots(self) -> Tuple[Root, ...]:
        """Roots of degree 0 (the Levi factor)."""
        return tuple(r for r in self.root_system.roots if self.grading(r) == 0)

    @property
    def dim_gp(self) -> int:
        """dim g/p = number of omitted roots."""
        return len(self.omitted_roots)

    @property
    def lie_type(self):
        return self.root_system.lie_type

    def omitted_index(self, beta: Root) -> int:
        """Position of an omitted root in enumeration order."""
        try:
            return self.omitted_roots.index(beta)
        except ValueError:
            raise NotOmittedError(f"{beta} is not omitted from {self.describe()}")

    def require_omitted(self, beta: Root, role: str = "root") -> Root:
        """Validate that beta is an omitted root of this parabolic."""
        if not self.root_system.is_root(beta):
            raise NotARootError(f"{role} {list(beta.coefficients)} is not a root of {self.lie_type}")
        if not self.is_omitted(beta):
            listing = ", ".join(str(list(r.coefficients)) for r in self.omitted_roots) or "none"
            raise NotOmittedError(
                f"{role} {list(beta.coefficients)} is not omitted from {self.describe()}; "
                f"omitted roots are: {listing}"
            )
        return beta

    def describe(self) -> str:
        crossed = ",".join(str(i) for i in self.crossed)
        base = f"{self.lie_type}/{{{crossed}}}"
        if self.label and self.label != base:
            return f"{self.label} ({base})"
        return base


def make_parabolic(rs: RootSystem, crossed: Iterable[int], label: str = "") -> Parabolic:
    """
    Build the parabolic with the given crossed simple roots.

    Args:
        rs: Root system of g
        crossed: 1-based Bourbaki indices (may be empty, giving p = g)
        label: Optional display name

    Returns:
        Parabolic with every root classified

    Raises:
        ParabolicIndexError: if an index is outside 1..rank
    """
    indices = sorted(set(int(i) for i in crossed))
    for i in indices:
        if i < 1 or i > rs.rank:
            raise ParabolicIndexError(
                f"Crossed index {i} out of range 1..{rs.rank} for {rs.lie_type}"
            )
    parabolic = Parabolic(root_system=rs, crossed=tuple(indices), label=label)
    if not indices:
        logger.warning(f"Empty crossed set for {rs.lie_type}: p = g and G/P is a point")
    logger.debug(f"Parabolic {parabolic.describe()}: dim g/p = {parabolic.dim_gp}")
    return parabolic


class FlagShape(BaseModel):
    """
    Block sizes k_1..k_p of a partial flag in C^n.

    Row index i and column index j of the matrix (1 <= j < i <= n) sit in
    blocks t and s respectively, determined by the cumulative sums
    k_1 + ... + k_{s-1} < j <= k_1 + ... + k_s.
    """
    model_config = ConfigDict(frozen=True)

    block_sizes: Tuple[int, ...] = Field(..., min_length=2)

    @field_validator('block_sizes')
    @classmethod
    def validate_blocks(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        for k in v:
            if k < 1:
                raise ValueError(f"Block size {k} must be positive")
        return v

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    @property
    def cumulative(self) -> List[int]:
        """Partial sums k_1, k_1+k_2, ..., n."""
        sums, total = [], 0
        for k in self.block_sizes:
            total += k
            sums.append(total)
        return sums

    @property
    def crossed(self) -> List[int]:
        """Crossed nodes of A_{n-1}: every partial sum except n."""
        return self.cumulative[:-1]

    def block_of(self, index: int) -> int:
        """1-based block containing matrix index 1..n."""
        if index < 1 or index > self.n:
            raise AuditIndexError(f"Index {index} out of range 1..{self.n}")
        for s, bound in enumerate(self.cumulative, 1):
            if index <= bound:
                return s
        raise AuditIndexError(f"Index {index} out of range 1..{self.n}")

    def first_index(self, block: int) -> int:
        """First matrix index of a 1-based block."""
        return 1 if block == 1 else self.cumulative[block - 2] + 1

    def blocks_for(self, i: int, j: int) -> Tuple[int, int]:
        """
        Blocks (s, t) of column j and row i.

        Raises:
            AuditIndexError: unless 1 <= j < i <= n with j, i in different blocks
        """
        if not 1 <= j < i <= self.n:
            raise AuditIndexError(f"Need 1 <= j < i <= {self.n}, got i={i}, j={j}")
        s, t = self.block_of(j), self.block_of(i)
        if s == t:
            raise AuditIndexError(
                f"Entry (i={i}, j={j}) lies in diagonal block {s}; it belongs to p, not g/p"
            )
        return s, t

    def alpha(self, i: int, j: int, rank: Optional[int] = None) -> Root:
        """
        The omitted root of the matrix entry in row i, column j.

        The entry E_ij (i > j) has root e_i - e_j = -(a_j + ... + a_{i-1}).
        """
        self.blocks_for(i, j)
        rank = rank if rank is not None else self.n - 1
        coeffs = [0] * rank
        for c in range(j, i):
            coeffs[c - 1] = -1
        return Root(tuple(coeffs))

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.block_sizes)
