"""
String calculus of homogeneous vector bundles on P^1 = SL2/B.

An elementary indecomposable B-representation is a string of weights
k, k-2, ..., k-2(m-1). In canonical form rho(H) is diagonal with those
weights and rho(X) has k, k-1, ..., k-m+2 on the superdiagonal.

Number-line convention: the "left side" of a string is its low-weight
end, so a B-invariant subspace keeps a top-weight prefix and the
quotient keeps the complementary low-weight suffix. With this reading
the tangent bundle sl2/b is the single node of weight -2, i.e. O(2).
"""

import logging
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field
from sympy import ImmutableMatrix, diag, zeros

from .errors import InvariantError, SplittingError
from .splitting_type import SplittingType

logger = logging.getLogger(__name__)


class BStringRep(BaseModel):
    """A string representation of the Borel of SL2."""
    model_config = ConfigDict(frozen=True)

    top_weight: int = Field(..., description="Highest weight k")
    node_count: int = Field(..., ge=1, description="Number of nodes m (steps n = m - 1)")

    @property
    def steps(self) -> int:
        return self.node_count - 1

    @property
    def weights(self) -> List[int]:
        return [self.top_weight - 2 * i for i in range(self.node_count)]

    @property
    def bundle_degree(self) -> int:
        """Degree d of the O(d)^m this string splits as."""
        return self.steps - self.top_weight

    def __str__(self) -> str:
        return f"string(k={self.top_weight}, m={self.node_count})"


def from_weights(weights: Sequence[int]) -> BStringRep:
    """
    Build a string from its weights, highest first.

    Raises:
        SplittingError: if the weights are not a step-2 descending chain
    """
    if not weights:
        raise SplittingError("A string needs at least one node")
    for a, b in zip(weights, weights[1:]):
        if a - b != 2:
            raise SplittingError(f"Weights {list(weights)} do not descend in steps of 2")
    return BStringRep(top_weight=weights[0], node_count=len(weights))


def canonical_matrices(rep: BStringRep) -> Tuple[ImmutableMatrix, ImmutableMatrix]:
    """
    Canonical rho(H) and rho(X) of a string.

    Returns:
        (H, X) as exact m x m integer matrices

    Raises:
        InvariantError: if [H, X] != 2X or X has an entry where the
            weights do not differ by 2
    """
    m, k = rep.node_count, rep.top_weight
    h = ImmutableMatrix(diag(*rep.weights))
    x = zeros(m, m)
    for i in range(m - 1):
        x[i, i + 1] = k - i
    x = ImmutableMatrix(x)

    if h * x - x * h != 2 * x:
        raise InvariantError(f"[H, X] != 2X for {rep}")
    for i in range(m):
        for j in range(m):
            if x[i, j] != 0 and h[i, i] - h[j, j] != 2:
                raise InvariantError(f"X[{i},{j}] nonzero but weights differ by {h[i, i] - h[j, j]}")
    return h, x


def is_equivariantly_trivial(rep: BStringRep) -> bool:
    """SL2-equivariantly trivial just when k = n, i.e. the weights are k..-k."""
    return rep.top_weight == rep.steps


def to_splitting(rep: BStringRep) -> SplittingType:
    """Center the string: O(n - k)^{n+1}."""
    return SplittingType(summands={rep.bundle_degree: rep.node_count})


def invariant_subspace(rep: BStringRep, keep: int) -> BStringRep:
    """The B-invariant subspace spanned by the `keep` top-weight nodes."""
    if not 0 < keep <= rep.node_count:
        raise SplittingError(f"keep={keep} out of range 1..{rep.node_count} for {rep}")
    return BStringRep(top_weight=rep.top_weight, node_count=keep)


def quotient(rep: BStringRep, remove: int) -> BStringRep:
    """Quotient by the subspace of the `remove` top-weight nodes."""
    if not 0 <= remove < rep.node_count:
        raise SplittingError(f"remove={remove} out of range 0..{rep.node_count - 1} for {rep}")
    return BStringRep(top_weight=rep.top_weight - 2 * remove, node_count=rep.node_count - remove)


def tensor_reps(rep1: BStringRep, rep2: BStringRep) -> SplittingType:
    """Tensor product, computed at the splitting level."""
    return to_splitting(rep1).tensor(to_splitting(rep2))


# The three strings drawn in the projective-line discussion
O_MINUS_ONE = BStringRep(top_weight=1, node_count=1)
ADJOINT = BStringRep(top_weight=2, node_count=3)
TANGENT_P1 = quotient(ADJOINT, 2)
