"""
Alpha-strings through omitted roots.

For an omitted root alpha, the alpha-string through beta is the maximal
chain ..., beta + alpha, beta, beta - alpha, ... of roots (or zero, which
only happens for beta = alpha in a reduced system). Ordered by decreasing
h_alpha-weight, its omitted nodes form a prefix (the g/p-piece, n_s nodes)
and the p- and zero-nodes the suffix (the p-piece, d_s nodes): the grading
deg_S(beta - k alpha) strictly increases with k because deg_S(alpha) < 0.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Set, Tuple

from .errors import InvariantError
from .p1_bundles import BStringRep, quotient
from .parabolic import Parabolic
from .root_system import Root, RootSystem, shift

logger = logging.getLogger(__name__)


class NodeTag(str, Enum):
    """Where a string node lives."""
    OMITTED = "omitted"
    PARABOLIC = "parabolic"
    ZERO = "zero"


@dataclass(frozen=True)
class StringNode:
    root: Root
    weight: int
    tag: NodeTag


@dataclass(frozen=True)
class AlphaString:
    """An alpha-string with its nodes tagged by a parabolic."""
    alpha: Root
    nodes: Tuple[StringNode, ...]

    @property
    def n_s(self) -> int:
        """Length of the g/p-piece."""
        return sum(1 for node in self.nodes if node.tag == NodeTag.OMITTED)

    @property
    def d_s(self) -> int:
        """Length of the p-piece (zero node included)."""
        return sum(1 for node in self.nodes if node.tag != NodeTag.OMITTED)

    @property
    def top_weight(self) -> int:
        return self.nodes[0].weight

    @property
    def top(self) -> Root:
        return self.nodes[0].root

    @property
    def weights(self) -> List[int]:
        return [node.weight for node in self.nodes]

    @property
    def contains_zero(self) -> bool:
        return any(node.tag == NodeTag.ZERO for node in self.nodes)

    def as_rep(self) -> BStringRep:
        """The full string as a B-representation (symmetric, so trivial)."""
        return BStringRep(top_weight=self.top_weight, node_count=len(self.nodes))

    def gp_rep(self) -> BStringRep:
        """
        The g/p-piece as a B-representation.

        It is the quotient of the full string by its d_s-node subspace;
        to_splitting of it gives O(d_s)^{n_s}.
        """
        return quotient(self.as_rep(), self.d_s)

    def check_invariants(self) -> None:
        """Raise InvariantError unless the string is well formed."""
        weights = self.weights
        for a, b in zip(weights, weights[1:]):
            if a - b != 2:
                raise InvariantError(f"Weights {weights} of the {self.alpha}-string do not step by 2")
        if weights[0] != -weights[-1]:
            raise InvariantError(f"Weights {weights} of the {self.alpha}-string are not symmetric")
        tags = [node.tag for node in self.nodes]
        seen_p = False
        for tag in tags:
            if tag == NodeTag.OMITTED and seen_p:
                raise InvariantError(f"Omitted node after a p-node in the {self.alpha}-string through {self.top}")
            if tag != NodeTag.OMITTED:
                seen_p = True
        zeros = tags.count(NodeTag.ZERO)
        if zeros > 1 or (zeros == 1 and self.top != self.alpha):
            raise InvariantError(f"Misplaced zero node in the {self.alpha}-string through {self.top}")
        if self.d_s != oracle_degree(self):
            raise InvariantError(
                f"d_s = {self.d_s} but the weight oracle gives {oracle_degree(self)} "
                f"for the {self.alpha}-string through {self.top}"
            )

    def describe(self) -> str:
        nodes = ", ".join(str(node.root) for node in self.nodes)
        return f"({nodes}) n={self.n_s} d={self.d_s}"


def walk_alpha_string(rs: RootSystem, alpha: Root, beta: Root) -> List[Tuple[Root, int]]:
    """
    All nodes of the alpha-string through beta, by decreasing weight.

    Returns:
        List of (node, weight) pairs; the zero node gets weight 0
    """
    up, k = [], 1
    while True:
        node = rs.root_or_zero(shift(beta, alpha, k))
        if node is None:
            break
        up.append(node)
        k += 1
    down, k = [], 1
    while True:
        node = rs.root_or_zero(shift(beta, alpha, -k))
        if node is None:
            break
        down.append(node)
        k += 1
    chain = list(reversed(up)) + [beta] + down
    # beta + k alpha has weight w + 2k, so the largest k comes first
    return [(node, 0 if node.is_zero else rs.pairing(node, alpha)) for node in chain]


def alpha_string_through(parabolic: Parabolic, alpha: Root, beta: Root) -> AlphaString:
    """
    The tagged alpha-string through an omitted root beta.

    Raises:
        NotOmittedError: if alpha or beta is not omitted
        InvariantError: if the walked string violates a string invariant
    """
    parabolic.require_omitted(alpha, "alpha")
    parabolic.require_omitted(beta, "beta")
    nodes = []
    for node, weight in walk_alpha_string(parabolic.root_system, alpha, beta):
        if node.is_zero:
            tag = NodeTag.ZERO
        elif parabolic.is_omitted(node):
            tag = NodeTag.OMITTED
        else:
            tag = NodeTag.PARABOLIC
        nodes.append(StringNode(root=node, weight=weight, tag=tag))
    string = AlphaString(alpha=alpha, nodes=tuple(nodes))
    string.check_invariants()
    return string


def string_inventory(parabolic: Parabolic, alpha: Root) -> Tuple[AlphaString, ...]:
    """
    Partition the omitted roots into alpha-strings.

    Strings are keyed by their top node (always omitted) and returned in
    the enumeration order of those top nodes.
    """
    parabolic.require_omitted(alpha, "alpha")
    omitted = parabolic.omitted_roots
    seen: Set[Root] = set()
    strings = []
    for beta in omitted:
        if beta in seen:
            continue
        string = alpha_string_through(parabolic, alpha, beta)
        for node in string.nodes:
            if node.tag == NodeTag.OMITTED:
                if node.root in seen:
                    raise InvariantError(f"{node.root} lies in two {alpha}-strings")
                seen.add(node.root)
        strings.append(string)

    if len(seen) != len(omitted) or sum(s.n_s for s in strings) != parabolic.dim_gp:
        raise InvariantError(f"{alpha}-strings do not partition the omitted roots of {parabolic.describe()}")
    zero_strings = [s for s in strings if s.contains_zero]
    if len(zero_strings) != 1 or (zero_strings[0].n_s, zero_strings[0].d_s) != (1, 2):
        raise InvariantError(f"Expected exactly one string (alpha, 0, -alpha) for {alpha}")

    order = {root: i for i, root in enumerate(omitted)}
    strings.sort(key=lambda s: order[s.top])
    logger.debug(f"{parabolic.describe()}, alpha={alpha}: {len(strings)} strings")
    return tuple(strings)


def oracle_degree(string: AlphaString) -> int:
    """
    Second computation of d_s from weights alone.

    The full string is symmetric under the alpha reflection, so it has
    top_weight + 1 nodes; the p-piece is what is left after the n_s
    omitted ones.
    """
    return string.top_weight - string.n_s + 1


def full_alpha_strings(rs: RootSystem, alpha: Root) -> List[List[Tuple[Root, int]]]:
    """
    Every alpha-string of g, covering all roots and the zero node once.

    The Cartan directions orthogonal to alpha are not included; they are
    rank - 1 trivial strings of weight 0.
    """
    seen: Set[Root] = set()
    strings = []
    for beta in rs.roots:
        if beta in seen:
            continue
        chain = walk_alpha_string(rs, alpha, beta)
        for node, _ in chain:
            if not node.is_zero:
                seen.add(node)
        strings.append(chain)
    return strings
