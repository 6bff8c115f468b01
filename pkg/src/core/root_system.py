"""
Finite simple root systems built from Cartan matrices.

Roots are stored in the simple-root basis as tuples of Python integers;
inner products go through the symmetrized Cartan matrix with Fraction
intermediates, so nothing here ever touches floating point.

Simple roots follow the Bourbaki numbering:

    A_n  o-o-...-o-o          a1 ... an
    B_n  o-o-...-o=>o         an short
    C_n  o-o-...-o<=o         an long
    D_n  o-o-...-o<o          a(n-1), an both attached to a(n-2)
    E_n  a1-a3-a4-...-an, a2 attached to a4
    F_4  a1-a2=>a3-a4         a1, a2 long
    G_2  a1<=a2               a1 short

The Cartan matrix convention is C[i][j] = <a_j, a_i^vee>, so for B2
pairing(a1, a2) = C[2][1] = -2 and pairing(a2, a1) = C[1][2] = -1.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InvalidLieTypeError, InvariantError, NotARootError

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Cartan-Killing families."""
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"


# (min rank, max rank or None)
RANK_BOUNDS: Dict[Family, Tuple[int, Optional[int]]] = {
    Family.A: (1, None),
    Family.B: (2, None),
    Family.C: (2, None),
    Family.D: (3, None),
    Family.E: (6, 8),
    Family.F: (4, 4),
    Family.G: (2, 2),
}

EXCEPTIONAL_DIMENSIONS = {
    (Family.G, 2): 14,
    (Family.F, 4): 52,
    (Family.E, 6): 78,
    (Family.E, 7): 133,
    (Family.E, 8): 248,
}


def check_rank_bounds(family: Family, rank: int) -> None:
    """Raise InvalidLieTypeError for a rank outside the family's bounds."""
    low, high = RANK_BOUNDS[family]
    if rank < low:
        raise InvalidLieTypeError(f"{family.value}{rank}: rank must be >= {low} for family {family.value}")
    if high is not None and rank > high:
        bound = f"rank must equal {low}" if low == high else f"rank must be in {low}..{high}"
        raise InvalidLieTypeError(f"{family.value}{rank}: {bound} for family {family.value}")


class LieType(BaseModel):
    """A Cartan-Killing type such as A3 or E8."""
    model_config = ConfigDict(frozen=True)

    family: Family
    rank: int = Field(..., ge=1, description="Number of simple roots")

    @model_validator(mode='after')
    def validate_rank_bounds(self) -> 'LieType':
        check_rank_bounds(self.family, self.rank)
        return self

    @classmethod
    def parse(cls, text: str) -> 'LieType':
        """Parse 'B2', 'e8', ... into a LieType."""
        token = text.strip()
        if len(token) < 2 or not token[1:].isdigit():
            raise InvalidLieTypeError(f"Cannot parse Lie type '{text}' (expected e.g. A3, B2, E8)")
        try:
            family = Family(token[0].upper())
        except ValueError:
            raise InvalidLieTypeError(f"Unknown family '{token[0]}' in '{text}' (expected one of A..G)")
        rank = int(token[1:])
        check_rank_bounds(family, rank)
        return cls(family=family, rank=rank)

    @property
    def dimension(self) -> int:
        """dim g from the standard dimension table."""
        n = self.rank
        if self.family == Family.A:
            return n * n + 2 * n
        if self.family in (Family.B, Family.C):
            return 2 * n * n + n
        if self.family == Family.D:
            return 2 * n * n - n
        return EXCEPTIONAL_DIMENSIONS[(self.family, n)]

    @property
    def is_classical(self) -> bool:
        return self.family in (Family.A, Family.B, Family.C, Family.D)

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


@dataclass(frozen=True, order=True)
class Root:
    """
    A vector in the simple-root basis.

    Used for roots and for the zero node of a string. Mixed-sign vectors
    are never roots and are rejected at construction.
    """
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, 'coefficients', coeffs)
        if any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs):
            raise NotARootError(f"Mixed-sign vector {list(coeffs)} is not a root")

    @classmethod
    def of(cls, *coefficients: int) -> 'Root':
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls, rank: int) -> 'Root':
        return cls((0,) * rank)

    @classmethod
    def simple(cls, index: int, rank: int) -> 'Root':
        """The simple root a_index (1-based)."""
        coeffs = [0] * rank
        coeffs[index - 1] = 1
        return cls(tuple(coeffs))

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    @property
    def height(self) -> int:
        return sum(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def is_negative(self) -> bool:
        return self.height < 0

    def __neg__(self) -> 'Root':
        return Root(tuple(-c for c in self.coefficients))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients, 1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{magnitude}a{i}")
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


def shift(beta: Root, alpha: Root, k: int) -> Tuple[int, ...]:
    """Coefficient vector of beta + k*alpha (not necessarily a root)."""
    return tuple(b + k * a for b, a in zip(beta.coefficients, alpha.coefficients))


# === Cartan matrices ===

def _fill_a(n: int, i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def _fill_b(n: int, i: int, j: int) -> int:
    if (i, j) == (n - 1, n - 2):
        return -2
    return _fill_a(n, i, j)


def _fill_c(n: int, i: int, j: int) -> int:
    if (i, j) == (n - 2, n - 1):
        return -2
    return _fill_a(n, i, j)


def _fill_d(n: int, i: int, j: int) -> int:
    if {i, j} == {n - 2, n - 1}:
        return 0
    if {i, j} == {n - 3, n - 1}:
        return -1
    return _fill_a(n, i, j)


def _fill_e(n: int, i: int, j: int) -> int:
    # Bourbaki: chain a1-a3-a4-...-an, with a2 hanging off a4
    if i == j:
        return 2
    edges = {(0, 2), (1, 3)} | {(k, k + 1) for k in range(2, n - 1)}
    return -1 if (min(i, j), max(i, j)) in edges else 0


def _fill_f(n: int, i: int, j: int) -> int:
    if (i, j) == (2, 1):
        return -2
    return _fill_a(n, i, j)


def _fill_g(n: int, i: int, j: int) -> int:
    if (i, j) == (0, 1):
        return -3
    return _fill_a(n, i, j)


_FILL_FUNCTIONS = {
    Family.A: _fill_a,
    Family.B: _fill_b,
    Family.C: _fill_c,
    Family.D: _fill_d,
    Family.E: _fill_e,
    Family.F: _fill_f,
    Family.G: _fill_g,
}


def cartan_matrix(lie_type: LieType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix with C[i][j] = <a_j, a_i^vee> (0-based indices)."""
    n = lie_type.rank
    fill = _FILL_FUNCTIONS[lie_type.family]
    return tuple(tuple(fill(n, i, j) for j in range(n)) for i in range(n))


def symmetrize(cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """
    Smallest positive integers d_i with D*C symmetric.

    Propagates d_j = d_i * C[i][j] / C[j][i] along the Dynkin diagram,
    then clears denominators.
    """
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    frontier.append(j)
    scale = lcm(*(x.denominator for x in d))
    scaled = [int(x * scale) for x in d]
    common = gcd(*scaled)
    return tuple(x // common for x in scaled)


def _check_cartan(cartan: Sequence[Sequence[int]], lie_type: LieType) -> None:
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise InvariantError(f"{lie_type}: C[{i}][{i}] = {cartan[i][i]} != 2")
        for j in range(n):
            if i != j and cartan[i][j] > 0:
                raise InvariantError(f"{lie_type}: positive off-diagonal entry C[{i}][{j}]")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise InvariantError(f"{lie_type}: C[{i}][{j}] and C[{j}][{i}] disagree on zero")


# === Root system ===

@dataclass(frozen=True)
class RootSystem:
    """
    Root system of a simple Lie algebra.

    Immutable after construction. Positive roots are ordered by height,
    then by descending coefficient tuple (so a1, a2, ... come out in
    Bourbaki order). Negative roots follow the same order, negated.
    """
    lie_type: LieType
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[int, ...]
    positive_roots: Tuple[Root, ...]
    _root_set: FrozenSet[Tuple[int, ...]] = field(init=False, repr=False, compare=False)
    _gram: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        roots = {r.coefficients for r in self.positive_roots}
        roots |= {(-r).coefficients for r in self.positive_roots}
        object.__setattr__(self, '_root_set', frozenset(roots))
        gram = tuple(
            tuple(self.symmetrizer[i] * self.cartan_matrix[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )
        object.__setattr__(self, '_gram', gram)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def negative_roots(self) -> Tuple[Root, ...]:
        return tuple(-r for r in self.positive_roots)

    @property
    def roots(self) -> Tuple[Root, ...]:
        return self.positive_roots + self.negative_roots

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(Root.simple(i, self.rank) for i in range(1, self.rank + 1))

    @property
    def dimension(self) -> int:
        """dim g = number of roots + rank."""
        return 2 * len(self.positive_roots) + self.rank

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def notes(self) -> List[str]:
        """Caveats worth surfacing in reports."""
        if self.lie_type.family == Family.D and self.rank == 3:
            return ["D3 is isomorphic to A3; node indices follow the D3 Cartan matrix (a1 is the middle node)"]
        return []

    def _check_length(self, vector: Sequence[int]) -> None:
        if len(vector) != self.rank:
            raise NotARootError(
                f"Vector {list(vector)} has length {len(vector)}, expected {self.rank} for {self.lie_type}"
            )

    def is_root(self, vector) -> bool:
        """Exact membership test; accepts a Root or an integer sequence."""
        coeffs = vector.coefficients if isinstance(vector, Root) else tuple(vector)
        self._check_length(coeffs)
        return coeffs in self._root_set

    def root(self, vector) -> Root:
        """Validate and return the root with these coefficients."""
        coeffs = vector.coefficients if isinstance(vector, Root) else tuple(int(c) for c in vector)
        if not self.is_root(coeffs):
            raise NotARootError(f"{list(coeffs)} is not a root of {self.lie_type}")
        return Root(coeffs)

    def add(self, r1: Root, r2: Root) -> Optional[Root]:
        """r1 + r2 when it is a root, None otherwise."""
        total = shift(r1, r2, 1)
        self._check_length(total)
        return Root(total) if total in self._root_set else None

    def root_or_zero(self, vector: Tuple[int, ...]) -> Optional[Root]:
        """The node at this vector for string walking: a root, zero, or None."""
        if vector in self._root_set:
            return Root(vector)
        if all(c == 0 for c in vector):
            return Root(vector)
        return None

    def inner_product(self, beta: Root, alpha: Root) -> int:
        """(beta, alpha) in the normalization where the shortest root has (a, a) = 2."""
        b, a = beta.coefficients, alpha.coefficients
        return sum(
            b[i] * self._gram[i][j] * a[j]
            for i in range(self.rank) if b[i]
            for j in range(self.rank) if a[j]
        )

    def pairing(self, beta: Root, alpha: Root) -> int:
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
        if not self.is_root(alpha):
            raise NotARootError(f"{list(alpha.coefficients)} is not a root of {self.lie_type}")
        if not (beta.is_zero or self.is_root(beta)):
            raise NotARootError(f"{list(beta.coefficients)} is not a root of {self.lie_type}")
        value = Fraction(2 * self.inner_product(beta, alpha), self.inner_product(alpha, alpha))
        if value.denominator != 1:
            raise InvariantError(f"Non-integral pairing <{beta}, {alpha}^vee> = {value}")
        return int(value)

    def simple_pairing(self, beta: Root, index: int) -> int:
        """<beta, a_i^vee> straight from the Cartan matrix (0-based i)."""
        return sum(c * self.cartan_matrix[index][j] for j, c in enumerate(beta.coefficients))

    # === Classical realizations ===

    def epsilon_coordinates(self, root: Root) -> Tuple[int, ...]:
        """The root in the orthonormal epsilon basis (classical families only)."""
        basis = epsilon_simple_roots(self.lie_type)
        width = len(basis[0])
        vec = [0] * width
        for c, e in zip(root.coefficients, basis):
            if c:
                for k in range(width):
                    vec[k] += c * e[k]
        return tuple(vec)

    def root_from_epsilon(self, vector: Sequence[int]) -> Root:
        """Inverse of epsilon_coordinates, by lookup over all roots."""
        target = tuple(vector)
        for r in self.roots:
            if self.epsilon_coordinates(r) == target:
                return r
        raise NotARootError(f"epsilon vector {list(target)} is not a root of {self.lie_type}")


def epsilon_simple_roots(lie_type: LieType) -> List[Tuple[int, ...]]:
    """Bourbaki realization of the simple roots in the epsilon basis."""
    if not lie_type.is_classical:
        raise InvalidLieTypeError(f"No epsilon realization for exceptional type {lie_type}")
    n = lie_type.rank
    width = n + 1 if lie_type.family == Family.A else n

    def e(*pairs: Tuple[int, int]) -> Tuple[int, ...]:
        vec = [0] * width
        for index, value in pairs:
            vec[index] += value
        return tuple(vec)

    basis = [e((i, 1), (i + 1, -1)) for i in range(n - 1)]
    if lie_type.family == Family.A:
        basis.append(e((n - 1, 1), (n, -1)))
    elif lie_type.family == Family.B:
        basis.append(e((n - 1, 1)))
    elif lie_type.family == Family.C:
        basis.append(e((n - 1, 2)))
    else:
        basis.append(e((n - 2, 1), (n - 1, 1)))
    return basis


def _enumerate_positive_roots(cartan: Sequence[Sequence[int]], rank: int) -> List[Root]:
    """
    Height-increasing closure from the simple roots.

    beta + a_i is a root exactly when q = p - <beta, a_i^vee> > 0, where p
    counts how far the a_i-string through beta extends downward; p only
    involves lower heights, which are already known.
    """
    known = {Root.simple(i, rank).coefficients for i in range(1, rank + 1)}
    layer = sorted(known)
    while layer:
        new_layer = set()
        for beta in layer:
            for i in range(rank):
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        p += 1
                    else:
                        break
                q = p - sum(c * cartan[i][j] for j, c in enumerate(beta))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    if tuple(up) not in known:
                        new_layer.add(tuple(up))
        known |= new_layer
        layer = sorted(new_layer)
    return sorted((Root(c) for c in known), key=lambda r: (r.height, tuple(-c for c in r.coefficients)))


@lru_cache(maxsize=None)
def build(lie_type: LieType) -> RootSystem:
    """
    Build the root system of a simple Lie algebra.

    Args:
        lie_type: Validated LieType

    Returns:
        RootSystem with every positive root enumerated

    Raises:
        InvariantError: if the root count disagrees with the dimension table
    """
    cartan = cartan_matrix(lie_type)
    _check_cartan(cartan, lie_type)
    symmetrizer = symmetrize(cartan)
    positives = _enumerate_positive_roots(cartan, lie_type.rank)

    expected = (lie_type.dimension - lie_type.rank) // 2
    if len(positives) != expected:
        raise InvariantError(
            f"{lie_type}: enumerated {len(positives)} positive roots, dimension table says {expected}"
        )

    rs = RootSystem(
        lie_type=lie_type,
        cartan_matrix=cartan,
        symmetrizer=symmetrizer,
        positive_roots=tuple(positives),
    )
    for note in rs.notes:
        logger.warning(note)
    logger.debug(f"Built {lie_type}: {len(positives)} positive roots, symmetrizer {symmetrizer}")
    return rs


def build_from_name(name: str) -> RootSystem:
    """Convenience: build('B2')."""
    return build(LieType.parse(name))


# Module-level helpers matching the operation names

def is_root(rs: RootSystem, vector: Sequence[int]) -> bool:
    return rs.is_root(vector)


def negate(root: Root) -> Root:
    return -root


def add(rs: RootSystem, r1: Root, r2: Root) -> Optional[Root]:
    return rs.add(r1, r2)


def pairing(rs: RootSystem, beta: Root, alpha: Root) -> int:
    return rs.pairing(beta, alpha)
