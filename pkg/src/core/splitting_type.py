"""
Splitting types of vector bundles on P^1.

A bundle O(d_1)^{m_1} + ... + O(d_r)^{m_r} is stored as a degree ->
multiplicity map. Degrees are kept in descending order, which is also
the order used for JSON and text output.
"""

from collections import Counter
from itertools import combinations
from typing import Dict, Iterable, List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import SplittingError


class SplittingType(BaseModel):
    """Multiset of line-bundle degrees, the O(d)^m calculus."""
    model_config = ConfigDict(frozen=True)

    summands: Dict[int, int] = Field(default_factory=dict)

    @field_validator('summands')
    @classmethod
    def normalize_summands(cls, v: Dict[int, int]) -> Dict[int, int]:
        """Drop zero multiplicities, reject negative ones, sort degrees descending."""
        for degree, mult in v.items():
            if mult < 0:
                raise SplittingError(f"Negative multiplicity {mult} for O({degree})")
        return {int(d): int(m) for d, m in sorted(v.items(), key=lambda x: -x[0]) if m > 0}

    @classmethod
    def of(cls, summands: Dict[int, int]) -> 'SplittingType':
        return cls(summands=dict(summands))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> 'SplittingType':
        """Collect an expanded list of line-bundle degrees."""
        return cls(summands=dict(Counter(degrees)))

    @classmethod
    def line(cls, degree: int) -> 'SplittingType':
        return cls(summands={degree: 1})

    @classmethod
    def trivial(cls, rank: int) -> 'SplittingType':
        return cls(summands={0: rank})

    @property
    def rank(self) -> int:
        return sum(self.summands.values())

    def degrees(self) -> List[int]:
        return list(self.summands)

    def multiplicity(self, degree: int) -> int:
        return self.summands.get(degree, 0)

    def line_summands(self) -> List[int]:
        """Expanded list of degrees, descending."""
        return [d for d, m in self.summands.items() for _ in range(m)]

    def nonnegative_part(self) -> 'SplittingType':
        return SplittingType(summands={d: m for d, m in self.summands.items() if d >= 0})

    def remove(self, degree: int, count: int = 1) -> 'SplittingType':
        """Drop `count` copies of O(degree)."""
        if self.multiplicity(degree) < count:
            raise SplittingError(f"Cannot remove O({degree})^{count} from {self.format()}")
        summands = dict(self.summands)
        summands[degree] -= count
        return SplittingType(summands=summands)

    # === Bundle operations ===

    def dual(self) -> 'SplittingType':
        return SplittingType(summands={-d: m for d, m in self.summands.items()})

    def direct_sum(self, other: 'SplittingType') -> 'SplittingType':
        total = Counter(self.summands)
        total.update(other.summands)
        return SplittingType(summands=dict(total))

    def tensor(self, other: 'SplittingType') -> 'SplittingType':
        total: Counter = Counter()
        for d1, m1 in self.summands.items():
            for d2, m2 in other.summands.items():
                total[d1 + d2] += m1 * m2
        return SplittingType(summands=dict(total))

    def wedge2(self) -> 'SplittingType':
        """
        Second exterior power.

        Within a block O(d)^m: O(2d)^{m(m-1)/2}; across blocks d1 != d2:
        O(d1+d2)^{m1*m2}.
        """
        total: Counter = Counter()
        for d, m in self.summands.items():
            total[2 * d] += m * (m - 1) // 2
        for (d1, m1), (d2, m2) in combinations(self.summands.items(), 2):
            total[d1 + d2] += m1 * m2
        return SplittingType(summands=dict(total))

    def h0(self) -> int:
        """dim H^0 = sum of max(d + 1, 0) * m."""
        return sum(max(d + 1, 0) * m for d, m in self.summands.items())

    # === Output ===

    def format(self) -> str:
        """Text form such as 'O(2) + O(1)^3 + O(0)^2'."""
        if not self.summands:
            return "0"
        return " + ".join(
            f"O({d})" if m == 1 else f"O({d})^{m}" for d, m in self.summands.items()
        )

    def to_json_dict(self) -> Dict[str, int]:
        """Degrees as signed-integer strings, descending."""
        return {str(d): m for d, m in self.summands.items()}

    def __str__(self) -> str:
        return self.format()


def dual(s: SplittingType) -> SplittingType:
    return s.dual()


def tensor(s1: SplittingType, s2: SplittingType) -> SplittingType:
    return s1.tensor(s2)


def wedge2(s: SplittingType) -> SplittingType:
    return s.wedge2()


def direct_sum(s1: SplittingType, s2: SplittingType) -> SplittingType:
    return s1.direct_sum(s2)


def h0(s: SplittingType) -> int:
    return s.h0()
