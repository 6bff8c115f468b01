"""
Exhaustive property sweep over small root systems.

For every simple type up to a given rank, every non-empty crossed set
and every omitted alpha, recompute the circle splitting and check the
properties the flatness argument rests on. Violations are collected,
never raised, so a single run reports all of them.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence

import pandas as pd
from tqdm import tqdm

from .errors import CircleError, InvariantError
from .p1_bundles import to_splitting
from .parabolic import Parabolic, make_parabolic
from .root_system import RANK_BOUNDS, Family, LieType, build
from .splitting import curvature_report
from .splitting_type import SplittingType
from .strings import oracle_degree

logger = logging.getLogger(__name__)

CHECKS = (
    "oracle",
    "rank",
    "has_degree_2",
    "degrees_nonnegative",
    "contraction",
    "h0_rule",
    "gp_rep",
)


@dataclass
class SweepResult:
    """Per-(P, alpha) rows plus the list of violated checks."""
    rows: List[Dict] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def case_count(self) -> int:
        return len(self.rows)

    def to_dataframe(self) -> pd.DataFrame:
        columns = ["lie_type", "crossed", "alpha", "tangent", "h0", "alpha_slot_max_degree", *CHECKS]
        return pd.DataFrame(self.rows, columns=columns)

    def export_csv(self, path: str) -> Path:
        out = Path(path)
        out.parent.mkdir(parents=True, exist_ok=True)
        self.to_dataframe().to_csv(out, index=False)
        logger.info(f"Wrote {len(self.rows)} sweep rows to {out}")
        return out

    def summary(self) -> Dict[str, int]:
        """Number of passing cases per check."""
        return {check: sum(1 for row in self.rows if row[check]) for check in CHECKS}


def lie_types_up_to(max_rank: int, families: Optional[Sequence[Family]] = None) -> List[LieType]:
    """Every valid LieType of rank <= max_rank, by family then rank."""
    selected = list(families) if families else list(Family)
    types = []
    for family in Family:
        if family not in selected:
            continue
        low, high = RANK_BOUNDS[family]
        top = max_rank if high is None else min(high, max_rank)
        types.extend(LieType(family=family, rank=r) for r in range(low, top + 1))
    return types


def crossed_sets(rank: int) -> Iterator[tuple]:
    """All 2^rank - 1 non-empty subsets of 1..rank."""
    nodes = range(1, rank + 1)
    for size in range(1, rank + 1):
        yield from combinations(nodes, size)


def check_case(parabolic: Parabolic, alpha) -> Dict:
    """Run every check for one (P, alpha) and return the sweep row."""
    report = curvature_report(parabolic, alpha)
    tangent = report.tangent
    gp_total = SplittingType()
    for string in report.strings:
        gp_total = gp_total.direct_sum(to_splitting(string.gp_rep()))
    return {
        "lie_type": str(parabolic.lie_type),
        "crossed": ",".join(str(i) for i in parabolic.crossed),
        "alpha": str(alpha),
        "tangent": tangent.format(),
        "h0": report.h0,
        "alpha_slot_max_degree": report.alpha_slot_max_degree,
        "oracle": all(s.d_s == oracle_degree(s) for s in report.strings),
        "rank": tangent.rank == parabolic.dim_gp,
        "has_degree_2": tangent.multiplicity(2) >= 1,
        "degrees_nonnegative": all(d >= 0 for d in tangent.degrees()),
        "contraction": report.contraction_vanishes,
        "h0_rule": not report.all_degrees_positive or report.h0 == 0,
        "gp_rep": gp_total == tangent,
    }


def run_sweep(
    max_rank: int = 4,
    families: Optional[Sequence[Family]] = None,
    progress: bool = True,
) -> SweepResult:
    """
    Sweep every parabolic of every simple type up to max_rank.

    Args:
        max_rank: Largest rank included
        families: Restrict to these families (default: all)
        progress: Show a tqdm bar over parabolics

    Returns:
        SweepResult with one row per (type, crossed set, alpha)
    """
    result = SweepResult()
    cases = [
        (lie_type, crossed)
        for lie_type in lie_types_up_to(max_rank, families)
        for crossed in crossed_sets(lie_type.rank)
    ]
    with tqdm(cases, desc="Sweep", unit="parabolic", disable=not progress) as pbar:
        for lie_type, crossed in pbar:
            pbar.set_postfix_str(f"{lie_type}/{','.join(map(str, crossed))}")
            parabolic = make_parabolic(build(lie_type), crossed)
            for alpha in parabolic.omitted_roots:
                label = f"{parabolic.describe()}, alpha={alpha}"
                try:
                    row = check_case(parabolic, alpha)
                except (InvariantError, CircleError) as e:
                    logger.error(f"{label}: {e}")
                    result.violations.append(f"{label}: {e}")
                    continue
                result.rows.append(row)
                for check in CHECKS:
                    if not row[check]:
                        result.violations.append(f"{label}: {check} failed")
    logger.info(f"Sweep up to rank {max_rank}: {result.case_count} cases, {len(result.violations)} violations")
    return result
