"""
Splitting types of the tangent and curvature bundles along root circles.

The restriction of T(G/P) to the circle of an omitted root alpha is a sum
over alpha-strings of O(d_s)^{n_s}. The curvature bundle has fiber
g (x) L2(g/p)*, so its restriction is the trivial bundle of rank dim g
tensored with the second exterior power of the dual tangent splitting.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import InvariantError, ParabolicIndexError
from .p1_bundles import from_weights, is_equivariantly_trivial
from .parabolic import Parabolic
from .root_system import Root
from .splitting_type import SplittingType, direct_sum, dual, h0, tensor, wedge2
from .strings import AlphaString, full_alpha_strings, string_inventory

logger = logging.getLogger(__name__)

__all__ = [
    "SplittingType",
    "dual",
    "tensor",
    "wedge2",
    "direct_sum",
    "h0",
    "tangent_splitting",
    "normal_splitting",
    "adjoint_splitting",
    "CurvatureReport",
    "curvature_report",
    "FlatnessReport",
    "circles_span",
    "flatness_report",
]


def splitting_from_strings(strings: Tuple[AlphaString, ...]) -> SplittingType:
    """Sum of O(d_s)^{n_s} over a string inventory."""
    total = SplittingType()
    for string in strings:
        total = total.direct_sum(SplittingType(summands={string.d_s: string.n_s}))
    return total


def tangent_splitting(parabolic: Parabolic, alpha: Root) -> SplittingType:
    """
    Splitting type of T(G/P) restricted to the circle of alpha.

    Args:
        parabolic: The parabolic P
        alpha: An omitted root of P

    Returns:
        SplittingType of rank dim g/p
    """
    tangent = splitting_from_strings(string_inventory(parabolic, alpha))
    if tangent.rank != parabolic.dim_gp:
        raise InvariantError(f"Tangent rank {tangent.rank} != dim g/p = {parabolic.dim_gp}")
    return tangent


def normal_splitting(parabolic: Parabolic, alpha: Root) -> SplittingType:
    """Normal bundle of the circle: the tangent splitting minus its own O(2)."""
    return tangent_splitting(parabolic, alpha).remove(2)


def adjoint_splitting(parabolic: Parabolic, alpha: Root) -> SplittingType:
    """
    The g-factor of the curvature bundle, always trivial of rank dim g.

    Every full alpha-string of g has to be symmetric about weight 0 and
    the rank - 1 Cartan directions orthogonal to alpha are weight-0
    singletons; together they must account for all of g.
    """
    parabolic.require_omitted(alpha, "alpha")
    rs = parabolic.root_system
    total = rs.rank - 1
    for chain in full_alpha_strings(rs, alpha):
        rep = from_weights([weight for _, weight in chain])
        if not is_equivariantly_trivial(rep):
            nodes = ", ".join(str(node) for node, _ in chain)
            raise InvariantError(f"Asymmetric {alpha}-string ({nodes}) in {rs.lie_type}")
        total += rep.node_count
    if total != rs.dimension:
        raise InvariantError(f"Full {alpha}-strings cover {total} dimensions, dim g = {rs.dimension}")
    return SplittingType.trivial(total)


@dataclass
class CurvatureReport:
    """Everything the curvature argument needs for one circle."""
    alpha: Root
    strings: Tuple[AlphaString, ...]
    tangent: SplittingType
    curvature: SplittingType
    h0: int
    section_subbundle: SplittingType
    alpha_slot_max_degree: Optional[int]
    contraction_vanishes: bool

    @property
    def all_degrees_positive(self) -> bool:
        return all(d >= 1 for d in self.tangent.degrees())


def curvature_report(parabolic: Parabolic, alpha: Root) -> CurvatureReport:
    """
    Build the curvature report for the circle of alpha.

    The only nonnegative summands of L2(dual tangent) come from pairs of
    O(0) summands, so the section subbundle must equal the adjoint factor
    tensored with L2 of the degree-0 block. Pairs that use the alpha
    string's own O(-2) have degree -2 - d for some other summand O(d).

    Returns:
        CurvatureReport for (P, alpha)

    Raises:
        InvariantError: if a derived bundle disagrees with its second computation
    """
    strings = string_inventory(parabolic, alpha)
    tangent = splitting_from_strings(strings)
    if tangent.rank != parabolic.dim_gp:
        raise InvariantError(f"Tangent rank {tangent.rank} != dim g/p = {parabolic.dim_gp}")
    adjoint = adjoint_splitting(parabolic, alpha)
    dual_tangent = tangent.dual()
    curvature = adjoint.tensor(dual_tangent.wedge2())

    section_subbundle = curvature.nonnegative_part()
    expected = adjoint.tensor(SplittingType.trivial(tangent.multiplicity(0)).wedge2())
    if section_subbundle != expected:
        raise InvariantError(
            f"Section subbundle {section_subbundle} does not come from degree-0 pairs ({expected})"
        )

    # the alpha-string itself contributes the single O(2) that is stripped here
    others = dual_tangent.remove(-2)
    if others.rank == 0:
        alpha_slot_max_degree = None
    else:
        alpha_slot_max_degree = -2 + max(others.degrees())
    contraction_vanishes = alpha_slot_max_degree is None or alpha_slot_max_degree < 0

    report = CurvatureReport(
        alpha=alpha,
        strings=strings,
        tangent=tangent,
        curvature=curvature,
        h0=curvature.h0(),
        section_subbundle=section_subbundle,
        alpha_slot_max_degree=alpha_slot_max_degree,
        contraction_vanishes=contraction_vanishes,
    )
    logger.debug(
        f"{parabolic.describe()}, alpha={alpha}: tangent {tangent}, h0={report.h0}, "
        f"alpha slot max {alpha_slot_max_degree}"
    )
    return report


@dataclass
class FlatnessReport:
    """Per-circle curvature reports and the whole-parabolic verdict."""
    parabolic: Parabolic
    reports: List[CurvatureReport] = field(default_factory=list)
    basis_complete: bool = False

    @property
    def verdict(self) -> bool:
        return self.basis_complete and all(r.contraction_vanishes for r in self.reports)

    @property
    def conclusion(self) -> str:
        if self.verdict:
            return (
                f"Curvature contracts to zero along every circle of {self.parabolic.describe()} "
                f"and the circles span g/p: a complete parabolic geometry modelled on it is flat."
            )
        return f"No flatness certificate for {self.parabolic.describe()}."


def circles_span(parabolic: Parabolic, reports: List[CurvatureReport]) -> bool:
    """
    True when the reports' circles give a basis of g/p.

    Each alpha must be a distinct omitted root whose own string is
    alpha, 0, -alpha contributing the single O(2) of its tangent line,
    and there must be dim g/p of them.
    """
    alphas = {r.alpha for r in reports}
    if len(alphas) != len(reports) or len(alphas) != parabolic.dim_gp:
        return False
    if not all(parabolic.is_omitted(a) for a in alphas):
        return False
    for report in reports:
        own = [s for s in report.strings if s.top == report.alpha]
        if len(own) != 1:
            logger.warning(f"No string of {report.alpha} through itself in {parabolic.describe()}")
            return False
        string = own[0]
        if string.weights != [2, 0, -2] or (string.n_s, string.d_s) != (1, 2):
            logger.warning(f"String of {report.alpha} through itself is {string.weights}")
            return False
        if report.tangent.multiplicity(2) < 1:
            return False
    return True


def flatness_report(
    parabolic: Parabolic,
    parallel: bool = False,
    max_workers: int = 4,
) -> FlatnessReport:
    """
    Run curvature_report for every omitted root.

    Args:
        parabolic: P with at least one omitted root
        parallel: Compute per-alpha reports on a thread pool
        max_workers: Pool size when parallel

    Returns:
        FlatnessReport with reports in omitted-root order

    Raises:
        ParabolicIndexError: if P has no omitted roots
    """
    alphas = parabolic.omitted_roots
    if not alphas:
        raise ParabolicIndexError(f"{parabolic.describe()} has no omitted roots; G/P is a point")

    if parallel and len(alphas) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            reports = list(executor.map(lambda a: curvature_report(parabolic, a), alphas))
    else:
        reports = [curvature_report(parabolic, a) for a in alphas]

    basis_complete = circles_span(parabolic, reports)
    result = FlatnessReport(parabolic=parabolic, reports=reports, basis_complete=basis_complete)
    logger.info(
        f"Flatness of {parabolic.describe()}: {len(reports)} circles, verdict {result.verdict}"
    )
    return result
