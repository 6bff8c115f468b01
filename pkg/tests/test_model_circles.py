"""
Circles of the classical models, checked against their known splittings.

The Grassmannian case is also recomputed by a small walker that only
uses root membership and the grading, so it does not share code with
the string inventory.
"""

from collections import Counter

import pytest

from src.core.models import named_model
from src.core.p1_bundles import (
    ADJOINT,
    O_MINUS_ONE,
    TANGENT_P1,
    BStringRep,
    canonical_matrices,
    is_equivariantly_trivial,
    tensor_reps,
    to_splitting,
)
from src.core.root_system import Root
from src.core.splitting import tangent_splitting
from src.core.splitting_type import SplittingType


def _walk_tangent(parabolic, alpha):
    """O(d)^n per string, found by stepping beta + t*alpha through the roots."""
    rs = parabolic.root_system
    seen = set()
    total = Counter()
    for beta in parabolic.omitted_roots:
        if beta in seen:
            continue
        omitted, others = [], 0
        for t in range(-4, 5):
            v = tuple(b + t * a for b, a in zip(beta.coefficients, alpha.coefficients))
            if not any(v):
                others += 1
            elif rs.is_root(v):
                node = Root.of(*v)
                if parabolic.is_omitted(node):
                    omitted.append(node)
                else:
                    others += 1
        seen.update(omitted)
        total[others] += len(omitted)
    return SplittingType.of(dict(total))


@pytest.mark.parametrize("n", range(2, 11))
def test_lines_in_projective_space(n):
    parabolic = named_model("projective", (n,))
    for alpha in parabolic.omitted_roots:
        assert tangent_splitting(parabolic, alpha) == SplittingType.of({2: 1, 1: n - 1})


@pytest.mark.parametrize("k,n", [(k, n) for n in range(3, 9) for k in range(2, n)])
def test_lines_in_grassmannians(k, n):
    parabolic = named_model("grassmannian", (k, n))
    expected = SplittingType.of({2: 1, 1: n - 2, 0: (k - 1) * (n - k - 1)})
    for alpha in parabolic.omitted_roots:
        tangent = tangent_splitting(parabolic, alpha)
        assert tangent == expected
        assert tangent == _walk_tangent(parabolic, alpha)


@pytest.mark.parametrize("n", range(4, 9))
def test_spinor_varieties(n):
    parabolic = named_model("spinor", (n,))
    expected = SplittingType.of({2: 1, 1: 2 * (n - 2), 0: (n - 2) * (n - 3) // 2})
    alpha = parabolic.omitted_roots[0]
    assert tangent_splitting(parabolic, alpha) == expected
    assert expected.rank == n * (n - 1) // 2


def test_quadric_coincidence(lg2):
    # Q^3 = LG(2): the conformal circle is the short-root one
    assert tangent_splitting(lg2, Root.of(-1, -1)) == SplittingType.of({2: 3})


def test_fiber_of_the_full_flag(a2_full_flag):
    assert tangent_splitting(a2_full_flag, Root.of(-1, 0)) == SplittingType.of({2: 1, 0: 2})
    assert _walk_tangent(a2_full_flag, Root.of(-1, 0)) == SplittingType.of({2: 1, 0: 2})


def test_drawn_strings_on_the_line():
    assert to_splitting(O_MINUS_ONE) == SplittingType.of({-1: 1})
    assert tensor_reps(O_MINUS_ONE, ADJOINT) == SplittingType.of({-1: 3})
    assert tensor_reps(O_MINUS_ONE, TANGENT_P1) == SplittingType.of({1: 1})


def test_triviality_grid():
    for k in range(-20, 21):
        for m in range(1, 21):
            rep = BStringRep(top_weight=k, node_count=m)
            assert is_equivariantly_trivial(rep) is (k == m - 1)
            assert (to_splitting(rep) == SplittingType.trivial(m)) is (k == m - 1)


@pytest.mark.parametrize("k", range(-20, 21, 5))
@pytest.mark.parametrize("m", [1, 2, 5, 10, 20])
def test_bracket_relation(k, m):
    h, x = canonical_matrices(BStringRep(top_weight=k, node_count=m))
    assert h * x - x * h == 2 * x
