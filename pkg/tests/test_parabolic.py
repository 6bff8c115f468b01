"""Tests for parabolics and flag shapes."""

import pytest

from src.core.errors import AuditIndexError, NotARootError, NotOmittedError, ParabolicIndexError
from src.core.models import named_model
from src.core.parabolic import FlagShape, make_parabolic
from src.core.root_system import Root, build_from_name


def test_grassmannian_omitted_roots(gr24):
    assert [r.coefficients for r in gr24.omitted_roots] == [
        (0, -1, 0),
        (-1, -1, 0),
        (0, -1, -1),
        (-1, -1, -1),
    ]
    assert gr24.dim_gp == 4
    assert gr24.describe() == "grassmannian:2,4 (A3/{2})"


def test_omitted_and_p_roots_partition(gr24):
    rs = gr24.root_system
    assert len(gr24.omitted_roots) + len(gr24.p_roots) == len(rs.roots)
    assert all(gr24.in_p(r) for r in rs.positive_roots)
    assert len(gr24.levi_roots) == 4


@pytest.mark.parametrize("name,params,dim", [
    ("projective", (4,), 4),
    ("quadric", (5,), 5),
    ("quadric", (6,), 6),
    ("grassmannian", (2, 5), 6),
    ("grassmannian", (3, 6), 9),
    ("spinor", (5,), 10),
    ("lagrangian", (3,), 6),
    ("flag", (1, 1, 1), 3),
    ("flag", (1, 2, 1), 5),
])
def test_named_model_dimensions(name, params, dim):
    assert named_model(name, params).dim_gp == dim


def test_crossed_index_out_of_range():
    with pytest.raises(ParabolicIndexError):
        make_parabolic(build_from_name("A3"), [4])
    with pytest.raises(ParabolicIndexError):
        make_parabolic(build_from_name("A3"), [0])


def test_empty_crossed_set_is_a_point():
    parabolic = make_parabolic(build_from_name("B2"), [])
    assert parabolic.dim_gp == 0
    assert parabolic.omitted_roots == ()


def test_crossed_indices_are_sorted_and_deduplicated():
    parabolic = make_parabolic(build_from_name("A3"), [3, 1, 3])
    assert parabolic.crossed == (1, 3)
    assert parabolic.describe() == "A3/{1,3}"


def test_require_omitted(gr24):
    assert gr24.require_omitted(Root.of(-1, -1, 0)) == Root.of(-1, -1, 0)
    with pytest.raises(NotOmittedError, match="omitted roots are"):
        gr24.require_omitted(Root.of(-1, 0, 0))
    with pytest.raises(NotARootError):
        gr24.require_omitted(Root.of(-1, 0, -1))


def test_omitted_index(gr24):
    assert gr24.omitted_index(Root.of(0, -1, -1)) == 2
    with pytest.raises(NotOmittedError):
        gr24.omitted_index(Root.of(1, 1, 0))


class TestFlagShape:
    def test_grassmannian_shape(self):
        shape = FlagShape(block_sizes=(2, 2))
        assert shape.n == 4
        assert shape.crossed == [2]
        assert shape.blocks_for(3, 1) == (1, 2)
        assert shape.alpha(3, 1) == Root.of(-1, -1, 0)
        assert shape.alpha(4, 2) == Root.of(0, -1, -1)

    def test_first_index(self):
        shape = FlagShape(block_sizes=(1, 2, 1))
        assert shape.crossed == [1, 3]
        assert [shape.first_index(b) for b in (1, 2, 3)] == [1, 2, 4]
        assert shape.block_of(3) == 2

    def test_entry_in_diagonal_block(self):
        with pytest.raises(AuditIndexError, match="diagonal block"):
            FlagShape(block_sizes=(2, 2)).alpha(2, 1)

    def test_entry_out_of_range(self):
        shape = FlagShape(block_sizes=(2, 2))
        with pytest.raises(AuditIndexError):
            shape.alpha(5, 1)
        with pytest.raises(AuditIndexError):
            shape.alpha(1, 3)

    def test_every_entry_is_an_omitted_root(self):
        shape = FlagShape(block_sizes=(1, 2, 2))
        parabolic = named_model("flag", shape.block_sizes)
        entries = [
            shape.alpha(i, j)
            for i in range(1, shape.n + 1)
            for j in range(1, i)
            if shape.block_of(i) != shape.block_of(j)
        ]
        assert sorted(entries) == sorted(parabolic.omitted_roots)

    @pytest.mark.parametrize("blocks", [(3,), (2, 0), (1, -1)])
    def test_bad_blocks(self, blocks):
        with pytest.raises(ValueError):
            FlagShape(block_sizes=blocks)


@pytest.mark.parametrize("name,crossed", [("A3", [2]), ("C3", [1, 3]), ("G2", [1, 2]), ("D4", [4])])
def test_grading_is_additive(name, crossed):
    parabolic = make_parabolic(build_from_name(name), crossed)
    rs = parabolic.root_system
    for b1 in rs.roots:
        for b2 in rs.roots:
            total = rs.add(b1, b2)
            if total is not None:
                assert parabolic.grading(total) == parabolic.grading(b1) + parabolic.grading(b2)
