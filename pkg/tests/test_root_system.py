"""
Tests for root system construction.

Root counts are checked against the dimension table for every family,
inner products against the Bourbaki length conventions.
"""

import pytest

from src.core.errors import InvalidLieTypeError, NotARootError
from src.core.root_system import (
    Family,
    LieType,
    Root,
    build,
    build_from_name,
    cartan_matrix,
    is_root,
    negate,
    pairing,
    symmetrize,
)


@pytest.mark.parametrize("name,positive,dim", [
    ("A1", 1, 3),
    ("A3", 6, 15),
    ("B2", 4, 10),
    ("B3", 9, 21),
    ("C3", 9, 21),
    ("D4", 12, 28),
    ("G2", 6, 14),
    ("F4", 24, 52),
    ("E6", 36, 78),
    ("E7", 63, 133),
    ("E8", 120, 248),
    ("A8", 36, 80),
    ("B8", 64, 136),
    ("C8", 64, 136),
    ("D8", 56, 120),
])
def test_root_counts_match_dimension_table(name, positive, dim):
    rs = build_from_name(name)
    assert len(rs.positive_roots) == positive
    assert rs.dimension == dim
    assert rs.lie_type.dimension == dim


class TestLieTypeParsing:
    def test_parse_is_case_insensitive(self):
        assert LieType.parse("e8") == LieType(family=Family.E, rank=8)
        assert str(LieType.parse(" b2 ")) == "B2"

    @pytest.mark.parametrize("text", ["E9", "E5", "B1", "C1", "D2", "F3", "G3", "A0"])
    def test_rank_out_of_bounds(self, text):
        with pytest.raises(InvalidLieTypeError):
            LieType.parse(text)

    @pytest.mark.parametrize("text", ["H3", "A", "", "3A", "Ax"])
    def test_unparseable(self, text):
        with pytest.raises(InvalidLieTypeError):
            LieType.parse(text)

    def test_direct_construction_validates(self):
        with pytest.raises(ValueError):
            LieType(family=Family.G, rank=3)


class TestCartan:
    def test_a3(self):
        assert cartan_matrix(LieType.parse("A3")) == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))

    def test_b2_double_bond_points_to_short_root(self):
        c = cartan_matrix(LieType.parse("B2"))
        # C[i][j] = <a_j, a_i^vee>: a2 is short, so <a1, a2^vee> = -2
        assert c == ((2, -1), (-2, 2))

    def test_g2_triple_bond(self):
        assert cartan_matrix(LieType.parse("G2")) == ((2, -3), (-1, 2))

    def test_e_branch_node(self):
        c = cartan_matrix(LieType.parse("E6"))
        # a2 hangs off a4, a1 off a3
        assert c[1][3] == -1
        assert c[0][2] == -1
        assert c[1][2] == 0

    @pytest.mark.parametrize("name,expected", [
        ("B2", (2, 1)),
        ("C2", (1, 2)),
        ("G2", (1, 3)),
        ("F4", (2, 2, 1, 1)),
        ("A3", (1, 1, 1)),
    ])
    def test_symmetrizer(self, name, expected):
        assert symmetrize(cartan_matrix(LieType.parse(name))) == expected


class TestRoots:
    def test_mixed_sign_vector_rejected(self):
        with pytest.raises(NotARootError):
            Root.of(1, -1, 0)

    def test_root_text(self):
        assert str(Root.of(-1, -2, 0)) == "-a1-2a2"
        assert str(Root.of(0, 1, 1)) == "a2+a3"
        assert str(Root.zero(2)) == "0"

    def test_positive_order_is_height_then_bourbaki(self):
        rs = build_from_name("B2")
        assert [r.coefficients for r in rs.positive_roots] == [(1, 0), (0, 1), (1, 1), (1, 2)]
        assert rs.highest_root == Root.of(1, 2)

    @pytest.mark.parametrize("name,highest", [
        ("A3", (1, 1, 1)),
        ("C2", (2, 1)),
        ("G2", (3, 2)),
        ("D4", (1, 2, 1, 1)),
        ("F4", (2, 3, 4, 2)),
        ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
    ])
    def test_highest_root(self, name, highest):
        assert build_from_name(name).highest_root.coefficients == highest

    def test_membership(self):
        rs = build_from_name("A3")
        assert is_root(rs, (1, 1, 0))
        assert is_root(rs, (-1, -1, -1))
        assert not is_root(rs, (1, 0, 1))
        assert not is_root(rs, (1, -1, 0))

    def test_wrong_length(self):
        rs = build_from_name("A3")
        with pytest.raises(NotARootError):
            rs.is_root((1, 0))
        with pytest.raises(NotARootError):
            rs.root((0, 0, 0))

    def test_add(self):
        rs = build_from_name("A3")
        a1, a2, a3 = rs.simple_roots
        assert rs.add(a1, a2) == Root.of(1, 1, 0)
        assert rs.add(a1, a3) is None
        assert rs.add(a1, negate(a1)) is None

    def test_negative_roots_mirror_positive_order(self):
        rs = build_from_name("A2")
        assert rs.negative_roots == tuple(-r for r in rs.positive_roots)


class TestPairing:
    def test_b2(self):
        rs = build_from_name("B2")
        a1, a2 = rs.simple_roots
        assert pairing(rs, a1, a2) == -2
        assert pairing(rs, a2, a1) == -1
        assert rs.inner_product(a2, a2) == 2
        assert rs.inner_product(a1, a1) == 4

    def test_self_pairing_is_two(self):
        for name in ("A3", "B3", "C3", "D4", "G2", "F4"):
            rs = build_from_name(name)
            for r in rs.roots:
                assert rs.pairing(r, r) == 2

    def test_pairing_with_simple_root_matches_cartan(self):
        rs = build_from_name("F4")
        for beta in rs.positive_roots:
            for i, a in enumerate(rs.simple_roots):
                assert rs.pairing(beta, a) == rs.simple_pairing(beta, i)

    @pytest.mark.parametrize("name", ["B3", "C3", "G2", "F4"])
    def test_linear_in_first_argument(self, name):
        rs = build_from_name(name)
        for b1 in rs.roots:
            for b2 in rs.roots:
                total = rs.add(b1, b2)
                if total is None:
                    continue
                for alpha in rs.simple_roots:
                    assert rs.pairing(total, alpha) == rs.pairing(b1, alpha) + rs.pairing(b2, alpha)

    def test_zero_node_pairs_to_zero(self):
        rs = build_from_name("G2")
        assert rs.pairing(Root.zero(2), rs.highest_root) == 0

    def test_not_a_root(self):
        rs = build_from_name("A2")
        with pytest.raises(NotARootError):
            rs.pairing(Root.of(2, 0), Root.of(1, 0))


class TestEpsilon:
    def test_c2_short_and_long(self):
        rs = build_from_name("C2")
        assert rs.root_from_epsilon([-1, -1]) == Root.of(-1, -1)
        assert rs.root_from_epsilon([-2, 0]) == Root.of(-2, -1)
        assert rs.epsilon_coordinates(Root.of(0, 1)) == (0, 2)

    def test_d4_spinor_root(self):
        rs = build_from_name("D4")
        assert rs.root_from_epsilon([0, 0, -1, -1]) == Root.of(0, 0, 0, -1)

    def test_not_a_root(self):
        rs = build_from_name("B2")
        with pytest.raises(NotARootError):
            rs.root_from_epsilon([2, 0])

    def test_exceptional_has_no_realization(self):
        with pytest.raises(InvalidLieTypeError):
            build_from_name("G2").epsilon_coordinates(Root.of(1, 0))


def test_d3_carries_a_note():
    assert build_from_name("D3").notes
    assert build_from_name("A3").notes == []


def test_build_is_cached():
    assert build(LieType.parse("E7")) is build(LieType.parse("E7"))


def test_type_docstrings_are_ascii():
    assert Family.__doc__.isascii()
    assert LieType.__doc__.isascii()
