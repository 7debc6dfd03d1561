import pytest

from bouquetdet.chains import WeightAssignment, ground_substitution
from bouquetdet.determinant import rhs_product, verify_theorem
from bouquetdet.matroid import (EmptySetMissing, ExchangeFails, NotAClutter,
                                NotDownwardClosed, NotSimple,
                                bouquet_flat_poset, bouquet_from_json,
                                build_bouquet_of_matroids, build_matroid,
                                flat_lattice, matroid_from_json, set_id,
                                simplify)
from conftest import load_fixture


class TestBuild:
    def test_u23(self, u23):
        assert u23.rank(["1", "2", "3"]) == 2
        assert u23.is_simple()

    def test_empty_set_missing(self):
        with pytest.raises(EmptySetMissing):
            build_matroid(["1"], [["1"]])

    def test_not_downward_closed(self):
        with pytest.raises(NotDownwardClosed):
            build_matroid(["1", "2", "3", "4"],
                          [[], ["1"], ["2"], ["1", "2"], ["3", "4"]])

    def test_exchange_fails(self):
        # two disjoint "independent" pairs with no mixing
        with pytest.raises(ExchangeFails):
            build_matroid(["1", "2", "3"],
                          [[], ["1"], ["2"], ["3"], ["2", "3"]])


class TestRankClosureFlats:
    def test_flats_u23(self, u23):
        assert [set_id(f) for f in u23.flats()] == \
            ["{}", "{1}", "{2}", "{3}", "{1,2,3}"]

    def test_closure_of_ground(self, u23):
        assert u23.closure(u23.ground) == frozenset(u23.ground)

    def test_flats_are_closure_fixed_points(self, u23):
        for f in u23.flats():
            assert u23.closure(f) == f


class TestSimple:
    def test_loop_not_simple(self):
        m = build_matroid(["1", "2"], [[], ["1"]])  # "2" is a loop
        assert not m.is_simple()

    def test_simplify_parallel_pair(self):
        m = build_matroid(["1", "2"], [[], ["1"], ["2"]])  # 1 and 2 parallel
        simple, rep = simplify(m)
        assert len(simple.ground) == 1
        assert rep["1"] == rep["2"]

    def test_simplify_drops_loops(self):
        m = build_matroid(["1", "2"], [[], ["1"]])
        simple, rep = simplify(m)
        assert simple.ground == ("1",)
        assert rep["2"] is None


class TestFlatLattice:
    def test_u23(self, u23_lattice):
        P, mapping = u23_lattice
        assert len(P.elements) == 5
        assert P.rank("{1,2,3}") == 2
        assert P.is_geometric_lattice()
        assert mapping["{1,2}"] if "{1,2}" in mapping else True

    def test_free_single_element(self):
        m = build_matroid(["e"], [[], ["e"]])
        P, _ = flat_lattice(m)
        assert P.elements == ("{}", "{e}")

    def test_rejects_non_simple(self):
        m = build_matroid(["1", "2"], [[], ["1"], ["2"]])
        with pytest.raises(NotSimple):
            flat_lattice(m)

    def test_rank_matches_matroid(self, u23, u23_lattice):
        P, _ = u23_lattice
        assert u23.rank(u23.ground) == P.rank("{1,2,3}")

    @pytest.mark.parametrize("name", [
        "matroid_u23.json", "matroid_u24.json", "matroid_u34.json",
        "matroid_k3.json", "matroid_k4_minus_edge.json", "matroid_cycle4.json"])
    def test_fixture_lattices_geometric(self, name):
        m = matroid_from_json(load_fixture(name))
        P, _ = flat_lattice(m)
        assert P.is_geometric_lattice()


class TestBouquet:
    def test_single_roof_is_matroid(self, u23):
        b = build_bouquet_of_matroids(
            u23.ground, [u23.ground], [sorted(i) for i in u23.independents])
        P, _ = bouquet_flat_poset(b)
        assert len(P.elements) == 5  # same as the plain flat lattice

    def test_two_disjoint_free_roofs(self):
        b = bouquet_from_json(load_fixture("bouquet_two_free_roofs.json"))
        P, _ = bouquet_flat_poset(b)
        assert P.bottom == "{}"
        assert set(P.atoms) == {"{x}", "{y}"}

    def test_not_a_clutter(self):
        with pytest.raises(NotAClutter):
            build_bouquet_of_matroids(
                ["1", "2"], [["1"], ["1", "2"]], [[], ["1"], ["2"]])

    def test_example_bouquet_matches_poset(self, bouquet_example):
        import networkx as nx
        b = bouquet_from_json(load_fixture("bouquet_example.json"))
        P, _ = bouquet_flat_poset(b)
        assert P.is_bouquet()
        g1 = nx.DiGraph(list(P.covers))
        g2 = nx.DiGraph(list(bouquet_example.covers))
        assert nx.is_isomorphic(g1, g2)


class TestFlagMatrixIdentity:
    @pytest.mark.parametrize("name", [
        "matroid_u23.json", "matroid_u24.json", "matroid_u34.json",
        "matroid_k3.json", "matroid_k4_minus_edge.json", "matroid_cycle4.json"])
    def test_verifies(self, name):
        m = matroid_from_json(load_fixture(name))
        P, _ = flat_lattice(m)
        assert verify_theorem(P).verdict

    def test_ground_substitution_preserves_identity(self, u23_lattice):
        P, mapping = u23_lattice
        weights = WeightAssignment.default(P)
        report = verify_theorem(P, weights=weights)
        assert report.verdict
        ground_vars = {e: 100 + i for i, e in enumerate(sorted("123"))}
        sub = ground_substitution(P, weights, mapping, ground_vars)
        assert report.determinant.substitute(sub) == \
            (report.rhs if report.sign == 1 else -report.rhs).substitute(sub)

    def test_exponents_match_rho(self, u23_lattice):
        P, _ = u23_lattice
        _, exps = rhs_product(P, WeightAssignment.default(P))
        top = P.maximal[0]
        for x in P.elements:
            assert exps[x] == P.beta(x) * abs(P.mobius(x, top))
