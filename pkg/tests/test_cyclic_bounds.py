import pytest

from src.cyclic_bounds import (
    CyclicSpec,
    cyclic_f_vector,
    cyclic_facet_count,
    cyclic_polytope,
    gale_facets,
    geometric_facets,
    is_neighborly,
    lower_bound_check,
    lower_bound_values,
    moment_curve,
    satisfies_gale_evenness,
    upper_bound_check,
)
from src.errors import DegenerateInput, NotSimplicial
from src.polyhedra import polytope_lattice

from .helpers import Q


class TestCyclicPolytope:
    """測試 moment curve 與 Gale evenness"""

    def test_moment_curve(self):
        assert moment_curve(2, 3) == Q(2, 4, 8)
        assert moment_curve('1/2', 2) == Q('1/2', '1/4')

    @pytest.mark.parametrize('d, params', [(1, (1, 2, 3)), (3, (1, 2, 3)), (2, (1, 3, 2))])
    def test_invalid_spec(self, d, params):
        with pytest.raises(DegenerateInput):
            CyclicSpec(d, params)

    def test_gale_evenness(self):
        assert satisfies_gale_evenness((1, 2), 4)
        assert not satisfies_gale_evenness((1, 3), 4)
        assert satisfies_gale_evenness((2, 3), 4)

    def test_polygon(self):
        assert gale_facets(2, 5) == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
        assert cyclic_facet_count(2, 5) == 5

    def test_facet_count(self):
        """C_4(7) 有 14 個 facet"""
        assert cyclic_facet_count(4, 7) == 14
        assert len(gale_facets(4, 7)) == 14

    def test_f_vectors(self):
        assert cyclic_f_vector(4, 7) == (1, 7, 21, 28, 14)
        assert cyclic_f_vector(3, 6) == (1, 6, 12, 8)

    def test_geometric_facets_match_gale(self):
        assert geometric_facets(CyclicSpec.default(4, 7)) == gale_facets(4, 7)

    def test_custom_parameters(self):
        spec = CyclicSpec(3, (-2, -1, 0, 1, 3))
        assert geometric_facets(spec) == gale_facets(3, 5)

    def test_neighborly(self, octahedron):
        _, _, lattice = polytope_lattice(cyclic_polytope(CyclicSpec.default(4, 7)))
        _, _, octahedron_lattice = polytope_lattice(octahedron)

        assert is_neighborly(lattice, 2)
        assert not is_neighborly(octahedron_lattice, 2)

    def test_bad_dimensions(self):
        with pytest.raises(DegenerateInput):
            gale_facets(4, 4)


class TestBoundTheorems:
    """測試上界與下界定理的檢查"""

    def test_upper_bound_octahedron(self, octahedron):
        """d = 3 時頂點數相同的 simplicial polytope f-vector 都相同"""
        _, _, lattice = polytope_lattice(octahedron)
        report = upper_bound_check(lattice)

        assert report.passed
        assert report.details['cyclic_f'] == '6 12 8'
        assert report.details['h_bound'] == '1 3 6 10'
        assert report.details['equality'] == 'true'

    def test_upper_bound_attained_by_cyclic(self):
        _, _, lattice = polytope_lattice(cyclic_polytope(CyclicSpec.default(4, 7)))
        report = upper_bound_check(lattice)

        assert report.passed
        assert report.details['equality'] == 'true'

    def test_lower_bound_values(self):
        assert lower_bound_values(3, 6) == (6, 12, 8)
        assert lower_bound_values(4, 6) == (6, 14, 16, 8)

    def test_lower_bound_simplex(self, simplex3):
        _, _, lattice = polytope_lattice(simplex3)
        report = lower_bound_check(lattice)

        assert report.passed
        assert report.details['lower_bound'] == '4 6 4'
        assert report.details['equality'] == 'true'

    def test_needs_simplicial(self, cube):
        _, _, lattice = polytope_lattice(cube)
        with pytest.raises(NotSimplicial):
            upper_bound_check(lattice)
        with pytest.raises(NotSimplicial):
            lower_bound_check(lattice)
