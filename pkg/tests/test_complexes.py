from itertools import combinations

import pytest

from src import config
from src.complexes import (
    PolyhedralComplex,
    SimplicialComplex,
    boundary_complex,
    dehn_sommerville_check,
    euler_characteristic,
    euler_check,
    f_from_h,
    f_vector,
    fh_vectors,
    h_from_f,
    h_from_shelling,
    is_shelling,
    join_vertex,
    line_shelling,
    polytope_boundary_complex,
    restriction_partition_check,
    shelling_of_complex,
    star_link,
    validate_complex,
    visible_facets,
)
from src.errors import (
    DegenerateInput,
    DimensionMismatch,
    InternalCheckFailure,
    InvalidShelling,
    NotSimplicial,
    PolytopeError,
)
from src.polyhedra import HRep, polytope_lattice

from .helpers import Q

STRIP = [{0, 1, 2}, {1, 2, 3}, {2, 3, 4}]
TETRAHEDRON_ORDER = [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}]


def tetrahedron_boundary() -> SimplicialComplex:
    return SimplicialComplex.from_facets(4, combinations(range(4), 3))


def faces(*sets):
    return [frozenset(s) for s in sets]


class TestSimplicialComplex:
    """測試複形的建構與幾何檢查"""

    def test_from_facets(self):
        K = SimplicialComplex.from_facets(5, STRIP)

        assert K.dim == 2
        assert K.is_pure
        assert K.facets == faces(*STRIP)
        assert len(K.faces_of_dim(1)) == 7

    def test_valid_geometric_complex(self):
        coords = (Q(0, 0), Q(1, 0), Q(0, 1), Q(1, 1))
        K = SimplicialComplex.from_facets(4, [{0, 1, 2}, {1, 2, 3}], coords)
        assert validate_complex(K).passed

    def test_overlapping_triangles(self):
        """(1,1) 落在另一個三角形的邊上"""
        coords = (Q(0, 0), Q(2, 0), Q(0, 2), Q(1, 1))
        K = SimplicialComplex.from_facets(4, [{0, 1, 2}, {0, 1, 3}], coords)
        report = validate_complex(K)

        assert not report.passed
        assert report.details['relative_interiors_disjoint'] == 'false'

    def test_degenerate_simplex(self):
        coords = (Q(0, 0), Q(1, 1), Q(2, 2))
        K = SimplicialComplex.from_facets(3, [{0, 1, 2}], coords)
        assert validate_complex(K).details['simplices_nondegenerate'] == 'false'

    def test_index_out_of_range(self):
        K = SimplicialComplex.from_facets(2, [{0, 1, 2}])
        assert not validate_complex(K).passed


class TestStarLinkBoundary:
    """測試 star、link、join、boundary"""

    def test_star_and_link_of_vertex(self):
        star, link = star_link(tetrahedron_boundary(), {0})

        assert star.facets == faces({0, 1, 2}, {0, 1, 3}, {0, 2, 3})
        assert link.facets == faces({1, 2}, {1, 3}, {2, 3})

    def test_star_of_non_face(self):
        K = SimplicialComplex.from_facets(5, STRIP)
        with pytest.raises(PolytopeError):
            star_link(K, {0, 4})

    def test_join_vertex(self):
        _, link = star_link(tetrahedron_boundary(), {0})
        cone = join_vertex(4, link)
        assert cone.facets == faces({1, 2, 4}, {1, 3, 4}, {2, 3, 4})

    def test_boundary_of_strip(self):
        K = SimplicialComplex.from_facets(5, STRIP)
        assert boundary_complex(K).facets == faces({0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4})

    def test_boundary_of_sphere_is_empty(self):
        assert boundary_complex(tetrahedron_boundary()).is_empty


class TestShelling:
    """測試 shelling 驗證與 restriction set"""

    def test_strip(self):
        K = SimplicialComplex.from_facets(5, STRIP)
        check = is_shelling(K, STRIP)

        assert check.passed
        assert list(check.restrictions) == faces(set(), {3}, {4})

    def test_strip_bad_order(self):
        """{2,3,4} 與 {0,1,2} 只交於一點"""
        K = SimplicialComplex.from_facets(5, STRIP)
        check = is_shelling(K, [STRIP[0], STRIP[2], STRIP[1]])

        assert not check.passed
        assert check.failed_at == 2
        assert check.report().lines()[-1] == 'status=fail'

    def test_not_a_permutation(self):
        K = SimplicialComplex.from_facets(5, STRIP)
        with pytest.raises(InvalidShelling):
            is_shelling(K, STRIP[:2])

    def test_tetrahedron_boundary(self):
        S = shelling_of_complex(tetrahedron_boundary(), TETRAHEDRON_ORDER)

        assert list(S.restrictions) == faces(set(), {3}, {2, 3}, {1, 2, 3})
        assert h_from_shelling(S) == (1, 1, 1, 1)

    def test_shelling_of_complex_rejects(self):
        K = SimplicialComplex.from_facets(5, STRIP)
        with pytest.raises(InvalidShelling):
            shelling_of_complex(K, [STRIP[0], STRIP[2], STRIP[1]])

    def test_reversed_sphere_shelling(self):
        """球面 shelling 反序仍是 shelling，restriction 變成補集"""
        K = tetrahedron_boundary()
        S = shelling_of_complex(K, TETRAHEDRON_ORDER)
        R = S.reversed()

        assert not R.verified
        assert is_shelling(K, R.facet_order).passed
        originals = reversed(S.restrictions)
        for F, restriction, original in zip(R.facet_order, R.restrictions, originals):
            assert restriction == F - original

    def test_unverified_shelling_has_no_h_vector(self):
        S = shelling_of_complex(tetrahedron_boundary(), TETRAHEDRON_ORDER)
        with pytest.raises(InvalidShelling):
            h_from_shelling(S.reversed())

    def test_restriction_partition(self):
        K = tetrahedron_boundary()
        S = shelling_of_complex(K, TETRAHEDRON_ORDER)
        assert restriction_partition_check(K, S).passed

    def test_polyhedral_complex(self):
        """兩個共邊的正方形"""
        coords = (Q(0, 0), Q(1, 0), Q(2, 0), Q(0, 1), Q(1, 1), Q(2, 1))
        K = PolyhedralComplex(coords, tuple(faces({0, 1, 3, 4}, {1, 2, 4, 5})))

        assert K.dim == 2
        assert is_shelling(K, K.cells).passed
        assert f_vector(K) == (1, 6, 7, 2)


class TestLineShelling:
    """測試 line shelling"""

    def test_octahedron(self, octahedron):
        S = line_shelling(octahedron)

        assert S.verified
        assert len(S.facet_order) == 8
        assert h_from_shelling(S) == (1, 3, 3, 1)

    def test_cube_is_triangulated(self, cube):
        S = line_shelling(cube, seed=1)

        assert len(S.facet_order) == 12
        assert sorted(S.polytope_order) == list(range(6))
        assert h_from_shelling(S) == (1, 5, 5, 1)

    def test_point_inside_rejected(self, octahedron):
        with pytest.raises(DegenerateInput):
            line_shelling(octahedron, Q(0, 0, 0))

    def test_point_on_facet_hyperplane_rejected(self, octahedron):
        with pytest.raises(DegenerateInput):
            line_shelling(octahedron, Q(1, 0, 0))

    def test_point_dimension_mismatch(self, octahedron):
        with pytest.raises(DimensionMismatch):
            line_shelling(octahedron, Q(5, 5))

    def test_simplicial_order_failure_is_internal(self, octahedron, monkeypatch):
        """simplicial polytope 的 line 順序一定是 shelling，排不出來就是內部錯誤"""
        import src.complexes as complexes_module

        monkeypatch.setattr(complexes_module, '_order_blocks', lambda blocks: None)
        with pytest.raises(InternalCheckFailure):
            line_shelling(octahedron)

    def test_non_simplicial_order_failure_retries(self, cube, monkeypatch):
        import src.complexes as complexes_module

        monkeypatch.setattr(complexes_module, '_order_blocks', lambda blocks: None)
        monkeypatch.setattr(config, 'SHELLING_MAX_TRIES', 3)
        with pytest.raises(DegenerateInput, match='within 3 tries'):
            line_shelling(cube)


class TestVectors:
    """測試 f/h-vector、Euler 特徵數、Dehn–Sommerville"""

    def test_octahedron_vectors(self, octahedron):
        _, _, lattice = polytope_lattice(octahedron)
        vectors = fh_vectors(lattice)

        assert vectors.f == (1, 6, 12, 8)
        assert vectors.h == (1, 3, 3, 1)

    def test_strip_vectors(self):
        vectors = fh_vectors(SimplicialComplex.from_facets(5, STRIP))

        assert vectors.f == (1, 5, 7, 3)
        assert vectors.h == (1, 2, 0, 0)

    def test_f_from_h_inverts(self):
        assert f_from_h((1, 3, 3, 1), 3) == (1, 6, 12, 8)
        assert h_from_f(f_from_h((1, 5, 5, 1), 3), 3) == (1, 5, 5, 1)

    def test_wrong_length(self):
        with pytest.raises(DimensionMismatch):
            h_from_f((1, 6, 12), 3)

    def test_euler(self, octahedron):
        _, _, lattice = polytope_lattice(octahedron)

        assert euler_check(lattice, 'boundary') == (2, 2, True)
        assert euler_check(lattice, 'solid') == (1, 1, True)
        assert euler_characteristic((1, 5, 7, 3)) == 1
        assert euler_check((1, 5, 7, 3), 'disk')[2]

    def test_dehn_sommerville(self, octahedron):
        _, _, lattice = polytope_lattice(octahedron)
        report = dehn_sommerville_check(lattice)

        assert report.passed
        assert report.details['h'] == '1 3 3 1'

    def test_dehn_sommerville_needs_simplicial(self, cube):
        _, _, lattice = polytope_lattice(cube)
        with pytest.raises(NotSimplicial):
            dehn_sommerville_check(lattice)


class TestBoundaryTriangulation:
    """測試邊界三角化與可見 facet"""

    def test_cube_boundary(self, cube):
        _, _, lattice = polytope_lattice(cube)
        K, _ = polytope_boundary_complex(lattice)

        assert len(K.facets) == 12
        assert f_vector(K) == (1, 8, 18, 12)
        assert euler_characteristic(K) == 2

    def test_visible_facets(self):
        square = HRep(2, ((1, Q(-1, 0)), (1, Q(1, 0)), (1, Q(0, -1)), (1, Q(0, 1))))

        assert visible_facets(square, Q(2, 0)) == [0]
        assert visible_facets(square, Q(2, 2)) == [0, 2]
        assert visible_facets(square, Q(0, 0)) == []

    def test_line_shelling_restricts_to_links(self, octahedron):
        """line shelling 限制在每個頂點的 link 上仍是 shelling"""
        S = line_shelling(octahedron)
        K = SimplicialComplex.from_facets(6, S.facet_order)

        for v in range(6):
            _, link = star_link(K, {v})
            order = [F - {v} for F in S.facet_order if v in F]
            assert is_shelling(link, order).passed
