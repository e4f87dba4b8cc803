from fractions import Fraction

import pytest

from src.delvor import (
    SiteSet,
    SphereOrPlane,
    bisector,
    bisector_from_tangents,
    check_homogeneous_identities,
    check_theta_tangents,
    check_voronoi_vertices,
    circumsphere,
    delaunay_agreement,
    delaunay_paraboloid,
    delaunay_sphere,
    empty_circumsphere_check,
    general_position_check,
    lift_paraboloid,
    on_unit_sphere,
    projectively_equal,
    stereo_sigma_N,
    stereo_sphere_image,
    stereo_sphere_preimage,
    stereo_tau_N,
    tangent_hyperplane,
    unbounded_cells_match_hull,
    voronoi_cell,
    voronoi_diagram,
    voronoi_from_delaunay_duality,
    voronoi_vertices,
)
from src.errors import (
    DegenerateInput,
    DimensionMismatch,
    GeneralPositionError,
    NotOnSurface,
    NotSimplicial,
)
from src.exact_core import primitive

from .helpers import Q

# (1, 1) 在另外三點的三角形內
FOUR_SITES = SiteSet((Q(0, 0), Q(3, 0), Q(0, 3), Q(1, 1)))
UNIT_SQUARE = SiteSet((Q(0, 0), Q(1, 0), Q(0, 1), Q(1, 1)))

TRIANGLES = [frozenset({0, 1, 3}), frozenset({0, 2, 3}), frozenset({1, 2, 3})]


class TestSites:
    """測試 site 集合的驗證"""

    def test_duplicates_rejected(self):
        with pytest.raises(DegenerateInput):
            SiteSet((Q(0, 0), Q(0, 0)))

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatch):
            SiteSet((Q(0, 0), Q(1, 0, 0)))

    def test_empty(self):
        with pytest.raises(DegenerateInput):
            SiteSet(())

    def test_general_position(self):
        assert general_position_check(FOUR_SITES)
        assert not general_position_check(UNIT_SQUARE)


class TestVoronoi:
    """測試 bisector 與 Voronoi cell"""

    def test_bisector_keeps_first_site(self):
        b, a = bisector(Q(0, 0), Q(2, 0))

        assert (b, a) == (2, Q(-2, 0))
        assert b + sum(x * y for x, y in zip(a, Q(0, 0))) > 0

    def test_two_sites(self):
        cell = voronoi_cell(0, SiteSet((Q(0, 0), Q(2, 0))))

        assert cell.contains(Q(0, 5))
        assert cell.contains(Q(1, -7))
        assert not cell.contains(Q('3/2', 0))

    def test_single_site_is_everything(self):
        assert voronoi_cell(0, SiteSet((Q(4, 4),))).contains(Q(-100, 100))

    def test_index_out_of_range(self):
        with pytest.raises(DimensionMismatch):
            voronoi_cell(4, FOUR_SITES)

    def test_vertices_are_circumcenters(self):
        diagram = voronoi_diagram(FOUR_SITES)

        assert voronoi_vertices(diagram) == [Q('-1/2', '3/2'), Q('3/2', '-1/2'), Q('7/2', '7/2')]
        assert diagram.cells_containing(Q('7/2', '7/2')) == [1, 2, 3]
        assert check_voronoi_vertices(diagram).passed

    def test_unbounded_cells(self):
        """只有內部的 site (1, 1) 的 cell 有界"""
        report = unbounded_cells_match_hull(voronoi_diagram(FOUR_SITES))

        assert report.passed
        assert report.details['unbounded'] == '3'

    def test_parallel(self):
        assert voronoi_diagram(FOUR_SITES, jobs=2) == voronoi_diagram(FOUR_SITES)

    def test_duality_with_delaunay(self):
        _, report = voronoi_from_delaunay_duality(FOUR_SITES)

        assert report.passed
        assert report.details['delaunay_edges'] == '6'


class TestDelaunay:
    """測試兩條 Delaunay 路線與外接球"""

    def test_paraboloid(self):
        D = delaunay_paraboloid(FOUR_SITES)

        assert list(D.cells) == TRIANGLES
        assert D.is_simplicial
        assert D.complex.dim == 2

    def test_sphere(self):
        assert list(delaunay_sphere(FOUR_SITES).cells) == TRIANGLES

    def test_agreement(self):
        report = delaunay_agreement(FOUR_SITES)

        assert report.passed
        assert report.lines() == [
            'cells=3',
            'agree=true',
            'empty_circumspheres=true',
            'status=pass',
        ]

    def test_cospherical_rejected(self):
        with pytest.raises(GeneralPositionError):
            delaunay_paraboloid(UNIT_SQUARE)

    def test_cospherical_allowed(self):
        """四點共圓時只有一個四邊形 cell"""
        D = delaunay_paraboloid(UNIT_SQUARE, allow_degenerate=True)

        assert list(D.cells) == [frozenset({0, 1, 2, 3})]
        assert not D.is_simplicial
        assert empty_circumsphere_check(D, strict=False)
        with pytest.raises(NotSimplicial):
            D.complex

    def test_collinear_sites(self):
        """site 只張成一條直線時在仿射包內計算"""
        S = SiteSet((Q(0, 0), Q(1, 0), Q(3, 0)))
        D = delaunay_paraboloid(S)

        assert list(D.cells) == [frozenset({0, 1}), frozenset({1, 2})]
        with pytest.raises(DegenerateInput):
            delaunay_sphere(S)

    def test_circumsphere(self):
        center, r2 = circumsphere([Q(0, 0), Q(3, 0), Q(1, 1)])

        assert center == Q('3/2', '-1/2')
        assert r2 == Fraction(5, 2)

    def test_circumsphere_of_dependent_points(self):
        with pytest.raises(DegenerateInput):
            circumsphere([Q(0, 0), Q(1, 1), Q(2, 2)])


class TestStereographic:
    """測試 stereographic 投影與齊次座標恆等式"""

    def test_tau_lands_on_sphere(self):
        z = stereo_tau_N(Q(1, 2))

        assert z == Q('1/3', '2/3', '2/3')
        assert on_unit_sphere(z)
        assert stereo_sigma_N(z) == Q(1, 2)

    def test_north_pole(self):
        with pytest.raises(DegenerateInput):
            stereo_sigma_N(Q(0, 0, 1))

    def test_lift(self):
        assert lift_paraboloid(Q(1, 2)) == Q(1, 2, 5)

    def test_equator_maps_to_unit_circle(self):
        image = stereo_sphere_image(Q(0, 0, 1), 0)

        assert image.kind == 'sphere'
        assert image.value(Q(1, 0)) == 0
        assert image.value(Q(0, 0)) != 0
        a, b = stereo_sphere_preimage(image)
        assert projectively_equal(a + (b,), Q(0, 0, 1, 0))

    def test_plane_through_pole_maps_to_line(self):
        image = stereo_sphere_image(Q(1, 0, 0), 0)

        assert image.kind == 'hyperplane'
        assert image == SphereOrPlane(0, Q(1, 0), 0)

    @pytest.mark.parametrize('x', [Q(1, 2), Q('-1/3', 0), Q(0, 0), Q(5)])
    def test_homogeneous_identities(self, x):
        assert check_homogeneous_identities(x).passed
        assert check_theta_tangents(x)

    def test_tangent_needs_surface_point(self):
        with pytest.raises(NotOnSurface):
            tangent_hyperplane('sphere', Q(1, 1, 1))

    def test_bisector_from_tangents(self):
        """與直接算的 bisector 是同一個半平面"""
        for a, b in [(Q(0, 0), Q(2, 0)), (Q(1, 1), Q(0, 3)), (Q('1/2', -1), Q(4, 2))]:
            row = bisector_from_tangents(a, b)
            expected = bisector(a, b)
            assert primitive(row[1] + (row[0],)) == primitive(expected[1] + (expected[0],))
