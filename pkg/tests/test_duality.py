import pytest

from src.duality import (
    PolarityCenter,
    Quadric,
    affine_polar_dual,
    check_completion_duality_commutes,
    cones_equal,
    dual_f_vector_reversed,
    is_pointed,
    lineality_basis,
    map_cone,
    polar_dual_h,
    polar_dual_v,
    projective_completion,
    quadric_polar_cone,
    split_lineality,
    theta_map,
    theta_map_hyperplane,
    transport_quadric,
)
from src.errors import DegenerateInput, DimensionMismatch, EmptyPolyhedron
from src.exact_core import dot
from src.polyhedra import ConeRep, HRep, VRep, h_to_v, same_polyhedron

from .helpers import Q

CROSS_POLYTOPE = (Q(-1, 0), Q(0, -1), Q(0, 1), Q(1, 0))


class TestQuadric:
    """測試二次曲面的建構與檢查"""

    def test_sphere(self):
        S = Quadric.sphere(2)

        assert S.dim == 2
        assert S.F == (Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, -1))
        assert S.on_surface(Q(1, 0, 1))
        assert not S.on_surface(Q(1, 1, 1))

    def test_paraboloid(self):
        """x_2 = x_1² 齊次化後 (1,1,1)、(2,4,1) 在曲面上"""
        P = Quadric.paraboloid(2)

        assert P.on_surface(Q(1, 1, 1))
        assert P.on_surface(Q(2, 4, 1))
        assert not P.on_surface(Q(1, 2, 1))

    def test_singular_rejected(self):
        with pytest.raises(DegenerateInput):
            Quadric((Q(1, 0), Q(0, 0)))

    def test_not_symmetric_rejected(self):
        with pytest.raises(DegenerateInput):
            Quadric((Q(1, 2), Q(0, 1)))

    def test_phi(self):
        S = Quadric.sphere(1)
        assert S.phi(Q(1, 2), Q(3, 1)) == 1


class TestEuclideanPolarity:
    """測試對原點（或給定中心）的極對偶"""

    def test_square_dual_is_cross_polytope(self, square):
        dual = polar_dual_v(square)
        assert h_to_v(dual).points == CROSS_POLYTOPE

    def test_h_dual_of_square(self):
        H = HRep(2, ((1, Q(-1, 0)), (1, Q(1, 0)), (1, Q(0, -1)), (1, Q(0, 1))))
        assert polar_dual_h(H).points == CROSS_POLYTOPE

    def test_double_dual(self, cube):
        """A** = A"""
        assert same_polyhedron(polar_dual_h(polar_dual_v(cube)), cube)

    def test_shifted_center(self):
        """以 (2, 2) 為中心時，對偶也平移到 (2, 2) 附近"""
        V = VRep(2, tuple((x + 2, y + 2) for x, y in CROSS_POLYTOPE))
        dual = polar_dual_v(V, PolarityCenter(Q(2, 2)))
        assert set(h_to_v(dual).points) == {Q(x, y) for x in (1, 3) for y in (1, 3)}

    def test_center_outside_rejected(self):
        with pytest.raises(DegenerateInput):
            polar_dual_h(HRep(1, ((-1, Q(1)),)))

    def test_empty_rejected(self):
        with pytest.raises(EmptyPolyhedron):
            polar_dual_v(VRep.empty(2))

    def test_f_vector_reversal(self, cube):
        f, reversed_dual = dual_f_vector_reversed(cube)

        assert f == (8, 12, 6)
        assert reversed_dual == f

    def test_simplex_is_self_dual(self):
        simplex = VRep(3, (Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, 1), Q(-1, -1, -1)))
        f, reversed_dual = dual_f_vector_reversed(simplex)

        assert f == (4, 6, 4)
        assert reversed_dual == f

    def test_origin_on_boundary_rejected(self, simplex3):
        with pytest.raises(DegenerateInput):
            dual_f_vector_reversed(simplex3)


class TestQuadricPolarity:
    """測試對二次曲面的 polar dual 與 projective completion"""

    def test_sphere_reproduces_euclidean_polarity(self, square):
        assert same_polyhedron(affine_polar_dual(square, Quadric.sphere(2)), polar_dual_v(square))

    def test_paraboloid_dual_of_point(self):
        """點 (1, 1) 對 paraboloid 的對偶是切線上方的半平面 x_2 >= 2x_1 − 1"""
        dual = affine_polar_dual(VRep(2, (Q(1, 1),)), Quadric.paraboloid(2))

        assert dual.contains(Q(0, -1))
        assert dual.contains(Q(1, 1))
        assert not dual.contains(Q(1, 0))

    def test_dimension_mismatch(self, square):
        with pytest.raises(DimensionMismatch):
            affine_polar_dual(square, Quadric.sphere(3))

    def test_completion_commutes(self, square):
        report = check_completion_duality_commutes(square, Quadric.sphere(2))

        assert report.passed
        assert report.lines()[-1] == 'status=pass'

    def test_completion_sphere_uses_euclidean_route(self, square, monkeypatch):
        """球面時 C(P*) 由歐氏極對偶求得，不經過 affine_polar_dual"""
        import src.duality as duality_module

        def fail(*args):
            raise AssertionError('affine_polar_dual should not be used for the sphere')

        monkeypatch.setattr(duality_module, 'affine_polar_dual', fail)
        assert check_completion_duality_commutes(square, Quadric.sphere(2)).passed


class TestQuadricPolarCone:
    """測試 cone 對二次曲面的 polar 與 projective completion"""

    def test_identity_form(self):
        """e₁ 對 F = I 的 polar 是 {x₁ <= 0}"""
        C = ConeRep(2, 'v', generators=(Q(1, 0),))
        polar = quadric_polar_cone(C, Quadric((Q(1, 0), Q(0, 1))))

        assert polar.halfspaces == (Q(1, 0),)
        assert polar.contains(Q(-1, 5))
        assert not polar.contains(Q(1, 0))

    def test_sphere_form(self):
        """(1, 1) 對球面的 polar 是 {x₁ − x₂ <= 0}"""
        C = ConeRep(2, 'v', generators=(Q(1, 1),))
        assert quadric_polar_cone(C, Quadric.sphere(1)).halfspaces == (Q(1, -1),)

    def test_dimension_mismatch(self):
        C = ConeRep(2, 'v', generators=(Q(1, 1),))
        with pytest.raises(DimensionMismatch):
            quadric_polar_cone(C, Quadric.sphere(2))

    def test_completion_of_empty_rejected(self):
        with pytest.raises(EmptyPolyhedron):
            projective_completion(HRep.empty(2))

    def test_completion_of_square(self, square):
        C = projective_completion(square)

        assert C.dim == 3
        assert C.contains(Q(2, 2, 2))
        assert not C.contains(Q(3, 0, 2))


class TestProjectiveMaps:
    """測試 θ、lineality 分解、projective 映射"""

    def test_theta_round_trip(self):
        x = Q(3, '1/2', -2)
        assert theta_map(theta_map(x), 'inverse') == x

    def test_theta_hyperplane(self):
        h = Q(1, 2, -3)
        x = Q(5, '1/3', 7)
        assert dot(theta_map_hyperplane(h), theta_map(x)) == dot(h, x)

    def test_lineality(self):
        halfplane = ConeRep(2, 'h', halfspaces=(Q(0, -1),))
        quadrant = ConeRep(2, 'h', halfspaces=(Q(-1, 0), Q(0, -1)))

        assert lineality_basis(halfplane) == [Q(1, 0)]
        assert not is_pointed(halfplane)
        assert is_pointed(quadrant)

    def test_split_lineality(self):
        C = ConeRep(2, 'v', generators=(Q(1, 0), Q(-1, 0), Q(0, 1)))
        U, pointed = split_lineality(C)

        assert U == [Q(1, 0)]
        assert pointed.generators == (Q(0, 1),)

    def test_transport_quadric(self):
        A = (Q(2, 0, 0), Q(0, 1, 0), Q(0, 0, 1))
        moved = transport_quadric(Quadric.sphere(2), A)

        assert moved.F == (Q('1/4', 0, 0), Q(0, 1, 0), Q(0, 0, -1))
        assert moved.on_surface(Q(2, 0, 1))

    def test_map_cone(self):
        swap = (Q(0, 1), Q(1, 0))
        C = ConeRep(2, 'h', halfspaces=(Q(-1, 0), Q(0, -1), Q(1, -2)))
        mapped = map_cone(C, swap)

        assert mapped.contains(Q(1, 2))
        assert not mapped.contains(Q(1, 3))

    def test_duality_commutes_with_projective_map(self):
        """(A·C)* 對 A 搬過去的二次曲面，等於 A·(C*)"""
        A = (Q(2, 1, 0), Q(0, 1, 1), Q(1, 0, 3))
        S = Quadric.sphere(2)
        C = ConeRep(3, 'v', generators=(Q(1, 0, 1), Q(0, 1, 1), Q(-1, 0, 1), Q(0, -1, 1)))

        left = quadric_polar_cone(map_cone(C, A), transport_quadric(S, A))
        right = map_cone(quadric_polar_cone(C, S), A)

        assert cones_equal(left, right)

    def test_singular_map_rejected(self):
        with pytest.raises(DegenerateInput):
            transport_quadric(Quadric.sphere(1), (Q(1, 2), Q(2, 4)))
