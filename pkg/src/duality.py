"""
Polar duality, quadrics and projective completion.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .errors import DegenerateInput, DimensionMismatch, EmptyPolyhedron, PolytopeError
from .exact_core import (
    ONE,
    ZERO,
    Mat,
    Vec,
    determinant,
    dot,
    inverse,
    is_zero,
    mat,
    mat_mul,
    mat_vec,
    neg,
    nullspace,
    primitive,
    rref,
    solve_linear,
    sub,
    transpose,
    vec,
    zeros,
)
from .models import CheckReport
from .polyhedra import (
    ConeRep,
    HRep,
    Polyhedron,
    VRep,
    canonicalize_vrep,
    cone_contains,
    h_cone_to_v,
    h_to_v,
    homogenize,
    polytope_lattice,
    v_to_h,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quadric:
    """非退化二次曲面，由 (d+1)×(d+1) 對稱矩陣 F 決定；φ(u, v) = uᵀFv"""

    F: Mat

    def __post_init__(self):
        F = mat(self.F)
        n = len(F)
        if n < 2 or any(len(row) != n for row in F):
            raise DimensionMismatch('quadric matrix must be square of size at least 2')
        if any(F[i][j] != F[j][i] for i in range(n) for j in range(i)):
            raise DegenerateInput('quadric matrix is not symmetric')
        if determinant(F) == 0:
            raise DegenerateInput('quadric matrix is singular')
        object.__setattr__(self, 'F', F)

    @property
    def dim(self) -> int:
        return len(self.F) - 1

    @classmethod
    def sphere(cls, d: int) -> 'Quadric':
        """x_1² + … + x_d² − x_{d+1}² = 0"""
        return cls(tuple(
            tuple((ONE if i < d else -ONE) if i == j else ZERO for j in range(d + 1))
            for i in range(d + 1)
        ))

    @classmethod
    def paraboloid(cls, d: int) -> 'Quadric':
        """x_d = x_1² + … + x_{d−1}²，齊次化後為 Σx_i² − x_d·x_{d+1} = 0"""
        half = Fraction(-1, 2)
        rows = []
        for i in range(d + 1):
            row = []
            for j in range(d + 1):
                if i == j and i < d - 1:
                    row.append(ONE)
                elif {i, j} == {d - 1, d}:
                    row.append(half)
                else:
                    row.append(ZERO)
            rows.append(tuple(row))
        return cls(tuple(rows))

    def phi(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return dot(u, mat_vec(self.F, v))

    def apply(self, u: Sequence[Fraction]) -> Vec:
        return mat_vec(self.F, u)

    def on_surface(self, u: Sequence[Fraction]) -> bool:
        return self.phi(u, u) == 0


@dataclass(frozen=True)
class PolarityCenter:
    center: Vec

    @classmethod
    def origin(cls, d: int) -> 'PolarityCenter':
        return cls(zeros(d))


def _center(c: Optional[PolarityCenter], d: int) -> Vec:
    if c is None:
        return zeros(d)
    if len(c.center) != d:
        raise DimensionMismatch(f'center of dimension {len(c.center)} for a {d}-dim polyhedron')
    return c.center


def _nontrivial(rows: list[tuple[Fraction, Vec]]) -> list[tuple[Fraction, Vec]]:
    result = []
    for b, a in rows:
        if is_zero(a):
            if b < 0:
                result.append((b, a))
            continue
        if (b, a) not in result:
            result.append((b, a))
    return result


def polar_dual_v(P: VRep, c: Optional[PolarityCenter] = None) -> HRep:
    """
    V-polyhedron 對中心 c 的極對偶

    point y 產生 1 − (y−c)·(x−c) >= 0，ray v 產生 −v·(x−c) >= 0
    """
    if P.is_empty:
        raise EmptyPolyhedron('polar dual of an empty set')
    center = _center(c, P.dim)
    rows = []
    for y in P.points:
        w = sub(y, center)
        rows.append((ONE + dot(w, center), neg(w)))
    for v in P.rays:
        rows.append((dot(v, center), neg(v)))
    return HRep(P.dim, tuple(_nontrivial(rows)))


def polar_dual_h(P: HRep, c: Optional[PolarityCenter] = None) -> VRep:
    """
    H-polyhedron P(A, 1) 的極對偶 conv({a_i} ∪ {0}) + cone({a_j : b_j = 0})

    每列先依 b 正規化；b < 0 表示中心不在 P 內，直接拒絕。
    """
    d = P.dim
    center = _center(c, d)
    points: list[Vec] = [zeros(d)]
    rays: list[Vec] = []
    for b, a in P.ineqs:
        b = b + dot(a, center)
        if b < 0:
            raise DegenerateInput('the center of duality is not in the polyhedron')
        if b > 0:
            points.append(tuple(-x / b for x in a))
        elif not is_zero(a):
            rays.append(neg(a))
    for b, a in P.eqs:
        b = b + dot(a, center)
        if b != 0:
            raise DegenerateInput('the center of duality is not on an equation of the polyhedron')
        if not is_zero(a):
            rays.extend([a, neg(a)])
    dual = canonicalize_vrep(VRep(d, tuple(points), tuple(rays)))
    shifted = tuple(tuple(x + y for x, y in zip(p, center)) for p in dual.points)
    return VRep(d, shifted, dual.rays)


def quadric_polar_cone(C: ConeRep, Q: Quadric) -> ConeRep:
    """C* = {x | φ(u, x) <= 0 for every generator u}"""
    if C.dim != Q.dim + 1:
        raise DimensionMismatch(f'cone of dimension {C.dim} vs quadric of size {Q.dim + 1}')
    generators = C.generators if C.kind == 'v' else h_cone_to_v(C).generators
    rows = []
    for u in generators:
        row = Q.apply(u)
        if not is_zero(row):
            rows.append(row)
    return ConeRep(C.dim, 'h', halfspaces=tuple(rows))


def affine_polar_dual(P: VRep, Q: Quadric) -> HRep:
    """V-polyhedron 對二次曲面 Q 的對偶（以 HRep 表示）"""
    if P.dim != Q.dim:
        raise DimensionMismatch(f'polyhedron of dimension {P.dim} vs quadric of dimension {Q.dim}')
    if P.is_empty:
        raise EmptyPolyhedron('polar dual of an empty set')
    d = P.dim
    rows = []
    for g in [p + (ONE,) for p in P.points] + [r + (ZERO,) for r in P.rays]:
        h = Q.apply(g)
        rows.append((-h[d], neg(h[:d])))
    return HRep(d, tuple(_nontrivial(rows)))


def projective_completion(P: Polyhedron) -> ConeRep:
    if isinstance(P, HRep) and P.is_empty():
        raise EmptyPolyhedron('projective completion of an empty polyhedron')
    return homogenize(P)


def cone_generators(C: ConeRep) -> tuple[Vec, ...]:
    return C.generators if C.kind == 'v' else h_cone_to_v(C).generators


def cones_equal(C1: ConeRep, C2: ConeRep) -> bool:
    """以生成元互相包含判斷兩個 cone 是否相同"""
    if C1.dim != C2.dim:
        return False
    return all(C2.contains(g) for g in cone_generators(C1)) and all(
        C1.contains(g) for g in cone_generators(C2)
    )


def check_completion_duality_commutes(P: Polyhedron, Q: Quadric) -> CheckReport:
    """
    比較 (C(P))* 與 C(P*)

    P 可以是 HRep 或 VRep；另外也檢查 HRep 與 VRep 的 completion 是否一致。
    """
    if isinstance(P, HRep):
        H, V = P, h_to_v(P)
    else:
        V, H = canonicalize_vrep(P), v_to_h(P)
    if V.is_empty:
        raise EmptyPolyhedron('the polyhedron is empty')

    report = CheckReport(name='check-commute')
    left = quadric_polar_cone(projective_completion(V), Q)
    if Q == Quadric.sphere(V.dim):
        # 球面時右邊走歐氏極對偶
        right = projective_completion(polar_dual_v(V))
    else:
        right = projective_completion(affine_polar_dual(V, Q))
    left_gens = cone_generators(left)
    right_gens = cone_generators(right)
    report.add('dual_of_completion_generators', len(left_gens))
    report.add('completion_of_dual_generators', len(right_gens))
    report.require('left_in_right', all(right.contains(g) for g in left_gens))
    report.require('right_in_left', all(left.contains(g) for g in right_gens))
    report.require('completions_agree', cones_equal(homogenize(H), homogenize(V)))
    return report


# θ: sphere <-> hyperboloid


def theta_map(x: Sequence[Fraction], direction: Literal['forward', 'inverse'] = 'forward') -> Vec:
    """
    forward: z_{d+1} = x_{d+1} + x_{d+2}, z_{d+2} = x_{d+2} − x_{d+1}
    inverse: x_{d+1} = (z_{d+1} − z_{d+2})/2, x_{d+2} = (z_{d+1} + z_{d+2})/2
    """
    x = vec(x)
    if len(x) < 2:
        raise DimensionMismatch('theta acts on vectors of dimension at least 2')
    head, s, t = x[:-2], x[-2], x[-1]
    if direction == 'forward':
        return head + (s + t, t - s)
    if direction == 'inverse':
        return head + ((s - t) / 2, (s + t) / 2)
    raise PolytopeError(f'unknown direction {direction!r}')


def theta_map_hyperplane(h: Sequence[Fraction]) -> Vec:
    """θ 作用在超平面 h·x = 0 上：h′ = θ^{−T} h"""
    h = vec(h)
    head, s, t = h[:-2], h[-2], h[-1]
    return head + ((s + t) / 2, (t - s) / 2)


# Lineality (cospan decomposition)


def lineality_basis(C: ConeRep) -> list[Vec]:
    """U = C ∩ −C 的 RREF 基底"""
    if C.kind == 'h':
        rows = list(C.halfspaces) + list(C.eqs)
        basis = nullspace(rows, C.dim) if rows else [
            tuple(ONE if i == j else ZERO for j in range(C.dim)) for i in range(C.dim)
        ]
    else:
        basis = [g for g in C.generators if cone_contains(C.generators, neg(g), C.dim)]
    if not basis:
        return []
    reduced, _ = rref(basis)
    return [primitive(r) for r in reduced]


def is_pointed(C: ConeRep) -> bool:
    return not lineality_basis(C)


def _project_out(x: Vec, U: Sequence[Vec]) -> Vec:
    """x 在 U^⊥ 上的正交投影"""
    gram = [[dot(u, w) for w in U] for u in U]
    coeffs = solve_linear(gram, [dot(u, x) for u in U])
    result = list(x)
    for c, u in zip(coeffs, U):
        for j in range(len(result)):
            result[j] -= c * u[j]
    return tuple(result)


def split_lineality(C: ConeRep) -> tuple[list[Vec], ConeRep]:
    """C = U + C₀，C₀ = C ∩ U^⊥ 是 pointed cone"""
    U = lineality_basis(C)
    if not U:
        return [], C
    if C.kind == 'h':
        return U, ConeRep(C.dim, 'h', halfspaces=C.halfspaces, eqs=C.eqs + tuple(U))
    projected = []
    for g in C.generators:
        p = _project_out(g, U)
        if is_zero(p):
            continue
        key = primitive(p)
        if key not in [primitive(q) for q in projected]:
            projected.append(p)
    return U, ConeRep(C.dim, 'v', generators=tuple(projected))


# Projective maps


def transport_quadric(Q: Quadric, A: Sequence[Sequence[Fraction]]) -> Quadric:
    """h(x) = A·x 把 Q 送到 A^{−T} F A^{−1}"""
    A_inv = inverse(mat(A))
    if A_inv is None:
        raise DegenerateInput('projective map must be invertible')
    return Quadric(mat_mul(transpose(A_inv), mat_mul(Q.F, A_inv)))


def map_cone(C: ConeRep, A: Sequence[Sequence[Fraction]]) -> ConeRep:
    A = mat(A)
    if len(A) != C.dim:
        raise DimensionMismatch(f'map of size {len(A)} for a cone of dimension {C.dim}')
    if C.kind == 'v':
        return ConeRep(C.dim, 'v', generators=tuple(mat_vec(A, g) for g in C.generators))
    A_inv_t = inverse(transpose(A))
    if A_inv_t is None:
        raise DegenerateInput('projective map must be invertible')
    return ConeRep(
        C.dim,
        'h',
        halfspaces=tuple(mat_vec(A_inv_t, u) for u in C.halfspaces),
        eqs=tuple(mat_vec(A_inv_t, u) for u in C.eqs),
    )


def dual_f_vector_reversed(P: Polyhedron) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    (f(P), reversed f(P*))，中心取原點；兩者相等即 face complementarity 成立

    需要 P 有界且原點在內部。
    """
    H, V, lattice = polytope_lattice(P)
    if V.rays or any(b <= 0 for b, _ in H.ineqs) or H.eqs:
        raise DegenerateInput('the origin must be an interior point of a bounded polytope')
    dual = polar_dual_v(V)
    _, _, dual_lattice = polytope_lattice(dual)
    logger.debug(f'f(P)={lattice.f_vector()}, f(P*)={dual_lattice.f_vector()}')
    return lattice.f_vector(), tuple(reversed(dual_lattice.f_vector()))
