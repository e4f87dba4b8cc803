"""
Voronoi diagrams and Delaunay complexes.

Three routes are implemented and cross-checked:
    - bisector halfspaces (Voronoi cells directly)
    - lifting to the paraboloid, lower facets of conv(l(P)) + cone(e_{d+1})
    - inverse stereographic lifting to S^d, facets of conv(τ_N(P) ∪ {N}) that avoid N

All maps also come in homogeneous form so the projective identities can be checked exactly.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal, Optional, Sequence

from .complexes import Face, PolyhedralComplex, SimplicialComplex
from .duality import Quadric, theta_map, theta_map_hyperplane
from .errors import (
    DegenerateInput,
    DimensionMismatch,
    GeneralPositionError,
    InternalCheckFailure,
    NotOnSurface,
    NotSimplicial,
)
from .exact_core import (
    ONE,
    ZERO,
    Vec,
    affine_dimension,
    determinant,
    dot,
    norm2,
    primitive,
    rank,
    scale,
    solve_linear,
    sub,
    unit,
    vec,
)
from .feasibility import Row
from .models import CheckReport
from .polyhedra import HRep, VRep, h_to_v, make_irredundant, membership, v_to_h

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SiteSet:
    sites: tuple[Vec, ...]

    def __post_init__(self):
        sites = tuple(vec(p) for p in self.sites)
        if not sites:
            raise DegenerateInput('a site set needs at least one site')
        d = len(sites[0])
        if d < 1 or any(len(p) != d for p in sites):
            raise DimensionMismatch('sites must share a positive dimension')
        if len(set(sites)) != len(sites):
            raise DegenerateInput('sites must be pairwise distinct')
        object.__setattr__(self, 'sites', sites)

    @property
    def dim(self) -> int:
        return len(self.sites[0])

    @property
    def n(self) -> int:
        return len(self.sites)

    @property
    def affine_dim(self) -> int:
        return affine_dimension(self.sites)

    def __getitem__(self, i: int) -> Vec:
        return self.sites[i]


@dataclass(frozen=True)
class VoronoiDiagram:
    sites: SiteSet
    cells: tuple[HRep, ...]

    @property
    def dim(self) -> int:
        return self.sites.dim

    def cells_containing(self, x: Sequence[Fraction]) -> list[int]:
        return [i for i, cell in enumerate(self.cells) if membership(x, cell)]


@dataclass(frozen=True)
class DelaunayComplex:
    """cells 為 site index 的集合；一般位置時每個 cell 是單形"""

    sites: SiteSet
    cells: tuple[Face, ...]
    method: str = 'paraboloid'

    @property
    def dim(self) -> int:
        return max(len(c) for c in self.cells) - 1

    @property
    def is_simplicial(self) -> bool:
        k = self.sites.affine_dim
        return all(len(c) == k + 1 for c in self.cells)

    @property
    def complex(self) -> SimplicialComplex:
        if not self.is_simplicial:
            raise NotSimplicial('degenerate Delaunay subdivision has non-simplex cells')
        return SimplicialComplex.from_facets(self.sites.n, self.cells, self.sites.sites)

    @property
    def polyhedral(self) -> PolyhedralComplex:
        return PolyhedralComplex(self.sites.sites, self.cells)

    def edges(self) -> set[Face]:
        return {frozenset(pair) for c in self.cells for pair in combinations(sorted(c), 2)}

    def same_cells(self, other: 'DelaunayComplex') -> bool:
        return set(self.cells) == set(other.cells)


# Bisectors and Voronoi cells


def bisector(a: Sequence[Fraction], b: Sequence[Fraction]) -> Row:
    """
    (b−a)·x = (|b|² − |a|²)/2，以 b0 + w·x >= 0 表示含 a 的那一側
    """
    a, b = vec(a), vec(b)
    if a == b:
        raise DegenerateInput('bisector of a point with itself')
    return (norm2(b) - norm2(a)) / 2, sub(a, b)


def voronoi_cell(i: int, S: SiteSet) -> HRep:
    if not 0 <= i < S.n:
        raise DimensionMismatch(f'site index {i} out of range')
    if S.n == 1:
        return HRep.whole(S.dim)
    rows = [bisector(S[i], S[j]) for j in range(S.n) if j != i]
    return make_irredundant(HRep(S.dim, tuple(rows)))


def voronoi_diagram(S: SiteSet, jobs: int = 1) -> VoronoiDiagram:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            cells = list(executor.map(lambda i: voronoi_cell(i, S), range(S.n)))
    else:
        cells = [voronoi_cell(i, S) for i in range(S.n)]
    return VoronoiDiagram(S, tuple(cells))


# Liftings and stereographic projection


def lift_paraboloid(x: Sequence[Fraction]) -> Vec:
    x = vec(x)
    return x + (norm2(x),)


def north_pole(d: int) -> Vec:
    """N ∈ S^d ⊆ R^{d+1}"""
    return unit(d + 1, d)


def stereo_sigma_N(z: Sequence[Fraction]) -> Vec:
    """σ_N(x, x_{d+1}) = x / (1 − x_{d+1})"""
    z = vec(z)
    if z[-1] == 1:
        raise DegenerateInput('stereographic projection is undefined at the north pole')
    return scale(ONE / (1 - z[-1]), z[:-1])


def stereo_tau_N(x: Sequence[Fraction]) -> Vec:
    """τ_N(x) = (2x/(|x|²+1), (|x|²−1)/(|x|²+1))"""
    x = vec(x)
    s = norm2(x)
    return scale(2 / (s + 1), x) + ((s - 1) / (s + 1),)


def on_unit_sphere(z: Sequence[Fraction]) -> bool:
    return norm2(z) == 1


@dataclass(frozen=True)
class SphereOrPlane:
    """quad·Σ X_i² + linear·X + const = 0；quad 為 0（超平面）或 1（球面）"""

    quad: Fraction
    linear: Vec
    const: Fraction

    @property
    def kind(self) -> Literal['sphere', 'hyperplane']:
        return 'sphere' if self.quad != 0 else 'hyperplane'

    def value(self, X: Sequence[Fraction]) -> Fraction:
        return self.quad * norm2(X) + dot(self.linear, X) + self.const

    def normalized(self) -> 'SphereOrPlane':
        if self.quad != 0:
            return SphereOrPlane(ONE, scale(1 / self.quad, self.linear), self.const / self.quad)
        w = primitive(self.linear + (self.const,))
        return SphereOrPlane(ZERO, w[:-1], w[-1])


def stereo_sphere_image(a: Sequence[Fraction], b: Fraction) -> SphereOrPlane:
    """
    σ_N 把 S^d ∩ {a·x + b = 0}（a 長度 d+1）送到一個球面或超平面

    a_{d+1} + b ≠ 0: Σ X² + 2Σ a_i/(a_{d+1}+b) X_i − (a_{d+1}−b)/(a_{d+1}+b) = 0
    a_{d+1} + b = 0: Σ a_i X_i − a_{d+1} = 0
    """
    a = vec(a)
    b = Fraction(b)
    head, last = a[:-1], a[-1]
    denom = last + b
    if denom == 0:
        return SphereOrPlane(ZERO, head, -last)
    return SphereOrPlane(ONE, scale(2 / denom, head), -(last - b) / denom)


def stereo_sphere_preimage(eq: SphereOrPlane) -> tuple[Vec, Fraction]:
    """
    反方向：回傳超平面 (a, b)，a 長度 d+1

    球面 ΣX² + c·X + k = 0  → c·x + (1−k)x_{d+1} + (1+k) = 0
    超平面 c·X + k = 0      → c·x − k·x_{d+1} + k = 0
    """
    eq = eq.normalized() if eq.quad != 0 else eq
    c, k = eq.linear, eq.const
    if eq.quad != 0:
        return c + (1 - k,), 1 + k
    return c + (-k,), k


# Homogeneous maps


def psi_embed(x: Sequence[Fraction]) -> Vec:
    """x ↦ (x : 1)"""
    return vec(x) + (ONE,)


def lift_tilde(x: Sequence[Fraction]) -> Vec:
    """x ↦ (x : Σx² : 1)"""
    x = vec(x)
    return x + (norm2(x), ONE)


def tau_tilde_N(x: Sequence[Fraction]) -> Vec:
    """(x_1 : … : x_{d+1}) ↦ (2x_i x_{d+1} : Σx_i² − x_{d+1}² : Σx_i² + x_{d+1}²)"""
    x = vec(x)
    head, w = x[:-1], x[-1]
    s = norm2(head)
    return tuple(2 * xi * w for xi in head) + (s - w * w, s + w * w)


def pi_tilde_N(x: Sequence[Fraction]) -> Vec:
    """從北極 (0 : … : 1 : 1) 作中心投影到 x_{d+1} = 0"""
    x = vec(x)
    image = x[:-2] + (x[-1] - x[-2],)
    if all(c == 0 for c in image):
        raise DegenerateInput('central projection is undefined at the north pole')
    return image


def sigma_tilde_N(x: Sequence[Fraction]) -> Vec:
    """π̃_N 限制在球面 Σ_{i<=d+1} x_i² = x_{d+2}² 上"""
    x = vec(x)
    if norm2(x[:-1]) != x[-1] * x[-1]:
        raise NotOnSurface('point is not on the sphere')
    return pi_tilde_N(x)


def p_tilde(x: Sequence[Fraction], i: int) -> Vec:
    """去掉第 i 個齊次座標（1-based）"""
    x = vec(x)
    image = x[: i - 1] + x[i:]
    if all(c == 0 for c in image):
        raise DegenerateInput(f'projection dropping coordinate {i} is undefined here')
    return image


def projectively_equal(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """u 與 v 是同一個射影點（非零倍數）"""
    u, v = vec(u), vec(v)
    if len(u) != len(v):
        raise DimensionMismatch('homogeneous vectors of different lengths')
    if all(c == 0 for c in u) or all(c == 0 for c in v):
        return False
    return rank([u, v]) == 1


def check_homogeneous_identities(x: Sequence[Fraction]) -> CheckReport:
    """l̃ = θ∘τ̃_N∘ψ，π̃_N = p̃_{d+1}∘θ，τ̃_N∘ψ = ψ∘τ_N，l̃ = ψ∘l"""
    x = vec(x)
    d = len(x)
    lifted = tau_tilde_N(psi_embed(x))
    report = CheckReport(name='homogeneous-identities')
    report.require('theta_of_tau_is_2_lift', theta_map(lifted) == scale(Fraction(2), lift_tilde(x)))
    report.require('tau_tilde_is_tau', projectively_equal(lifted, psi_embed(stereo_tau_N(x))))
    report.require('lift_tilde_is_lift', lift_tilde(x) == psi_embed(lift_paraboloid(x)))
    report.require('pi_is_p_theta', pi_tilde_N(lifted) == p_tilde(theta_map(lifted), d + 1))
    report.require('sigma_inverts_tau', projectively_equal(sigma_tilde_N(lifted), psi_embed(x)))
    return report


# Tangent hyperplanes


Surface = Literal['sphere', 'paraboloid']


def tangent_hyperplane(surface: Surface, a: Sequence[Fraction]) -> Vec:
    """
    齊次點 a（長度 d+2）上的切超平面係數

    sphere:     Σ a_i x_i − a_{d+2} x_{d+2} = 0
    paraboloid: 2Σ a_i x_i − a_{d+2} x_{d+1} − a_{d+1} x_{d+2} = 0
    """
    a = vec(a)
    if len(a) < 3:
        raise DimensionMismatch('tangent hyperplanes need d >= 1')
    if surface == 'sphere':
        Q = Quadric.sphere(len(a) - 1)
        factor = ONE
    elif surface == 'paraboloid':
        Q = Quadric.paraboloid(len(a) - 1)
        factor = Fraction(2)
    else:
        raise DegenerateInput(f'unknown surface {surface!r}')
    if not Q.on_surface(a):
        raise NotOnSurface(f'point is not on the {surface}')
    return scale(factor, Q.apply(a))


def check_theta_tangents(x: Sequence[Fraction]) -> bool:
    """θ 把球面在 τ̃_N∘ψ(x) 的切超平面送到拋物面在 l̃(x) 的切超平面"""
    sphere_tangent = tangent_hyperplane('sphere', tau_tilde_N(psi_embed(x)))
    paraboloid_tangent = tangent_hyperplane('paraboloid', lift_tilde(x))
    return projectively_equal(theta_map_hyperplane(sphere_tangent), paraboloid_tangent)


def bisector_from_tangents(a: Sequence[Fraction], b: Sequence[Fraction]) -> Row:
    """
    兩個切超平面 E_a, E_b 的 pencil 中過北極的那一個 (E_b − E_a)，經 π̃_N 投影再去齊次化

    回傳與 bisector 相同方向（含 a 的一側 >= 0）的 primitive 列
    """
    a, b = vec(a), vec(b)
    if a == b:
        raise DegenerateInput('bisector of a point with itself')
    d = len(a)
    Ea = tangent_hyperplane('sphere', tau_tilde_N(psi_embed(a)))
    Eb = tangent_hyperplane('sphere', tau_tilde_N(psi_embed(b)))
    H = sub(Eb, Ea)
    if dot(H, (ZERO,) * d + (ONE, ONE)) != 0:
        raise InternalCheckFailure('tangent pencil member does not pass through the north pole')
    projected = H[:d] + (H[d + 1],)
    w = primitive(projected)
    row = (w[d], w[:d])
    if row[0] + dot(row[1], a) < 0:
        row = (-row[0], tuple(-c for c in row[1]))
    return row


# General position and circumspheres


def _affine_coordinates(S: SiteSet) -> tuple[int, list[Vec]]:
    """以 p_0 為原點、仿射包中的一組差向量為基底的座標"""
    base = S[0]
    basis: list[Vec] = []
    for p in S.sites[1:]:
        diff = sub(p, base)
        if rank(basis + [diff]) > len(basis):
            basis.append(diff)
    k = len(basis)
    if k == 0:
        return 0, [() for _ in S.sites]
    M = [tuple(v[i] for v in basis) for i in range(S.dim)]
    coords = []
    for p in S.sites:
        y = solve_linear(M, sub(p, base))
        if y is None:
            raise InternalCheckFailure('site outside its own affine hull')
        coords.append(y)
    return k, coords


def _lifted_rows(S: SiteSet) -> tuple[int, list[Vec]]:
    """(y_i, |p_i|²)：仿射包內的座標加上真實的平方長度"""
    k, coords = _affine_coordinates(S)
    return k, [y + (norm2(p),) for y, p in zip(coords, S.sites)]


def general_position_check(S: SiteSet) -> bool:
    """沒有 d+2 個 site 落在同一個 (d−1)-球面上（lifted 行列式不為 0）"""
    k, lifted = _lifted_rows(S)
    if S.n <= k + 1:
        return True
    for subset in combinations(range(S.n), k + 2):
        rows = [lifted[i] + (ONE,) for i in subset]
        if determinant(rows) == 0:
            logger.debug(f'cospherical sites: {[i + 1 for i in subset]}')
            return False
    return True


def circumsphere(
    points: Sequence[Vec], allow_dependent: bool = False
) -> Optional[tuple[Vec, Fraction]]:
    """
    外接球（中心落在點集的仿射包內）

    令 v_j = p_j − p_0、c = p_0 + Σ α_i v_i，等距條件為 Σ_i (v_j·v_i) α_i = |v_j|²/2。

    Returns:
        (center, radius²)；allow_dependent 時點不共球回傳 None
    """
    if not points:
        raise DegenerateInput('circumsphere of an empty cell')
    p0 = points[0]
    diffs = [sub(p, p0) for p in points[1:]]
    basis: list[Vec] = []
    for v in diffs:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    if len(basis) < len(diffs) and not allow_dependent:
        raise DegenerateInput('cell vertices are not affinely independent')

    center = p0
    if basis:
        gram = [tuple(dot(u, v) for v in basis) for u in basis]
        alpha = solve_linear(gram, [norm2(u) / 2 for u in basis])
        if alpha is None:
            raise InternalCheckFailure('Gram matrix of independent vectors is singular')
        center = tuple(
            p0[j] + sum((a * v[j] for a, v in zip(alpha, basis)), ZERO) for j in range(len(p0))
        )
    r2 = norm2(sub(center, p0))
    if any(norm2(sub(p, center)) != r2 for p in points):
        return None
    return center, r2


def empty_circumsphere_check(
    C: DelaunayComplex, S: Optional[SiteSet] = None, strict: bool = True
) -> bool:
    """每個 cell 的外接球內沒有其他 site（strict 時球面上也不行）"""
    S = S or C.sites
    for cell in C.cells:
        sphere = circumsphere([S[i] for i in sorted(cell)], allow_dependent=not strict)
        if sphere is None:
            return False
        center, r2 = sphere
        for j in range(S.n):
            if j in cell:
                continue
            dist = norm2(sub(S[j], center))
            if dist < r2 or (strict and dist == r2):
                logger.debug(f'site {j + 1} violates the circumsphere of {sorted(cell)}')
                return False
    return True


# Delaunay complexes


def _require_general_position(S: SiteSet, allow_degenerate: bool):
    if not allow_degenerate and not general_position_check(S):
        raise GeneralPositionError(
            'sites are not in general position (some d+2 are cospherical); '
            'see general_position_check or pass allow_degenerate'
        )


def _lower_cells(H: HRep, lifted: Sequence[Vec]) -> list[Face]:
    """最後一個法向量座標 > 0 的 facet（下凸包），回傳其 tight site 集合"""
    cells = []
    for b, a in H.ineqs:
        if a[-1] <= 0:
            continue
        cells.append(frozenset(i for i, y in enumerate(lifted) if b + dot(a, y) == 0))
    return sorted(cells, key=sorted)


def delaunay_paraboloid(S: SiteSet, allow_degenerate: bool = False) -> DelaunayComplex:
    """
    conv(l(P)) + cone(e_{d+1}) 的下凸包 facet 投影下來

    site 不張滿 R^d 時在其仿射包內計算（提升高度仍用真實的 |p|²）。
    """
    _require_general_position(S, allow_degenerate)
    k, lifted = _lifted_rows(S)
    if k == 0:
        return DelaunayComplex(S, (frozenset({0}),), 'paraboloid')
    V = VRep(k + 1, tuple(lifted), (unit(k + 1, k),))
    H = v_to_h(V)
    cells = _lower_cells(H, lifted)
    logger.debug(f'delaunay (paraboloid): {len(cells)} cells from {len(H.ineqs)} facets')
    return DelaunayComplex(S, tuple(cells), 'paraboloid')


def delaunay_sphere(S: SiteSet, allow_degenerate: bool = False) -> DelaunayComplex:
    """conv(τ_N(P) ∪ {N}) 中不含北極的 facet"""
    if S.affine_dim != S.dim:
        raise DegenerateInput('the sphere route needs sites that affinely span R^d')
    _require_general_position(S, allow_degenerate)
    d = S.dim
    points = [stereo_tau_N(p) for p in S.sites] + [north_pole(d)]
    pole = len(points) - 1
    V = VRep(d + 1, tuple(points))
    H = v_to_h(V)
    cells = []
    for b, a in H.ineqs:
        tight = frozenset(i for i, y in enumerate(points) if b + dot(a, y) == 0)
        if pole in tight:
            continue
        cells.append(tight)
    cells.sort(key=sorted)
    logger.debug(f'delaunay (sphere): {len(cells)} cells, {len(H.ineqs) - len(cells)} through N')
    return DelaunayComplex(S, tuple(cells), 'sphere')


def delaunay_agreement(S: SiteSet, allow_degenerate: bool = False) -> CheckReport:
    """兩條路線的 Delaunay complex 是否相同，並各自通過空外接球檢查"""
    by_paraboloid = delaunay_paraboloid(S, allow_degenerate)
    by_sphere = delaunay_sphere(S, allow_degenerate)
    strict = not allow_degenerate
    report = CheckReport(name='delaunay')
    report.add('cells', len(by_paraboloid.cells))
    report.require('agree', by_paraboloid.same_cells(by_sphere))
    report.require('empty_circumspheres', empty_circumsphere_check(by_paraboloid, S, strict))
    return report


# Voronoi cross-checks


def _facet_rows(cell: HRep) -> set[Vec]:
    return {primitive(a + (b,)) for b, a in cell.ineqs}


def voronoi_neighbors(diagram: VoronoiDiagram) -> set[Face]:
    """V_i 與 V_j 共用一個 facet（bisector 是 V_i 的 facet）"""
    S = diagram.sites
    pairs = set()
    for i, cell in enumerate(diagram.cells):
        rows = _facet_rows(cell)
        for j in range(S.n):
            if j == i:
                continue
            b, a = bisector(S[i], S[j])
            if primitive(a + (b,)) in rows:
                pairs.add(frozenset({i, j}))
    return pairs


def _format_pair(pair: Face) -> str:
    i, j = sorted(pair)
    return f'{i + 1}-{j + 1}'


def voronoi_from_delaunay_duality(S: SiteSet) -> tuple[VoronoiDiagram, CheckReport]:
    """
    每個 cell 算兩次：
        (a) 所有 bisector 的交集
        (b) 只用 Delaunay 鄰居，bisector 由兩個球面切超平面經 π̃_N 投影而來
    並比較 Delaunay 邊與 Voronoi facet 鄰接
    """
    diagram = voronoi_diagram(S)
    delaunay = delaunay_paraboloid(S)
    edges = delaunay.edges() if S.n > 1 else set()

    report = CheckReport(name='voronoi-duality')
    mismatched = []
    for i in range(S.n):
        neighbors = sorted(j for e in edges if i in e for j in e if j != i)
        if S.n == 1:
            dual_cell = HRep.whole(S.dim)
        else:
            rows = [bisector_from_tangents(S[i], S[j]) for j in neighbors]
            dual_cell = make_irredundant(HRep(S.dim, tuple(rows)))
        if (dual_cell.ineqs, dual_cell.eqs) != (diagram.cells[i].ineqs, diagram.cells[i].eqs):
            mismatched.append(str(i + 1))

    adjacency = voronoi_neighbors(diagram)
    report.add('cells', S.n)
    report.add('delaunay_edges', len(edges))
    report.require('cells_agree', not mismatched)
    if mismatched:
        report.add('cell_mismatch', ' '.join(mismatched))
    report.require('adjacency_agrees', adjacency == edges)
    diff = sorted(adjacency ^ edges, key=sorted)
    if diff:
        report.add('adjacency_mismatch', ' '.join(_format_pair(p) for p in diff))
    return diagram, report


def _is_vertex(v: Vec, cell: HRep) -> bool:
    normals = [a for b, a in cell.ineqs if b + dot(a, v) == 0] + [a for _, a in cell.eqs]
    return rank(normals) == cell.dim if normals else False


def voronoi_vertices(diagram: VoronoiDiagram) -> list[Vec]:
    """有界 Voronoi 頂點（所有 cell 的頂點聯集，排序）"""
    vertices = set()
    for cell in diagram.cells:
        vertices.update(v for v in h_to_v(cell).points if _is_vertex(v, cell))
    return sorted(vertices)


def check_voronoi_vertices(diagram: VoronoiDiagram) -> CheckReport:
    """
    每個頂點恰好屬於 d+1 個 cell，與這些 site 等距，且開球內沒有 site；
    頂點集合等於 Delaunay cell 的外接球心集合
    """
    S = diagram.sites
    d = S.dim
    vertices = voronoi_vertices(diagram)
    report = CheckReport(name='voronoi-vertices')
    report.add('vertices', len(vertices))

    in_cells = equidistant = empty = True
    for v in vertices:
        owners = diagram.cells_containing(v)
        if len(owners) != d + 1:
            in_cells = False
        radii = {norm2(sub(S[i], v)) for i in owners}
        if len(radii) != 1:
            equidistant = False
            continue
        r2 = radii.pop()
        if any(norm2(sub(S[j], v)) <= r2 for j in range(S.n) if j not in owners):
            empty = False
    report.require('in_d+1_cells', in_cells)
    report.require('equidistant', equidistant)
    report.require('empty_balls', empty)

    if S.n > d and S.affine_dim == d:
        delaunay = delaunay_paraboloid(S)
        centers = sorted({circumsphere([S[i] for i in sorted(c)])[0] for c in delaunay.cells})
        report.require('match_delaunay_circumcenters', centers == vertices)
    return report


def unbounded_cells_match_hull(diagram: VoronoiDiagram) -> CheckReport:
    """V(p_i) 無界 ⇔ p_i 在 conv(P) 的邊界上"""
    S = diagram.sites
    hull = v_to_h(VRep(S.dim, S.sites))
    report = CheckReport(name='voronoi-unbounded')
    mismatched = []
    for i, cell in enumerate(diagram.cells):
        on_boundary = bool(hull.eqs) or any(b + dot(a, S[i]) == 0 for b, a in hull.ineqs)
        unbounded = bool(h_to_v(cell).rays)
        if on_boundary != unbounded:
            mismatched.append(str(i + 1))
    report.add('unbounded', sum(1 for c in diagram.cells if h_to_v(c).rays))
    report.require('matches_hull_boundary', not mismatched)
    if mismatched:
        report.add('mismatch', ' '.join(mismatched))
    return report
