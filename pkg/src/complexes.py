"""
Simplicial and polyhedral complexes, shellings, f/h-vectors.

Face 一律以 vertex index 的 frozenset 表示（index 從 0 開始）。
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Literal, Optional, Sequence, Union

from src import config

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    InternalCheckFailure,
    InvalidShelling,
    NotPure,
    NotSimplicial,
    PolytopeError,
)
from .exact_core import (
    ONE,
    ZERO,
    Vec,
    add,
    affinely_independent,
    centroid,
    dot,
    perturbation_vector,
    sub,
)
from .feasibility import solve_system
from .models import CheckReport
from .polyhedra import FaceLattice, HRep, Polyhedron, VRep, face_lattice, polytope_lattice, v_to_h

logger = logging.getLogger(__name__)

Face = frozenset[int]


def _closure(facets: Iterable[Iterable[int]]) -> frozenset[Face]:
    faces = set()
    for facet in facets:
        facet = tuple(sorted(facet))
        for k in range(1, len(facet) + 1):
            faces.update(frozenset(c) for c in combinations(facet, k))
    return frozenset(faces)


def _maximal(faces: Iterable[Face]) -> list[Face]:
    faces = set(faces)
    return sorted((f for f in faces if not any(f < g for g in faces)), key=sorted)


@dataclass(frozen=True)
class SimplicialComplex:
    """simplices 不含空集合；coords 為 None 時只做組合檢查"""

    n_vertices: int
    simplices: frozenset[Face]
    coords: Optional[tuple[Vec, ...]] = None

    @classmethod
    def from_facets(
        cls,
        n_vertices: int,
        facets: Iterable[Iterable[int]],
        coords: Optional[Sequence[Vec]] = None,
    ) -> 'SimplicialComplex':
        return cls(n_vertices, _closure(facets), tuple(coords) if coords is not None else None)

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    @property
    def facets(self) -> list[Face]:
        return _maximal(self.simplices)

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces_of_dim(self, k: int) -> list[Face]:
        return sorted((s for s in self.simplices if len(s) == k + 1), key=sorted)

    def vertex_set(self) -> Face:
        return frozenset(v for s in self.simplices for v in s)


@dataclass(frozen=True)
class PolyhedralComplex:
    """每個 cell 是其頂點（座標）的凸包"""

    coords: tuple[Vec, ...]
    cells: tuple[Face, ...]
    _lattices: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return max(self.cell_faces(c).dim for c in self.cells)

    @property
    def facets(self) -> list[Face]:
        return list(self.cells)

    def cell_faces(self, cell: Face) -> '_CellFaces':
        if cell not in self._lattices:
            self._lattices[cell] = _CellFaces(cell, self.coords)
        return self._lattices[cell]

    @property
    def is_pure(self) -> bool:
        return len({self.cell_faces(c).dim for c in self.cells}) <= 1


class _CellFaces:
    """一個 polytope cell 的所有面（以全域 vertex index 表示）與其維度"""

    def __init__(self, cell: Face, coords: Sequence[Vec]):
        order = sorted(cell)
        if not order:
            raise DegenerateInput('empty cell')
        points = tuple(coords[i] for i in order)
        V = VRep(len(points[0]), points)
        if len(points) == 1:
            self.dims = {cell: 0}
        else:
            lattice = face_lattice(v_to_h(V), V)
            self.dims = {
                frozenset(order[i] for i in s): k for k, s in lattice.faces if k >= 0
            }
        self.cell = cell
        self.dim = self.dims[cell]

    def facets_of(self, face: Face) -> list[Face]:
        k = self.dims[face] - 1
        return sorted((g for g, dim in self.dims.items() if dim == k and g < face), key=sorted)

    def dim_of(self, face: Face) -> int:
        return self.dims[face]


@dataclass(frozen=True)
class FHVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]


@dataclass(frozen=True)
class Shelling:
    facet_order: tuple[Face, ...]
    restrictions: tuple[Face, ...]
    polytope_order: tuple[int, ...] = ()
    verified: bool = False

    def reversed(self) -> 'Shelling':
        """反序；restriction set 依新順序重算，需要重新驗證"""
        order = tuple(reversed(self.facet_order))
        return Shelling(order, _restriction_sets(order), tuple(reversed(self.polytope_order)))


@dataclass(frozen=True)
class ShellingCheck:
    passed: bool
    failed_at: Optional[int] = None  # 1-based
    restrictions: tuple[Face, ...] = ()
    reason: str = ''

    def report(self) -> CheckReport:
        report = CheckReport(name='shelling', passed=self.passed)
        if self.failed_at is not None:
            report.add('failed_at', self.failed_at)
            report.add('reason', self.reason)
        for j, r in enumerate(self.restrictions, 1):
            report.add(f'R{j}', _format_face(r))
        return report


def _format_face(face: Face) -> str:
    """1-based，空集合寫成 {}"""
    if not face:
        return '{}'
    return ' '.join(str(v + 1) for v in sorted(face))


# Validation


def validate_complex(K: SimplicialComplex) -> CheckReport:
    report = CheckReport(name='complex')
    in_range = all(0 <= v < K.n_vertices for s in K.simplices for v in s)
    report.require('indices_in_range', in_range)
    closed = all(
        frozenset(c) in K.simplices
        for s in K.simplices
        for k in range(1, len(s))
        for c in combinations(sorted(s), k)
    )
    report.require('closed_under_faces', closed)
    if K.coords is None or not in_range:
        return report

    coords = K.coords
    independent = all(affinely_independent([coords[v] for v in sorted(s)]) for s in K.facets)
    report.require('simplices_nondegenerate', independent)
    if not independent:
        return report

    faces = sorted(K.simplices, key=lambda s: (len(s), sorted(s)))
    facet_list = K.facets
    bad = None
    for s, t in combinations(faces, 2):
        if s <= t or t <= s:
            continue
        if any((s | t) <= F for F in facet_list):
            continue
        if _relints_meet(s, t, coords):
            bad = (s, t)
            break
    report.require('relative_interiors_disjoint', bad is None)
    if bad is not None:
        report.add('overlap', f'{{{_format_face(bad[0])}}} {{{_format_face(bad[1])}}}')
    return report


def _relints_meet(s: Face, t: Face, coords: Sequence[Vec]) -> bool:
    """λ_i >= 1, μ_j >= 1, Σλ = Σμ, Σλ_i y_i = Σμ_j z_j 是否可行"""
    ys = [coords[v] for v in sorted(s)]
    zs = [coords[v] for v in sorted(t)]
    p, q = len(ys), len(zs)
    n = p + q
    d = len(ys[0])
    ineqs = [
        (-ONE, tuple(ONE if j == i else ZERO for j in range(n))) for i in range(n)
    ]
    eqs = [(ZERO, tuple([ONE] * p + [-ONE] * q))]
    for k in range(d):
        eqs.append((ZERO, tuple(y[k] for y in ys) + tuple(-z[k] for z in zs)))
    return solve_system(ineqs, eqs, n).feasible


# Star, link, join, boundary


def star_link(
    K: SimplicialComplex,
    sigma: Iterable[int],
) -> tuple[SimplicialComplex, SimplicialComplex]:
    sigma = frozenset(sigma)
    if sigma not in K.simplices:
        raise PolytopeError(f'{{{_format_face(sigma)}}} is not a face of the complex')
    cofaces = [s for s in K.simplices if sigma <= s]
    star = _closure(cofaces)
    link = frozenset(s for s in star if not (s & sigma))
    return (
        SimplicialComplex(K.n_vertices, star, K.coords),
        SimplicialComplex(K.n_vertices, link, K.coords),
    )


def join_vertex(v: int, L: SimplicialComplex) -> SimplicialComplex:
    """v * L"""
    faces = set(L.simplices)
    faces.add(frozenset({v}))
    faces.update(s | {v} for s in L.simplices)
    return SimplicialComplex(max(L.n_vertices, v + 1), frozenset(faces), L.coords)


def boundary_complex(K: SimplicialComplex) -> SimplicialComplex:
    if not K.is_pure:
        raise NotPure('boundary complex needs a pure complex')
    counts: Counter = Counter()
    for F in K.facets:
        for v in F:
            ridge = F - {v}
            if ridge:
                counts[ridge] += 1
    ridges = [r for r, c in counts.items() if c == 1]
    return SimplicialComplex(K.n_vertices, _closure(ridges), K.coords)


# Shelling verification


def _restriction(F: Face, ridges: Counter) -> Face:
    return frozenset(v for v in F if ridges[F - {v}] > 0)


def _add_ridges(F: Face, ridges: Counter, delta: int = 1):
    for v in F:
        ridges[F - {v}] += delta


def _fits(F: Face, placed: Sequence[Face], ridges: Counter) -> Optional[Face]:
    """
    (ii′)：存在 l < j 使 |F_l ∩ F_j| = d−1 覆蓋每個 F_i ∩ F_j

    回傳 restriction set，不符合時回傳 None。
    """
    if not placed:
        return frozenset()
    R = _restriction(F, ridges)
    if not R:
        return None
    if any(R <= G for G in placed):
        return None
    return R


def _restriction_sets(order: Sequence[Face]) -> tuple[Face, ...]:
    ridges: Counter = Counter()
    result = []
    for F in order:
        result.append(_restriction(F, ridges) if result else frozenset())
        _add_ridges(F, ridges)
    return tuple(result)


def _check_permutation(order: Sequence[Face], facets: Sequence[Face]):
    if len(order) != len(facets) or set(order) != set(facets):
        raise InvalidShelling('the order is not a permutation of the facets')


def _is_simplicial_shelling(K: SimplicialComplex, order: Sequence[Face]) -> ShellingCheck:
    ridges: Counter = Counter()
    placed: list[Face] = []
    restrictions: list[Face] = []
    for j, F in enumerate(order, 1):
        R = _fits(F, placed, ridges)
        if R is None:
            return ShellingCheck(
                passed=False,
                failed_at=j,
                reason='intersection with predecessors is not a nonempty union of facets',
            )
        restrictions.append(R)
        placed.append(F)
        _add_ridges(F, ridges)
    return ShellingCheck(passed=True, restrictions=tuple(restrictions))


def _can_add(G: Face, placed: Sequence[Face], cell: _CellFaces) -> bool:
    """G 與前面各面的交集是否為 G 的 facet 聯集，且這些 facet 能作為 ∂G 某個 shelling 的開頭"""
    if cell.dim_of(G) == 0:
        return True
    pieces = [G & P for P in placed if G & P]
    if not pieces:
        return False
    ridges = cell.facets_of(G)
    covered = [H for H in ridges if any(H <= p for p in pieces)]
    if not covered:
        return False
    if any(not any(p <= H for H in covered) for p in pieces):
        return False
    return _is_initial_segment(covered, ridges, cell)


def _is_initial_segment(S: Sequence[Face], facets: Sequence[Face], cell: _CellFaces) -> bool:
    """S 能否排成 facets 所成邊界複形的某個完整 shelling 的開頭"""
    if not facets or cell.dim_of(facets[0]) == 0:
        return True
    failed: set[frozenset] = set()

    def search(placed: tuple[Face, ...], required: frozenset, optional: frozenset) -> bool:
        if not required and not optional:
            return True
        key = frozenset(placed)
        if key in failed:
            return False
        pool = required if required else optional
        for G in sorted(pool, key=sorted):
            if placed and not _can_add(G, placed, cell):
                continue
            if search(placed + (G,), required - {G}, optional - {G}):
                return True
        failed.add(key)
        return False

    required = frozenset(S)
    return search((), required, frozenset(facets) - required)


def _is_polyhedral_shelling(K: PolyhedralComplex, order: Sequence[Face]) -> ShellingCheck:
    for j, F in enumerate(order, 1):
        if j == 1:
            continue
        cell = K.cell_faces(F)
        if cell.dim == 0:
            continue
        pieces = [F & G for G in order[: j - 1] if F & G]
        if not pieces:
            return ShellingCheck(False, j, reason='empty intersection with predecessors')
        covered = _covered_facets(F, pieces, cell)
        if covered is None:
            return ShellingCheck(False, j, reason='intersection is not a union of facets')
        if not _is_initial_segment(covered, cell.facets_of(F), cell):
            return ShellingCheck(
                False, j, reason='intersection is not the beginning of a boundary shelling'
            )
    restrictions = ()
    if all(len(F) == K.cell_faces(F).dim + 1 for F in order):
        restrictions = _restriction_sets(order)
    return ShellingCheck(True, restrictions=restrictions)


def _covered_facets(F: Face, pieces: Sequence[Face], cell: _CellFaces) -> Optional[list[Face]]:
    """若交集是 F 的某些 facet 的聯集就回傳這些 facet"""
    facets = cell.facets_of(F)
    covered = [H for H in facets if any(H <= p for p in pieces)]
    if not covered or any(not any(p <= H for H in covered) for p in pieces):
        return None
    return covered


def is_shelling(
    K: Union[SimplicialComplex, PolyhedralComplex],
    order: Sequence[Iterable[int]],
) -> ShellingCheck:
    order = [frozenset(F) for F in order]
    if not K.is_pure:
        raise NotPure('shelling needs a pure complex')
    _check_permutation(order, K.facets)
    if isinstance(K, PolyhedralComplex):
        check = _is_polyhedral_shelling(K, order)
    else:
        check = _is_simplicial_shelling(K, order)
    logger.debug(f'shelling check: passed={check.passed} failed_at={check.failed_at}')
    return check


# Line shelling


def visible_facets(P: HRep, x: Sequence[Fraction]) -> list[int]:
    """x 嚴格在 facet 超平面外側的那些 facet（index）"""
    return [i for i, (b, a) in enumerate(P.ineqs) if b + dot(a, x) < 0]


def _lattice_dims(lattice: FaceLattice) -> dict[Face, int]:
    return {s: k for k, s in lattice.faces if k >= 0}


def pulling_triangulation(face: Face, lattice: FaceLattice) -> list[Face]:
    """以字典序最小的頂點為 pivot，遞迴三角化 face（相鄰面的三角化一致）"""
    dims = _lattice_dims(lattice)
    vertices = lattice.vertices
    cache: dict[Face, list[Face]] = {}

    def pull(G: Face) -> list[Face]:
        if G in cache:
            return cache[G]
        k = dims[G]
        if len(G) == k + 1:
            result = [G]
        else:
            v = min(G, key=lambda i: vertices[i])
            result = []
            for H in sorted((H for H, dim in dims.items() if dim == k - 1 and H < G), key=sorted):
                if v in H:
                    continue
                result.extend(s | {v} for s in pull(H))
        cache[G] = result
        return result

    return pull(frozenset(face))


def polytope_boundary_complex(lattice: FaceLattice) -> tuple[SimplicialComplex, list[list[Face]]]:
    """
    ∂P 的單純複形（非 simplicial 時先做 pulling triangulation）

    Returns:
        (複形, 每個 facet 對應的 simplex 清單)
    """
    blocks = [pulling_triangulation(F, lattice) for F in lattice.incidence]
    simplices = [s for block in blocks for s in block]
    K = SimplicialComplex.from_facets(len(lattice.vertices), simplices, lattice.vertices)
    return K, blocks


def _line_parameters(
    H: HRep, y: Vec, x: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """直線 y + s(x − y) 與各 facet 超平面交點的參數；平行或重合時回傳 None"""
    u = sub(tuple(x), y)
    params = []
    for b, a in H.ineqs:
        den = dot(a, u)
        if den == 0:
            return None
        params.append(-(b + dot(a, y)) / den)
    if len(set(params)) != len(params):
        return None
    return params


def _order_by_line(params: Sequence[Fraction]) -> list[int]:
    """先沿 y → x 方向（正參數遞增），經過無窮遠後再從另一側回來（負參數遞增）"""
    positive = sorted((s, i) for i, s in enumerate(params) if s > 0)
    negative = sorted((s, i) for i, s in enumerate(params) if s < 0)
    return [i for _, i in positive] + [i for _, i in negative]


def _order_blocks(blocks: Sequence[Sequence[Face]]) -> Optional[list[Face]]:
    """依 facet 順序逐塊排列 simplex，使整體滿足 (ii′)"""
    ridges: Counter = Counter()
    placed: list[Face] = []
    failed: set[frozenset] = set()
    total = sum(len(b) for b in blocks)

    def search(block_index: int, remaining: frozenset) -> bool:
        if len(placed) == total:
            return True
        if not remaining:
            return search(block_index + 1, frozenset(blocks[block_index + 1]))
        key = frozenset(placed)
        if key in failed:
            return False
        for s in sorted(remaining, key=sorted):
            if _fits(s, placed, ridges) is None:
                continue
            placed.append(s)
            _add_ridges(s, ridges)
            if search(block_index, remaining - {s}):
                return True
            placed.pop()
            _add_ridges(s, ridges, -1)
        failed.add(key)
        return False

    if not blocks:
        return []
    return list(placed) if search(0, frozenset(blocks[0])) else None


def line_shelling(
    P: Polyhedron,
    x: Optional[Sequence[Fraction]] = None,
    seed: int = 0,
) -> Shelling:
    """
    Bruggesser–Mani line shelling

    Args:
        P: 全維度 polytope（HRep 或 VRep）
        x: 直線上的外部點；None 時取第一個 facet 外側一點
        seed: λ 從 1/2^seed 開始往下找

    Returns:
        已驗證的 Shelling（facet_order 為三角化後的 simplex 順序）
    """
    H, V, lattice = polytope_lattice(P)
    d = V.dim
    if H.eqs or lattice.dim != d:
        raise DegenerateInput('line shelling needs a full-dimensional polytope')
    if V.rays:
        raise DegenerateInput('line shelling needs a bounded polytope')
    facets = list(lattice.facets)
    H = HRep(d, tuple(facets))
    y = centroid(V.points)
    if x is None:
        x = default_outside_point(H, y)
    x = tuple(Fraction(c) for c in x)
    if len(x) != d:
        raise DimensionMismatch(f'point of dimension {len(x)} for a {d}-polytope')
    if any(b + dot(a, x) == 0 for b, a in facets):
        raise DegenerateInput('x lies on a facet hyperplane')
    if all(b + dot(a, x) > 0 for b, a in facets):
        raise DegenerateInput('x must lie outside the polytope')

    K, blocks = polytope_boundary_complex(lattice)
    simplicial = all(len(block) == 1 for block in blocks)
    for t in range(config.SHELLING_MAX_TRIES):
        lam = Fraction(1, 2 ** (seed + t))
        y_lam = add(y, perturbation_vector(lam, d))
        if any(b + dot(a, y_lam) <= 0 for b, a in facets):
            logger.debug(f'λ=1/2^{seed + t}: perturbed point not interior, retry')
            continue
        params = _line_parameters(H, y_lam, x)
        if params is None:
            logger.debug(f'λ=1/2^{seed + t}: line not in general position, retry')
            continue
        order = _order_by_line(params)
        simplices = _order_blocks([blocks[i] for i in order])
        if simplices is None:
            if simplicial:
                raise InternalCheckFailure('simplicial line shelling order is not a shelling')
            logger.warning(f'λ=1/2^{seed + t}: triangulated blocks admit no shelling order, retry')
            continue
        check = is_shelling(K, simplices)
        if not check.passed:
            raise InternalCheckFailure('line shelling order failed verification')
        return Shelling(tuple(simplices), check.restrictions, tuple(order), verified=True)
    raise DegenerateInput(
        f'could not find a line in general position within {config.SHELLING_MAX_TRIES} tries'
    )


def default_outside_point(H: HRep, y: Vec) -> Vec:
    """第一個 facet 外側的點：y 沿法向量穿出 facet 再走同樣距離"""
    b, a = H.ineqs[0]
    # b + a·(y + s·a) = 0 at s0 = −(b + a·y)/|a|²；取 2·s0
    s0 = -(b + dot(a, y)) / dot(a, a)
    return tuple(yi + 2 * s0 * ai for yi, ai in zip(y, a))


def shelling_of_complex(K: SimplicialComplex, order: Sequence[Iterable[int]]) -> Shelling:
    order = tuple(frozenset(F) for F in order)
    check = is_shelling(K, order)
    if not check.passed:
        raise InvalidShelling(f'not a shelling: fails at position {check.failed_at}')
    return Shelling(order, check.restrictions, verified=True)


# f- and h-vectors


def f_vector(K: Union[SimplicialComplex, PolyhedralComplex, FaceLattice]) -> tuple[int, ...]:
    """(f_{−1} = 1, f_0, …)；FaceLattice 給的是邊界 ∂P 的 f-vector"""
    if isinstance(K, FaceLattice):
        return (1,) + K.f_vector()
    if isinstance(K, PolyhedralComplex):
        dims: dict[Face, int] = {}
        for cell in K.cells:
            dims.update(K.cell_faces(cell).dims)
        counts = Counter(dims.values())
        return (1,) + tuple(counts[k] for k in range(K.dim + 1))
    if K.is_empty:
        return (1,)
    return (1,) + tuple(len(K.faces_of_dim(k)) for k in range(K.dim + 1))


def h_from_f(f: Sequence[int], d: int) -> tuple[int, ...]:
    """h_k = Σ_{i=0}^{k} (−1)^{k−i} C(d−i, d−k) f_{i−1}"""
    if len(f) != d + 1:
        raise DimensionMismatch(f'f-vector of length {len(f)} for d={d} (expected {d + 1})')
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, d - k) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: Sequence[int], d: int) -> tuple[int, ...]:
    """f_{k−1} = Σ_{i=0}^{k} h_i C(d−i, k−i)"""
    if len(h) != d + 1:
        raise DimensionMismatch(f'h-vector of length {len(h)} for d={d} (expected {d + 1})')
    return tuple(sum(h[i] * comb(d - i, k - i) for i in range(k + 1)) for k in range(d + 1))


def fh_vectors(K: Union[SimplicialComplex, FaceLattice]) -> FHVectors:
    f = f_vector(K)
    d = len(f) - 1
    return FHVectors(f, h_from_f(f, d))


def h_from_shelling(S: Shelling) -> tuple[int, ...]:
    """h_i = |{j : |R_j| = i}|"""
    if not S.verified:
        raise InvalidShelling('h-vector needs a verified shelling')
    if not S.facet_order:
        return (1,)
    d = len(S.facet_order[0])
    h = [0] * (d + 1)
    for R in S.restrictions:
        h[len(R)] += 1
    return tuple(h)


def restriction_partition_check(K: SimplicialComplex, S: Shelling) -> CheckReport:
    """[R_j, F_j] 這些區間是否恰好分割所有面（含空面）"""
    counts: Counter = Counter()
    for R, F in zip(S.restrictions, S.facet_order):
        free = sorted(F - R)
        for k in range(len(free) + 1):
            for extra in combinations(free, k):
                counts[R | frozenset(extra)] += 1
    faces = set(K.simplices) | {frozenset()}
    report = CheckReport(name='restriction-partition')
    report.require('every_face_once', all(counts[s] == 1 for s in faces))
    report.require('no_foreign_faces', set(counts) <= faces)
    return report


def euler_characteristic(
    K: Union[SimplicialComplex, PolyhedralComplex, FaceLattice, Sequence[int]],
) -> int:
    """Σ_{k>=0} (−1)^k f_k；序列輸入須以 f_{−1} 開頭"""
    f = K if isinstance(K, (list, tuple)) else f_vector(K)
    return sum((-1) ** k * fk for k, fk in enumerate(f[1:]))


EulerKind = Literal['solid', 'boundary', 'disk']


def euler_check(
    K: Union[SimplicialComplex, PolyhedralComplex, FaceLattice, Sequence[int]],
    kind: EulerKind,
    d: Optional[int] = None,
) -> tuple[int, int, bool]:
    """
    Returns:
        (χ, 預期值, 是否相符)；solid 與 disk 預期 1，boundary 預期 1 − (−1)^d
    """
    if kind == 'solid' and isinstance(K, FaceLattice):
        chi = euler_characteristic(K) + (-1) ** K.dim
    else:
        chi = euler_characteristic(K)
    if kind == 'boundary':
        if d is None:
            if isinstance(K, FaceLattice):
                d = K.dim
            elif isinstance(K, (SimplicialComplex, PolyhedralComplex)):
                d = K.dim + 1
            else:
                d = len(K) - 1
        expected = 1 - (-1) ** d
    else:
        expected = 1
    return chi, expected, chi == expected


def dehn_sommerville_check(lattice: FaceLattice) -> CheckReport:
    d = lattice.dim
    if any(len(F) != d for F in lattice.incidence):
        raise NotSimplicial('Dehn–Sommerville needs a simplicial polytope')
    f = f_vector(lattice)
    h = h_from_f(f, d)
    report = CheckReport(name='dehn-sommerville')
    report.add('f', f)
    report.add('h', h)
    report.require('palindromic', all(h[k] == h[d - k] for k in range(d + 1)))
    if d == 3:
        f0, f1, f2 = f[1], f[2], f[3]
        report.require('2f1=3f2', 2 * f1 == 3 * f2)
        report.require('f1=3f0-6', f1 == 3 * f0 - 6)
        report.require('f2=2f0-4', f2 == 2 * f0 - 4)
    return report

