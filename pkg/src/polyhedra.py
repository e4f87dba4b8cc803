"""
H/V representations, homogenization and Fourier–Motzkin conversions.

Conventions:
- HRep row (b, a) 表示 b + a·x >= 0（不等式）或 b + a·x = 0（等式）
- ConeRep 的 h-cone 以 u 表示 u·x <= 0，eqs 表示 u·x = 0
- fm_slice / fm_project 的座標 k 從 1 開始
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence, Union

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    EmptyPolyhedron,
    PolytopeError,
    RepresentationMismatch,
)
from .exact_core import (
    ONE,
    ZERO,
    Vec,
    affine_dimension,
    dot,
    is_zero,
    mat_vec,
    neg,
    nullspace,
    primitive,
    rank,
    rref,
    scale,
    vec,
    zeros,
)
from .feasibility import Row, eliminate, fm_pair, solve_system

logger = logging.getLogger(__name__)


def _row(row, dim: int) -> Row:
    b, a = row
    a = vec(a)
    if len(a) != dim:
        raise DimensionMismatch(f'row has {len(a)} coefficients, expected {dim}')
    return Fraction(b), a


@dataclass(frozen=True)
class HRep:
    dim: int
    ineqs: tuple[Row, ...] = ()
    eqs: tuple[Row, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'ineqs', tuple(_row(r, self.dim) for r in self.ineqs))
        object.__setattr__(self, 'eqs', tuple(_row(r, self.dim) for r in self.eqs))

    @classmethod
    def empty(cls, d: int) -> 'HRep':
        """-1 >= 0"""
        return cls(d, ((Fraction(-1), zeros(d)),))

    @classmethod
    def whole(cls, d: int) -> 'HRep':
        return cls(d)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return membership(x, self)

    def is_empty(self) -> bool:
        return not solve_system(self.ineqs, self.eqs, self.dim).feasible

    def rows_as_ineqs(self) -> list[Row]:
        """等式展開成一對不等式"""
        rows = list(self.ineqs)
        for b, a in self.eqs:
            rows.append((b, a))
            rows.append((-b, neg(a)))
        return rows


@dataclass(frozen=True)
class VRep:
    dim: int
    points: tuple[Vec, ...] = ()
    rays: tuple[Vec, ...] = ()

    def __post_init__(self):
        points = tuple(vec(p) for p in self.points)
        rays = tuple(vec(r) for r in self.rays)
        for v in points + rays:
            if len(v) != self.dim:
                raise DimensionMismatch(f'vector of dimension {len(v)} in a {self.dim}-dim VRep')
        if any(is_zero(r) for r in rays):
            raise DegenerateInput('a ray must be nonzero')
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'rays', rays)

    @classmethod
    def empty(cls, d: int) -> 'VRep':
        return cls(d)

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def is_bounded(self) -> bool:
        return not self.rays


@dataclass(frozen=True)
class ConeRep:
    dim: int
    kind: Literal['v', 'h']
    generators: tuple[Vec, ...] = ()
    halfspaces: tuple[Vec, ...] = ()
    eqs: tuple[Vec, ...] = ()

    def __post_init__(self):
        if self.kind not in ('v', 'h'):
            raise PolytopeError(f'unknown cone kind {self.kind!r}')
        for name in ('generators', 'halfspaces', 'eqs'):
            vectors = tuple(vec(v) for v in getattr(self, name))
            if any(len(v) != self.dim for v in vectors):
                raise DimensionMismatch(f'{name} must have dimension {self.dim}')
            object.__setattr__(self, name, vectors)

    def contains(self, x: Sequence[Fraction]) -> bool:
        """h-cone 直接代入；v-cone 用 feasibility 判斷是否為非負組合"""
        if self.kind == 'h':
            return all(dot(u, x) <= 0 for u in self.halfspaces) and all(
                dot(u, x) == 0 for u in self.eqs
            )
        return cone_contains(self.generators, x, self.dim)


@dataclass(frozen=True)
class FaceLattice:
    vertices: tuple[Vec, ...]
    facets: tuple[Row, ...]
    incidence: tuple[frozenset[int], ...]
    faces: tuple[tuple[int, frozenset[int]], ...] = field(default=())

    @property
    def dim(self) -> int:
        return max(k for k, _ in self.faces)

    def faces_of_dim(self, k: int) -> list[frozenset[int]]:
        return [s for dim, s in self.faces if dim == k]

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, …, f_{d-1})，不含空面與整個多面體"""
        return tuple(len(self.faces_of_dim(k)) for k in range(self.dim))


Polyhedron = Union[HRep, VRep]


# Homogenization


def homogenize(P: Polyhedron) -> ConeRep:
    d = P.dim
    if isinstance(P, HRep):
        halfspaces = [neg(a) + (-b,) for b, a in P.ineqs]
        halfspaces.append(zeros(d) + (-ONE,))
        eqs = [a + (b,) for b, a in P.eqs]
        return ConeRep(d + 1, 'h', halfspaces=tuple(halfspaces), eqs=tuple(eqs))
    if P.is_empty:
        raise EmptyPolyhedron('cannot homogenize an empty V-representation')
    gens = [p + (ONE,) for p in P.points] + [r + (ZERO,) for r in P.rays]
    return ConeRep(d + 1, 'v', generators=tuple(gens))


def dehomogenize(C: ConeRep) -> VRep:
    if C.kind != 'v':
        raise PolytopeError('dehomogenize expects a V-cone')
    d = C.dim - 1
    points: list[Vec] = []
    rays: list[Vec] = []
    for g in C.generators:
        t = g[d]
        if t < 0:
            raise PolytopeError(f'generator with negative last coordinate: {g}')
        if t > 0:
            p = scale(1 / t, g[:d])
            if p not in points:
                points.append(p)
        elif not is_zero(g[:d]):
            r = primitive(g[:d])
            if r not in rays:
                rays.append(r)
    return VRep(d, tuple(points), tuple(rays))


# Fourier–Motzkin in both forms


def _dedupe(vectors: Iterable[Vec]) -> list[Vec]:
    """去掉零向量以及只差正倍數的重複向量，保留第一次出現的原向量"""
    seen = set()
    result = []
    for v in vectors:
        if is_zero(v):
            continue
        key = primitive(v)
        if key in seen:
            continue
        seen.add(key)
        result.append(v)
    return result


def _eliminate_coordinate(vectors: Sequence[Vec], k: int) -> list[Vec]:
    """{v | v_k = 0} ∪ {v_ik·v_j − v_jk·v_i | v_ik > 0, v_jk < 0}"""
    zero = [v for v in vectors if v[k] == 0]
    pos = [v for v in vectors if v[k] > 0]
    negs = [v for v in vectors if v[k] < 0]
    pairs = [fm_pair(p, q, k) for p in pos for q in negs]
    return _dedupe(zero + pairs)


def _check_k(C: ConeRep, k: int) -> int:
    if not 1 <= k <= C.dim:
        raise DimensionMismatch(f'coordinate {k} out of range 1..{C.dim}')
    return k - 1


def fm_slice(C: ConeRep, k: int) -> ConeRep:
    """V-cone ∩ {x_k = 0}"""
    if C.kind != 'v':
        raise PolytopeError('fm_slice expects a V-cone')
    k0 = _check_k(C, k)
    return ConeRep(C.dim, 'v', generators=tuple(_eliminate_coordinate(C.generators, k0)))


def fm_project(C: ConeRep, k: int) -> ConeRep:
    """H-cone 沿 e_k 的正交投影，結果帶有等式 x_k = 0"""
    if C.kind != 'h':
        raise PolytopeError('fm_project expects an H-cone')
    k0 = _check_k(C, k)
    rows = list(C.halfspaces)
    eqs = []
    for u in C.eqs:
        if u[k0] == 0:
            eqs.append(u)
        else:
            rows.extend([u, neg(u)])
    e_k = tuple(ONE if j == k0 else ZERO for j in range(C.dim))
    eqs = _dedupe(eqs + [e_k])
    return ConeRep(
        C.dim,
        'h',
        halfspaces=tuple(_eliminate_coordinate(rows, k0)),
        eqs=tuple(eqs),
    )


# H -> V


def _prune(gens: list[Vec], slack_of) -> list[Vec]:
    """
    只留下 lineality 基底（±）與每個極小面一個生成元

    一個非 lineal 生成元是極端的，若且唯若沒有其他非 lineal 生成元的 active set 嚴格包含它的。
    """
    slacks = {g: slack_of(g) for g in gens}
    m = len(next(iter(slacks.values()))) if slacks else 0
    active = {g: frozenset(j for j in range(m) if s[j] == 0) for g, s in slacks.items()}
    lineal = [g for g in gens if len(active[g]) == m]
    others = [g for g in gens if len(active[g]) < m]

    basis: list[Vec] = []
    for g in lineal:
        if rank(basis + [g]) > len(basis):
            basis.append(g)

    kept: dict[frozenset[int], Vec] = {}
    for g in others:
        act = active[g]
        if act in kept:
            continue
        if any(act < active[h] for h in others):
            continue
        kept[act] = g
    return basis + [neg(g) for g in basis] + list(kept.values())


def h_cone_to_v(C: ConeRep) -> ConeRep:
    """
    H-cone P(A′, 0) 轉成 V-cone

    從 C₀(A′) = {(u, z) | A′u <= z} 出發（生成元 ±(e_i, A′e_i) 與 (0, e_j)），
    依序用 fm_slice 消去每個 slack 座標 z_j，最後取前 n 個座標。
    """
    if C.kind != 'h':
        raise PolytopeError('h_cone_to_v expects an H-cone')
    n = C.dim
    A = list(C.halfspaces)
    for u in C.eqs:
        A.extend([u, neg(u)])
    A = _dedupe(A)
    m = len(A)

    gens: list[Vec] = []
    for i in range(n):
        column = tuple(row[i] for row in A)
        e_i = tuple(ONE if j == i else ZERO for j in range(n))
        gens.append(e_i + column)
        gens.append(neg(e_i + column))
    for j in range(m):
        gens.append(zeros(n) + tuple(ONE if i == j else ZERO for i in range(m)))
    gens = _dedupe(gens)

    def slack_of(g: Vec) -> Vec:
        u, z = g[:n], g[n:]
        Au = mat_vec(A, u) if A else ()
        return tuple(zj - aj for zj, aj in zip(z, Au))

    for j in range(m):
        gens = _eliminate_coordinate(gens, n + j)
        gens = _prune(gens, slack_of) if gens else gens
        logger.debug(f'slice z{j}: {len(gens)} generators')

    result = _dedupe(primitive(g[:n]) for g in gens)
    return ConeRep(n, 'v', generators=tuple(sorted(result)))


def h_to_v(P: HRep) -> VRep:
    """空集合回傳 VRep.empty(d)（不是錯誤）"""
    cone = h_cone_to_v(homogenize(P))
    V = dehomogenize(cone)
    if V.is_empty:
        return VRep.empty(P.dim)
    return VRep(P.dim, tuple(sorted(V.points)), tuple(sorted(V.rays)))


# V -> H


def _irredundant_with(rows: Iterable[Row], V: VRep) -> HRep:
    """
    以 V 的生成元判斷哪些列支撐 facet

    - 仿射包由 [(y,1); (v,0)] 的 nullspace 給出（RREF 後化為 primitive）
    - 一列為 facet 若其 tight 生成元的 rank 等於 rank(全部) − 1
    - facet 列對等式的 pivot 座標化簡後，每個 tight set 只留一列
    """
    d = V.dim
    gens = [p + (ONE,) for p in V.points] + [r + (ZERO,) for r in V.rays]
    full_rank = rank(gens)

    eq_basis, eq_pivots = rref(nullspace(gens, d + 1))
    eq_vectors = [primitive(e) for e in eq_basis]

    facets: dict[frozenset[int], Row] = {}
    for b, a in rows:
        w = a + (b,)
        values = [dot(w, g) for g in gens]
        if any(v < 0 for v in values):
            raise RepresentationMismatch('inequality violated by a generator')
        tight = frozenset(i for i, v in enumerate(values) if v == 0)
        if len(tight) == len(gens):
            continue
        if rank([gens[i] for i in tight]) != full_rank - 1:
            continue
        if tight in facets:
            continue
        for e, pc in zip(eq_basis, eq_pivots):
            if w[pc] != 0:
                w = tuple(x - w[pc] * y for x, y in zip(w, e))
        w = primitive(w)
        facets[tight] = (w[d], w[:d])

    ineqs = sorted(facets.values())
    eqs = sorted((e[d], e[:d]) for e in eq_vectors)
    return HRep(d, tuple(ineqs), tuple(eqs))


def v_to_h(V: VRep) -> HRep:
    """
    把 P̃ = {(x,u,t) | x = Yu + Vt, u >= 0, 𝟙u = 1, t >= 0} 投影回 x，再去掉多餘的列
    """
    d = V.dim
    if V.is_empty:
        return HRep.empty(d)
    p, q = len(V.points), len(V.rays)
    n = d + p + q

    eqs: list[Row] = []
    for i in range(d):
        a = [ZERO] * n
        a[i] = -ONE
        for j, y in enumerate(V.points):
            a[d + j] = y[i]
        for k, v in enumerate(V.rays):
            a[d + p + k] = v[i]
        eqs.append((ZERO, tuple(a)))
    eqs.append((-ONE, tuple(ONE if d <= j < d + p else ZERO for j in range(n))))
    ineqs: list[Row] = [
        (ZERO, tuple(ONE if j == i else ZERO for j in range(n))) for i in range(d, n)
    ]

    projected = eliminate(ineqs, eqs, n, range(d, n))
    if projected is None:
        raise RepresentationMismatch('a nonempty V-representation projected to an empty set')
    rows, _ = projected
    rows = [(b, a[:d]) for b, a in rows]
    logger.debug(f'v_to_h: {len(rows)} rows before irredundancy')
    return _irredundant_with(rows, V)


def make_irredundant(P: HRep) -> HRep:
    V = h_to_v(P)
    if V.is_empty:
        return HRep.empty(P.dim)
    return _irredundant_with(P.ineqs, V)


# Membership and canonical forms


def membership(x: Sequence[Fraction], P: HRep) -> bool:
    if len(x) != P.dim:
        raise DimensionMismatch(f'point of dimension {len(x)} vs polyhedron of dimension {P.dim}')
    return all(b + dot(a, x) >= 0 for b, a in P.ineqs) and all(
        b + dot(a, x) == 0 for b, a in P.eqs
    )


def recession_contains(v: Sequence[Fraction], P: HRep) -> bool:
    return all(dot(a, v) >= 0 for _, a in P.ineqs) and all(dot(a, v) == 0 for _, a in P.eqs)


def cone_contains(generators: Sequence[Vec], x: Sequence[Fraction], d: int) -> bool:
    """x ∈ cone(generators)"""
    if is_zero(x):
        return True
    q = len(generators)
    eqs = [
        (-x[i], tuple(g[i] for g in generators)) for i in range(d)
    ]
    ineqs = [(ZERO, tuple(ONE if j == k else ZERO for j in range(q))) for k in range(q)]
    return solve_system(ineqs, eqs, q).feasible


def vrep_contains(V: VRep, z: Sequence[Fraction]) -> bool:
    """z ∈ conv(Y) + cone(V)"""
    if V.is_empty:
        return False
    p, q = len(V.points), len(V.rays)
    n = p + q
    eqs: list[Row] = [
        (-z[i], tuple(y[i] for y in V.points) + tuple(v[i] for v in V.rays))
        for i in range(V.dim)
    ]
    eqs.append((-ONE, tuple(ONE if j < p else ZERO for j in range(n))))
    ineqs = [(ZERO, tuple(ONE if j == k else ZERO for j in range(n))) for k in range(n)]
    return solve_system(ineqs, eqs, n).feasible


def canonicalize_vrep(V: VRep) -> VRep:
    """
    依序去掉多餘的 ray 與 point

    ray 若是其餘 ray 的非負組合就去掉；point 若屬於其餘點的 conv + cone(rays) 就去掉。
    """
    points: list[Vec] = []
    for p in V.points:
        if p not in points:
            points.append(p)
    rays = [r for r in _dedupe(V.rays)]

    i = 0
    while i < len(rays):
        others = rays[:i] + rays[i + 1:]
        if others and cone_contains(others, rays[i], V.dim):
            rays.pop(i)
        else:
            i += 1

    i = 0
    while i < len(points):
        others = VRep(V.dim, tuple(points[:i] + points[i + 1:]), tuple(rays))
        if vrep_contains(others, points[i]):
            points.pop(i)
        else:
            i += 1
    return VRep(V.dim, tuple(sorted(points)), tuple(sorted(primitive(r) for r in rays)))


def is_bounded(P: Polyhedron) -> bool:
    V = h_to_v(P) if isinstance(P, HRep) else canonicalize_vrep(P)
    return V.is_empty or not V.rays


def polyhedron_dim(P: Polyhedron) -> int:
    V = h_to_v(P) if isinstance(P, HRep) else P
    if V.is_empty:
        return -1
    gens = [p + (ONE,) for p in V.points] + [r + (ZERO,) for r in V.rays]
    return rank(gens) - 1


def _contained(V: VRep, H: HRep) -> bool:
    return all(membership(p, H) for p in V.points) and all(recession_contains(r, H) for r in V.rays)


def same_polyhedron(P: Polyhedron, Q: Polyhedron) -> bool:
    """兩個表示法（任意組合）是否描述同一個集合"""
    if P.dim != Q.dim:
        raise DimensionMismatch(f'dimensions differ: {P.dim} vs {Q.dim}')
    VP = h_to_v(P) if isinstance(P, HRep) else P
    VQ = h_to_v(Q) if isinstance(Q, HRep) else Q
    if VP.is_empty or VQ.is_empty:
        return VP.is_empty and VQ.is_empty
    HP = P if isinstance(P, HRep) else v_to_h(P)
    HQ = Q if isinstance(Q, HRep) else v_to_h(Q)
    return _contained(VP, HQ) and _contained(VQ, HP)


# Face lattice


def face_lattice(P: HRep, V: VRep) -> FaceLattice:
    if V.rays:
        raise DegenerateInput('face lattice needs a bounded polytope')
    if V.is_empty:
        raise EmptyPolyhedron('face lattice of an empty polytope')
    vertices = V.points
    for y in vertices:
        if not membership(y, P):
            raise RepresentationMismatch(f'vertex {y} violates the H-representation')

    facets = []
    incidence = []
    for b, a in P.ineqs:
        tight = frozenset(i for i, y in enumerate(vertices) if b + dot(a, y) == 0)
        if len(tight) == len(vertices):
            continue
        facets.append((b, a))
        incidence.append(tight)

    everything = frozenset(range(len(vertices)))
    faces = {everything}
    for F in incidence:
        faces |= {F & G for G in list(faces)}
    faces.add(frozenset())

    def dim_of(s: frozenset[int]) -> int:
        return affine_dimension([vertices[i] for i in sorted(s)])

    ranked = sorted(((dim_of(s), s) for s in faces), key=lambda t: (t[0], sorted(t[1])))
    return FaceLattice(
        vertices=tuple(vertices),
        facets=tuple(facets),
        incidence=tuple(incidence),
        faces=tuple(ranked),
    )


def polytope_lattice(P: Polyhedron) -> tuple[HRep, VRep, FaceLattice]:
    """從任一表示法得到 (irredundant HRep, canonical VRep, face lattice)"""
    if isinstance(P, HRep):
        V = h_to_v(P)
        H = make_irredundant(P)
    else:
        V = canonicalize_vrep(P)
        H = v_to_h(V)
    if V.is_empty:
        raise EmptyPolyhedron('the polytope is empty')
    return H, V, face_lattice(H, V)


def require_nonempty(P: Polyhedron) -> VRep:
    V = h_to_v(P) if isinstance(P, HRep) else P
    if V.is_empty:
        raise EmptyPolyhedron('the polyhedron is empty')
    return V
