"""
Carathéodory reduction, Radon partitions, Helly checks, Farkas certificates, centerpoints.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Literal, Optional, Sequence

from src import config

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    InputLimitExceeded,
    InternalCheckFailure,
    PolytopeError,
)
from .exact_core import (
    ONE,
    ZERO,
    Mat,
    Vec,
    affine_dependence,
    affine_dimension,
    combine,
    dot,
    mat,
    nullspace,
    rank,
    solve_linear,
    sub,
    vec,
)
from .feasibility import Row, solve_system
from .models import CheckReport, render_value
from .polyhedra import HRep, VRep, v_to_h

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvexCombination:
    points: tuple[Vec, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        points = tuple(vec(p) for p in self.points)
        weights = tuple(Fraction(w) for w in self.weights)
        if len(points) != len(weights):
            raise DimensionMismatch(f'{len(points)} points but {len(weights)} weights')
        if any(w < 0 for w in weights):
            raise DegenerateInput('convex weights must be nonnegative')
        if sum(weights, ZERO) != 1:
            raise DegenerateInput('convex weights must sum to 1')
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'weights', weights)

    @property
    def dim(self) -> int:
        return len(self.points[0]) if self.points else 0

    def evaluate(self) -> Vec:
        return combine(self.weights, self.points, self.dim)

    @property
    def support(self) -> int:
        return sum(1 for w in self.weights if w != 0)


# Carathéodory


def caratheodory_reduce(b: Sequence[Fraction], cc: ConvexCombination) -> ConvexCombination:
    """
    把 b 的凸組合縮減到至多 d_aff + 1 個點

    每一步取仿射相依 μ（Σμ = 0, Σμ_i a_i = 0），α = max{−λ_i/μ_i | μ_i > 0}，λ ← λ + αμ。
    """
    b = vec(b)
    if cc.evaluate() != b:
        raise PolytopeError('the convex combination does not evaluate to b')
    pairs = [(p, w) for p, w in zip(cc.points, cc.weights) if w != 0]
    points = [p for p, _ in pairs]
    weights = [w for _, w in pairs]
    d_aff = affine_dimension(points)

    while len(points) > d_aff + 1:
        mu = affine_dependence(points)
        if mu is None:
            raise InternalCheckFailure('more than d+1 points but no affine dependence')
        candidates = [(-lam / m, i) for i, (lam, m) in enumerate(zip(weights, mu)) if m > 0]
        alpha, drop = max(candidates, key=lambda t: (t[0], -t[1]))
        weights = [lam + alpha * m for lam, m in zip(weights, mu)]
        weights[drop] = ZERO
        kept = [(p, w) for p, w in zip(points, weights) if w != 0]
        points = [p for p, _ in kept]
        weights = [w for _, w in kept]
        logger.debug(f'caratheodory: support reduced to {len(points)}')

    result = ConvexCombination(tuple(points), tuple(weights))
    if result.evaluate() != b:
        raise InternalCheckFailure('reduced combination does not reconstruct b')
    return result


# Radon


@dataclass(frozen=True)
class RadonPartition:
    first: tuple[int, ...]
    second: tuple[int, ...]
    witness: Vec
    first_combination: ConvexCombination
    second_combination: ConvexCombination


def radon_partition(X: Sequence[Sequence[Fraction]]) -> RadonPartition:
    """
    Radon 分割：I = {μ_i > 0}，J = 其餘；μ 的第一個非零分量取正
    """
    X = [vec(x) for x in X]
    if not X:
        raise DegenerateInput('Radon partition of an empty set')
    m = len(X[0])
    if len(X) < m + 2:
        raise DegenerateInput(f'Radon needs at least {m + 2} points in dimension {m}')
    mu = affine_dependence(X)
    if mu is None:
        raise InternalCheckFailure('no affine dependence among m+2 points')
    first_nonzero = next(x for x in mu if x != 0)
    if first_nonzero < 0:
        mu = tuple(-x for x in mu)

    I = tuple(i for i, x in enumerate(mu) if x > 0)
    J = tuple(j for j, x in enumerate(mu) if x <= 0)
    total = sum((mu[i] for i in I), ZERO)
    first = ConvexCombination(tuple(X[i] for i in I), tuple(mu[i] / total for i in I))
    second = ConvexCombination(tuple(X[j] for j in J), tuple(-mu[j] / total for j in J))
    witness = first.evaluate()
    if second.evaluate() != witness:
        raise InternalCheckFailure('Radon witness differs between the two hulls')
    return RadonPartition(I, J, witness, first, second)


# Farkas


FarkasVersion = Literal['I', 'II', 'III', 'IV']


@dataclass(frozen=True)
class FarkasProblem:
    """
    I/II/III 使用 d×n 矩陣 A（欄為點/向量）；IV 使用點 Y 與方向 V
    """

    version: FarkasVersion
    z: Vec
    A: Mat = ()
    Y: tuple[Vec, ...] = ()
    V: tuple[Vec, ...] = ()

    def __post_init__(self):
        if self.version not in ('I', 'II', 'III', 'IV'):
            raise PolytopeError(f'unknown Farkas version {self.version!r}')
        z = vec(self.z)
        object.__setattr__(self, 'z', z)
        if self.version == 'IV':
            Y = tuple(vec(y) for y in self.Y)
            V = tuple(vec(v) for v in self.V)
            if any(len(u) != len(z) for u in Y + V):
                raise DimensionMismatch('points and rays must match the dimension of z')
            object.__setattr__(self, 'Y', Y)
            object.__setattr__(self, 'V', V)
        else:
            A = mat(self.A)
            if len(A) != len(z):
                raise DimensionMismatch(f'A has {len(A)} rows but z has {len(z)} entries')
            object.__setattr__(self, 'A', A)

    @property
    def d(self) -> int:
        return len(self.z)

    @property
    def columns(self) -> list[Vec]:
        if not self.A:
            return []
        return [tuple(row[j] for row in self.A) for j in range(len(self.A[0]))]


@dataclass(frozen=True)
class FarkasCertificate:
    """kind = primal 時 x 有值；kind = dual 時 c（與 I/IV 的 α）有值"""

    version: FarkasVersion
    kind: Literal['primal', 'dual']
    x: Optional[Vec] = None
    c: Optional[Vec] = None
    alpha: Optional[Fraction] = None

    def verify(self, problem: FarkasProblem) -> bool:
        if (self.x is None) == (self.c is None):
            return False
        if self.kind == 'primal':
            return _verify_primal(self.x, problem)
        return _verify_dual(self.c, self.alpha, problem)

    def lines(self) -> list[str]:
        result = [f'version={self.version}', f'alternative={self.kind}']
        if self.kind == 'primal':
            result.append(f'x={render_value(self.x)}')
        else:
            result.append(f'c={render_value(self.c)}')
            if self.alpha is not None:
                result.append(f'alpha={render_value(self.alpha)}')
        return result


def _verify_primal(x: Vec, problem: FarkasProblem) -> bool:
    z = problem.z
    if problem.version == 'IV':
        p = len(problem.Y)
        u, t = x[:p], x[p:]
        if len(t) != len(problem.V) or any(v < 0 for v in x) or sum(u, ZERO) != 1:
            return False
        image = combine(u, problem.Y, problem.d)
        image = tuple(a + b for a, b in zip(image, combine(t, problem.V, problem.d)))
        return image == z
    Ax = tuple(dot(row, x) for row in problem.A)
    if problem.version == 'III':
        return all(a <= b for a, b in zip(Ax, z))
    if any(v < 0 for v in x) or Ax != z:
        return False
    return problem.version == 'II' or sum(x, ZERO) == 1


def _verify_dual(c: Vec, alpha: Optional[Fraction], problem: FarkasProblem) -> bool:
    z = problem.z
    if problem.version == 'I':
        return alpha is not None and dot(c, z) < alpha and all(
            dot(c, col) >= alpha for col in problem.columns
        )
    if problem.version == 'II':
        return dot(c, z) < 0 and all(dot(c, col) >= 0 for col in problem.columns)
    if problem.version == 'III':
        return (
            all(ci >= 0 for ci in c)
            and dot(c, z) < 0
            and all(dot(c, col) == 0 for col in problem.columns)
        )
    return (
        alpha is not None
        and all(dot(c, y) >= alpha for y in problem.Y)
        and all(dot(c, v) >= 0 for v in problem.V)
        and dot(c, z) < alpha
    )


def _unit_rows(n: int) -> list[Row]:
    return [(ZERO, tuple(ONE if j == k else ZERO for j in range(n))) for k in range(n)]


def farkas(problem: FarkasProblem) -> FarkasCertificate:
    """
    以 Fourier–Motzkin 判斷 primal 系統；不可行時由乘數組出對偶憑證

    I:   Ax = z, x >= 0, Σx = 1        → c = −w, α = w_Σ
    II:  Ax = z, x >= 0                → c = −w
    III: Ax <= z                       → c = y
    IV:  Yu + Vt = z, u,t >= 0, Σu = 1 → c = −w, α = w_Σ
    """
    version = problem.version
    d = problem.d
    z = problem.z

    if version == 'III':
        n = len(problem.A[0]) if problem.A else 0
        ineqs = [(z[i], tuple(-a for a in problem.A[i])) for i in range(d)]
        result = solve_system(ineqs, [], n)
        if result.feasible:
            cert = FarkasCertificate(version, 'primal', x=result.point)
        else:
            cert = FarkasCertificate(version, 'dual', c=result.certificate.ineq_multipliers)
    else:
        if version == 'IV':
            columns = list(problem.Y) + list(problem.V)
            simplex_mask = [ONE] * len(problem.Y) + [ZERO] * len(problem.V)
        else:
            columns = problem.columns
            simplex_mask = [ONE] * len(columns) if version == 'I' else None
        n = len(columns)
        eqs: list[Row] = [(-z[i], tuple(col[i] for col in columns)) for i in range(d)]
        if simplex_mask is not None:
            eqs.append((-ONE, tuple(simplex_mask)))
        result = solve_system(_unit_rows(n), eqs, n)
        if result.feasible:
            cert = FarkasCertificate(version, 'primal', x=result.point)
        else:
            w = result.certificate.eq_multipliers
            c = tuple(-x for x in w[:d])
            alpha = w[d] if simplex_mask is not None else None
            cert = FarkasCertificate(version, 'dual', c=c, alpha=alpha)

    if not cert.verify(problem):
        raise InternalCheckFailure(f'Farkas {version} certificate does not verify')
    logger.debug(f'farkas {version}: {cert.kind}')
    return cert


def cone_membership_bruteforce(A: Sequence[Sequence[Fraction]], z: Sequence[Fraction]) -> bool:
    """
    z ∈ cone(A 的欄)：列舉線性獨立的欄子集，解唯一解後檢查非負（與 FM 無關的 oracle）
    """
    A = mat(A)
    z = vec(z)
    if all(x == 0 for x in z):
        return True
    n = len(A[0]) if A else 0
    columns = [tuple(row[j] for row in A) for j in range(n)]
    for k in range(1, min(n, len(z)) + 1):
        for subset in combinations(range(n), k):
            cols = [columns[j] for j in subset]
            if rank(cols) < k:
                continue
            M = [tuple(col[i] for col in cols) for i in range(len(z))]
            x = solve_linear(M, z)
            if x is not None and all(v >= 0 for v in x):
                return True
    return False


# Helly


@dataclass(frozen=True)
class HellyResult:
    hypothesis_holds: bool
    subsets_checked: int
    failing_subset: tuple[int, ...] = ()
    witness: Optional[Vec] = None

    def report(self) -> CheckReport:
        report = CheckReport(name='helly', passed=self.hypothesis_holds)
        report.add('subsets_checked', self.subsets_checked)
        report.add('hypothesis', self.hypothesis_holds)
        if self.failing_subset:
            report.add('failing_subset', ' '.join(str(i + 1) for i in self.failing_subset))
        if self.witness is not None:
            report.add('witness', self.witness)
        return report


def _intersection(family: Sequence[HRep], indices: Sequence[int], m: int):
    ineqs: list[Row] = []
    eqs: list[Row] = []
    for i in indices:
        ineqs.extend(family[i].ineqs)
        eqs.extend(family[i].eqs)
    return solve_system(ineqs, eqs, m)


def helly_check(family: Sequence[HRep], m: int) -> HellyResult:
    """每 m+1 個的交集都非空 ⇒ 整體交集非空並回傳共同點"""
    if any(K.dim != m for K in family):
        raise DimensionMismatch(f'every convex set must live in dimension {m}')
    size = min(m + 1, len(family))
    checked = 0
    for subset in combinations(range(len(family)), size):
        checked += 1
        if not _intersection(family, subset, m).feasible:
            logger.info(f'Helly hypothesis fails on subset {subset}')
            return HellyResult(False, checked, failing_subset=subset)
    full = _intersection(family, range(len(family)), m)
    if not full.feasible:
        raise InternalCheckFailure('Helly hypothesis holds but the full intersection is empty')
    return HellyResult(True, checked, witness=full.point)


# Centerpoints


def _strictly_separable(T: Sequence[Vec], rest: Sequence[Vec], d: int) -> bool:
    """(w, β) 使 w·t − β >= 1 (t ∈ T) 且 β − w·s >= 1 (s ∉ T)"""
    ineqs: list[Row] = []
    for t in T:
        ineqs.append((-ONE, tuple(t) + (-ONE,)))
    for s in rest:
        ineqs.append((-ONE, tuple(-x for x in s) + (ONE,)))
    return solve_system(ineqs, [], d + 1).feasible


def _check_limits(S: Sequence[Vec]) -> int:
    if not S:
        raise DegenerateInput('centerpoint of an empty set')
    d = len(S[0])
    if any(len(p) != d for p in S):
        raise DimensionMismatch('points of different dimensions')
    if len(S) > config.CENTERPOINT_MAX_POINTS:
        raise InputLimitExceeded(
            f'{len(S)} points exceed CENTERPOINT_MAX_POINTS={config.CENTERPOINT_MAX_POINTS}'
        )
    if d > config.CENTERPOINT_MAX_DIM:
        raise InputLimitExceeded(
            f'dimension {d} exceeds CENTERPOINT_MAX_DIM={config.CENTERPOINT_MAX_DIM}'
        )
    return d


def _qualifying_hull(S: Sequence[Vec], subset: tuple[int, ...], d: int) -> Optional[HRep]:
    T = [S[i] for i in subset]
    rest = [S[i] for i in range(len(S)) if i not in subset]
    if rest and not _strictly_separable(T, rest, d):
        return None
    return v_to_h(VRep(d, tuple(T)))


@dataclass(frozen=True)
class CenterpointResult:
    point: Vec
    subsets: int
    constraints: int = 0
    hulls: tuple[HRep, ...] = field(default=(), repr=False)


def centerpoint(S: Sequence[Sequence[Fraction]], jobs: int = 1) -> CenterpointResult:
    """
    所有 |T| > dn/(d+1) 且可被開半空間切出的 T ⊆ S，取 conv(T) 的交集中的一點
    """
    S = [vec(p) for p in S]
    d = _check_limits(S)
    n = len(S)
    threshold = Fraction(d * n, d + 1)
    subsets = [
        subset
        for k in range(n, 0, -1)
        if k > threshold
        for subset in combinations(range(n), k)
    ]
    logger.debug(f'centerpoint: {len(subsets)} candidate subsets (n={n}, d={d})')

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            hulls = list(executor.map(lambda s: _qualifying_hull(S, s, d), subsets))
    else:
        hulls = [_qualifying_hull(S, s, d) for s in subsets]
    hulls = [H for H in hulls if H is not None]

    ineqs: list[Row] = []
    eqs: list[Row] = []
    for H in hulls:
        ineqs.extend(H.ineqs)
        eqs.extend(H.eqs)
    result = solve_system(ineqs, eqs, d)
    if not result.feasible:
        raise InternalCheckFailure('centerpoint region is empty')
    return CenterpointResult(result.point, len(hulls), len(ineqs) + len(eqs), tuple(hulls))


def verify_centerpoint(c: Sequence[Fraction], S: Sequence[Sequence[Fraction]]) -> bool:
    """
    c 不是 centerpoint ⇔ 有一個不含 c 的開半空間包含超過 dn/(d+1) 個點

    列舉大小為 floor(dn/(d+1)) + 1 的子集 P，檢查 w·p − β >= 1 (p ∈ P), w·c − β <= 0 是否可行。
    """
    c = vec(c)
    S = [vec(p) for p in S]
    if not S:
        return True
    d = len(c)
    if any(len(p) != d for p in S):
        raise DimensionMismatch('point dimension differs from the candidate')
    n = len(S)
    k = (d * n) // (d + 1) + 1
    if k > n:
        return True
    for subset in combinations(range(n), k):
        ineqs: list[Row] = [(-ONE, S[i] + (-ONE,)) for i in subset]
        ineqs.append((ZERO, tuple(-x for x in c) + (ONE,)))
        if solve_system(ineqs, [], d + 1).feasible:
            logger.debug(f'centerpoint rejected by subset {subset}')
            return False
    return True


def spanned_depth_bound(c: Sequence[Fraction], S: Sequence[Sequence[Fraction]]) -> int:
    """
    只看 S ∪ {c} 中 d 個仿射獨立點張成的超平面時，含 c 的閉半空間最少包含幾個點

    只是資訊性的上界；判定請用 verify_centerpoint。
    """
    c = vec(c)
    S = [vec(p) for p in S]
    d = len(c)
    best = len(S)
    pool = S + [c]
    for subset in combinations(range(len(pool)), d):
        pts = [pool[i] for i in subset]
        if affine_dimension(pts) != d - 1:
            continue
        diffs = [sub(p, pts[0]) for p in pts[1:]]
        normal = nullspace(diffs, d)[0] if diffs else (ONE,) + (ZERO,) * (d - 1)
        offset = dot(normal, pts[0])
        side_c = dot(normal, c) - offset
        values = [dot(normal, p) - offset for p in S]
        if side_c >= 0:
            best = min(best, sum(1 for v in values if v >= 0))
        if side_c <= 0:
            best = min(best, sum(1 for v in values if v <= 0))
    return best
