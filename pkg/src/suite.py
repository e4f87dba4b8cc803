"""
Randomized acceptance suites.

每個 suite 的 instance 由 (seed, suite 名稱, case key) 決定；check 回傳失敗項目的清單，空清單表示通過。
"""

import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from src import config

from .classics import (
    ConvexCombination,
    FarkasProblem,
    caratheodory_reduce,
    centerpoint,
    cone_membership_bruteforce,
    farkas,
    helly_check,
    radon_partition,
    verify_centerpoint,
)
from .complexes import (
    dehn_sommerville_check,
    euler_characteristic,
    euler_check,
    f_vector,
    h_from_f,
    h_from_shelling,
    is_shelling,
    line_shelling,
    polytope_boundary_complex,
    restriction_partition_check,
)
from .cyclic_bounds import (
    CyclicSpec,
    cyclic_boundary_complex,
    cyclic_facet_count,
    gale_facets,
    geometric_facets,
    lower_bound_check,
    upper_bound_check,
)
from .delvor import (
    SiteSet,
    bisector,
    bisector_from_tangents,
    check_homogeneous_identities,
    check_theta_tangents,
    check_voronoi_vertices,
    delaunay_agreement,
    delaunay_paraboloid,
    general_position_check,
    on_unit_sphere,
    projectively_equal,
    stereo_sigma_N,
    stereo_sphere_image,
    stereo_sphere_preimage,
    stereo_tau_N,
    unbounded_cells_match_hull,
    voronoi_from_delaunay_duality,
)
from .duality import (
    Quadric,
    check_completion_duality_commutes,
    cones_equal,
    dual_f_vector_reversed,
    map_cone,
    polar_dual_h,
    polar_dual_v,
    quadric_polar_cone,
    transport_quadric,
)
from .exact_core import (
    ONE,
    ZERO,
    Vec,
    affine_dimension,
    combine,
    dot,
    format_vector,
    primitive,
)
from .feasibility import Row, is_feasible
from .models import CaseOutcome, SuiteProgress
from .polyhedra import (
    ConeRep,
    HRep,
    VRep,
    canonicalize_vrep,
    fm_project,
    fm_slice,
    h_cone_to_v,
    h_to_v,
    membership,
    polytope_lattice,
    same_polyhedron,
    v_to_h,
    vrep_contains,
)
from .progress import get_suite_status, initialize_suite_progress, read_progress_log
from .utils.sampling import (
    make_rng,
    random_centered_polytope,
    random_cone_generators,
    random_full_points,
    random_invertible_matrix,
    random_point,
    random_points,
    random_polytope,
    random_simplicial_polytope,
    random_sites,
)

logger = logging.getLogger(__name__)

Params = dict
Failures = list[str]


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_count: int
    cases: Callable[[int], dict[str, Params]]
    check: Callable[[random.Random, Params], Failures]


def _random_weights(rng: random.Random, n: int) -> list[Fraction]:
    raw = [rng.randint(1, 9) for _ in range(n)]
    total = sum(raw)
    return [Fraction(r, total) for r in raw]


def _random_combination(rng: random.Random, points: list[Vec]) -> Vec:
    return combine(_random_weights(rng, len(points)), points, len(points[0]))


# Euler–Poincaré


def _euler_cases(count: int) -> dict[str, Params]:
    return {f'd{d}-{i:03d}': {'d': d} for d in (2, 3, 4, 5) for i in range(count)}


def _euler_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    V = random_polytope(rng, d, n_max=10)
    _, _, lattice = polytope_lattice(V)
    failures = []
    for kind in ('solid', 'boundary'):
        chi, expected, ok = euler_check(lattice, kind)
        if not ok:
            failures.append(f'chi({kind})={chi}, expected {expected}')
    return failures


# H/V equivalence


def _sample_near(rng: random.Random, points: list[Vec]) -> Vec:
    """三分之一在內部、三分之一在頂點或邊中點、其餘在外擴的 bounding box 裡"""
    roll = rng.random()
    if roll < 1 / 3:
        return _random_combination(rng, points)
    if roll < 2 / 3:
        p, q = rng.choice(points), rng.choice(points)
        return tuple((a + b) / 2 for a, b in zip(p, q))
    d = len(points[0])
    lows = [min(p[i] for p in points) - 1 for i in range(d)]
    highs = [max(p[i] for p in points) + 1 for i in range(d)]
    return tuple(lo + (hi - lo) * Fraction(rng.randint(0, 64), 64) for lo, hi in zip(lows, highs))


def _hv_cases(count: int) -> dict[str, Params]:
    return {f'd{2 + i % 3}-{i:03d}': {'d': 2 + i % 3} for i in range(count)}


def _hv_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    V = random_polytope(rng, d, n_max=10)
    H = v_to_h(V)
    V2 = h_to_v(H)
    failures = []
    if set(canonicalize_vrep(V).points) != set(V2.points):
        failures.append('vertex sets differ after round trip')
    if V2.rays:
        failures.append('round trip produced rays')
    points = list(V.points)
    for _ in range(config.SUITE_MEMBERSHIP_SAMPLES):
        x = _sample_near(rng, points)
        if vrep_contains(V, x) != membership(x, H):
            failures.append(f'membership differs at {format_vector(x)}')
            break
    return failures


# Fourier–Motzkin


def _fm_cases(count: int) -> dict[str, Params]:
    cases = {}
    for i in range(count):
        cases[f'slice-{i:03d}'] = {'form': 'slice', 'dim': 3 + i % 2}
        cases[f'project-{i:03d}'] = {'form': 'project', 'dim': 3 + i % 2}
    return cases


def _on_hyperplane(rng: random.Random, dim: int, k: int) -> Vec:
    x = list(random_point(rng, dim, bound=5, denominator=1))
    x[k - 1] = ZERO
    return tuple(x)


def _projection_contains(C: ConeRep, y: Vec, k: int) -> bool:
    """y ∈ proj_k(C) ⇔ 存在 t 使 y + t·e_k ∈ C（一個變數的可行性問題）"""
    ineqs: list[Row] = [(-dot(u, y), (-u[k - 1],)) for u in C.halfspaces]
    eqs: list[Row] = [(dot(u, y), (u[k - 1],)) for u in C.eqs]
    return is_feasible(ineqs, eqs, 1)


def _fm_check(rng: random.Random, params: Params) -> Failures:
    dim = params['dim']
    k = rng.randint(1, dim)
    failures = []
    samples = max(10, config.SUITE_MEMBERSHIP_SAMPLES // 20)

    if params['form'] == 'slice':
        C = ConeRep(dim, 'v', generators=tuple(random_cone_generators(rng, dim)))
        S = fm_slice(C, k)
        if any(g[k - 1] != 0 for g in S.generators):
            failures.append(f'slice generator with x_{k} != 0')
        candidates = [_on_hyperplane(rng, dim, k) for _ in range(samples)]
        if S.generators:
            gens = list(S.generators)
            candidates += [_random_combination(rng, gens) for _ in range(samples)]
        for x in candidates:
            if C.contains(x) != S.contains(x):
                failures.append(f'slice membership differs at {format_vector(x)}')
                break
        return failures

    rows = tuple(random_cone_generators(rng, dim, n_max=6))
    C = ConeRep(dim, 'h', halfspaces=rows)
    P = fm_project(C, k)
    candidates = [_on_hyperplane(rng, dim, k) for _ in range(samples)]
    gens = list(h_cone_to_v(C).generators)
    for _ in range(samples if gens else 0):
        x = list(_random_combination(rng, gens))
        x[k - 1] = ZERO
        candidates.append(tuple(x))
    for y in candidates:
        if P.contains(y) != _projection_contains(C, y, k):
            failures.append(f'projection membership differs at {format_vector(y)}')
            break
    return failures


# Duality


def _duality_cases(count: int) -> dict[str, Params]:
    return {
        f'd{2 + i % 3}-{i:03d}': {'d': 2 + i % 3, 'commute': i % 2 == 0} for i in range(count)
    }


def _duality_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    V = random_centered_polytope(rng, d, n_max=8)
    failures = []
    bidual = polar_dual_h(polar_dual_v(V))
    if not same_polyhedron(V, bidual):
        failures.append('A** != A')
    f, reversed_dual = dual_f_vector_reversed(V)
    if f != reversed_dual:
        failures.append(f'f(P)={f} but reversed f(P*)={reversed_dual}')
    if params['commute']:
        report = check_completion_duality_commutes(V, Quadric.sphere(d))
        if not report.passed:
            failures.append('completion and duality do not commute')
    A = random_invertible_matrix(rng, d + 1)
    C = ConeRep(d + 1, 'v', generators=tuple(random_cone_generators(rng, d + 1, n_max=5)))
    S = Quadric.sphere(d)
    mapped_dual = quadric_polar_cone(map_cone(C, A), transport_quadric(S, A))
    if not cones_equal(mapped_dual, map_cone(quadric_polar_cone(C, S), A)):
        failures.append('duality does not commute with the projective map')
    return failures


# Shellings and h-vectors


def _shelling_cases(count: int) -> dict[str, Params]:
    return {f'd{3 + i % 2}-{i:03d}': {'d': 3 + i % 2} for i in range(count)}


def _shelling_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    V = random_polytope(rng, d, n_max=8)
    _, _, lattice = polytope_lattice(V)
    K, _ = polytope_boundary_complex(lattice)
    first = line_shelling(V, seed=0)
    second = line_shelling(V, seed=1)
    failures = []
    if not is_shelling(K, first.facet_order).passed:
        failures.append('line shelling is not a shelling')
    h = h_from_shelling(first)
    h_f = h_from_f(f_vector(K), d)
    if h != h_f:
        failures.append(f'h from shelling {h} != h from f {h_f}')
    if h_from_shelling(second) != h:
        failures.append('h-vector depends on the shelling')
    if not is_shelling(K, first.reversed().facet_order).passed:
        failures.append('reversed shelling is not a shelling')
    if not restriction_partition_check(K, first).passed:
        failures.append('restriction intervals do not partition the faces')
    return failures


# Dehn–Sommerville


def _ds_cases(count: int) -> dict[str, Params]:
    cases = {
        f'cyclic-d{d}-n{n}': {'kind': 'cyclic', 'd': d, 'n': n}
        for d in range(2, 7)
        for n in range(d + 1, 11)
    }
    for i in range(count):
        cases[f'poly-d{3 + i % 2}-{i:03d}'] = {'kind': 'random', 'd': 3 + i % 2}
    return cases


def _ds_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    if params['kind'] == 'random':
        _, _, lattice = polytope_lattice(random_simplicial_polytope(rng, d, n_max=9))
        report = dehn_sommerville_check(lattice)
        return [] if report.passed else [f'dehn-sommerville failed: {report.details}']
    f = f_vector(cyclic_boundary_complex(d, params['n']))
    h = h_from_f(f, d)
    failures = []
    if any(h[k] != h[d - k] for k in range(d + 1)):
        failures.append(f'h={h} is not palindromic')
    if d == 3 and (f[2] != 3 * f[1] - 6 or f[3] != 2 * f[1] - 4):
        failures.append(f'f={f} violates the d=3 relations')
    return failures


# Cyclic polytopes and bound theorems


def _cyclic_cases(count: int) -> dict[str, Params]:
    cases: dict[str, Params] = {}
    for d in range(2, 7):
        for n in range(d + 1, 11):
            cases[f'count-d{d}-n{n}'] = {'kind': 'count', 'd': d, 'n': n}
    for d in range(2, 5):
        for n in range(d + 1, 9):
            for variant in ('default', 'random'):
                key = f'geometric-d{d}-n{n}-{variant}'
                cases[key] = {'kind': 'geometric', 'd': d, 'n': n, 'variant': variant}
    for i in range(count):
        cases[f'bounds-d{3 + i % 2}-{i:03d}'] = {'kind': 'bounds', 'd': 3 + i % 2}
    return cases


def _increasing_params(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    values = sorted({Fraction(rng.randint(-40, 40), rng.randint(1, 4)) for _ in range(4 * n)})
    while len(values) < n:
        values.append(values[-1] + 1)
    picked = sorted(rng.sample(values, n))
    return tuple(picked)


def _cyclic_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    kind = params['kind']
    if kind == 'count':
        n = params['n']
        listed = len(gale_facets(d, n))
        formula = cyclic_facet_count(d, n)
        return [] if listed == formula else [f'{listed} Gale facets, closed form {formula}']
    if kind == 'geometric':
        n = params['n']
        if params['variant'] == 'default':
            spec = CyclicSpec.default(d, n)
        else:
            spec = CyclicSpec(d, _increasing_params(rng, n))
        if geometric_facets(spec) != sorted(gale_facets(d, n)):
            return ['geometric facets differ from Gale facets']
        return []
    _, _, lattice = polytope_lattice(random_simplicial_polytope(rng, d, n_max=9))
    failures = []
    if not upper_bound_check(lattice).passed:
        failures.append('upper bound violated')
    if not lower_bound_check(lattice).passed:
        failures.append('lower bound violated')
    return failures


# Classics


FARKAS_VERSIONS = ('I', 'II', 'III', 'IV')


def _classics_cases(count: int) -> dict[str, Params]:
    plan = [
        ('caratheodory', 2 * count),
        ('radon', 2 * count),
        *((f'farkas-{v}', count) for v in FARKAS_VERSIONS),
        ('helly', max(1, count // 2)),
        ('centerpoint', max(1, count // 10)),
    ]
    return {f'{kind}-{i:03d}': {'kind': kind} for kind, n in plan for i in range(n)}


def _caratheodory_check(rng: random.Random) -> Failures:
    d = rng.randint(1, 4)
    q = rng.randint(1, 10)
    points = random_points(rng, q, d, bound=5, denominator=2)
    if rng.random() < 0.2 and d > 1:
        # 低維點集：全部放在一條直線上
        base, direction = points[0], random_point(rng, d, bound=3, denominator=1)
        points = [tuple(b + t * u for b, u in zip(base, direction)) for t in range(q)]
        points = list(dict.fromkeys(points))
    cc = ConvexCombination(tuple(points), tuple(_random_weights(rng, len(points))))
    b = cc.evaluate()
    reduced = caratheodory_reduce(b, cc)
    failures = []
    if reduced.evaluate() != b:
        failures.append('reduction does not reconstruct b')
    if reduced.support > affine_dimension(points) + 1:
        failures.append(f'support {reduced.support} > d_aff + 1')
    if any(w < 0 for w in reduced.weights) or sum(reduced.weights) != 1:
        failures.append('reduced weights are not convex')
    return failures


def _radon_check(rng: random.Random) -> Failures:
    m = rng.randint(1, 3)
    X = random_points(rng, rng.randint(m + 2, m + 4), m, bound=5, denominator=2)
    R = radon_partition(X)
    failures = []
    if set(R.first) & set(R.second) or set(R.first) | set(R.second) != set(range(len(X))):
        failures.append('parts do not partition X')
    if not R.first or not R.second:
        failures.append('empty part')
    if R.first_combination.evaluate() != R.witness or R.second_combination.evaluate() != R.witness:
        failures.append('witness not in both hulls')
    if set(R.first_combination.points) - {X[i] for i in R.first}:
        failures.append('first combination uses foreign points')
    return failures


def _farkas_problem(rng: random.Random, version: str) -> FarkasProblem:
    d = rng.randint(1, 3)
    z = random_point(rng, d, bound=3, denominator=1)
    if version == 'IV':
        Y = tuple(random_point(rng, d, bound=3, denominator=1) for _ in range(rng.randint(1, 4)))
        V = tuple(random_cone_generators(rng, d, n_max=3)) if rng.random() < 0.5 else ()
        return FarkasProblem(version, z, Y=Y, V=V)
    n = rng.randint(1, 4)
    A = tuple(tuple(Fraction(rng.randint(-3, 3)) for _ in range(n)) for _ in range(d))
    return FarkasProblem(version, z, A=A)


def _dual_system_feasible(problem: FarkasProblem) -> bool:
    """直接解對偶系統（嚴格不等式正規化成 <= −1）"""
    z, d = problem.z, problem.d
    version = problem.version
    if version in ('I', 'IV'):
        points = problem.columns if version == 'I' else list(problem.Y)
        ineqs: list[Row] = [(-ONE, tuple(-x for x in z) + (ONE,))]
        ineqs += [(ZERO, tuple(p) + (-ONE,)) for p in points]
        if version == 'IV':
            ineqs += [(ZERO, tuple(v) + (ZERO,)) for v in problem.V]
        return is_feasible(ineqs, [], d + 1)
    ineqs = [(-ONE, tuple(-x for x in z))]
    if version == 'II':
        ineqs += [(ZERO, col) for col in problem.columns]
        return is_feasible(ineqs, [], d)
    ineqs += [(ZERO, tuple(ONE if j == i else ZERO for j in range(d))) for i in range(d)]
    eqs = [(ZERO, col) for col in problem.columns]
    return is_feasible(ineqs, eqs, d)


def _farkas_check(rng: random.Random, version: str) -> Failures:
    problem = _farkas_problem(rng, version)
    cert = farkas(problem)
    failures = []
    if not cert.verify(problem):
        failures.append('certificate does not verify')
    if _dual_system_feasible(problem) != (cert.kind == 'dual'):
        failures.append('alternatives are not exclusive')
    if version == 'II' and len(problem.columns) <= 4 and problem.d <= 3:
        if cone_membership_bruteforce(problem.A, problem.z) != (cert.kind == 'primal'):
            failures.append('disagrees with brute-force cone membership')
    return failures


def _helly_check(rng: random.Random) -> Failures:
    m = rng.randint(1, 2)
    hidden = random_point(rng, m, bound=3, denominator=2)
    family = []
    for _ in range(rng.randint(m + 2, m + 4)):
        offsets = random_full_points(rng, m, n_max=m + 3)
        points = [hidden] + [tuple(h + o for h, o in zip(hidden, off)) for off in offsets]
        family.append(v_to_h(VRep(m, tuple(points))))
    result = helly_check(family, m)
    if not result.hypothesis_holds:
        return ['hypothesis reported false for sets sharing a point']
    if result.witness is None or not all(membership(result.witness, K) for K in family):
        return ['witness is not in every set']
    return []


def _centerpoint_check(rng: random.Random) -> Failures:
    n = rng.randint(3, 10)
    S = random_points(rng, n, 2, bound=6, denominator=1)
    result = centerpoint(S)
    failures = []
    if not verify_centerpoint(result.point, S):
        failures.append(f'centerpoint {format_vector(result.point)} fails verification')
    ineqs = [row for H in result.hulls for row in H.ineqs]
    eqs = [row for H in result.hulls for row in H.eqs]
    region = h_to_v(HRep(2, tuple(ineqs), tuple(eqs)))
    corners = list(region.points)
    for c in corners:
        if not verify_centerpoint(c, S):
            failures.append(f'region vertex {format_vector(c)} fails verification')
            break
    if len(corners) >= 2:
        mid = tuple((a + b) / 2 for a, b in zip(corners[0], corners[1]))
        if not verify_centerpoint(mid, S):
            failures.append('centerpoint set is not convex')
    return failures


def _classics_check(rng: random.Random, params: Params) -> Failures:
    kind = params['kind']
    if kind == 'caratheodory':
        return _caratheodory_check(rng)
    if kind == 'radon':
        return _radon_check(rng)
    if kind == 'helly':
        return _helly_check(rng)
    if kind == 'centerpoint':
        return _centerpoint_check(rng)
    return _farkas_check(rng, kind.split('-', 1)[1])


# Delaunay / Voronoi


def _delaunay_cases(count: int) -> dict[str, Params]:
    cases = {f'd2-{i:03d}': {'d': 2} for i in range(count)}
    cases['d3-000'] = {'d': 3}
    return cases


def _general_position_sites(rng: random.Random, d: int) -> SiteSet:
    n_max = 12 if d == 2 else 8
    while True:
        S = SiteSet(tuple(random_sites(rng, d, d + 2, n_max, bound=10)))
        if S.affine_dim == d and general_position_check(S):
            return S


def _delaunay_check(rng: random.Random, params: Params) -> Failures:
    S = _general_position_sites(rng, params['d'])
    failures = []
    if not delaunay_agreement(S).passed:
        failures.append('paraboloid and sphere routes disagree')
    C = delaunay_paraboloid(S)
    chi = euler_characteristic(C.complex)
    if chi != 1:
        failures.append(f'Euler characteristic of the triangulation is {chi}')
    diagram, report = voronoi_from_delaunay_duality(S)
    if not report.passed:
        failures.append('bisector cells differ from tangent-plane cells')
    if not check_voronoi_vertices(diagram).passed:
        failures.append('a Voronoi vertex is not an empty circumcenter')
    if not unbounded_cells_match_hull(diagram).passed:
        failures.append('unbounded cells differ from hull vertices')
    for i, j in list(combinations(range(S.n), 2))[:6]:
        b, a = bisector(S[i], S[j])
        tb, ta = bisector_from_tangents(S[i], S[j])
        if (tb,) + ta != primitive((b,) + a):
            failures.append(f'tangent bisector differs for sites {i + 1},{j + 1}')
            break
    return failures


# Stereographic identities


def _stereo_cases(count: int) -> dict[str, Params]:
    return {f'd{1 + i % 3}-{i:03d}': {'d': 1 + i % 3} for i in range(count)}


def _stereo_check(rng: random.Random, params: Params) -> Failures:
    d = params['d']
    x = random_point(rng, d, bound=5, denominator=3)
    Z = stereo_tau_N(x)
    failures = []
    if not on_unit_sphere(Z):
        failures.append('tau_N(x) is not on the sphere')
    if stereo_sigma_N(Z) != x:
        failures.append('sigma_N(tau_N(x)) != x')
    if not check_homogeneous_identities(x).passed:
        failures.append('homogeneous identities fail')
    if not check_theta_tangents(x):
        failures.append('theta does not carry tangent hyperplanes')
    a = random_point(rng, d + 1, bound=3, denominator=1)
    if any(a):
        b = -dot(a, Z)
        image = stereo_sphere_image(a, b)
        if image.value(x) != 0:
            failures.append('image sphere misses sigma_N of a point on the section')
        a2, b2 = stereo_sphere_preimage(image)
        if not projectively_equal(a2 + (b2,), a + (b,)):
            failures.append('sphere image does not round-trip')
    return failures


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite('euler', 'Euler–Poincaré on random polytopes, d = 2..5', 50,
              _euler_cases, _euler_check),
        Suite('hv', 'H/V round trip and membership agreement', 100, _hv_cases, _hv_check),
        Suite('fm', 'Fourier–Motzkin slice and projection oracles', 100, _fm_cases, _fm_check),
        Suite('duality', 'A** = A, f-vector reversal, commuting completion', 50,
              _duality_cases, _duality_check),
        Suite('shelling', 'line shellings and h-vectors, d = 3, 4', 50,
              _shelling_cases, _shelling_check),
        Suite('dehn-sommerville', 'palindromic h-vectors', 50, _ds_cases, _ds_check),
        Suite('cyclic', 'Gale evenness, facet counts, bound theorems', 50,
              _cyclic_cases, _cyclic_check),
        Suite('classics', 'Carathéodory, Radon, Farkas, Helly, centerpoints', 100,
              _classics_cases, _classics_check),
        Suite('delaunay', 'Delaunay routes, Voronoi duality and vertices', 100,
              _delaunay_cases, _delaunay_check),
        Suite('stereo', 'stereographic and homogeneous identities', 100,
              _stereo_cases, _stereo_check),
    )
}


def get_suite(name: str) -> Suite:
    if name not in SUITES:
        raise KeyError(f'unknown suite {name!r}; choose from {", ".join(SUITES)}')
    return SUITES[name]


def run_case(suite: Suite, seed: int, key: str, params: Params) -> CaseOutcome:
    """執行單一 instance；任何例外都記為失敗"""
    rng = make_rng(seed, suite.name, key)
    start_time = time.time()
    try:
        failures = suite.check(rng, params)
    except Exception as e:
        logger.debug(f'{suite.name}/{key} raised', exc_info=True)
        failures = [f'{type(e).__name__}: {e}']
    elapsed = round(time.time() - start_time, 3)
    if failures:
        logger.debug(f'{suite.name}/{key} failed: {failures}')
    return CaseOutcome(passed=not failures, detail='; '.join(failures), elapsed=elapsed)


def plan_suite(
    name: str,
    seed: int,
    count: Optional[int] = None,
) -> tuple[SuiteProgress, list[tuple[str, Params]]]:
    """
    讀取 JSONL 進度，回傳此 suite 尚未完成的 instance

    instance 集合改變（例如 --count 不同）時重新初始化進度。
    """
    suite = get_suite(name)
    cases = suite.cases(count or suite.default_count)
    _, progress = get_suite_status(read_progress_log(), name, seed)
    if progress is None or set(progress.cases) != set(cases):
        progress = initialize_suite_progress(name, seed, list(cases))
    pending = [(key, cases[key]) for key in cases if not progress.is_case_done(key)]
    logger.info(f'{name}@{seed}: {len(cases)} instances, {len(pending)} pending')
    return progress, pending


def run_suite(name: str, seed: int = 0, count: Optional[int] = None) -> dict[str, CaseOutcome]:
    """不寫進度檔，直接跑完整個 suite（測試用）"""
    suite = get_suite(name)
    cases = suite.cases(count or suite.default_count)
    return {key: run_case(suite, seed, key, params) for key, params in cases.items()}
