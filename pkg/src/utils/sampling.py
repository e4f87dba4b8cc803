"""
Seeded random instances for the acceptance suites.

每個 instance 都由 (seed, index) 決定，重跑結果完全相同。
"""

import random
from fractions import Fraction
from typing import Optional

from ..exact_core import Mat, Vec, affine_dimension, centroid, determinant, sub
from ..polyhedra import VRep, polytope_lattice


def make_rng(seed: int, *salt) -> random.Random:
    """每個 (seed, salt...) 組合一個獨立的 Random"""
    return random.Random('/'.join(str(s) for s in (seed, *salt)))


def random_rational(rng: random.Random, bound: int = 10, denominator: int = 4) -> Fraction:
    numerator = rng.randint(-bound * denominator, bound * denominator)
    return Fraction(numerator, rng.randint(1, denominator))


def random_point(rng: random.Random, d: int, bound: int = 10, denominator: int = 4) -> Vec:
    return tuple(random_rational(rng, bound, denominator) for _ in range(d))


def random_points(
    rng: random.Random, n: int, d: int, bound: int = 10, denominator: int = 4
) -> list[Vec]:
    """n 個相異的點"""
    points: list[Vec] = []
    while len(points) < n:
        p = random_point(rng, d, bound, denominator)
        if p not in points:
            points.append(p)
    return points


def random_full_points(
    rng: random.Random, d: int, n_max: int = 10, n_min: Optional[int] = None
) -> list[Vec]:
    """d+1 <= n <= n_max 個仿射生成 R^d 的點"""
    n_min = d + 1 if n_min is None else max(n_min, d + 1)
    while True:
        n = rng.randint(n_min, max(n_min, n_max))
        points = random_points(rng, n, d)
        if affine_dimension(points) == d:
            return points


def random_polytope(rng: random.Random, d: int, n_max: int = 10) -> VRep:
    return VRep(d, tuple(random_full_points(rng, d, n_max)))


def random_centered_polytope(rng: random.Random, d: int, n_max: int = 10) -> VRep:
    """平移使重心落在原點（原點為內點）"""
    points = random_full_points(rng, d, n_max)
    c = centroid(points)
    return VRep(d, tuple(sub(p, c) for p in points))


def random_simplicial_polytope(
    rng: random.Random, d: int, n_max: int = 10, tries: int = 50
) -> VRep:
    """
    隨機 polytope，重抽直到每個 facet 恰有 d 個頂點

    分母取較大的值讓點幾乎處於一般位置。
    """
    for _ in range(tries):
        n = rng.randint(d + 1, max(d + 1, n_max))
        points = random_points(rng, n, d, bound=20, denominator=7)
        if affine_dimension(points) != d:
            continue
        V = VRep(d, tuple(points))
        _, _, lattice = polytope_lattice(V)
        if all(len(F) == d for F in lattice.incidence):
            return V
    # d+1 個仿射獨立點必定是 simplex
    return VRep(d, tuple(random_full_points(rng, d, d + 1)))


def random_cone_generators(rng: random.Random, dim: int, n_max: int = 6) -> list[Vec]:
    n = rng.randint(1, n_max)
    gens = []
    while len(gens) < n:
        g = random_point(rng, dim, bound=5, denominator=1)
        if any(g) and g not in gens:
            gens.append(g)
    return gens


def random_invertible_matrix(rng: random.Random, n: int, bound: int = 3) -> Mat:
    while True:
        A = tuple(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(n))
        if determinant(A) != 0:
            return A


def random_sites(rng: random.Random, d: int, n_min: int, n_max: int, bound: int = 10) -> list[Vec]:
    """整數座標的相異 site（一般位置由呼叫端檢查）"""
    n = rng.randint(n_min, n_max)
    return random_points(rng, n, d, bound=bound, denominator=1)
