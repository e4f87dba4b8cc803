"""
Cyclic polytopes on the moment curve, Gale evenness, and the upper/lower bound checks.

Facet and face sets in this module are 1-based, like the CLI output.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .complexes import SimplicialComplex, f_vector, h_from_f
from .errors import DegenerateInput, NotSimplicial
from .exact_core import ONE, Vec, as_scalar, dot
from .models import CheckReport
from .polyhedra import FaceLattice, VRep, v_to_h

logger = logging.getLogger(__name__)


def moment_curve(t: Fraction, d: int) -> Vec:
    """c(t) = (t, t², …, t^d)"""
    if d < 1:
        raise DegenerateInput('moment curve needs d >= 1')
    t = as_scalar(t)
    result = []
    power = ONE
    for _ in range(d):
        power *= t
        result.append(power)
    return tuple(result)


@dataclass(frozen=True)
class CyclicSpec:
    d: int
    params: tuple[Fraction, ...]

    def __post_init__(self):
        params = tuple(as_scalar(t) for t in self.params)
        if self.d < 2:
            raise DegenerateInput(f'cyclic polytopes need d >= 2, got {self.d}')
        if len(params) <= self.d:
            raise DegenerateInput(f'need n > d parameters, got n={len(params)}, d={self.d}')
        if any(a >= b for a, b in zip(params, params[1:])):
            raise DegenerateInput('moment-curve parameters must be strictly increasing')
        object.__setattr__(self, 'params', params)

    @classmethod
    def default(cls, d: int, n: int) -> 'CyclicSpec':
        """t_i = i"""
        return cls(d, tuple(Fraction(i) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.params)


def cyclic_polytope(spec: CyclicSpec) -> VRep:
    return VRep(spec.d, tuple(moment_curve(t, spec.d) for t in spec.params))


def _check_dn(d: int, n: int):
    if d < 2 or n <= d:
        raise DegenerateInput(f'need 2 <= d < n, got d={d}, n={n}')


def satisfies_gale_evenness(S: Sequence[int], n: int) -> bool:
    """任兩個不在 S 中的 i < j 之間，S 的元素個數為偶數"""
    members = set(S)
    outside = [i for i in range(1, n + 1) if i not in members]
    for i, j in zip(outside, outside[1:]):
        if (j - i - 1) % 2:
            return False
    return True


def gale_facets(d: int, n: int) -> list[tuple[int, ...]]:
    _check_dn(d, n)
    return [S for S in combinations(range(1, n + 1), d) if satisfies_gale_evenness(S, n)]


def cyclic_facet_count(d: int, n: int) -> int:
    """C(n − ⌊(d+1)/2⌋, n−d) + C(n − ⌊(d+2)/2⌋, n−d)"""
    _check_dn(d, n)
    return comb(n - (d + 1) // 2, n - d) + comb(n - (d + 2) // 2, n - d)


def cyclic_boundary_complex(d: int, n: int) -> SimplicialComplex:
    """由 Gale 條件組合地建出 ∂C_d(n)（頂點 0-based）"""
    facets = [[i - 1 for i in S] for S in gale_facets(d, n)]
    return SimplicialComplex.from_facets(n, facets)


def cyclic_f_vector(d: int, n: int) -> tuple[int, ...]:
    """(1, f_0, …, f_{d−1}) of C_d(n)"""
    return f_vector(cyclic_boundary_complex(d, n))


def geometric_facets(spec: CyclicSpec) -> list[tuple[int, ...]]:
    """v_to_h 後每個 facet 的 tight 頂點集合（1-based，排序）"""
    V = cyclic_polytope(spec)
    H = v_to_h(V)
    facets = []
    for b, a in H.ineqs:
        tight = tuple(i + 1 for i, y in enumerate(V.points) if b + dot(a, y) == 0)
        facets.append(tight)
    return sorted(facets)


def is_neighborly(lattice: FaceLattice, k: int) -> bool:
    """每個 k 個頂點的子集都是某個面的頂點集"""
    faces = {s for _, s in lattice.faces}
    return all(
        frozenset(subset) in faces for subset in combinations(range(len(lattice.vertices)), k)
    )


def _require_simplicial(lattice: FaceLattice):
    d = lattice.dim
    if any(len(F) != d for F in lattice.incidence):
        raise NotSimplicial('bound theorems are stated for simplicial polytopes')
    if lattice.vertices and len(lattice.vertices[0]) != d:
        raise DegenerateInput('the polytope must be full-dimensional')


def upper_bound_check(lattice: FaceLattice) -> CheckReport:
    """f_{k−1}(P) <= f_{k−1}(C_d(n)) 且 h_k(P) <= C(n−d−1+k, k)"""
    _require_simplicial(lattice)
    d = lattice.dim
    n = len(lattice.vertices)
    f = f_vector(lattice)
    h = h_from_f(f, d)
    cyclic_f = cyclic_f_vector(d, n)
    h_bounds = tuple(comb(n - d - 1 + k, k) for k in range(d + 1))
    logger.debug(f'upper bound: n={n}, d={d}, f={f}, cyclic={cyclic_f}')

    report = CheckReport(name='upper-bound')
    report.add('n', n)
    report.add('d', d)
    report.add('f', f[1:])
    report.add('cyclic_f', cyclic_f[1:])
    report.add('h', h)
    report.add('h_bound', h_bounds)
    report.require('f_le_cyclic', all(a <= b for a, b in zip(f, cyclic_f)))
    report.require('h_le_bound', all(a <= b for a, b in zip(h, h_bounds)))
    report.add('equality', f == cyclic_f)
    return report


def lower_bound_values(d: int, n: int) -> tuple[int, ...]:
    """f_k 的下界，k = 0 … d−1"""
    bounds = [comb(d, k) * n - comb(d + 1, k + 1) * k for k in range(d - 1)]
    bounds.append((d - 1) * n - (d + 1) * (d - 2))
    return tuple(bounds)


def lower_bound_check(lattice: FaceLattice) -> CheckReport:
    _require_simplicial(lattice)
    d = lattice.dim
    n = len(lattice.vertices)
    f = lattice.f_vector()
    bounds = lower_bound_values(d, n)

    report = CheckReport(name='lower-bound')
    report.add('n', n)
    report.add('d', d)
    report.add('f', f)
    report.add('lower_bound', bounds)
    report.require('f_ge_bound', all(a >= b for a, b in zip(f, bounds)))
    report.add('equality', f == bounds)
    return report
