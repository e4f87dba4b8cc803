"""
Exact Fourier–Motzkin feasibility with infeasibility certificates.

系統由兩種 row 組成，皆為 (b, a)：
- 不等式 b + a·x >= 0
- 等式   b + a·x  = 0

流程：
1. 先用等式做代換（乘數可正可負）
2. 剩下的不等式用 Fourier–Motzkin 消去，搭配 Chernikov history 規則與平行列過濾
3. 可行時倒推出一個點（每個區間優先取 0）；不可行時，追蹤的乘數就是 Farkas 憑證
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, InternalCheckFailure
from .exact_core import ZERO, Vec, dot, primitive

logger = logging.getLogger(__name__)

Row = tuple[Fraction, Vec]


def fm_pair(u: Sequence[Fraction], v: Sequence[Fraction], k: int) -> Vec:
    """u_k > 0, v_k < 0 時回傳 u_k·v − v_k·u（第 k 個座標為 0，兩個係數皆為正）"""
    uk, vk = u[k], v[k]
    return tuple(uk * b - vk * a for a, b in zip(u, v))


@dataclass(frozen=True)
class Infeasibility:
    """Σ y_i (b_i + a_i·x) + Σ w_j (b_j + e_j·x) 恆等於負常數，且 y >= 0"""

    ineq_multipliers: Vec
    eq_multipliers: Vec

    def combination(self, ineqs: Sequence[Row], eqs: Sequence[Row], n: int) -> Row:
        const = ZERO
        coeffs = [ZERO] * n
        for m, (b, a) in zip(self.ineq_multipliers, ineqs):
            const += m * b
            for j in range(n):
                coeffs[j] += m * a[j]
        for m, (b, a) in zip(self.eq_multipliers, eqs):
            const += m * b
            for j in range(n):
                coeffs[j] += m * a[j]
        return const, tuple(coeffs)

    def verify(self, ineqs: Sequence[Row], eqs: Sequence[Row], n: int) -> bool:
        if len(self.ineq_multipliers) != len(ineqs) or len(self.eq_multipliers) != len(eqs):
            return False
        if any(m < 0 for m in self.ineq_multipliers):
            return False
        const, coeffs = self.combination(ineqs, eqs, n)
        return const < 0 and all(c == 0 for c in coeffs)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: Optional[Vec] = None
    certificate: Optional[Infeasibility] = None


@dataclass(frozen=True, slots=True)
class _Row:
    b: Fraction
    a: Vec
    mult: Optional[Vec]
    hist: frozenset = field(default=frozenset())

    def minus(self, c: Fraction, other: '_Row') -> '_Row':
        """self − c·other"""
        mult = None
        if self.mult is not None:
            mult = tuple(x - c * y for x, y in zip(self.mult, other.mult))
        return _Row(
            self.b - c * other.b,
            tuple(x - c * y for x, y in zip(self.a, other.a)),
            mult,
            self.hist,
        )

    def scaled(self, s: Fraction) -> '_Row':
        mult = tuple(s * x for x in self.mult) if self.mult is not None else None
        return _Row(s * self.b, tuple(s * x for x in self.a), mult, self.hist)


def _pair_rows(p: _Row, q: _Row, k: int) -> _Row:
    """p.a[k] > 0, q.a[k] < 0"""
    cp = -q.a[k]
    cq = p.a[k]
    mult = None
    if p.mult is not None:
        mult = tuple(cp * x + cq * y for x, y in zip(p.mult, q.mult))
    return _Row(
        cp * p.b + cq * q.b,
        tuple(cp * x + cq * y for x, y in zip(p.a, q.a)),
        mult,
        p.hist | q.hist,
    )


class _Contradiction(Exception):
    def __init__(self, row: _Row):
        self.row = row


class _Eliminator:
    """在單一系統上執行代換與消去，記錄每一步以便倒推"""

    def __init__(
        self,
        ineqs: Sequence[Row],
        eqs: Sequence[Row],
        n: int,
        track: bool,
    ):
        self.n = n
        self.ineqs = [_validated(row, n) for row in ineqs]
        self.eqs = [_validated(row, n) for row in eqs]
        total = len(self.ineqs) + len(self.eqs)

        def unit_mult(i: int) -> Optional[Vec]:
            if not track:
                return None
            return tuple(Fraction(1) if j == i else ZERO for j in range(total))

        self.rows = [
            _Row(b, a, unit_mult(i), frozenset({i})) for i, (b, a) in enumerate(self.ineqs)
        ]
        offset = len(self.ineqs)
        self.eq_rows = [
            _Row(b, a, unit_mult(offset + j), frozenset()) for j, (b, a) in enumerate(self.eqs)
        ]
        self.pivots: list[tuple[int, _Row]] = []
        self.stages: list[tuple[int, list[_Row]]] = []
        self.kept_eqs: list[_Row] = []

    # step 1
    def substitute_equations(self, allowed: set[int]):
        pending = list(self.eq_rows)
        while pending:
            e = pending.pop(0)
            k = next((j for j in sorted(allowed) if e.a[j] != 0), None)
            if k is None:
                if all(x == 0 for x in e.a):
                    if e.b != 0:
                        raise _Contradiction(e.scaled(Fraction(-1) if e.b > 0 else Fraction(1)))
                    continue
                self.kept_eqs.append(e)
                continue
            self.pivots.append((k, e))
            allowed = allowed - {k}
            pending = [r.minus(r.a[k] / e.a[k], e) if r.a[k] != 0 else r for r in pending]
            self.rows = [r.minus(r.a[k] / e.a[k], e) if r.a[k] != 0 else r for r in self.rows]
        return allowed

    # step 2
    def _filter(self, rows: Iterable[_Row]) -> list[_Row]:
        best: dict[Vec, _Row] = {}
        order: list[Vec] = []
        for r in rows:
            if all(x == 0 for x in r.a):
                if r.b < 0:
                    raise _Contradiction(r)
                continue
            prim = primitive(r.a)
            j = next(i for i, x in enumerate(r.a) if x != 0)
            r = r.scaled(prim[j] / r.a[j])
            current = best.get(prim)
            if current is None:
                best[prim] = r
                order.append(prim)
            elif r.b < current.b or (r.b == current.b and len(r.hist) < len(current.hist)):
                best[prim] = r
        return [best[key] for key in order]

    def fourier_motzkin(self, variables: set[int]):
        rows = self._filter(self.rows)
        remaining = set(variables)
        eliminated = 0
        while remaining:
            k = min(
                sorted(remaining),
                key=lambda j: _growth(rows, j),
            )
            remaining.discard(k)
            self.stages.append((k, rows))
            pos = [r for r in rows if r.a[k] > 0]
            neg = [r for r in rows if r.a[k] < 0]
            new_rows = [r for r in rows if r.a[k] == 0]
            eliminated += 1
            dropped = 0
            for p in pos:
                for q in neg:
                    combined = _pair_rows(p, q, k)
                    if len(combined.hist) > eliminated + 1:
                        dropped += 1
                        continue
                    new_rows.append(combined)
            rows = self._filter(new_rows)
            logger.debug(
                f'eliminated x{k}: {len(pos)}+ x {len(neg)}- -> {len(rows)} rows '
                f'(Chernikov dropped {dropped})'
            )
        self.rows = rows

    # step 3
    def back_substitute(self) -> Vec:
        x: list[Optional[Fraction]] = [None] * self.n
        for k, rows in reversed(self.stages):
            lo: Optional[Fraction] = None
            hi: Optional[Fraction] = None
            for r in rows:
                ak = r.a[k]
                if ak == 0:
                    continue
                rest = r.b + sum(
                    (r.a[j] * x[j] for j in range(self.n) if j != k and r.a[j] != 0),
                    ZERO,
                )
                bound = -rest / ak
                if ak > 0:
                    lo = bound if lo is None else max(lo, bound)
                else:
                    hi = bound if hi is None else min(hi, bound)
            if lo is not None and hi is not None and lo > hi:
                raise InternalCheckFailure(f'empty interval for x{k} during back-substitution')
            x[k] = _pick(lo, hi)
        for k, e in reversed(self.pivots):
            rest = e.b + sum(
                (e.a[j] * x[j] for j in range(self.n) if j != k and e.a[j] != 0),
                ZERO,
            )
            x[k] = -rest / e.a[k]
        return tuple(ZERO if v is None else v for v in x)


def _growth(rows: Sequence[_Row], k: int) -> int:
    p = sum(1 for r in rows if r.a[k] > 0)
    q = sum(1 for r in rows if r.a[k] < 0)
    return p * q - p - q


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is None and hi is None:
        return ZERO
    if lo is None:
        return min(ZERO, hi)
    if hi is None:
        return max(ZERO, lo)
    if lo <= 0 <= hi:
        return ZERO
    return lo if lo > 0 else hi


def _validated(row: Row, n: int) -> Row:
    b, a = row
    if len(a) != n:
        raise DimensionMismatch(f'row has {len(a)} coefficients, expected {n}')
    return Fraction(b), tuple(Fraction(x) for x in a)


def _certificate(row: _Row, m_ineq: int) -> Infeasibility:
    return Infeasibility(row.mult[:m_ineq], row.mult[m_ineq:])


def satisfies(x: Sequence[Fraction], ineqs: Sequence[Row], eqs: Sequence[Row] = ()) -> bool:
    return all(b + dot(a, x) >= 0 for b, a in ineqs) and all(b + dot(a, x) == 0 for b, a in eqs)


def solve_system(ineqs: Sequence[Row], eqs: Sequence[Row], n: int) -> FeasibilityResult:
    """
    判斷系統是否可行

    Returns:
        FeasibilityResult（可行時帶一個點，不可行時帶憑證）
    """
    engine = _Eliminator(ineqs, eqs, n, track=True)
    m_ineq = len(engine.ineqs)
    try:
        allowed = engine.substitute_equations(set(range(n)))
        engine.fourier_motzkin(allowed)
    except _Contradiction as c:
        cert = _certificate(c.row, m_ineq)
        if not cert.verify(engine.ineqs, engine.eqs, n):
            raise InternalCheckFailure('infeasibility certificate does not verify')
        return FeasibilityResult(feasible=False, certificate=cert)

    point = engine.back_substitute()
    if not satisfies(point, engine.ineqs, engine.eqs):
        raise InternalCheckFailure('back-substituted point violates the system')
    return FeasibilityResult(feasible=True, point=point)


def find_point(ineqs: Sequence[Row], eqs: Sequence[Row], n: int) -> Optional[Vec]:
    return solve_system(ineqs, eqs, n).point


def is_feasible(ineqs: Sequence[Row], eqs: Sequence[Row], n: int) -> bool:
    return solve_system(ineqs, eqs, n).feasible


def eliminate(
    ineqs: Sequence[Row],
    eqs: Sequence[Row],
    n: int,
    variables: Iterable[int],
) -> Optional[tuple[list[Row], list[Row]]]:
    """
    投影：消去指定變數，回傳只含其餘變數的 (不等式, 等式)

    被消去變數的係數在輸出中皆為 0；投影為空集合時回傳 None。
    """
    engine = _Eliminator(ineqs, eqs, n, track=False)
    try:
        allowed = engine.substitute_equations(set(variables))
        engine.fourier_motzkin(allowed)
    except _Contradiction:
        return None
    out_ineqs = [(r.b, r.a) for r in engine.rows]
    out_eqs = [(e.b, e.a) for e in engine.kept_eqs]
    return out_ineqs, out_eqs
