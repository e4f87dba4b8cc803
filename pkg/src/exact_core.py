"""
Exact rational linear algebra.

所有幾何運算都建立在 `fractions.Fraction` 上，沒有任何浮點容差。
向量與矩陣都是 tuple（不可變），可以安全地在 thread 之間共用。
"""

import logging
import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch

logger = logging.getLogger(__name__)

Scalar = Fraction
Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

_RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(?:/\d+)?$')

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(f'float is not an exact scalar: {value!r}')
    return Fraction(value)


def vec(coords: Iterable) -> Vec:
    return tuple(as_scalar(c) for c in coords)


def mat(rows: Iterable[Iterable]) -> Mat:
    result = tuple(vec(row) for row in rows)
    if result and any(len(row) != len(result[0]) for row in result):
        raise DimensionMismatch('matrix rows have different lengths')
    return result


def zeros(d: int) -> Vec:
    return (ZERO,) * d


def unit(d: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(d))


def _check_dims(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise DimensionMismatch(f'dimension mismatch: {len(x)} vs {len(y)}')


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    _check_dims(x, y)
    return sum((a * b for a, b in zip(x, y)), ZERO)


def add(x: Vec, y: Vec) -> Vec:
    _check_dims(x, y)
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vec, y: Vec) -> Vec:
    _check_dims(x, y)
    return tuple(a - b for a, b in zip(x, y))


def scale(s: Fraction, x: Vec) -> Vec:
    return tuple(s * a for a in x)


def neg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def norm2(x: Vec) -> Fraction:
    return sum((a * a for a in x), ZERO)


def is_zero(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


def combine(coeffs: Sequence[Fraction], vectors: Sequence[Vec], d: int) -> Vec:
    """Σ coeffs[i] * vectors[i]"""
    result = [ZERO] * d
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for j in range(d):
            result[j] += c * v[j]
    return tuple(result)


def centroid(points: Sequence[Vec]) -> Vec:
    if not points:
        raise DimensionMismatch('centroid of an empty point set')
    d = len(points[0])
    n = len(points)
    return tuple(sum((p[j] for p in points), ZERO) / n for j in range(d))


def transpose(A: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> Mat:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(row[j] for row in A) for j in range(len(A[0])))


def mat_vec(A: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, x) for row in A)


def mat_mul(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]]) -> Mat:
    if A and len(A[0]) != len(B):
        raise DimensionMismatch(f'cannot multiply {len(A)}x{len(A[0])} by {len(B)}x?')
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def inverse(A: Sequence[Sequence[Fraction]]) -> Optional[Mat]:
    """方陣的反矩陣，奇異時回傳 None"""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch('inverse of a non-square matrix')
    augmented = [list(row) + list(unit(n, i)) for i, row in enumerate(A)]
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in reduced[:n])


def primitive(v: Sequence[Fraction]) -> Vec:
    """
    以正數倍率把有理向量縮放成互質的整數向量（零向量原樣回傳）

    兩個向量只差正倍數 <=> primitive 結果相同。
    """
    if is_zero(v):
        return tuple(Fraction(0) for _ in v)
    m = lcm(*(Fraction(a).denominator for a in v))
    ints = [int(Fraction(a) * m) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints)


# Elimination


def _integer_rows(A: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    rows = []
    for row in A:
        m = lcm(*(Fraction(a).denominator for a in row)) if row else 1
        rows.append([int(Fraction(a) * m) for a in row])
    return rows


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """
    Fraction-free Gaussian elimination (Bareiss)，就地修改 rows

    Returns:
        (echelon rows, pivot columns, row-swap sign)
    """
    nrows = len(rows)
    prev = 1
    r = 0
    sign = 1
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            factor = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * pivot - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def rank(A: Sequence[Sequence[Fraction]]) -> int:
    if not A or not A[0]:
        return 0
    rows = _integer_rows(A)
    _, pivots, _ = _bareiss(rows, len(rows[0]))
    return len(pivots)


def determinant(A: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch('determinant of a non-square matrix')
    if n == 0:
        return ONE
    scale_factor = ONE
    rows = []
    for row in A:
        m = lcm(*(Fraction(a).denominator for a in row))
        scale_factor *= m
        rows.append([int(Fraction(a) * m) for a in row])
    rows, pivots, sign = _bareiss(rows, n)
    if len(pivots) < n:
        return ZERO
    return Fraction(sign * rows[n - 1][n - 1]) / scale_factor


def rref(A: Sequence[Sequence[Fraction]]) -> tuple[Mat, list[int]]:
    """Reduced row echelon form over Q; 只回傳非零列與其 pivot 欄位"""
    M = [list(row) for row in A]
    if not M:
        return (), []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [a / pv for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in M[:r]), pivots


def solve_linear(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vec]:
    """
    解 A·x = b

    Returns:
        某一個解（自由變數設為 0），無解時回傳 None
    """
    if len(A) != len(b):
        raise DimensionMismatch(f'{len(A)} rows but right-hand side of size {len(b)}')
    if not A:
        raise DimensionMismatch('empty linear system')
    n = len(A[0])
    augmented = [list(row) + [rhs] for row, rhs in zip(A, b)]
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for row, pc in zip(reduced, pivots):
        x[pc] = row[n]
    return tuple(x)


def nullspace(A: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> list[Vec]:
    """{x | A·x = 0} 的一組基底（來自 RREF，每個自由變數一個向量）"""
    if A:
        ncols = len(A[0])
    if ncols is None:
        raise DimensionMismatch('nullspace of an empty matrix needs ncols')
    reduced, pivots = rref(A) if A else ((), [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[free]
        basis.append(tuple(x))
    return basis


def affine_dimension(points: Sequence[Vec]) -> int:
    if not points:
        return -1
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise DimensionMismatch('points of different dimensions')
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    return rank(diffs) if diffs else 0


def affinely_independent(points: Sequence[Vec]) -> bool:
    return affine_dimension(points) == len(points) - 1


def affine_dependence(points: Sequence[Vec]) -> Optional[Vec]:
    """非零 μ 使得 Σμ_i = 0 且 Σμ_i p_i = 0，不存在時回傳 None"""
    if not points:
        return None
    d = len(points[0])
    rows = [tuple(p[j] for p in points) for j in range(d)]
    rows.append(tuple(ONE for _ in points))
    basis = nullspace(rows)
    return basis[0] if basis else None


def perturbation_vector(lam: Fraction, d: int) -> Vec:
    """(λ, λ², …, λ^d)"""
    lam = as_scalar(lam)
    return tuple(lam ** k for k in range(1, d + 1))


# Text syntax


def parse_rational(token: str) -> Fraction:
    token = token.strip()
    if not _RATIONAL_PATTERN.match(token):
        raise ValueError(f'not a rational number: {token!r}')
    if '/' in token:
        num, den = token.split('/')
        if int(den) == 0:
            raise ValueError(f'zero denominator: {token!r}')
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def parse_vector(text: str) -> Vec:
    """'1/2,3' 或 '1/2 3' 皆可"""
    tokens = [t for t in re.split(r'[,\s]+', text.strip()) if t]
    return tuple(parse_rational(t) for t in tokens)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f'{x.numerator}/{x.denominator}'


def format_vector(v: Sequence[Fraction], sep: str = ',') -> str:
    return sep.join(format_rational(a) for a in v)


def format_decimal(x: Fraction, digits: int = 12) -> str:
    """固定小數位數的十進位表示（只用於輸出圖檔，不回饋計算）"""
    q = round(Fraction(x) * 10**digits)
    sign = '-' if q < 0 else ''
    q = abs(q)
    whole, frac = divmod(q, 10**digits)
    if digits == 0:
        return f'{sign}{whole}'
    return f'{sign}{whole}.{frac:0{digits}d}'
