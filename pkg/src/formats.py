"""
Text file formats (cdd-style H/V files, Q-matrix, points, complexes, matrices).

所有數字都是精確有理數 "p/q" 或 "p"；以 `*` 開頭的行是註解。
錯誤一律丟出 FileFormatError（附行號與欄位）。
"""

import logging
import re
from pathlib import Path
from typing import Optional, Union

from .complexes import PolyhedralComplex, SimplicialComplex
from .duality import Quadric
from .errors import FileFormatError
from .exact_core import Mat, Vec, format_rational, parse_rational
from .polyhedra import HRep, VRep

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'\S+')

Complex = Union[SimplicialComplex, PolyhedralComplex]


class _Lines:
    """略過空行與 `*` 註解行，保留原始行號"""

    def __init__(self, text: str):
        self._lines = [
            (number, line.rstrip())
            for number, line in enumerate(text.splitlines(), 1)
            if line.strip() and not line.lstrip().startswith('*')
        ]
        self._pos = 0

    @property
    def last_line(self) -> int:
        if not self._lines:
            return 1
        return self._lines[min(self._pos, len(self._lines) - 1)][0]

    def at_end(self) -> bool:
        return self._pos >= len(self._lines)

    def peek(self) -> Optional[tuple[int, str]]:
        return None if self.at_end() else self._lines[self._pos]

    def next(self, what: str) -> tuple[int, str]:
        if self.at_end():
            raise FileFormatError(f'unexpected end of file, expected {what}', self.last_line)
        item = self._lines[self._pos]
        self._pos += 1
        return item

    def expect(self, keyword: str) -> int:
        number, line = self.next(f'"{keyword}"')
        if line.strip() != keyword:
            raise FileFormatError(f'expected "{keyword}", found "{line.strip()}"', number, 1)
        return number


def _tokens(line: str) -> list[tuple[int, str]]:
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]


def _parse_row(number: int, line: str, count: int) -> Vec:
    tokens = _tokens(line)
    if len(tokens) != count:
        raise FileFormatError(f'expected {count} numbers, found {len(tokens)}', number, 1)
    values = []
    for column, token in tokens:
        try:
            values.append(parse_rational(token))
        except ValueError as e:
            raise FileFormatError(str(e), number, column) from e
    return tuple(values)


def _parse_int(number: int, column: int, token: str, what: str) -> int:
    if not token.isdigit():
        raise FileFormatError(
            f'{what} must be a nonnegative integer, found "{token}"', number, column
        )
    return int(token)


def _size_line(lines: _Lines, with_type: bool = True) -> tuple[int, int]:
    """'m n rational'"""
    number, line = lines.next('size line')
    tokens = _tokens(line)
    expected = 3 if with_type else 2
    if len(tokens) != expected:
        raise FileFormatError(f'size line needs {expected} fields', number, 1)
    m = _parse_int(number, tokens[0][0], tokens[0][1], 'row count')
    n = _parse_int(number, tokens[1][0], tokens[1][1], 'column count')
    if with_type and tokens[2][1] != 'rational':
        raise FileFormatError(
            f'number type must be "rational", found "{tokens[2][1]}"', number, tokens[2][0]
        )
    return m, n


def _linearity(number: int, line: str) -> list[int]:
    tokens = _tokens(line)
    if len(tokens) < 2:
        raise FileFormatError('linearity line needs a count', number, 1)
    k = _parse_int(number, tokens[1][0], tokens[1][1], 'linearity count')
    if len(tokens) != k + 2:
        raise FileFormatError(f'linearity declares {k} rows but lists {len(tokens) - 2}', number, 1)
    return [_parse_int(number, c, t, 'linearity index') for c, t in tokens[2:]]


def _matrix_block(lines: _Lines) -> tuple[list[tuple[int, Vec]], int]:
    lines.expect('begin')
    m, n = _size_line(lines)
    rows = []
    for _ in range(m):
        number, line = lines.next('matrix row')
        rows.append((number, _parse_row(number, line, n)))
    lines.expect('end')
    return rows, n


def _header_block(lines: _Lines, header: str) -> tuple[list[tuple[int, Vec]], int, list[int], int]:
    header_line = lines.expect(header)
    linearity: list[int] = []
    peeked = lines.peek()
    if peeked is not None and peeked[1].split()[0] == 'linearity':
        number, line = lines.next('linearity')
        linearity = _linearity(number, line)
    rows, n = _matrix_block(lines)
    for index in linearity:
        if not 1 <= index <= len(rows):
            raise FileFormatError(f'linearity index {index} out of range', header_line)
    if n < 1:
        raise FileFormatError('rows need at least one column', header_line)
    return rows, n, linearity, header_line


def _hrep_from(lines: _Lines) -> HRep:
    rows, n, linearity, _ = _header_block(lines, 'H-representation')
    ineqs, eqs = [], []
    for i, (_, row) in enumerate(rows, 1):
        (eqs if i in linearity else ineqs).append((row[0], row[1:]))
    return HRep(n - 1, tuple(ineqs), tuple(eqs))


def _vrep_from(lines: _Lines) -> VRep:
    rows, n, linearity, _ = _header_block(lines, 'V-representation')
    points, rays = [], []
    for i, (number, row) in enumerate(rows, 1):
        t, w = row[0], row[1:]
        if t not in (0, 1):
            raise FileFormatError(
                f'first column must be 0 (ray) or 1 (point), found {t}', number, 1
            )
        if t == 1:
            if i in linearity:
                raise FileFormatError('a point row cannot be in the linearity set', number, 1)
            points.append(w)
        elif all(x == 0 for x in w):
            raise FileFormatError('a ray must be nonzero', number, 1)
        else:
            rays.append(w)
            if i in linearity:
                rays.append(tuple(-x for x in w))
    return VRep(n - 1, tuple(points), tuple(rays))


def read_hrep(text: str) -> HRep:
    lines = _Lines(text)
    H = _hrep_from(lines)
    _expect_end_of_file(lines)
    return H


def read_vrep(text: str) -> VRep:
    lines = _Lines(text)
    V = _vrep_from(lines)
    _expect_end_of_file(lines)
    return V


def read_polyhedron(text: str) -> Union[HRep, VRep]:
    lines = _Lines(text)
    first = lines.peek()
    if first is None:
        raise FileFormatError('empty file', 1)
    if first[1].strip() == 'H-representation':
        P = _hrep_from(lines)
    elif first[1].strip() == 'V-representation':
        P = _vrep_from(lines)
    else:
        raise FileFormatError(
            f'expected "H-representation" or "V-representation", found "{first[1].strip()}"',
            first[0],
            1,
        )
    _expect_end_of_file(lines)
    return P


def read_h_family(text: str) -> list[HRep]:
    """連續多個 H-representation 區塊（Helly 的輸入）"""
    lines = _Lines(text)
    family = []
    while not lines.at_end():
        family.append(_hrep_from(lines))
    if not family:
        raise FileFormatError('no H-representation blocks', 1)
    return family


def _expect_end_of_file(lines: _Lines):
    extra = lines.peek()
    if extra is not None:
        raise FileFormatError(f'unexpected content after "end": "{extra[1].strip()}"', extra[0], 1)


def _format_row(values) -> str:
    return ' '.join(format_rational(x) for x in values)


def write_hrep(H: HRep) -> str:
    """不等式在前、等式在後；等式列由 linearity 標出"""
    rows = [(b,) + a for b, a in H.ineqs] + [(b,) + a for b, a in H.eqs]
    out = ['H-representation']
    if H.eqs:
        first = len(H.ineqs) + 1
        indices = ' '.join(str(i) for i in range(first, first + len(H.eqs)))
        out.append(f'linearity {len(H.eqs)} {indices}')
    out.extend(['begin', f'{len(rows)} {H.dim + 1} rational'])
    out.extend(_format_row(row) for row in rows)
    out.append('end')
    return '\n'.join(out) + '\n'


def write_vrep(V: VRep) -> str:
    rows = [(1,) + p for p in V.points] + [(0,) + r for r in V.rays]
    out = ['V-representation', 'begin', f'{len(rows)} {V.dim + 1} rational']
    out.extend(_format_row(row) for row in rows)
    out.append('end')
    return '\n'.join(out) + '\n'


def write_polyhedron(P: Union[HRep, VRep]) -> str:
    return write_hrep(P) if isinstance(P, HRep) else write_vrep(P)


# Quadrics, points, matrices


def read_quadric(text: str) -> Quadric:
    lines = _Lines(text)
    header = lines.expect('Q-matrix')
    rows, n = _matrix_block(lines)
    _expect_end_of_file(lines)
    if len(rows) != n:
        raise FileFormatError(f'Q-matrix must be square, got {len(rows)}x{n}', header)
    return Quadric(tuple(row for _, row in rows))


def read_points(text: str) -> list[Vec]:
    """'P'、'n d'，接著 n 列各 d 個有理數"""
    lines = _Lines(text)
    lines.expect('P')
    n, d = _size_line(lines, with_type=False)
    points = []
    for _ in range(n):
        number, line = lines.next('point row')
        points.append(_parse_row(number, line, d))
    _expect_end_of_file(lines)
    return points


def write_points(points: list[Vec]) -> str:
    d = len(points[0]) if points else 0
    out = ['P', f'{len(points)} {d}']
    out.extend(_format_row(p) for p in points)
    return '\n'.join(out) + '\n'


def read_matrix(text: str) -> Mat:
    lines = _Lines(text)
    lines.expect('Matrix')
    rows, _ = _matrix_block(lines)
    _expect_end_of_file(lines)
    return tuple(row for _, row in rows)


# Complexes


def read_complex(text: str) -> Complex:
    """
    SC 或 PC；'vertices n'、可選的 'coordinates d' 區塊（n 列），之後每行一個面（1-based）

    PC（多面體 cell）必須附座標。
    """
    lines = _Lines(text)
    number, line = lines.next('"SC" or "PC"')
    kind = line.strip()
    if kind not in ('SC', 'PC'):
        raise FileFormatError(f'expected "SC" or "PC", found "{kind}"', number, 1)

    number, line = lines.next('"vertices n"')
    tokens = _tokens(line)
    if len(tokens) != 2 or tokens[0][1] != 'vertices':
        raise FileFormatError('expected "vertices n"', number, 1)
    n = _parse_int(number, tokens[1][0], tokens[1][1], 'vertex count')

    coords: Optional[list[Vec]] = None
    peeked = lines.peek()
    if peeked is not None and peeked[1].split()[0] == 'coordinates':
        number, line = lines.next('coordinates')
        tokens = _tokens(line)
        if len(tokens) != 2:
            raise FileFormatError('expected "coordinates d"', number, 1)
        d = _parse_int(number, tokens[1][0], tokens[1][1], 'dimension')
        coords = []
        for _ in range(n):
            number, line = lines.next('coordinate row')
            coords.append(_parse_row(number, line, d))

    faces = []
    while not lines.at_end():
        number, line = lines.next('face')
        face = []
        for column, token in _tokens(line):
            v = _parse_int(number, column, token, 'vertex index')
            if not 1 <= v <= n:
                raise FileFormatError(f'vertex {v} out of range 1..{n}', number, column)
            face.append(v - 1)
        if len(set(face)) != len(face):
            raise FileFormatError('repeated vertex in a face', number, 1)
        faces.append(frozenset(face))

    if kind == 'PC':
        if coords is None:
            raise FileFormatError('a PC file needs a coordinates block', lines.last_line)
        return PolyhedralComplex(tuple(coords), tuple(faces))
    return SimplicialComplex.from_facets(n, faces, coords)


def write_complex(n: int, cells, coords: Optional[list[Vec]] = None, kind: str = 'SC') -> str:
    out = [kind, f'vertices {n}']
    if coords is not None:
        out.append(f'coordinates {len(coords[0]) if coords else 0}')
        out.extend(_format_row(p) for p in coords)
    for cell in sorted(cells, key=sorted):
        out.append(' '.join(str(v + 1) for v in sorted(cell)))
    return '\n'.join(out) + '\n'


def read_file(path: Path, reader):
    """讀檔並在錯誤訊息前加上檔名"""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise FileFormatError(f'cannot read {path}: {e}') from e
    try:
        return reader(text)
    except FileFormatError as e:
        logger.debug(f'{path}: {e}')
        raise FileFormatError(f'{path}: {e.message}', e.line, e.column) from e
