"""
SVG and OFF output.

座標只在這裡轉成固定位數的十進位字串，圖檔不會再被讀回計算。
"""

import logging
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

from src import config

from .delvor import DelaunayComplex, VoronoiDiagram
from .errors import DimensionMismatch
from .exact_core import ONE, ZERO, Vec, centroid, format_decimal, format_rational, sub
from .polyhedra import HRep, h_to_v

logger = logging.getLogger(__name__)

Box = tuple[Fraction, Fraction, Fraction, Fraction]

_SVG_HEADER = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>'


def _dec(x: Fraction) -> str:
    return format_decimal(x, config.DECIMAL_DIGITS)


def bounding_box(points: Sequence[Vec], margin: Optional[Fraction] = None) -> Box:
    """site 範圍向外擴張 margin × max(寬, 高)（範圍為 0 時以 1 計）"""
    margin = config.SVG_BOX_MARGIN if margin is None else margin
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    extent = max(max(xs) - min(xs), max(ys) - min(ys)) or ONE
    pad = margin * extent
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def box_rows(box: Box) -> list[tuple[Fraction, Vec]]:
    x0, y0, x1, y1 = box
    return [
        (-x0, (ONE, ZERO)),
        (x1, (-ONE, ZERO)),
        (-y0, (ZERO, ONE)),
        (y1, (ZERO, -ONE)),
    ]


def convex_order(points: Sequence[Vec]) -> list[Vec]:
    """以重心為中心逆時針排列凸多邊形頂點（精確比較，不用角度）"""
    if len(points) < 3:
        return sorted(points)
    c = centroid(points)

    def half(v: Vec) -> int:
        return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1

    def compare(p: Vec, q: Vec) -> int:
        u, v = sub(p, c), sub(q, c)
        if half(u) != half(v):
            return half(u) - half(v)
        cross = u[0] * v[1] - u[1] * v[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(points, key=cmp_to_key(compare))


def clip_cell(cell: HRep, box: Box) -> list[Vec]:
    clipped = HRep(2, tuple(cell.ineqs) + tuple(box_rows(box)), cell.eqs)
    return convex_order(list(h_to_v(clipped).points))


def _polygon(points: Sequence[Vec], style: str) -> str:
    coords = ' '.join(f'{_dec(x)},{_dec(-y)}' for x, y in points)
    return f'  <polygon points="{coords}" {style}/>'


def _svg_document(box: Box, body: list[str], title: str) -> str:
    x0, y0, x1, y1 = box
    exact = ','.join(format_rational(v) for v in box)
    view = f'{_dec(x0)} {_dec(-y1)} {_dec(x1 - x0)} {_dec(y1 - y0)}'
    lines = [
        _SVG_HEADER,
        f'<!-- {title}; box={exact} (xmin,ymin,xmax,ymax) -->',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}">',
        *body,
        '</svg>',
    ]
    return '\n'.join(lines) + '\n'


def _site_marks(sites: Sequence[Vec], radius: Fraction) -> list[str]:
    return [
        f'  <circle cx="{_dec(x)}" cy="{_dec(-y)}" r="{_dec(radius)}" fill="black"/>'
        for x, y in sites
    ]


def voronoi_svg(diagram: VoronoiDiagram, box: Optional[Box] = None) -> str:
    if diagram.dim != 2:
        raise DimensionMismatch(f'SVG output needs d = 2, got d = {diagram.dim}')
    sites = diagram.sites.sites
    box = box or bounding_box(sites)
    radius = (box[2] - box[0]) / 200
    body = []
    for i, cell in enumerate(diagram.cells):
        polygon = clip_cell(cell, box)
        body.append(f'  <!-- cell {i + 1}: {len(polygon)} vertices -->')
        body.append(_polygon(polygon, 'fill="none" stroke="black" stroke-width="0.5%"'))
    body.extend(_site_marks(sites, radius))
    return _svg_document(box, body, f'voronoi diagram of {len(sites)} sites')


def delaunay_svg(C: DelaunayComplex, box: Optional[Box] = None) -> str:
    if C.sites.dim != 2:
        raise DimensionMismatch(f'SVG output needs d = 2, got d = {C.sites.dim}')
    sites = C.sites.sites
    box = box or bounding_box(sites)
    radius = (box[2] - box[0]) / 200
    body = []
    for cell in C.cells:
        polygon = convex_order([sites[i] for i in sorted(cell)])
        body.append(_polygon(polygon, 'fill="none" stroke="black" stroke-width="0.5%"'))
    body.extend(_site_marks(sites, radius))
    return _svg_document(box, body, f'delaunay complex with {len(C.cells)} cells')


def off_document(vertices: Sequence[Vec], faces: Sequence[Sequence[int]]) -> str:
    """ASCII OFF；低於三維的座標補 0"""
    if vertices and len(vertices[0]) > 3:
        raise DimensionMismatch(f'OFF output needs d <= 3, got d = {len(vertices[0])}')
    lines = ['OFF', f'{len(vertices)} {len(faces)} 0']
    for v in vertices:
        padded = tuple(v) + (ZERO,) * (3 - len(v))
        lines.append(' '.join(_dec(x) for x in padded))
    for face in faces:
        lines.append(' '.join(str(x) for x in (len(face), *face)))
    return '\n'.join(lines) + '\n'


def delaunay_off(C: DelaunayComplex) -> str:
    """d <= 2 時每個 cell 一個面；d = 3 時輸出所有 cell 的三角形面（去重）"""
    d = C.sites.dim
    if d > 3:
        raise DimensionMismatch(f'OFF output needs d <= 3, got d = {d}')
    sites = C.sites.sites
    if d == 3:
        triangles = sorted(
            {tuple(t) for cell in C.cells for t in combinations(sorted(cell), 3)}
        )
        faces = [list(t) for t in triangles]
    elif d == 2:
        faces = []
        for cell in C.cells:
            ordered = convex_order([sites[i] for i in sorted(cell)])
            faces.append([sites.index(p) for p in ordered])
    else:
        faces = [sorted(cell) for cell in C.cells]
    return off_document(sites, faces)


def write_text(path: Path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    logger.info(f'已寫入: {path}')
