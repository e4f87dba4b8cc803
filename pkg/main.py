import logging
import shutil
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from contextlib import contextmanager
from datetime import datetime
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import typer
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)

from src import config
from src.classics import (
    ConvexCombination,
    FarkasProblem,
    caratheodory_reduce,
    centerpoint,
    farkas,
    helly_check,
    radon_partition,
    verify_centerpoint,
)
from src.complexes import (
    PolyhedralComplex,
    Shelling,
    SimplicialComplex,
    dehn_sommerville_check,
    euler_characteristic,
    euler_check,
    f_vector,
    h_from_f,
    h_from_shelling,
    is_shelling,
    line_shelling,
    polytope_boundary_complex,
)
from src.cyclic_bounds import (
    CyclicSpec,
    cyclic_facet_count,
    cyclic_polytope,
    gale_facets,
    lower_bound_check,
    upper_bound_check,
)
from src.delvor import (
    SiteSet,
    delaunay_agreement,
    delaunay_paraboloid,
    delaunay_sphere,
    voronoi_diagram,
    voronoi_from_delaunay_duality,
)
from src.duality import Quadric, affine_polar_dual, check_completion_duality_commutes
from src.emitters import delaunay_off, delaunay_svg, voronoi_svg, write_text
from src.errors import PolytopeError
from src.exact_core import parse_vector
from src.formats import (
    read_complex,
    read_file,
    read_h_family,
    read_matrix,
    read_points,
    read_polyhedron,
    read_quadric,
    read_vrep,
    write_complex,
    write_hrep,
    write_polyhedron,
    write_vrep,
)
from src.golden import GoldenCaseManager, run_golden_case
from src.models import CheckReport, SuiteProgress, render_value
from src.polyhedra import (
    HRep,
    VRep,
    canonicalize_vrep,
    h_to_v,
    make_irredundant,
    polytope_lattice,
    require_nonempty,
    v_to_h,
)
from src.progress import reset_progress, update_progress_entry
from src.report import generate_reports
from src.suite import SUITES, Params, get_suite, plan_suite, run_case
from src.utils.log import setup_logging

logger = logging.getLogger(__name__)

app = typer.Typer(
    help='Exact Polytopes - 有理數精確的凸多面體工具',
    no_args_is_help=False,  # 允許無參數時執行預設指令
)


class Representation(str, Enum):
    h = 'h'
    v = 'v'


class FarkasVersionOption(str, Enum):
    I = 'I'
    II = 'II'
    III = 'III'
    IV = 'IV'


class EulerKindOption(str, Enum):
    solid = 'solid'
    boundary = 'boundary'
    disk = 'disk'


class DelaunayMethod(str, Enum):
    paraboloid = 'paraboloid'
    sphere = 'sphere'
    both = 'both'


# Shared plumbing


@contextmanager
def input_errors():
    """輸入錯誤（格式、維度、退化、無法解析的數字）一律 exit 2，訊息寫到 stderr"""
    try:
        yield
    except (PolytopeError, ValueError) as e:
        logger.debug('input error', exc_info=True)
        typer.echo(f'error: {e}', err=True)
        raise typer.Exit(code=2)


def emit(text: Union[str, list[str]], output: Optional[Path] = None):
    if isinstance(text, list):
        text = '\n'.join(text) + '\n'
    if output is not None:
        write_text(output, text)
    else:
        typer.echo(text, nl=False)


def finish(check_report: CheckReport, output: Optional[Path] = None):
    """輸出報告；檢查失敗時 exit 1"""
    emit(check_report.lines(), output)
    if not check_report.passed:
        raise typer.Exit(code=1)


def _first_keyword(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith('*'):
            return stripped.split()[0]
    return ''


def read_any(text: str) -> Union[HRep, VRep, SimplicialComplex, PolyhedralComplex]:
    """依第一個關鍵字分派：SC/PC 為複形，其餘當成 H/V polyhedron"""
    if _first_keyword(text) in ('SC', 'PC'):
        return read_complex(text)
    return read_polyhedron(text)


def load_quadric(name: str, d: int) -> Quadric:
    if name == 'sphere':
        return Quadric.sphere(d)
    if name == 'paraboloid':
        return Quadric.paraboloid(d)
    return read_file(Path(name), read_quadric)


def parse_order(text: str) -> list[frozenset[int]]:
    """'1 2 3;2 3 4' → 0-based facet 序列"""
    order = []
    for chunk in text.split(';'):
        if chunk.strip():
            order.append(frozenset(int(v) - 1 for v in chunk.split()))
    return order


def _point_option(text: Optional[str], d: int) -> Optional[tuple[Fraction, ...]]:
    if text is None:
        return None
    x = parse_vector(text)
    if len(x) != d:
        raise PolytopeError(f'point has {len(x)} coordinates, expected {d}')
    return x


# Representations and duality


@app.command()
def convert(
    path: Path = typer.Argument(..., help='H- 或 V-representation 檔'),
    to: Representation = typer.Option(..., '--to', help='輸出表示法'),
    output: Optional[Path] = typer.Option(None, '--output', '-o', help='輸出檔（預設 stdout）'),
):
    """
    H ↔ V 轉換（輸出為不冗餘/正規化的表示法）

    範例:
        uv run main.py convert cube.ine --to v
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        P = read_file(path, read_polyhedron)
        if to == Representation.v:
            result = h_to_v(P) if isinstance(P, HRep) else canonicalize_vrep(P)
        else:
            result = make_irredundant(P) if isinstance(P, HRep) else v_to_h(P)
        emit(write_polyhedron(result), output)


@app.command()
def dual(
    path: Path = typer.Argument(..., help='H- 或 V-representation 檔'),
    quadric: str = typer.Option('sphere', '--quadric', '-q', help='sphere、paraboloid 或 Q 檔'),
    output: Optional[Path] = typer.Option(None, '--output', '-o', help='輸出檔'),
):
    """
    對二次曲面的 polar dual（輸出 H-representation）

    範例:
        uv run main.py dual square.ext --quadric sphere
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        P = read_file(path, read_polyhedron)
        V = require_nonempty(P)
        Q = load_quadric(quadric, V.dim)
        emit(write_hrep(make_irredundant(affine_polar_dual(V, Q))), output)


@app.command('check-commute')
def check_commute(
    path: Path = typer.Argument(..., help='H- 或 V-representation 檔'),
    quadric: str = typer.Option('sphere', '--quadric', '-q', help='sphere、paraboloid 或 Q 檔'),
):
    """檢查 projective completion 與 polar dual 可交換"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        P = read_file(path, read_polyhedron)
        check_report = check_completion_duality_commutes(P, load_quadric(quadric, P.dim))
    finish(check_report)


# Face numbers, shellings, bounds


@app.command()
def fvector(path: Path = typer.Argument(..., help='polytope 或 SC/PC 複形檔')):
    """f-vector（開頭是 f_{-1} = 1）；polytope 給的是邊界的 f-vector"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        obj = read_file(path, read_any)
        if isinstance(obj, (HRep, VRep)):
            _, _, K = polytope_lattice(obj)
        else:
            K = obj
        f = f_vector(K)
        emit([f'dim={K.dim}', f'f={render_value(f)}'])


@app.command()
def hvector(
    path: Path = typer.Argument(..., help='polytope 或 SC 複形檔'),
    order: Optional[str] = typer.Option(
        None, '--order', help='以分號分隔的 facet 順序（1-based），例如 "1 2 3;2 3 4"'
    ),
):
    """
    h-vector；給定 --order 時先檢查是否為 shelling，再由 restriction set 計數

    範例:
        uv run main.py hvector octahedron.ext
        uv run main.py hvector g.sc --order "1 2 3;2 3 4;3 4 5"
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        obj = read_file(path, read_any)
        if isinstance(obj, PolyhedralComplex):
            raise PolytopeError('h-vectors need a simplicial complex')
        if isinstance(obj, (HRep, VRep)):
            _, _, lattice = polytope_lattice(obj)
            K, _ = polytope_boundary_complex(lattice)
        else:
            K = obj
        d = K.dim + 1
        if order is None:
            emit([f'h={render_value(h_from_f(f_vector(K), d))}'])
            return
        facet_order = parse_order(order)
        check = is_shelling(K, facet_order)
    lines = check.report().lines()
    if not check.passed:
        emit(lines)
        raise typer.Exit(code=1)
    S = Shelling(tuple(facet_order), check.restrictions, verified=True)
    emit(lines + [f'h={render_value(h_from_shelling(S))}'])


def _euler_report(obj, kind: EulerKindOption) -> CheckReport:
    if isinstance(obj, (HRep, VRep)):
        if kind == EulerKindOption.disk:
            raise PolytopeError('--kind disk needs a simplicial or polyhedral complex')
        _, _, obj = polytope_lattice(obj)
    chi, expected, ok = euler_check(obj, kind.value)
    check_report = CheckReport(name='euler')
    check_report.add('dim', obj.dim)
    check_report.add('kind', kind.value)
    check_report.add('chi', chi)
    check_report.add('expected', expected)
    check_report.require('chi_matches', ok)
    return check_report


@app.command()
def euler(
    path: Path = typer.Argument(..., help='polytope 或 SC/PC 複形檔'),
    kind: Optional[EulerKindOption] = typer.Option(
        None, '--kind', help='只檢查一種情形（disk 只適用於複形）'
    ),
):
    """Euler–Poincaré：χ(P) = 1、χ(∂P) = 1 − (−1)^d"""
    setup_logging(config.LOG_LEVEL)
    if kind is not None:
        with input_errors():
            check_report = _euler_report(read_file(path, read_any), kind)
        finish(check_report)
        return
    with input_errors():
        obj = read_file(path, read_any)
        if not isinstance(obj, (HRep, VRep)):
            emit([f'dim={obj.dim}', f'chi(complex)={euler_characteristic(obj)}'])
            return
        _, _, lattice = polytope_lattice(obj)
        results = [
            ('polytope', euler_check(lattice, 'solid')),
            ('boundary', euler_check(lattice, 'boundary')),
        ]
    lines = [f'dim={lattice.dim}']
    lines.extend(f'chi({name})={chi} {"OK" if ok else "FAIL"}' for name, (chi, _, ok) in results)
    emit(lines)
    if not all(ok for _, (_, _, ok) in results):
        raise typer.Exit(code=1)


@app.command('ds-check')
def ds_check(path: Path = typer.Argument(..., help='simplicial polytope 檔')):
    """Dehn–Sommerville：h 為回文（d = 3 另檢查 f1 = 3f0 − 6、f2 = 2f0 − 4）"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        _, _, lattice = polytope_lattice(read_file(path, read_polyhedron))
        check_report = dehn_sommerville_check(lattice)
    finish(check_report)


@app.command()
def shell(
    path: Path = typer.Argument(..., help='全維度 polytope 檔'),
    seed: int = typer.Option(0, '--seed', '-s', help='擾動 λ 從 1/2^seed 開始'),
    point: Optional[str] = typer.Option(None, '--point', help='直線上的外部點，例如 "3,0,0"'),
):
    """
    line shelling（非 simplicial 時先三角化邊界）

    範例:
        uv run main.py shell octahedron.ext --seed 1
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        P = read_file(path, read_polyhedron)
        S = line_shelling(P, _point_option(point, P.dim), seed=seed)
        h = h_from_shelling(S)
    lines = [f'order={" ".join(str(i + 1) for i in S.polytope_order)}']
    for j, (F, R) in enumerate(zip(S.facet_order, S.restrictions), 1):
        lines.append(f'F{j}={" ".join(str(v + 1) for v in sorted(F))}')
        lines.append(f'R{j}={" ".join(str(v + 1) for v in sorted(R)) or "{}"}')
    lines.append(f'h={render_value(h)}')
    emit(lines)


@app.command()
def cyclic(
    d: int = typer.Option(..., '-d', help='維度'),
    n: int = typer.Option(..., '-n', help='頂點數'),
    facets: bool = typer.Option(False, '--facets', help='列出 Gale evenness facet'),
    count: bool = typer.Option(False, '--count', help='只輸出 facet 數'),
    params: Optional[str] = typer.Option(
        None, '--params', help='遞增的參數 t_1 < … < t_n（預設 1..n）'
    ),
    output: Optional[Path] = typer.Option(None, '--output', '-o', help='輸出檔'),
):
    """
    cyclic polytope C_d(n)

    範例:
        uv run main.py cyclic -d 4 -n 7 --count
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        if count:
            emit([str(cyclic_facet_count(d, n))], output)
            return
        if facets:
            emit([' '.join(str(i) for i in F) for F in gale_facets(d, n)], output)
            return
        spec = CyclicSpec(d, parse_vector(params)) if params else CyclicSpec.default(d, n)
        if spec.n != n:
            raise PolytopeError(f'{spec.n} parameters given for n={n}')
        emit(write_vrep(cyclic_polytope(spec)), output)


@app.command('ubt-check')
def ubt_check(path: Path = typer.Argument(..., help='polytope 檔')):
    """Upper Bound Theorem：f 與 h 不超過同參數 cyclic polytope"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        _, _, lattice = polytope_lattice(read_file(path, read_polyhedron))
        check_report = upper_bound_check(lattice)
    finish(check_report)


@app.command('lbt-check')
def lbt_check(path: Path = typer.Argument(..., help='simplicial polytope 檔')):
    """Lower Bound Theorem（stacked polytope 的下界）"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        _, _, lattice = polytope_lattice(read_file(path, read_polyhedron))
        check_report = lower_bound_check(lattice)
    finish(check_report)


# Classic theorems


@app.command()
def caratheodory(
    path: Path = typer.Argument(..., help='點集 P 檔'),
    weights: Optional[str] = typer.Option(None, '--weights', help='凸組合權重（預設平均）'),
):
    """Carathéodory：把凸組合化簡到至多 d_aff + 1 個點"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        points = read_file(path, read_points)
        if not points:
            raise PolytopeError('no points')
        if weights is None:
            w = tuple(Fraction(1, len(points)) for _ in points)
        else:
            w = parse_vector(weights)
        cc = ConvexCombination(tuple(points), w)
        b = cc.evaluate()
        reduced = caratheodory_reduce(b, cc)
    indices = [points.index(p) + 1 for p in reduced.points]
    emit(
        [
            f'b={render_value(b)}',
            f'points={" ".join(str(i) for i in indices)}',
            f'weights={render_value(reduced.weights)}',
        ]
    )


@app.command()
def radon(path: Path = typer.Argument(..., help='至少 d+2 個點的 P 檔')):
    """Radon 分割與交點"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        R = radon_partition(read_file(path, read_points))
    emit(
        [
            f'first={" ".join(str(i + 1) for i in sorted(R.first))}',
            f'second={" ".join(str(i + 1) for i in sorted(R.second))}',
            f'witness={render_value(R.witness)}',
            f'first_weights={render_value(R.first_combination.weights)}',
            f'second_weights={render_value(R.second_combination.weights)}',
        ]
    )


@app.command()
def helly(
    path: Path = typer.Argument(..., help='連續多個 H-representation 區塊'),
):
    """Helly：每 m+1 個交集非空 ⇒ 全部交集非空，並給出共同點"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        family = read_file(path, read_h_family)
        result = helly_check(family, family[0].dim)
    finish(result.report())


@app.command('farkas')
def farkas_command(
    path: Path = typer.Argument(..., help='I–III: Matrix 檔 [A | z]；IV: V-representation 檔'),
    version: FarkasVersionOption = typer.Option(..., '--version', help='Farkas 版本'),
    point: Optional[str] = typer.Option(None, '--point', help='IV 的目標點 z'),
):
    """
    Farkas 引理 I–IV：回傳可行解或分離證書（兩者皆 exit 0）

    範例:
        uv run main.py farkas system.mat --version II
        uv run main.py farkas hull.ext --version IV --point "1/2,3"
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        if version == FarkasVersionOption.IV:
            V = read_file(path, read_vrep)
            if point is None:
                raise PolytopeError('version IV needs --point')
            z = _point_option(point, V.dim)
            problem = FarkasProblem('IV', z, Y=V.points, V=V.rays)
        else:
            M = read_file(path, read_matrix)
            if not M or len(M[0]) < 2:
                raise PolytopeError('matrix needs at least one column besides z')
            A = tuple(row[:-1] for row in M)
            z = tuple(row[-1] for row in M)
            problem = FarkasProblem(version.value, z, A=A)
        cert = farkas(problem)
    emit(cert.lines())


@app.command('centerpoint')
def centerpoint_command(
    path: Path = typer.Argument(..., help='點集 P 檔'),
    verify: Optional[str] = typer.Option(None, '--verify', help='只驗證這個點是否為 centerpoint'),
    jobs: int = typer.Option(config.DEFAULT_JOBS, '--jobs', '-j', help='平行處理的 worker 數量'),
):
    """centerpoint：所有「大」子集凸包交集中的一點"""
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        S = read_file(path, read_points)
        if verify is None:
            result = centerpoint(S, jobs=jobs)
            c = result.point
        else:
            c = _point_option(verify, len(S[0]) if S else 0)
        ok = verify_centerpoint(c, S)
    if verify is None:
        emit(
            [
                f'centerpoint={render_value(c)}',
                f'subsets={result.subsets}',
                f'verified={render_value(ok)}',
            ]
        )
        return
    check_report = CheckReport(name='centerpoint')
    check_report.add('point', c)
    check_report.require('centerpoint', ok)
    finish(check_report)


# Delaunay and Voronoi


@app.command()
def delaunay(
    path: Path = typer.Argument(..., help='site 點集 P 檔'),
    method: DelaunayMethod = typer.Option(DelaunayMethod.paraboloid, '--method', help='計算路線'),
    allow_degenerate: bool = typer.Option(
        False, '--allow-degenerate', help='允許非一般位置（輸出多面體 cell）'
    ),
    off: Optional[Path] = typer.Option(None, '--off', help='另存 OFF（d <= 3）'),
    svg: Optional[Path] = typer.Option(None, '--svg', help='另存 SVG（d = 2）'),
    output: Optional[Path] = typer.Option(None, '--output', '-o', help='complex 輸出檔'),
):
    """
    Delaunay complex：paraboloid 下凸包或 stereographic 球面凸包；both 比對兩者

    範例:
        uv run main.py delaunay sites.txt --method both
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        S = SiteSet(tuple(read_file(path, read_points)))
        if method == DelaunayMethod.sphere:
            C = delaunay_sphere(S, allow_degenerate)
        else:
            C = delaunay_paraboloid(S, allow_degenerate)
        check_report = None
        if method == DelaunayMethod.both:
            check_report = delaunay_agreement(S, allow_degenerate)
        if off is not None:
            write_text(off, delaunay_off(C))
        if svg is not None:
            write_text(svg, delaunay_svg(C))
    kind = 'SC' if C.is_simplicial else 'PC'
    document = write_complex(S.n, C.cells, list(S.sites) if kind == 'PC' else None, kind)
    if check_report is None:
        emit(document, output)
        return
    if output is not None:
        write_text(output, document)
    finish(check_report)


@app.command()
def voronoi(
    path: Path = typer.Argument(..., help='site 點集 P 檔'),
    dual_check: bool = typer.Option(
        False, '--dual-check', help='比對 bisector 與切超平面兩種算法'
    ),
    output_dir: Optional[Path] = typer.Option(
        None, '--output-dir', help='每個 cell 寫一個 cell_NNN.ine'
    ),
    svg: Optional[Path] = typer.Option(None, '--svg', help='另存 SVG（d = 2）'),
    jobs: int = typer.Option(config.DEFAULT_JOBS, '--jobs', '-j', help='平行處理的 worker 數量'),
):
    """
    Voronoi diagram（每個 site 一個 H-representation cell）

    範例:
        uv run main.py voronoi sites.txt --output-dir results/voronoi --svg results/voronoi.svg
    """
    setup_logging(config.LOG_LEVEL)
    with input_errors():
        S = SiteSet(tuple(read_file(path, read_points)))
        if dual_check:
            diagram, check_report = voronoi_from_delaunay_duality(S)
        else:
            diagram, check_report = voronoi_diagram(S, jobs=jobs), None
        if svg is not None:
            write_text(svg, voronoi_svg(diagram))

    if output_dir is not None:
        for i, cell in enumerate(diagram.cells, 1):
            write_text(output_dir / f'cell_{i:03d}.ine', write_hrep(cell))
    if check_report is not None:
        finish(check_report)
    elif output_dir is not None:
        emit([f'cells={len(diagram.cells)}'])
    else:
        emit(''.join(write_hrep(cell) for cell in diagram.cells))


# Acceptance suites, golden files, reports


def run_cases_with_progress(
    progress_record: SuiteProgress,
    pending: list[tuple[str, Params]],
    jobs: int = 1,
) -> tuple[int, int]:
    """
    執行 pending instance 並顯示進度條；每個結果立即寫回 JSONL

    Returns:
        (通過數, 失敗數)
    """
    suite = get_suite(progress_record.suite)
    seed = progress_record.seed

    # 統計變數
    success_count = 0
    failed_count = 0
    in_progress_count = 0

    def record(key: str, outcome) -> bool:
        update_progress_entry(
            suite.name, seed, key, outcome.passed, outcome.detail, outcome.elapsed
        )
        if not outcome.passed:
            logger.warning(f'{suite.name}/{key} 失敗: {outcome.detail}')
        return outcome.passed

    with Progress(
        SpinnerColumn(),
        TextColumn('[progress.description]{task.description}'),
        BarColumn(),
        MofNCompleteColumn(),
        TextColumn('•'),
        TimeElapsedColumn(),
        TextColumn('•'),
        TextColumn('[green]✓ {task.fields[success]}'),
        TextColumn('[red]✗ {task.fields[failed]}'),
        TextColumn('[cyan]🔄 {task.fields[in_progress]}'),
    ) as progress:
        task = progress.add_task(
            f'[cyan]{suite.name}@{seed}',
            total=len(pending),
            success=success_count,
            failed=failed_count,
            in_progress=in_progress_count,
        )

        if jobs > 1:
            # 多執行緒模式
            with ThreadPoolExecutor(max_workers=jobs) as executor:
                futures = {
                    executor.submit(run_case, suite, seed, key, params): key
                    for key, params in pending
                }
                in_progress_count = len(futures)
                progress.update(task, in_progress=in_progress_count)

                for future in as_completed(futures):
                    key = futures[future]
                    try:
                        if record(key, future.result()):
                            success_count += 1
                        else:
                            failed_count += 1
                    except Exception as e:
                        logger.error(f'執行失敗: {suite.name}/{key} - {e}', exc_info=True)
                        failed_count += 1
                    in_progress_count -= 1

                    progress.update(
                        task,
                        advance=1,
                        success=success_count,
                        failed=failed_count,
                        in_progress=in_progress_count,
                    )
        else:
            # 單執行緒模式
            for key, params in pending:
                progress.update(task, in_progress=1)
                try:
                    if record(key, run_case(suite, seed, key, params)):
                        success_count += 1
                    else:
                        failed_count += 1
                except Exception as e:
                    logger.error(f'執行失敗: {suite.name}/{key} - {e}', exc_info=True)
                    failed_count += 1

                progress.update(
                    task,
                    advance=1,
                    success=success_count,
                    failed=failed_count,
                    in_progress=0,
                )

    return success_count, failed_count


@app.command()
def suite(
    names: Optional[list[str]] = typer.Argument(None, help='suite 名稱（預設全部）'),
    seed: int = typer.Option(config.SUITE_SEED, '--seed', '-s', help='亂數種子'),
    jobs: int = typer.Option(config.DEFAULT_JOBS, '--jobs', '-j', help='平行處理的 worker 數量'),
    count: Optional[int] = typer.Option(None, '--count', '-c', help='每個 suite 的 instance 數'),
    fresh: bool = typer.Option(False, '--fresh', help='清空進度檔重新執行'),
):
    """
    執行隨機 acceptance suite（可中斷後續跑），並生成報告

    範例:
        uv run main.py suite                      # 所有 suite
        uv run main.py suite euler hv --jobs 4    # 指定 suite，4 個 worker
        uv run main.py suite delaunay --seed 7 --count 20
    """
    setup_logging('INFO')

    logger.info('=' * 60)
    logger.info('Exact Polytopes - Acceptance suites')
    logger.info('=' * 60)

    start_time = datetime.now()
    logger.info(f'開始時間: {start_time.strftime("%Y-%m-%d %H:%M:%S")}')

    selected = names or list(SUITES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        logger.error(f'未知的 suite: {", ".join(unknown)}（可用: {", ".join(SUITES)}）')
        raise typer.Exit(code=2)

    if fresh:
        reset_progress()

    for stage, name in enumerate(selected, 1):
        logger.info(f'階段 {stage}: {name} - {SUITES[name].description}')
        progress_record, pending = plan_suite(name, seed, count)
        if not pending:
            logger.info(f'{name}@{seed} 已全部完成，跳過')
            continue
        run_cases_with_progress(progress_record, pending, jobs=jobs)

    logger.info(f'階段 {len(selected) + 1}: 生成報告')
    end_time = datetime.now()
    summaries = generate_reports(config.RESULTS_DIR, start_time, end_time, selected)

    logger.info('=' * 60)
    logger.info('Suite 執行完成！')
    logger.info(f'總耗時: {str(end_time - start_time).split(".")[0]}')
    for s in summaries:
        logger.info(f'  - {s.suite}@{s.seed}: {s.passed}/{s.total}')
    logger.info('=' * 60)

    if any(s.failed for s in summaries if s.seed == seed):
        raise typer.Exit(code=1)


@app.command()
def golden(
    command: Optional[str] = typer.Option(None, '--command', '-c', help='只跑這個子指令的案例'),
):
    """
    以子行程執行 test_cases/ 下的 golden 案例並比對輸出

    範例:
        uv run main.py golden --command delaunay
    """
    setup_logging('INFO')

    logger.info('=' * 60)
    logger.info('Exact Polytopes - Golden 測試')
    logger.info('=' * 60)

    cases = GoldenCaseManager.get_instance().get_cases(command)
    if not cases:
        logger.warning('沒有找到任何 golden 案例')
        raise typer.Exit(code=0)

    failed = []
    for case in cases:
        result = run_golden_case(case)
        mark = '✓' if result['passed'] else '✗'
        logger.info(f'{mark} {case.identifier} ({result["execution_time"]:.3f}s)')
        if not result['passed']:
            failed.append(result)
            logger.warning(f'  {result["error"]}')

    logger.info('=' * 60)
    logger.info(f'通過 {len(cases) - len(failed)}/{len(cases)}')
    logger.info('=' * 60)
    if failed:
        raise typer.Exit(code=1)


@app.command()
def clear():
    """
    清除 results 目錄（保留 .log 檔）

    範例:
        uv run main.py clear
    """
    # 設定日誌
    setup_logging('INFO')

    logger.info('=' * 60)
    logger.info('Exact Polytopes - 清除結果 (results)')
    logger.info('=' * 60)

    results_path = config.RESULTS_DIR
    if results_path.exists():
        deleted_count = 0
        skipped_count = 0
        error_count = 0

        for item in results_path.rglob('*'):
            if item.is_file():
                # 跳過 .log 檔案
                if item.suffix == '.log':
                    skipped_count += 1
                    continue

                try:
                    item.unlink()
                    deleted_count += 1
                except Exception as e:
                    logger.error(f'✗ 刪除失敗 {item}: {e}')
                    error_count += 1

        # 刪除空目錄（由下而上）
        for item in sorted(results_path.rglob('*'), reverse=True):
            if item.is_dir() and not any(item.iterdir()):
                shutil.rmtree(item, ignore_errors=True)

        logger.info(
            f'✓ 已清除 results/: 刪除 {deleted_count} 個檔案, 跳過 {skipped_count} 個 .log 檔'
        )
        if error_count > 0:
            logger.warning(f'  有 {error_count} 個檔案刪除失敗')
    else:
        logger.info(f'○ 目錄不存在，跳過: {results_path}/')

    logger.info('=' * 60)
    logger.info('清除完成！')
    logger.info('')


@app.command()
def report():
    """
    從 JSONL 進度檔重新生成 suite 報告（不執行任何 instance）

    範例:
        uv run main.py report
    """
    setup_logging('INFO')

    logger.info('=' * 60)
    logger.info('Exact Polytopes - 只生成報告')
    logger.info('=' * 60)

    start_time = datetime.now()
    if not config.SUITE_PROGRESS_PATH.exists():
        logger.error(f'錯誤: {config.SUITE_PROGRESS_PATH.name} 不存在，請先執行 suite')
        raise typer.Exit(code=1)

    logger.info('階段 1: 從進度檔讀取資料並生成報告')
    summaries = generate_reports(config.RESULTS_DIR, start_time, datetime.now())

    logger.info('=' * 60)
    logger.info(f'報告生成完成！共 {len(summaries)} 個 suite')
    logger.info('報告檔案：')
    logger.info(f'  - CSV:  {config.RESULTS_DIR / "suite.csv"}')
    logger.info(f'  - Excel: {config.RESULTS_DIR / "suite.xlsx"}')
    logger.info(f'  - 摘要:  {config.RESULTS_DIR / "summary.txt"}')
    logger.info('')


if __name__ == '__main__':
    # 如果沒有指定 sub-command，預設執行 suite
    if len(sys.argv) == 1 or (len(sys.argv) > 1 and sys.argv[1].startswith('-')):
        sys.argv.insert(1, 'suite')

    app()
