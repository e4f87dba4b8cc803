import pytest

from src.complexes import PolyhedralComplex, SimplicialComplex
from src.duality import Quadric
from src.errors import DegenerateInput, FileFormatError
from src.formats import (
    read_complex,
    read_file,
    read_h_family,
    read_hrep,
    read_matrix,
    read_points,
    read_polyhedron,
    read_quadric,
    read_vrep,
    write_complex,
    write_hrep,
    write_points,
    write_vrep,
)
from src.polyhedra import HRep, VRep

from .helpers import Q

SQUARE_H = """\
* x 與 y 都在 [-1, 1]
H-representation
begin
4 3 rational
1 -1 0
1 1 0
1 0 -1
1 0 1
end
"""

HALFPLANE_V = """\
V-representation
linearity 1 2
begin
3 3 rational
1 0 0
0 1 0
0 0 1
end
"""


def hrep_with_row(row: str) -> str:
    return f'H-representation\nbegin\n1 3 rational\n{row}\nend\n'


class TestPolyhedronFiles:
    """測試 H/V 檔案的讀寫"""

    def test_read_hrep(self):
        H = read_hrep(SQUARE_H)

        assert H.dim == 2
        assert H.ineqs[0] == (1, Q(-1, 0))
        assert len(H.ineqs) == 4
        assert H.eqs == ()

    def test_read_vrep_with_linearity(self):
        """linearity 裡的 ray 代表一整條直線"""
        V = read_vrep(HALFPLANE_V)

        assert V.points == (Q(0, 0),)
        assert V.rays == (Q(1, 0), Q(-1, 0), Q(0, 1))

    def test_read_polyhedron_dispatch(self):
        assert isinstance(read_polyhedron(SQUARE_H), HRep)
        assert isinstance(read_polyhedron(HALFPLANE_V), VRep)

    def test_write_hrep_marks_equations(self):
        H = HRep(2, ((1, Q(-1, 0)),), ((0, Q(0, 1)),))
        assert write_hrep(H) == (
            'H-representation\nlinearity 1 2\nbegin\n2 3 rational\n1 -1 0\n0 0 1\nend\n'
        )

    def test_write_vrep(self):
        V = VRep(2, (Q(1, '1/2'),), (Q(0, 1),))
        assert write_vrep(V) == 'V-representation\nbegin\n2 3 rational\n1 1 1/2\n0 0 1\nend\n'

    def test_written_hrep_reads_back(self):
        H = HRep(2, ((1, Q(-1, 0)),), ((0, Q(0, 1)),))
        assert read_hrep(write_hrep(H)) == H

    def test_h_family(self):
        family = read_h_family(SQUARE_H + '\n' + SQUARE_H)
        assert len(family) == 2

    def test_empty_file(self):
        with pytest.raises(FileFormatError):
            read_polyhedron('* only a comment\n')


class TestFormatErrors:
    """測試格式錯誤的行號與欄位"""

    def test_decimal_number(self):
        with pytest.raises(FileFormatError) as excinfo:
            read_hrep(hrep_with_row('1 0.5 0'))

        assert excinfo.value.line == 4
        assert excinfo.value.column == 3
        assert str(excinfo.value).startswith('line 4, column 3:')

    def test_wrong_column_count(self):
        with pytest.raises(FileFormatError, match='expected 3 numbers'):
            read_hrep(hrep_with_row('1 0'))

    def test_missing_end(self):
        with pytest.raises(FileFormatError, match='unexpected end of file'):
            read_hrep('H-representation\nbegin\n1 3 rational\n1 0 0\n')

    def test_trailing_content(self):
        with pytest.raises(FileFormatError, match='unexpected content'):
            read_hrep(hrep_with_row('1 0 0') + 'extra\n')

    def test_number_type(self):
        with pytest.raises(FileFormatError) as excinfo:
            read_hrep('H-representation\nbegin\n1 3 integer\n1 0 0\nend\n')
        assert excinfo.value.column == 5

    def test_linearity_out_of_range(self):
        with pytest.raises(FileFormatError, match='out of range'):
            read_hrep('H-representation\nlinearity 1 5\nbegin\n1 3 rational\n1 0 0\nend\n')

    @pytest.mark.parametrize(
        'row, message',
        [('2 0 0', 'first column'), ('0 0 0', 'nonzero')],
    )
    def test_bad_v_rows(self, row, message):
        text = f'V-representation\nbegin\n1 3 rational\n{row}\nend\n'
        with pytest.raises(FileFormatError, match=message):
            read_vrep(text)

    def test_point_in_linearity(self):
        text = 'V-representation\nlinearity 1 1\nbegin\n1 3 rational\n1 0 0\nend\n'
        with pytest.raises(FileFormatError, match='point row'):
            read_vrep(text)

    def test_read_file_prefixes_path(self, tmp_path):
        path = tmp_path / 'broken.ine'
        path.write_text(hrep_with_row('1 x 0'), encoding='utf-8')

        with pytest.raises(FileFormatError) as excinfo:
            read_file(path, read_hrep)
        assert str(path) in str(excinfo.value)
        assert excinfo.value.line == 4

    def test_read_file_missing(self, tmp_path):
        with pytest.raises(FileFormatError, match='cannot read'):
            read_file(tmp_path / 'missing.ine', read_hrep)


class TestOtherFiles:
    """測試 Q-matrix、點集、矩陣、複形檔"""

    def test_read_quadric(self):
        text = 'Q-matrix\nbegin\n3 3 rational\n1 0 0\n0 1 0\n0 0 -1\nend\n'
        assert read_quadric(text) == Quadric.sphere(2)

    def test_non_square_quadric(self):
        with pytest.raises(FileFormatError, match='square'):
            read_quadric('Q-matrix\nbegin\n2 3 rational\n1 0 0\n0 1 0\nend\n')

    def test_singular_quadric(self):
        with pytest.raises(DegenerateInput):
            read_quadric('Q-matrix\nbegin\n2 2 rational\n1 0\n0 0\nend\n')

    def test_points(self):
        text = 'P\n3 2\n0 0\n1/2 1\n-1 3\n'
        points = read_points(text)

        assert points == [Q(0, 0), Q('1/2', 1), Q(-1, 3)]
        assert write_points(points) == text

    def test_matrix(self):
        A = read_matrix('Matrix\nbegin\n2 3 rational\n1 0 1\n0 1 2\nend\n')
        assert A == (Q(1, 0, 1), Q(0, 1, 2))

    def test_simplicial_complex(self):
        text = 'SC\nvertices 3\ncoordinates 2\n0 0\n1 0\n0 1\n1 2 3\n'
        K = read_complex(text)

        assert isinstance(K, SimplicialComplex)
        assert K.facets == [frozenset({0, 1, 2})]
        assert K.coords == (Q(0, 0), Q(1, 0), Q(0, 1))
        assert write_complex(3, K.facets, list(K.coords)) == text

    def test_polyhedral_complex(self):
        text = 'PC\nvertices 4\ncoordinates 2\n0 0\n1 0\n0 1\n1 1\n1 2 4 3\n'
        K = read_complex(text)

        assert isinstance(K, PolyhedralComplex)
        assert K.cells == (frozenset({0, 1, 2, 3}),)

    def test_polyhedral_complex_needs_coordinates(self):
        with pytest.raises(FileFormatError, match='coordinates'):
            read_complex('PC\nvertices 4\n1 2 3 4\n')

    def test_vertex_out_of_range(self):
        with pytest.raises(FileFormatError) as excinfo:
            read_complex('SC\nvertices 2\n1 3\n')
        assert (excinfo.value.line, excinfo.value.column) == (3, 3)

    def test_repeated_vertex(self):
        with pytest.raises(FileFormatError, match='repeated'):
            read_complex('SC\nvertices 2\n1 1\n')

    def test_write_complex_without_coordinates(self):
        text = write_complex(4, [frozenset({2, 3}), frozenset({0, 1})])
        assert text == 'SC\nvertices 4\n1 2\n3 4\n'
