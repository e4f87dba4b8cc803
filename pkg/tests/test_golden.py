import shlex

import pytest
from typer.testing import CliRunner

from main import app
from src import config
from src.golden import GoldenCaseManager, bytes_to_readable_string, compare_output

runner = CliRunner()

CASES = GoldenCaseManager(config.TEST_CASES_DIR).get_cases()


class TestCompareOutput:
    """測試逐行比對"""

    def test_ignores_trailing_whitespace(self):
        assert compare_output('a \nb\n\n', 'a\nb')

    def test_detects_difference(self):
        assert not compare_output('a\nb', 'a\nc')

    def test_missing_line(self):
        assert not compare_output('a\nb', 'a')


class TestBytesToReadableString:
    """測試 bytes 解碼"""

    def test_utf8(self):
        assert bytes_to_readable_string('χ=2'.encode()) == 'χ=2'

    def test_invalid_bytes(self):
        assert bytes_to_readable_string(b'ok\xff') == 'ok\\xff'


class TestGoldenCaseManager:
    """測試 test_cases/ 掃描"""

    def test_loads_repository_cases(self):
        manager = GoldenCaseManager(config.TEST_CASES_DIR)

        assert 'euler' in manager.commands
        assert [c.case for c in manager.get_cases('euler')] == ['cube', 'dodecahedron']

    def test_skips_incomplete_folder(self, tmp_path):
        (tmp_path / 'fvector' / 'broken').mkdir(parents=True)
        (tmp_path / 'fvector' / 'broken' / 'args.txt').write_text('fvector {in}', encoding='utf-8')

        assert GoldenCaseManager(tmp_path).get_cases() == []

    def test_missing_directory(self, tmp_path):
        assert GoldenCaseManager(tmp_path / 'nope').commands == []


@pytest.mark.parametrize('case', CASES, ids=[c.identifier for c in CASES])
def test_golden_case(case):
    """以 CliRunner 在同一行程內執行，結果應與 out.txt 相同"""
    result = runner.invoke(app, case.argv())

    assert result.exit_code == 0, result.output
    assert compare_output(case.out_path.read_text(encoding='utf-8'), result.stdout)


def test_args_are_shell_words():
    for case in CASES:
        text = case.args_path.read_text(encoding='utf-8')
        assert shlex.split(text)[0] == case.command
