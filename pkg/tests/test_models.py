from fractions import Fraction
from pathlib import Path

from src.models import (
    CaseOutcome,
    CheckReport,
    Command,
    GoldenCase,
    SuiteProgress,
    SuiteSummary,
    render_value,
)


class TestRenderValue:
    """測試報告值的文字表示"""

    def test_scalars(self):
        assert render_value(True) == 'true'
        assert render_value(False) == 'false'
        assert render_value(Fraction(-3, 4)) == '-3/4'
        assert render_value(7) == '7'

    def test_sequences(self):
        """有理數向量用逗號，整數序列用空白"""
        assert render_value((Fraction(1), Fraction(-1, 2))) == '1,-1/2'
        assert render_value((1, 3, 3, 1)) == '1 3 3 1'
        assert render_value(frozenset({3, 1})) == '1 3'


class TestCheckReport:
    """測試 CheckReport 的狀態與輸出"""

    def test_all_pass(self):
        report = CheckReport(name='demo')
        report.add('n', 6).require('ok', True)

        assert report.passed
        assert report.lines() == ['n=6', 'ok=true', 'status=pass']

    def test_one_failure_fails_report(self):
        report = CheckReport(name='demo')
        report.require('first', True).require('second', False).require('third', True)

        assert not report.passed
        assert report.status == 'fail'
        assert report.lines()[-1] == 'status=fail'


class TestCommand:
    """測試 Command.argv()"""

    def test_argv(self):
        command = Command(
            name='hvector',
            inputs=[Path('octahedron.ext')],
            flags={'--order': '1 2 3'},
            seed=3,
        )
        assert command.argv() == ['hvector', 'octahedron.ext', '--order', '1 2 3', '--seed', '3']

    def test_boolean_flag_and_output(self):
        command = Command(name='centerpoint', flags={'--verify': ''}, output=Path('out.txt'))
        assert command.argv() == ['centerpoint', '--verify', '--output', 'out.txt']


class TestGoldenCase:
    """測試 GoldenCase 的路徑與參數"""

    def test_argv_substitutes_input(self, tmp_path):
        case = GoldenCase(command='fvector', case='cube', base_dir=tmp_path)
        case.test_dir.mkdir(parents=True)
        case.args_path.write_text('fvector {in}\n', encoding='utf-8')

        assert case.identifier == 'fvector/cube'
        assert case.argv() == ['fvector', str(tmp_path / 'fvector' / 'cube' / 'in.txt')]

    def test_quoted_arguments(self, tmp_path):
        case = GoldenCase(command='hvector', case='order', base_dir=tmp_path)
        case.test_dir.mkdir(parents=True)
        case.args_path.write_text("hvector {in} --order '1 2 3;2 3 4'", encoding='utf-8')

        assert case.argv()[-1] == '1 2 3;2 3 4'


class TestSuiteProgress:
    """測試 SuiteProgress 的狀態更新"""

    def test_completion(self):
        progress = SuiteProgress(suite='euler', seed=0)
        progress.cases = {'a': CaseOutcome(), 'b': CaseOutcome()}

        assert progress.key == 'euler@0'
        assert progress.get_pending_cases() == ['a', 'b']

        progress.update_case('a', True)
        assert not progress.completed
        progress.update_case('b', False, 'chi=3')

        assert progress.completed
        assert progress.passed_count == 1
        assert progress.failed_count == 1
        assert progress.checked_at is not None

    def test_alias_round_trip(self):
        """JSONL 裡 suite 名稱存成 name"""
        progress = SuiteProgress(suite='farkas', seed=2)
        dumped = progress.model_dump(by_alias=True)

        assert dumped['name'] == 'farkas'
        assert SuiteProgress.model_validate(dumped).suite == 'farkas'


class TestSuiteSummary:
    """測試 SuiteSummary.from_progress()"""

    def test_from_progress(self):
        progress = SuiteProgress(suite='radon', seed=1)
        progress.cases = {key: CaseOutcome() for key in 'abc'}
        progress.update_case('a', True, elapsed=0.5)
        progress.update_case('b', False, 'witness outside', elapsed=0.25)

        summary = SuiteSummary.from_progress(progress)

        assert (summary.total, summary.passed, summary.failed, summary.pending) == (3, 1, 1, 1)
        assert summary.failures == ['b: witness outside']
        assert summary.pass_rate == 0.5
        assert summary.elapsed == 0.75

    def test_empty_pass_rate(self):
        assert SuiteSummary(suite='x', seed=0).pass_rate == 0.0
