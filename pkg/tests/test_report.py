import csv
from datetime import datetime

import pandas as pd

from src.progress import initialize_suite_progress, update_progress_entry
from src.report import aggregate_suites, clean_excel_string, generate_reports


def record(suite: str, seed: int, outcomes: dict[str, bool]):
    initialize_suite_progress(suite, seed, list(outcomes))
    for key, passed in outcomes.items():
        update_progress_entry(suite, seed, key, passed, detail='' if passed else 'mismatch')


class TestAggregateSuites:
    """測試 aggregate_suites() 函數"""

    def test_empty_input(self, isolated_progress):
        assert aggregate_suites() == []

    def test_sorted_by_suite_and_seed(self, isolated_progress):
        record('radon', 1, {'a': True})
        record('euler', 2, {'a': True})
        record('euler', 0, {'a': True, 'b': False})

        summaries = aggregate_suites()

        assert [(s.suite, s.seed) for s in summaries] == [('euler', 0), ('euler', 2), ('radon', 1)]
        assert summaries[0].failures == ['b: mismatch']

    def test_filter(self, isolated_progress):
        record('radon', 1, {'a': True})
        record('euler', 0, {'a': True})

        assert [s.suite for s in aggregate_suites(['euler'])] == ['euler']


class TestGenerateReports:
    """測試 CSV、Excel、摘要報告"""

    def test_all_files(self, isolated_progress, tmp_path):
        record('euler', 0, {'d2-000': True, 'd3-001': False})
        record('farkas', 0, {'II-000': True})
        start = datetime(2026, 1, 1, 9, 0, 0)
        end = datetime(2026, 1, 1, 9, 1, 30)

        summaries = generate_reports(tmp_path, start, end)

        assert len(summaries) == 2

        with open(tmp_path / 'suite.csv', encoding='utf-8-sig') as f:
            rows = list(csv.reader(f))
        assert rows[0][:4] == ['suite', 'seed', 'total', 'passed']
        assert rows[1][:6] == ['euler', '0', '2', '1', '1', '0']

        failures = pd.read_excel(tmp_path / 'suite.xlsx', sheet_name='失敗案例')
        assert failures['case'].tolist() == ['d3-001']

        summary = (tmp_path / 'summary.txt').read_text(encoding='utf-8')
        assert '總耗時: 0:01:30' in summary
        assert '✗ euler@0: 1/2' in summary
        assert '✓ farkas@0: 1/1' in summary
        assert '    - d3-001: mismatch' in summary


class TestCleanExcelString:
    """測試 clean_excel_string()"""

    def test_removes_ansi_and_control_characters(self):
        assert clean_excel_string('\x1b[31mred\x1b[0m\x07 text') == 'red text'

    def test_keeps_newlines(self):
        assert clean_excel_string('a\nb\tc') == 'a\nb\tc'
