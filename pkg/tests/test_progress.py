from src.models import SuiteProgress
from src.progress import (
    get_suite_status,
    initialize_suite_progress,
    read_progress_log,
    reset_progress,
    update_progress_entry,
    write_progress_entry,
)


class TestProgressLog:
    """測試 JSONL 進度檔的讀寫"""

    def test_initialize_and_read(self, isolated_progress):
        initialize_suite_progress('euler', 0, ['d2-000', 'd3-001'])
        progress_dict = read_progress_log()

        assert list(progress_dict) == ['euler@0']
        assert progress_dict['euler@0'].get_pending_cases() == ['d2-000', 'd3-001']

    def test_update_rewrites_entry(self, isolated_progress):
        initialize_suite_progress('euler', 0, ['d2-000', 'd3-001'])
        update_progress_entry('euler', 0, 'd2-000', True, elapsed=0.12345)
        update_progress_entry('euler', 0, 'd3-001', False, detail='chi=3')

        progress = read_progress_log()['euler@0']
        assert progress.completed
        assert progress.cases['d2-000'].elapsed == 0.123
        assert progress.cases['d3-001'].detail == 'chi=3'
        assert len(isolated_progress.read_text(encoding='utf-8').splitlines()) == 1

    def test_update_unknown_suite_is_ignored(self, isolated_progress):
        update_progress_entry('radon', 5, 'x', True)
        assert read_progress_log() == {}

    def test_later_entry_wins(self, isolated_progress):
        """同一個 key 以最後寫入的為準"""
        write_progress_entry(SuiteProgress(suite='helly', seed=1))
        write_progress_entry(SuiteProgress(suite='helly', seed=1, completed=True))

        completed, progress = get_suite_status(read_progress_log(), 'helly', 1)
        assert completed
        assert progress is not None

    def test_corrupted_line_is_skipped(self, isolated_progress):
        isolated_progress.write_text('{not json\n', encoding='utf-8')
        write_progress_entry(SuiteProgress(suite='farkas', seed=0))

        assert list(read_progress_log()) == ['farkas@0']

    def test_missing_suite_status(self, isolated_progress):
        assert get_suite_status({}, 'euler', 0) == (False, None)

    def test_reset(self, isolated_progress):
        initialize_suite_progress('euler', 0, ['a'])
        reset_progress()

        assert isolated_progress.read_text(encoding='utf-8') == ''
        assert read_progress_log() == {}
