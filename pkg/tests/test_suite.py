import pytest

from src import config
from src.progress import update_progress_entry
from src.suite import SUITES, Suite, get_suite, plan_suite, run_case, run_suite
from src.utils.sampling import make_rng, random_polytope


def boom(rng, params):
    raise ZeroDivisionError('division by zero')


BROKEN = Suite('broken', 'always raises', 1, lambda count: {'only': {}}, boom)


class TestSuiteRegistry:
    """測試 suite 註冊表"""

    def test_names(self):
        assert list(SUITES) == [
            'euler',
            'hv',
            'fm',
            'duality',
            'shelling',
            'dehn-sommerville',
            'cyclic',
            'classics',
            'delaunay',
            'stereo',
        ]

    def test_unknown_suite(self):
        with pytest.raises(KeyError, match='unknown suite'):
            get_suite('nope')

    def test_case_keys(self):
        assert list(get_suite('euler').cases(1)) == ['d2-000', 'd3-000', 'd4-000', 'd5-000']
        classics = get_suite('classics').cases(1)
        assert 'farkas-IV-000' in classics
        assert classics['radon-001'] == {'kind': 'radon'}


class TestRunCase:
    """測試單一 instance 的執行"""

    def test_exception_is_a_failure(self):
        outcome = run_case(BROKEN, 0, 'only', {})

        assert outcome.passed is False
        assert outcome.detail == 'ZeroDivisionError: division by zero'

    def test_same_seed_same_instance(self):
        first = random_polytope(make_rng(3, 'euler', 'd3-000'), 3)
        second = random_polytope(make_rng(3, 'euler', 'd3-000'), 3)
        other = random_polytope(make_rng(4, 'euler', 'd3-000'), 3)

        assert first == second
        assert first != other


class TestSmallSuites:
    """以少量 instance 跑各 suite，全部應通過"""

    @pytest.mark.parametrize('name', ['euler', 'duality', 'stereo', 'classics', 'dehn-sommerville'])
    def test_passes(self, name, monkeypatch):
        monkeypatch.setattr(config, 'SUITE_MEMBERSHIP_SAMPLES', 40)
        outcomes = run_suite(name, seed=0, count=1)

        failed = {key: o.detail for key, o in outcomes.items() if not o.passed}
        assert failed == {}

    def test_hv_with_few_samples(self, monkeypatch):
        monkeypatch.setattr(config, 'SUITE_MEMBERSHIP_SAMPLES', 40)
        outcomes = run_suite('hv', seed=1, count=2)
        assert all(o.passed for o in outcomes.values())


class TestPlanSuite:
    """測試可續跑的進度規劃"""

    def test_resume_skips_finished(self, isolated_progress):
        _, pending = plan_suite('stereo', 0, 3)
        assert [key for key, _ in pending] == ['d1-000', 'd2-001', 'd3-002']

        update_progress_entry('stereo', 0, 'd1-000', True)
        _, pending = plan_suite('stereo', 0, 3)
        assert [key for key, _ in pending] == ['d2-001', 'd3-002']

    def test_changed_count_restarts(self, isolated_progress):
        plan_suite('stereo', 0, 2)
        update_progress_entry('stereo', 0, 'd1-000', True)

        progress, pending = plan_suite('stereo', 0, 4)

        assert len(pending) == 4
        assert progress.passed_count == 0
