import pytest

from src.polyhedra import VRep

from .helpers import Q


@pytest.fixture
def isolated_progress(tmp_path):
    """隔離 progress 檔案的 fixture"""
    import src.config as config
    import src.progress as progress_module

    original_path = config.SUITE_PROGRESS_PATH
    test_jsonl = tmp_path / 'test_progress.jsonl'
    test_jsonl.touch()

    # 更新兩個地方的路徑
    config.SUITE_PROGRESS_PATH = test_jsonl
    progress_module.log_path = test_jsonl

    yield test_jsonl

    # 還原
    config.SUITE_PROGRESS_PATH = original_path
    progress_module.log_path = original_path


@pytest.fixture
def square() -> VRep:
    return VRep(2, (Q(1, 1), Q(-1, 1), Q(-1, -1), Q(1, -1)))


@pytest.fixture
def cube() -> VRep:
    return VRep(3, tuple(Q(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)))


@pytest.fixture
def octahedron() -> VRep:
    return VRep(
        3, (Q(1, 0, 0), Q(-1, 0, 0), Q(0, 1, 0), Q(0, -1, 0), Q(0, 0, 1), Q(0, 0, -1))
    )


@pytest.fixture
def simplex3() -> VRep:
    return VRep(3, (Q(0, 0, 0), Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, 1)))
