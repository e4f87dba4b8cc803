import json
import logging
import threading
from typing import Optional

from src import config

from .models import CaseOutcome, SuiteProgress

logger = logging.getLogger(__name__)

_file_lock = threading.Lock()

log_path = config.SUITE_PROGRESS_PATH


def _load(line_num: int, line: str) -> Optional[SuiteProgress]:
    line = line.strip()
    if not line:
        return None
    try:
        return SuiteProgress.model_validate(json.loads(line))
    except (json.JSONDecodeError, Exception) as e:
        logger.debug(f'Failed to parse JSONL line {line_num}: {e}')
        return None


def _read_unlocked() -> dict[str, SuiteProgress]:
    progress_dict = {}
    with open(log_path, 'r', encoding='utf-8') as f:
        for line_num, line in enumerate(f, 1):
            progress = _load(line_num, line)
            if progress is not None:
                # 同一個 key 後寫的覆蓋先寫的
                progress_dict[progress.key] = progress
    return progress_dict


def read_progress_log() -> dict[str, SuiteProgress]:
    """
    Read suite progress from JSONL file

    Returns:
        Dictionary mapping "suite@seed" -> SuiteProgress
    """
    progress_dict = {}

    with _file_lock:
        try:
            progress_dict = _read_unlocked()
            logger.info(f'載入 {len(progress_dict)} 筆 suite 進度記錄')
        except FileNotFoundError:
            logger.debug(f'Progress log not found: {log_path}')
        except Exception as e:
            logger.error(f'Failed to read progress log: {e}')

    return progress_dict


def write_progress_entry(progress: SuiteProgress):
    """Append a new progress entry to JSONL file"""
    with _file_lock:
        try:
            with open(log_path, 'a', encoding='utf-8') as f:
                f.write(progress.model_dump_json(by_alias=True) + '\n')

            logger.debug(f'Added progress entry: {progress.key}')
        except Exception as e:
            logger.error(f'Failed to write progress entry: {e}')


def update_progress_entry(
    suite: str,
    seed: int,
    case_key: str,
    passed: bool,
    detail: str = '',
    elapsed: float = 0.0,
):
    """
    更新單一 instance 的結果並重寫整個 JSONL

    Args:
        suite: suite 名稱 (e.g. "euler", "delaunay")
        seed: suite 的亂數種子
        case_key: instance key (e.g. "d3-017")
        passed: 是否通過
        detail: 失敗原因
        elapsed: 執行秒數
    """
    key = f'{suite}@{seed}'
    with _file_lock:
        try:
            progress_dict = _read_unlocked()

            if key not in progress_dict:
                logger.debug(f'Suite record not found: {key}')
                return

            progress = progress_dict[key]
            progress.update_case(case_key, passed, detail, round(elapsed, 3))

            with open(log_path, 'w', encoding='utf-8') as f:
                for prog in progress_dict.values():
                    f.write(prog.model_dump_json(by_alias=True) + '\n')

            logger.debug(
                f'Updated progress: {key} {case_key}={passed} (completed={progress.completed})'
            )
        except Exception as e:
            logger.error(f'Failed to update progress entry: {e}')


def initialize_suite_progress(suite: str, seed: int, case_keys: list[str]) -> SuiteProgress:
    """初始化一個 suite 的進度記錄（所有 instance 設為未執行）"""
    progress = SuiteProgress(suite=suite, seed=seed)

    for key in case_keys:
        progress.cases[key] = CaseOutcome()

    write_progress_entry(progress)

    logger.debug(f'Initialized progress: {progress.key} ({len(case_keys)} cases)')
    return progress


def get_suite_status(
    progress_dict: dict[str, SuiteProgress],
    suite: str,
    seed: int,
) -> tuple[bool, Optional[SuiteProgress]]:
    """獲取 suite 的完成狀態"""
    progress = progress_dict.get(f'{suite}@{seed}')
    if progress is None:
        return False, None
    return progress.completed, progress


def reset_progress():
    """清空 JSONL（suite --fresh）"""
    with _file_lock:
        log_path.write_text('', encoding='utf-8')
    logger.info(f'已清空進度檔: {log_path}')
