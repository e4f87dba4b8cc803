import logging
import subprocess
import sys
import time
from pathlib import Path
from typing import Optional

from src import config

from .models import GoldenCase

logger = logging.getLogger(__name__)


class GoldenCaseManager:
    """Golden 測試案例管理器（單例模式）

    在初始化時一次性掃描 test_cases/<command>/<case>/ 並快取，之後提供 read-only 存取。
    """

    _instance = None

    def __init__(self, base_dir: Optional[Path] = None):
        self.base_dir = Path(base_dir or config.TEST_CASES_DIR)
        self._cases_cache: dict[str, list[GoldenCase]] = {}

        for command in self._scan_command_directories():
            self._cases_cache[command] = self._load_cases(command)

        total = sum(len(cases) for cases in self._cases_cache.values())
        logger.info(
            f'GoldenCaseManager 初始化完成，載入了 {len(self._cases_cache)} 個指令、{total} 個案例'
        )

    @classmethod
    def get_instance(cls) -> 'GoldenCaseManager':
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @property
    def commands(self) -> list[str]:
        return sorted(self._cases_cache)

    def get_cases(self, command: Optional[str] = None) -> list[GoldenCase]:
        if command is not None:
            return list(self._cases_cache.get(command, []))
        return [case for name in self.commands for case in self._cases_cache[name]]

    def _scan_command_directories(self) -> list[str]:
        if not self.base_dir.exists():
            logger.warning(f'test_cases 目錄不存在: {self.base_dir}')
            return []
        return sorted(item.name for item in self.base_dir.iterdir() if item.is_dir())

    def _load_cases(self, command: str) -> list[GoldenCase]:
        cases = []
        for folder in sorted((self.base_dir / command).iterdir()):
            if not folder.is_dir():
                continue
            case = GoldenCase(command=command, case=folder.name, base_dir=self.base_dir)
            if not case.args_path.exists() or not case.out_path.exists():
                logger.warning(f'測試案例資料夾缺少 args.txt 或 out.txt: {folder}')
                continue
            cases.append(case)
            logger.debug(f'載入測試案例: {case.identifier}')
        return cases


def bytes_to_readable_string(data: bytes) -> str:
    """
    將 bytes 轉換為可讀字串；無法以 UTF-8 解碼的 byte 轉成 \\xNN
    """
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError:
        return repr(data)[2:-1]


def compare_output(expected: str, actual: str) -> bool:
    """
    逐行比對，忽略行尾空白與檔案結尾空行
    """
    expected_lines = [line.rstrip() for line in expected.splitlines()]
    actual_lines = [line.rstrip() for line in actual.splitlines()]

    while expected_lines and not expected_lines[-1]:
        expected_lines.pop()

    while actual_lines and not actual_lines[-1]:
        actual_lines.pop()

    return expected_lines == actual_lines


def run_golden_case(case: GoldenCase, timeout: Optional[int] = None) -> dict:
    """
    以子行程執行 main.py 並比對 stdout

    Returns:
        測試結果 dict（passed, expected, actual, exit_code, execution_time, error）
    """
    timeout = timeout or case.timeout or config.GOLDEN_TIMEOUT
    result = {
        'case': case.identifier,
        'passed': False,
        'expected': '',
        'actual': '',
        'exit_code': None,
        'execution_time': 0.0,
        'error': '',
    }

    try:
        result['expected'] = bytes_to_readable_string(case.out_path.read_bytes())
        argv = [sys.executable, str(config.BASE_DIR / 'main.py'), *case.argv()]

        start_time = time.time()
        process = subprocess.run(
            argv,
            capture_output=True,
            timeout=timeout,
            cwd=config.BASE_DIR,
        )
        result['execution_time'] = round(time.time() - start_time, 3)
        result['exit_code'] = process.returncode
        result['actual'] = bytes_to_readable_string(process.stdout)

        if compare_output(result['expected'], result['actual']):
            result['passed'] = True
            logger.debug(f'測試通過: {case.identifier} ({result["execution_time"]:.3f}s)')
        else:
            stderr = bytes_to_readable_string(process.stderr).strip()
            result['error'] = stderr.splitlines()[-1] if stderr else '輸出不符'
            logger.debug(f'測試失敗: {case.identifier} (輸出不符)')

    except subprocess.TimeoutExpired:
        result['error'] = f'執行超時（超過 {timeout} 秒）'
        logger.debug(f'測試超時: {case.identifier}')

    except Exception as e:
        result['error'] = f'執行錯誤: {e}'
        logger.debug(f'測試錯誤: {case.identifier}: {e}')

    return result
