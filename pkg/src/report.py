import csv
import logging
import re
from datetime import datetime
from pathlib import Path
from typing import Optional

import pandas as pd

from .models import SuiteSummary
from .progress import read_progress_log

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['suite', 'seed', 'total', 'passed', 'failed', 'pending', 'pass_rate', 'elapsed']


def clean_excel_string(text: str) -> str:
    """
    清理字串中的非法字符,使其可以安全地寫入 Excel

    Args:
        text: 要清理的字串

    Returns:
        清理後的字串
    """
    if not text:
        return text

    # 移除 ANSI escape sequences (例如 \x1b[38;5;16m)
    text = re.sub(r'\x1b\[[0-9;]*m', '', text)

    # 移除其他控制字符 (保留換行符、tab、回車)
    text = re.sub(r'[\x00-\x08\x0b-\x0c\x0e-\x1f\x7f-\x9f]', '', text)

    return text


def aggregate_suites(suites: Optional[list[str]] = None) -> list[SuiteSummary]:
    """
    從 JSONL 進度記錄彙整每個 suite@seed 的結果

    Args:
        suites: 只保留這些 suite（None 表示全部）

    Returns:
        依 suite 名稱、seed 排序的 SuiteSummary 列表
    """
    progress_dict = read_progress_log()
    summaries = [
        SuiteSummary.from_progress(progress)
        for progress in progress_dict.values()
        if suites is None or progress.suite in suites
    ]
    summaries.sort(key=lambda s: (s.suite, s.seed))
    logger.info(f'彙整了 {len(summaries)} 個 suite 的結果')
    return summaries


def _row(summary: SuiteSummary) -> list:
    return [
        summary.suite,
        summary.seed,
        summary.total,
        summary.passed,
        summary.failed,
        summary.pending,
        f'{summary.pass_rate:.3f}',
        summary.elapsed,
    ]


def generate_csv_report(summaries: list[SuiteSummary], output_path: Path):
    output_path.parent.mkdir(parents=True, exist_ok=True)

    with open(output_path, 'w', newline='', encoding='utf-8-sig') as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for summary in summaries:
            writer.writerow(_row(summary))

    logger.info(f'CSV 報告已生成: {output_path}')


def generate_excel_report(summaries: list[SuiteSummary], output_path: Path):
    output_path.parent.mkdir(parents=True, exist_ok=True)

    with pd.ExcelWriter(output_path, engine='openpyxl') as writer:
        # 工作表 1: 總表
        df_totals = pd.DataFrame([_row(s) for s in summaries], columns=CSV_COLUMNS)
        df_totals.to_excel(writer, sheet_name='總表', index=False)

        # 工作表 2: 失敗的 instance
        failure_data = []
        for summary in summaries:
            for failure in summary.failures:
                case, _, detail = failure.partition(': ')
                failure_data.append(
                    {
                        'suite': summary.suite,
                        'seed': summary.seed,
                        'case': case,
                        'detail': clean_excel_string(detail),
                    }
                )

        df_failures = pd.DataFrame(failure_data, columns=['suite', 'seed', 'case', 'detail'])
        df_failures.to_excel(writer, sheet_name='失敗案例', index=False)

    logger.info(f'Excel 報告已生成: {output_path}')


def generate_summary_report(
    summaries: list[SuiteSummary],
    output_path: Path,
    start_time: datetime,
    end_time: datetime,
):
    output_path.parent.mkdir(parents=True, exist_ok=True)

    duration_str = str(end_time - start_time).split('.')[0]
    total = sum(s.total for s in summaries)
    passed = sum(s.passed for s in summaries)
    failed = sum(s.failed for s in summaries)

    with open(output_path, 'w', encoding='utf-8') as f:
        f.write('=' * 60 + '\n')
        f.write(' ' * 18 + 'Acceptance suite 摘要報告\n')
        f.write('=' * 60 + '\n')
        f.write(
            f'執行時間: {start_time.strftime("%Y-%m-%d %H:%M:%S")} - '
            f'{end_time.strftime("%H:%M:%S")}\n'
        )
        f.write(f'總耗時: {duration_str}\n\n')

        f.write('【統計資訊】\n')
        f.write(f'- suite 數: {len(summaries)}\n')
        f.write(f'- instance 數: {total}\n')
        f.write(f'- 通過: {passed}\n')
        f.write(f'- 失敗: {failed}\n\n')

        f.write('【各 suite】\n')
        for s in summaries:
            mark = '✓' if s.failed == 0 and s.pending == 0 else '✗'
            f.write(f'{mark} {s.suite}@{s.seed}: {s.passed}/{s.total} ({s.elapsed}s)\n')
            for failure in s.failures:
                f.write(f'    - {failure}\n')

        f.write('=' * 60 + '\n')
        f.write('失敗明細請查看 suite.xlsx\n')
        f.write('=' * 60 + '\n')

    logger.info(f'摘要報告已生成: {output_path}')


def generate_reports(
    output_dir: Path,
    start_time: datetime,
    end_time: datetime,
    suites: Optional[list[str]] = None,
) -> list[SuiteSummary]:
    """產生 suite.csv、suite.xlsx、summary.txt"""
    summaries = aggregate_suites(suites)
    generate_csv_report(summaries, output_dir / 'suite.csv')
    generate_excel_report(summaries, output_dir / 'suite.xlsx')
    generate_summary_report(summaries, output_dir / 'summary.txt', start_time, end_time)
    return summaries
