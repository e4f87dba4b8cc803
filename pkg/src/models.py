import shlex
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field

from .exact_core import format_rational, format_vector


def render_value(value: Any) -> str:
    """報告值的文字表示：bool 為 true/false，有理數為 p/q，向量以逗號分隔"""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        if all(isinstance(v, Fraction) for v in value):
            return format_vector(value)
        return ' '.join(render_value(v) for v in value)
    if isinstance(value, (set, frozenset)):
        return ' '.join(str(v) for v in sorted(value))
    return str(value)


class CheckReport(BaseModel):
    """檢查結果，輸出成 key=value 行，最後一行是 status"""

    name: str
    passed: bool = True
    details: dict[str, str] = Field(default_factory=dict)

    @property
    def status(self) -> str:
        return 'pass' if self.passed else 'fail'

    def add(self, key: str, value: Any) -> 'CheckReport':
        self.details[key] = render_value(value)
        return self

    def require(self, key: str, ok: bool) -> 'CheckReport':
        """記錄一個子條件；任何一個失敗整份報告就失敗"""
        self.add(key, ok)
        if not ok:
            self.passed = False
        return self

    def lines(self) -> list[str]:
        return [f'{key}={value}' for key, value in self.details.items()] + [
            f'status={self.status}'
        ]


class Command(BaseModel):
    """一次 CLI 呼叫：子指令、旗標、輸入檔、輸出檔、亂數種子"""

    name: str
    flags: dict[str, str] = Field(default_factory=dict)
    inputs: list[Path] = Field(default_factory=list)
    output: Optional[Path] = None
    seed: Optional[int] = None

    def argv(self) -> list[str]:
        args = [self.name, *(str(p) for p in self.inputs)]
        for flag, value in self.flags.items():
            args.append(flag)
            if value:
                args.append(value)
        if self.output is not None:
            args.extend(['--output', str(self.output)])
        if self.seed is not None:
            args.extend(['--seed', str(self.seed)])
        return args


class GoldenCase(BaseModel):
    """Golden 測試案例：test_cases/<command>/<case>/{args.txt, in.txt, out.txt}"""

    command: str
    case: str
    base_dir: Path = Path('test_cases')
    args_file: str = 'args.txt'
    in_file: str = 'in.txt'
    out_file: str = 'out.txt'
    timeout: int = 60

    @property
    def test_dir(self) -> Path:
        return self.base_dir / self.command / self.case

    @property
    def args_path(self) -> Path:
        return self.test_dir / self.args_file

    @property
    def in_path(self) -> Path:
        return self.test_dir / self.in_file

    @property
    def out_path(self) -> Path:
        return self.test_dir / self.out_file

    @property
    def identifier(self) -> str:
        return f'{self.command}/{self.case}'

    def argv(self) -> list[str]:
        """args.txt 裡的 {in} 會換成本案例 in.txt 的路徑"""
        text = self.args_path.read_text(encoding='utf-8').strip()
        return [token.replace('{in}', str(self.in_path)) for token in shlex.split(text)]


class CaseOutcome(BaseModel):
    """單一隨機 instance 的結果"""

    passed: Optional[bool] = None  # None 表示尚未執行
    detail: str = ''
    elapsed: float = 0.0


class SuiteProgress(BaseModel):
    """
    Progress record for one suite run (suite name + seed)
    """

    suite: str = Field(alias='name')
    seed: int = 0
    cases: dict[str, CaseOutcome] = Field(default_factory=dict)
    completed: bool = False
    checked_at: Optional[datetime] = None

    model_config = {'populate_by_name': True}

    @property
    def key(self) -> str:
        return f'{self.suite}@{self.seed}'

    def is_case_done(self, case_key: str) -> bool:
        outcome = self.cases.get(case_key)
        if outcome is None:
            return False
        return outcome.passed is not None

    def get_pending_cases(self) -> list[str]:
        return [key for key, outcome in self.cases.items() if outcome.passed is None]

    def update_case(self, case_key: str, passed: bool, detail: str = '', elapsed: float = 0.0):
        self.cases[case_key] = CaseOutcome(passed=passed, detail=detail, elapsed=elapsed)
        self.checked_at = datetime.now()

        # Check if all cases are done
        if all(o.passed is not None for o in self.cases.values()):
            self.completed = True

    @property
    def passed_count(self) -> int:
        return sum(1 for o in self.cases.values() if o.passed)

    @property
    def failed_count(self) -> int:
        return sum(1 for o in self.cases.values() if o.passed is False)


class SuiteSummary(BaseModel):
    """報表上的一列"""

    suite: str
    seed: int
    total: int = 0
    passed: int = 0
    failed: int = 0
    pending: int = 0
    elapsed: float = 0.0
    failures: list[str] = Field(default_factory=list)

    @property
    def pass_rate(self) -> float:
        done = self.passed + self.failed
        return self.passed / done if done else 0.0

    @classmethod
    def from_progress(cls, progress: SuiteProgress) -> 'SuiteSummary':
        failures = [
            f'{key}: {o.detail}' if o.detail else key
            for key, o in progress.cases.items()
            if o.passed is False
        ]
        return cls(
            suite=progress.suite,
            seed=progress.seed,
            total=len(progress.cases),
            passed=progress.passed_count,
            failed=progress.failed_count,
            pending=len(progress.get_pending_cases()),
            elapsed=round(sum(o.elapsed for o in progress.cases.values()), 3),
            failures=failures,
        )
