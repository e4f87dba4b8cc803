import os
from fractions import Fraction
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Path
BASE_DIR = Path(__file__).resolve().parent.parent

RESULTS_DIR = BASE_DIR / 'results'
RESULTS_DIR.mkdir(parents=True, exist_ok=True)

SUITE_PROGRESS_PATH = RESULTS_DIR / 'suite_progress.jsonl'
if not SUITE_PROGRESS_PATH.exists():
    SUITE_PROGRESS_PATH.touch()

TEST_CASES_DIR = BASE_DIR / 'test_cases'

# Logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')


# Algorithm limits
CENTERPOINT_MAX_POINTS = int(os.getenv('CENTERPOINT_MAX_POINTS', '12'))
CENTERPOINT_MAX_DIM = int(os.getenv('CENTERPOINT_MAX_DIM', '3'))
SHELLING_MAX_TRIES = int(os.getenv('SHELLING_MAX_TRIES', '64'))


# Output settings
SVG_BOX_MARGIN = Fraction(os.getenv('SVG_BOX_MARGIN', '1/2'))
DECIMAL_DIGITS = int(os.getenv('DECIMAL_DIGITS', '12'))


# Suite / golden settings
DEFAULT_JOBS = int(os.getenv('DEFAULT_JOBS', '1'))
GOLDEN_TIMEOUT = int(os.getenv('GOLDEN_TIMEOUT', '60'))
SUITE_SEED = int(os.getenv('SUITE_SEED', '0'))
SUITE_MEMBERSHIP_SAMPLES = int(os.getenv('SUITE_MEMBERSHIP_SAMPLES', '1000'))
