"""Environment-driven defaults (.env is loaded when present)."""

import os
from fractions import Fraction

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _rational(name: str, default: str = '0') -> Fraction:
    raw = os.getenv(name, default).strip() or default
    try:
        return Fraction(raw)
    except ValueError:
        raise ValueError(f"{name} must be a rational such as 0, 2 or 1/2, got {raw!r}")


def _int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


K1 = _rational('CURVES_K1')
K2 = _rational('CURVES_K2')
MAX_CROSSINGS = _int('CURVES_MAX_CROSSINGS', 4)
ORDER2_CAP = _int('CURVES_ORDER2_CAP', 20000)
LOG_FILE = os.getenv('CURVES_LOG_FILE', 'curve_invariants.log')
