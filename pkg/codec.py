"""Gauss-code text format and JSON report serialization.

`.gc` files hold one signed Gauss code:

    # optional comment lines
    gc: 1+ 2- 1+ 2-

Each token is <label><sign>; both occurrences of a label carry the same sign.
`gc:` with no tokens is the embedded circle.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r'^([1-9][0-9]*)([+-])$')


class MalformedCode(ValueError):
    """Raised for input that is not a well-formed signed Gauss code."""

    def __init__(self, reason: str, line: Optional[int] = None, column: Optional[int] = None):
        self.reason = reason
        self.line = line
        self.column = column
        where = ''
        if line is not None:
            where = f"line {line}, column {column}: " if column is not None else f"line {line}: "
        super().__init__(f"{where}{reason}")


@dataclass(frozen=True)
class SignedGaussCode:
    word: Tuple[int, ...]
    signs: Dict[int, int] = field(hash=False)

    @property
    def n_crossings(self) -> int:
        return len(self.word) // 2

    def tokens(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((label, self.signs[label]) for label in self.word)

    def __hash__(self):
        return hash(self.tokens())

    def __str__(self):
        return format_gauss(self)


def validate_code(code: SignedGaussCode) -> SignedGaussCode:
    """Check occurrence counts and sign coverage; returns the code unchanged."""
    counts: Dict[int, int] = {}
    for label in code.word:
        if not isinstance(label, int) or label <= 0:
            raise MalformedCode(f"bad label {label!r}")
        counts[label] = counts.get(label, 0) + 1
    for label, count in counts.items():
        if count != 2:
            raise MalformedCode(f"label {label} occurs {count} time(s)")
    if set(code.signs) != set(counts):
        raise MalformedCode("signs must be given for exactly the labels present")
    for label, sign in code.signs.items():
        if sign not in (1, -1):
            raise MalformedCode(f"label {label} has sign {sign!r}")
    return code


def parse_gauss(text: str) -> SignedGaussCode:
    """Parse `.gc` text; raises MalformedCode with line/column on any violation."""
    gc_line = None
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if not stripped.startswith('gc:'):
            raise MalformedCode("expected 'gc:' line", lineno, raw.find(stripped) + 1)
        if gc_line is not None:
            raise MalformedCode("more than one 'gc:' line", lineno, 1)
        gc_line = (lineno, raw)
    if gc_line is None:
        raise MalformedCode("missing 'gc:' line", len(lines) + 1 if lines else 1, 1)

    lineno, raw = gc_line
    start = raw.index('gc:') + 3
    word = []
    signs: Dict[int, int] = {}
    first_seen: Dict[int, int] = {}
    for match in re.finditer(r'\S+', raw[start:]):
        column = start + match.start() + 1
        tok = TOKEN_RE.match(match.group())
        if tok is None:
            raise MalformedCode(f"bad token {match.group()!r}", lineno, column)
        label = int(tok.group(1))
        sign = 1 if tok.group(2) == '+' else -1
        if label in signs:
            if word.count(label) >= 2:
                raise MalformedCode(f"label {label} occurs more than twice", lineno, column)
            if signs[label] != sign:
                raise MalformedCode(f"sign mismatch for label {label}", lineno, column)
        else:
            signs[label] = sign
            first_seen[label] = column
        word.append(label)

    for label, column in first_seen.items():
        if word.count(label) != 2:
            raise MalformedCode(f"label {label} occurs once", lineno, column)
    logger.debug(f"parsed code with {len(word) // 2} crossings")
    return SignedGaussCode(tuple(word), signs)


def format_gauss(code: SignedGaussCode) -> str:
    if not code.word:
        return 'gc:'
    body = ' '.join(f"{label}{'+' if code.signs[label] > 0 else '-'}" for label in code.word)
    return f"gc: {body}"


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, 'item'):
        # numpy scalars coming out of DataFrame rows
        return _jsonable(value.item())
    return value


def _report_dict(report) -> dict:
    data = report.to_dict() if hasattr(report, 'to_dict') else dict(report)
    data = _jsonable(data)
    for key in ('X', 'Y'):
        if key in data:
            data[key] = sorted(data[key], key=lambda row: tuple(row[:-1]))
    return data


def emit_json(report) -> str:
    """Stable-key JSON text for an invariant report (object with to_dict() or mapping)."""
    return json.dumps(_report_dict(report), sort_keys=True, indent=2) + '\n'


def emit_json_line(report) -> str:
    return json.dumps(_report_dict(report), sort_keys=True, separators=(',', ':'))


def parse_report(text: str) -> dict:
    return json.loads(text)
