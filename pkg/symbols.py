"""Singularity symbols and their calculus.

J+[a,b], JA[a,b], JB[a,b] label tangencies (indices unordered); S[a,b,c] labels
triple points, a cyclic triple of indices each with or without a hat.
The basis of the symbol space is {J+[a,b]} + {JA[a,b]} + {S[k^,0,0]}.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from curvemap import EV, OD
from invariants import XYVector
from sparse_row import SparseRow

logger = logging.getLogger(__name__)

J_PLUS = 'J+'
J_A = 'JA'
J_B = 'JB'
S_TRIPLE = 'S'
FAMILIES = ('J+', 'JA', 'JB', 'S0', 'S1', 'S2', 'S3')

Entry = Tuple[int, bool]


class RelationFailure(AssertionError):
    """A symbol relation does not hold under F(1)."""


@dataclass(frozen=True, order=True)
class Symbol:
    variant: str
    indices: tuple

    @property
    def hats(self) -> int:
        if self.variant != S_TRIPLE:
            return 0
        return sum(1 for _, hat in self.indices if hat)

    @property
    def family(self) -> str:
        return f"S{self.hats}" if self.variant == S_TRIPLE else self.variant

    def __str__(self):
        return format_symbol(self)


class BasisCoords(SparseRow):
    """Coordinates over J+[a,b], JA[a,b] and S[k^,0,0]."""


def jplus(a: int, b: int) -> Symbol:
    return Symbol(J_PLUS, tuple(sorted((a, b))))


def ja(a: int, b: int) -> Symbol:
    return Symbol(J_A, tuple(sorted((a, b))))


def jb(a: int, b: int) -> Symbol:
    return Symbol(J_B, tuple(sorted((a, b))))


def _entry_key(entry: Entry):
    return (not entry[1], entry[0])


def s_symbol(entries: Iterable[Entry]) -> Symbol:
    """S symbol in its canonical rotation (lexicographically least, hats first)."""
    e = tuple((int(i), bool(h)) for i, h in entries)
    if len(e) != 3:
        raise ValueError(f"S symbol needs three entries, got {len(e)}")
    rotations = [e[r:] + e[:r] for r in range(3)]
    best = min(rotations, key=lambda rot: tuple(_entry_key(x) for x in rot))
    return Symbol(S_TRIPLE, best)


def basis_s(k: int) -> Symbol:
    return s_symbol(((k, True), (0, False), (0, False)))


SYMBOL_J_RE = re.compile(r'^\s*(J\+|JA|JB)\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*$')
SYMBOL_S_RE = re.compile(r'^\s*S\s*\[\s*(-?\d+\^?)\s*,\s*(-?\d+\^?)\s*,\s*(-?\d+\^?)\s*\]\s*$')


def parse_symbol(text: str) -> Symbol:
    m = SYMBOL_J_RE.match(text)
    if m:
        maker = {J_PLUS: jplus, J_A: ja, J_B: jb}[m.group(1)]
        return maker(int(m.group(2)), int(m.group(3)))
    m = SYMBOL_S_RE.match(text)
    if m:
        return s_symbol((int(tok.rstrip('^')), tok.endswith('^')) for tok in m.groups())
    raise ValueError(f"not a symbol: {text!r}")


def format_symbol(s: Symbol) -> str:
    if s.variant == S_TRIPLE:
        body = ','.join(f"{i}^" if hat else f"{i}" for i, hat in s.indices)
        return f"S[{body}]"
    a, b = s.indices
    return f"{s.variant}[{a},{b}]"


def _f1_jplus(a: int, b: int) -> XYVector:
    return XYVector.X(a, b) + XYVector.X(b, a) + XYVector.Y(a + b, 2)


def _f1_ja(a: int, b: int) -> XYVector:
    return XYVector.X(a, b + 1) + XYVector.X(b, a + 1) + XYVector.Y(a + b - 1) + XYVector.Y(a + b + 3)


def _f1_jb(a: int, b: int) -> XYVector:
    return XYVector.X(a - 1, b) + XYVector.X(b - 1, a) + XYVector.Y(a + b - 3) + XYVector.Y(a + b + 1)


def _xsum(plus, minus) -> XYVector:
    v = XYVector()
    for a, b in plus:
        v += XYVector.X(a, b)
    for a, b in minus:
        v -= XYVector.X(a, b)
    return v


def _f1_s0(a, b, c):
    k = a + b + c
    v = _xsum([(a, b + c), (b, c + a), (c, a + b)],
              [(a, b + c + 2), (b, c + a + 2), (c, a + b + 2)])
    return v - XYVector.Y(k + 4) + XYVector.Y(k - 2)


def _f1_s1(a, b, c):
    # S[a^,b,c]
    k = a + b + c
    v = _xsum([(b + c + 1, a), (b, c + a - 1), (c, a + b - 1)],
              [(c, a + b + 1), (b + c - 1, a), (b, c + a + 1)])
    return v - XYVector.Y(k + 1) + XYVector.Y(k - 1)


def _f1_s2(a, b, c):
    # S[a^,b^,c]
    k = a + b + c
    v = _xsum([(b + c + 1, a), (c, a + b - 1), (c + a + 1, b)],
              [(c, a + b + 1), (c + a - 1, b), (b + c - 1, a)])
    return v - XYVector.Y(k - 1) + XYVector.Y(k + 1)


def _f1_s3(a, b, c):
    k = a + b + c
    v = _xsum([(a + b, c), (b + c, a), (c + a, b)],
              [(b + c - 2, a), (c + a - 2, b), (a + b - 2, c)])
    return v - XYVector.Y(k - 4) + XYVector.Y(k + 2)


def _rotate_to(entries: Tuple[Entry, ...], pattern: Tuple[bool, bool, bool]) -> Tuple[int, int, int]:
    for r in range(3):
        rot = entries[r:] + entries[:r]
        if tuple(h for _, h in rot) == pattern:
            return tuple(i for i, _ in rot)
    raise ValueError(f"no rotation of {entries} matches {pattern}")


def f1_of_symbol(s: Symbol) -> XYVector:
    """F(1) of a symbol: the jump of F across a singular curve of that type."""
    if s.variant == J_PLUS:
        return _f1_jplus(*s.indices)
    if s.variant == J_A:
        return _f1_ja(*s.indices)
    if s.variant == J_B:
        return _f1_jb(*s.indices)
    h = s.hats
    if h == 0:
        return _f1_s0(*(i for i, _ in s.indices))
    if h == 3:
        return _f1_s3(*(i for i, _ in s.indices))
    if h == 1:
        return _f1_s1(*_rotate_to(s.indices, (True, False, False)))
    return _f1_s2(*_rotate_to(s.indices, (True, True, False)))


def f1_of_coords(coords: BasisCoords) -> XYVector:
    v = XYVector()
    for s, coef in coords.items():
        v.iadd_coef(coef, f1_of_symbol(s))
    return v


def symbol_class(s: Symbol) -> str:
    if s.variant == J_PLUS:
        return EV if sum(s.indices) % 2 == 0 else OD
    if s.variant in (J_A, J_B):
        return EV if sum(s.indices) % 2 == 1 else OD
    k = sum(i for i, _ in s.indices)
    if s.hats in (0, 3):
        return EV if k % 2 == 0 else OD
    return EV if k % 2 == 1 else OD


def mirror_symbol(s: Symbol) -> Symbol:
    """Mirror image: indices negated, JA and JB exchanged, every hat flipped."""
    if s.variant == S_TRIPLE:
        return s_symbol((-i, not hat) for i, hat in s.indices)
    a, b = s.indices
    maker = {J_PLUS: jplus, J_A: jb, J_B: ja}[s.variant]
    return maker(-a, -b)


def _coords(pairs) -> BasisCoords:
    return BasisCoords(pairs)


def toggle(entries: Tuple[Entry, ...], i: int) -> Tuple[Tuple[Entry, ...], BasisCoords]:
    """Flip the hat of entry i using the triple-point relation that applies there.

    Returns (new entries, correction) with S(entries) = S(new entries) + correction.
    """
    pred, (b, hat), succ = entries[(i - 1) % 3], entries[i], entries[(i + 1) % 3]
    a, c = pred[0], succ[0]
    if pred[1] != succ[1]:
        new = (b, not hat)
        delta = _coords([(jplus(c + a - 1, b), 1), (jplus(c + a + 1, b), -1)])
    else:
        lo, hi = (c + a - 2, c + a) if pred[1] else (c + a - 1, c + a + 1)
        base = b if not hat else b - 1
        new = (b + 1, True) if not hat else (b - 1, False)
        delta = _coords([(ja(lo, base), 1), (ja(hi, base), -1)])
    out = list(entries)
    out[i] = new
    return tuple(out), delta * (1 if not hat else -1)


def reduce_to_basis(s: Symbol) -> BasisCoords:
    """Coordinates of a symbol over J+[a,b], JA[a,b], S[k^,0,0]."""
    if s.variant == J_PLUS or s.variant == J_A:
        return _coords([(s, 1)])
    if s.variant == J_B:
        a, b = s.indices
        return _coords([(ja(a - 1, b - 1), 1)])

    coords = BasisCoords()
    entries = s.indices

    def step(i):
        nonlocal entries
        entries, correction = toggle(entries, i)
        coords.iadd_coef(1, correction)

    def transfer():
        # move the index of entries[1] into the hatted entries[0]
        while entries[1][0] > 0:
            for i in (1, 0, 1, 0):
                step(i)
        while entries[1][0] < 0:
            for i in (0, 1, 0, 1):
                step(i)

    if s.hats in (0, 3):
        step(1)
    if sum(1 for _, h in entries if h) == 2:
        r = next(r for r in range(3) if not entries[(r + 2) % 3][1])
        entries = entries[r:] + entries[:r]
        step(1)
    r = next(r for r in range(3) if entries[r][1])
    entries = entries[r:] + entries[:r]
    transfer()
    if entries[2][0] != 0:
        step(2)
        step(0)
        entries = (entries[2], entries[0], entries[1])
        transfer()
    coords.iadd_coef(1, [(s_symbol(entries), 1)])
    return coords


def j_parity_class(s: Symbol) -> Optional[str]:
    """Parity class of a J symbol, e.g. 'JA_eo'; JB is read through JA[a-1,b-1]."""
    if s.variant == S_TRIPLE:
        return None
    variant, (a, b) = s.variant, s.indices
    if variant == J_B:
        variant, a, b = J_A, a - 1, b - 1
    parities = ''.join(sorted('e' if x % 2 == 0 else 'o' for x in (a, b)))
    return f"{variant}_{parities}"


# eta1..eta6 jumps on the six J parity classes
ETA_JUMPS = {
    'J+_eo': (0, 0, 1, 0, 1, 0),
    'JA_ee': (-8, 0, 2, 0, 0, 0),
    'JA_oo': (-8, 0, 0, 0, 2, 0),
    'J+_ee': (0, 0, 0, 2, 0, 0),
    'J+_oo': (0, 0, 0, 0, 0, 2),
    'JA_eo': (0, -8, 0, 1, 0, 1),
}


@dataclass
class RelationReport:
    checked: int = 0
    failures: List[Tuple[str, tuple, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _relation_instances(a: int, b: int, c: int):
    S = s_symbol
    yield ('relation 1',
           [(S(((a, True), (b, False), (c, False))), 1), (S(((a, True), (b, True), (c, False))), -1)],
           [(jplus(c + a - 1, b), 1), (jplus(c + a + 1, b), -1)])
    yield ('relation 2',
           [(S(((a, False), (b, False), (c, True))), 1), (S(((a, False), (b, True), (c, True))), -1)],
           [(jplus(c + a - 1, b), 1), (jplus(c + a + 1, b), -1)])
    yield ('relation 3',
           [(S(((a, True), (b, False), (c, True))), 1), (S(((a, True), (b + 1, True), (c, True))), -1)],
           [(ja(c + a - 2, b), 1), (ja(c + a, b), -1)])
    yield ('relation 4',
           [(S(((a, False), (b, False), (c, False))), 1), (S(((a, False), (b + 1, True), (c, False))), -1)],
           [(ja(c + a - 1, b), 1), (ja(c + a + 1, b), -1)])


def verify_relations(rng: int, raise_on_failure: bool = True) -> RelationReport:
    """Check the triple-point relations, J+ symmetry and the JB/JA shift for |indices| <= rng."""
    if rng < 1:
        raise ValueError("range must be >= 1")
    report = RelationReport()
    span = range(-rng, rng + 1)
    for a in span:
        for b in span:
            report.checked += 2
            if _f1_jplus(a, b) != _f1_jplus(b, a):
                report.failures.append(('J+ symmetry', (a, b), str(_f1_jplus(a, b) - _f1_jplus(b, a))))
            if f1_of_symbol(jb(a + 1, b)) != f1_of_symbol(ja(a, b - 1)):
                report.failures.append(('JB shift', (a, b), str(f1_of_symbol(jb(a + 1, b)))))
            for c in span:
                for name, lhs, rhs in _relation_instances(a, b, c):
                    report.checked += 1
                    left = f1_of_coords(_coords(lhs))
                    right = f1_of_coords(_coords(rhs))
                    if left != right:
                        report.failures.append((name, (a, b, c), f"{left} != {right}"))
                    classes = {symbol_class(sym) for sym, _ in lhs + rhs}
                    if len(classes) != 1:
                        report.failures.append((name, (a, b, c), f"mixed classes {sorted(classes)}"))
    logger.info(f"relations: {report.checked} checked, {len(report.failures)} failures")
    if raise_on_failure and report.failures:
        name, idx, detail = report.failures[0]
        raise RelationFailure(f"{name} fails at {idx}: {detail}")
    return report
