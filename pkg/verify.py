"""Verification suites: corpus-wide checks of every identity the invariant obeys.

Each suite sweeps a corpus (or an index range) and records failures as data;
nothing here raises on a failed identity.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import pandas as pd

from curvemap import EV, OD, build_map, gamma_code, regular_homotopy_class
from enumeration import corpus_upto, enumerate_sites
from indices import InconsistentTable, figure1b_table, smooth
from invariants import (ETA, PHI_MINUS, PHI_PLUS, PHI_ST, PSI, XYVector, F, apply, eta_vector, f_J,
                        f_S, f_SJ, fin_equalities, h_form, mirror_vector, phi_ab, psi_vector,
                        supports_match_class)
from singular import (InvalidSite, NEG, POS, TRIPLE, classify, f1, f2, make_singular,
                      make_singular_pair, resolve, sites_independent)
from settings import ORDER2_CAP
from symbols import (ETA_JUMPS, FAMILIES, J_A, J_B, J_PLUS, S_TRIPLE, basis_s, f1_of_coords,
                     f1_of_symbol, j_parity_class, ja, jb, jplus, mirror_symbol, reduce_to_basis,
                     s_symbol, symbol_class, verify_relations)

logger = logging.getLogger(__name__)

SUITES = ('MAIN', 'IMAGE', 'FIN', 'SYMBOLS', 'ORDER2', 'SMOOTHING', 'FIG1B', 'RELATIONS',
          'GAMMA', 'VANISH', 'JUMPS')
COVERAGE_CROSSINGS = 4
RANDOM_SYMBOLS = 500


@dataclass
class SuiteReport:
    name: str
    instances: int = 0
    failures: List[Tuple[str, str, str]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, instance, expected, got) -> bool:
        self.instances += 1
        if expected != got:
            self.failures.append((str(instance), str(expected), str(got)))
            return False
        return True

    def fail(self, instance, expected, got):
        self.failures.append((str(instance), str(expected), str(got)))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.failures, columns=['instance', 'expected', 'got'])

    def summary(self) -> str:
        status = 'ok' if self.ok else f"{len(self.failures)} failures"
        return f"{self.name}: {self.instances} checked, {status}"


def _main(n: int) -> SuiteReport:
    report = SuiteReport('MAIN')
    for code, cmap in corpus_upto(n, dedup=False):
        report.check(code, (0, 0, 0, 0), psi_vector(F(cmap))[2:])
    return report


def _image(n: int) -> SuiteReport:
    report = SuiteReport('IMAGE')
    for code, cmap in corpus_upto(n, dedup=False):
        v = F(cmap)
        cls = regular_homotopy_class(cmap)
        psi = psi_vector(v)
        report.check(code, (2, 0) if cls == OD else (0, 2), psi[:2])
        report.check(f"{code} support", True, supports_match_class(v, cls))
    return report


def _terms_vanish(fn, v: XYVector) -> bool:
    return all(apply(fn, XYVector([(k, c)])) == 0 for k, c in v.items())


def _fin(n: int) -> SuiteReport:
    report = SuiteReport('FIN')
    trivial = {1: 0, 2: 0}
    for code, cmap in corpus_upto(n, dedup=False):
        v = F(cmap)
        first, second = fin_equalities(cmap, value=v)
        report.check(f"{code} (1)", 0, first)
        report.check(f"{code} (2)", 0, second)
        cls = regular_homotopy_class(cmap)
        if cls == EV:
            trivial[1] += 1
            report.check(f"{code} (1) term-wise", True, _terms_vanish(PSI[4], v))
        else:
            trivial[2] += 1
            report.check(f"{code} (2) term-wise", True, _terms_vanish(PSI[5], v))
    report.notes.append(f"equality (1) is 0=0 term-wise on {trivial[1]} ev curves")
    report.notes.append(f"equality (2) is 0=0 term-wise on {trivial[2]} od curves")
    return report


def _single_sites(n: int):
    for code, cmap in corpus_upto(n, dedup=True):
        for site in enumerate_sites(cmap):
            yield code, cmap, site


def _symbols(n: int) -> SuiteReport:
    report = SuiteReport('SYMBOLS')
    seen: Dict[str, int] = {}
    for code, cmap, site in _single_sites(n):
        instance = f"{code} {site}"
        try:
            s = make_singular(cmap, site)
            symbol = classify(s)
            report.check(instance, f1_of_symbol(symbol), f1(s))
            cls = symbol_class(symbol)
            for choice in (POS, NEG):
                report.check(f"{instance} {choice} class", cls, regular_homotopy_class(resolve(s, choice)))
        except InvalidSite as exc:
            report.fail(instance, 'valid site', exc)
            continue
        seen[symbol.family] = seen.get(symbol.family, 0) + 1
    report.notes.append('families: ' + ', '.join(f"{fam}={seen.get(fam, 0)}" for fam in FAMILIES))
    if n >= COVERAGE_CROSSINGS:
        report.check('family coverage', [], [fam for fam in FAMILIES if fam not in seen])
    return report


def _order2(n: int, cap: int = None) -> SuiteReport:
    report = SuiteReport('ORDER2')
    cap = ORDER2_CAP if cap is None else cap
    mixed = 0
    for code, cmap in corpus_upto(n, dedup=False):
        sites = enumerate_sites(cmap)
        for i, first in enumerate(sites):
            for second in sites[i + 1:]:
                if report.instances >= cap:
                    report.notes.append(f"stopped at the cap of {cap} pairs")
                    return report
                if not sites_independent(cmap, first, second):
                    continue
                instance = f"{code} {first} + {second}"
                try:
                    report.check(instance, XYVector(), f2(make_singular_pair(cmap, first, second)))
                except InvalidSite as exc:
                    report.fail(instance, 'valid pair', exc)
                    continue
                if (first.kind == TRIPLE) != (second.kind == TRIPLE):
                    mixed += 1
    report.notes.append(f"{mixed} tangency+triple pairs")
    return report


SMOOTHING_WEIGHTS: Dict[str, Callable[[int], int]] = {
    'one': lambda d: 1,
    'd': lambda d: d,
    'd^2': lambda d: d * d,
    'odd': lambda d: 1 if d % 2 else 0,
    'even': lambda d: 0 if d % 2 else 1,
}


def _smoothing(n: int) -> SuiteReport:
    report = SuiteReport('SMOOTHING')
    for code, cmap in corpus_upto(n, dedup=False):
        arrangement = smooth(cmap)
        report.check(f"{code} chi", 2, sum(reg.chi for reg in arrangement.regions))
        for name, h in SMOOTHING_WEIGHTS.items():
            lhs, rhs = h_form(cmap, h)
            report.check(f"{code} h={name}", lhs, rhs)
    return report


def _fig1b(n: int) -> SuiteReport:
    report = SuiteReport('FIG1B')
    try:
        table = figure1b_table(corpus_upto(n, dedup=False).maps)
    except InconsistentTable as exc:
        report.fail('corner table', 'single-valued table', exc)
        return report
    report.instances = len(table)
    off_pattern = [ab for ab, labels in table.items()
                   if labels != (sum(ab), sum(ab) + 2, sum(ab), sum(ab) - 2)]
    report.notes.append(f"{len(table)} crossing types; {len(off_pattern)} off the (k, k+2, k, k-2) pattern")
    return report


def _random_symbol(rng: random.Random, bound: int):
    kind = rng.choice((J_PLUS, J_A, J_B, S_TRIPLE))

    def pick():
        return rng.randint(-bound, bound)

    if kind == S_TRIPLE:
        return s_symbol((pick(), rng.random() < 0.5) for _ in range(3))
    return {J_PLUS: jplus, J_A: ja, J_B: jb}[kind](pick(), pick())


def _relations(n: int) -> SuiteReport:
    report = SuiteReport('RELATIONS')
    relations = verify_relations(n, raise_on_failure=False)
    report.instances += relations.checked
    for name, idx, detail in relations.failures:
        report.fail(f"{name} at {idx}", 'identity', detail)

    rng = random.Random(n)
    for _ in range(RANDOM_SYMBOLS):
        s = _random_symbol(rng, n)
        v = f1_of_symbol(s)
        coords = reduce_to_basis(s)
        report.check(f"reduce {s}", v, f1_of_coords(coords))
        report.check(f"basis keys of {s}", True, all(
            k.variant in (J_PLUS, J_A) or k == basis_s(k.indices[0][0]) for k in coords))
        report.check(f"mirror {s}", mirror_vector(v), f1_of_symbol(mirror_symbol(s)))
        report.check(f"psi of {s}", (0,) * 6, psi_vector(v))
        even = symbol_class(s) == EV
        report.check(f"Y parity of {s}", True, all((d % 2 == 0) == even for d in v.y))
    for k in range(-n, n + 1):
        report.check(f"projection S[{k}^,0,0]", {basis_s(k): 1}, dict(reduce_to_basis(basis_s(k))))
    return report


def _gamma(n: int) -> SuiteReport:
    report = SuiteReport('GAMMA')
    for k in range(n + 1):
        expected = (XYVector.X(0, k - 1, k) + XYVector.Y(k - 3, k)
                    + XYVector.Y(k - 1) + XYVector.Y(k + 1))
        report.check(f"gamma {k}", expected, F(build_map(gamma_code(k))))
    return report


def _vanish(n: int) -> SuiteReport:
    report = SuiteReport('VANISH')
    for a in range(-n, n + 1):
        for b in range(-n, n + 1):
            z = XYVector.X(a, b) - phi_ab(a, b)
            report.check(f"Z[{a},{b}]", (0,) * 6, psi_vector(z))
    return report


def _jumps(n: int) -> SuiteReport:
    report = SuiteReport('JUMPS')
    for code, cmap, site in _single_sites(n):
        try:
            s = make_singular(cmap, site)
            v = f1(s)
        except InvalidSite as exc:
            report.fail(f"{code} {site}", 'valid site', exc)
            continue
        symbol = classify(s)
        instance = f"{code} {site} {symbol}"
        is_s = symbol.variant == S_TRIPLE
        report.check(f"{instance} phi+", 8 if symbol.variant == J_PLUS else 0, apply(PHI_PLUS, v))
        report.check(f"{instance} phi-", -8 if symbol.variant in (J_A, J_B) else 0, apply(PHI_MINUS, v))
        report.check(f"{instance} phiSt", 24 if is_s else 0, apply(PHI_ST, v))
        expected_eta = (0,) * len(ETA) if is_s else ETA_JUMPS[j_parity_class(symbol)]
        report.check(f"{instance} eta", tuple(Fraction(x) for x in expected_eta), eta_vector(v))
        pos, neg = resolve(s, POS), resolve(s, NEG)
        if is_s:
            report.check(f"{instance} f_J", f_J(neg), f_J(pos))
        else:
            report.check(f"{instance} f_S", f_S(neg), f_S(pos))
        report.check(f"{instance} f_SJ jumps", True, f_SJ(pos) != f_SJ(neg))
    return report


_RUNNERS = {
    'MAIN': _main,
    'IMAGE': _image,
    'FIN': _fin,
    'SYMBOLS': _symbols,
    'ORDER2': _order2,
    'SMOOTHING': _smoothing,
    'FIG1B': _fig1b,
    'RELATIONS': _relations,
    'GAMMA': _gamma,
    'VANISH': _vanish,
    'JUMPS': _jumps,
}


def run_suite(name: str, n: int) -> SuiteReport:
    """Run one named suite; n is the crossing bound (index range for RELATIONS and VANISH)."""
    key = name.upper()
    if key not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    logger.info(f"running suite {key} with n={n}")
    report = _RUNNERS[key](n)
    level = logging.INFO if report.ok else logging.WARNING
    logger.log(level, report.summary())
    for note in report.notes:
        logger.info(f"{key}: {note}")
    return report


def run_all(n: int) -> List[SuiteReport]:
    return [run_suite(name, n) for name in SUITES]
