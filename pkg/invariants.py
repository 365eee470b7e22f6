"""The X+Y vector space, the universal order 1 invariant F, and its functionals.

Vectors live in the basis {X_{a,b}, Y_d}; keys are ('X', a, b) and ('Y', d).
Z-coordinates (Z_{a,b} = X_{a,b} - Phi_{a,b}) are a view produced by to_Z.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from curvemap import CurveMap, OD, canonical_form, regular_homotopy_class
from indices import crossing_infos, region_labels, smooth
from sparse_row import SparseRow

logger = logging.getLogger(__name__)

JPLUS = 'JPLUS'
JMINUS = 'JMINUS'
ST = 'ST'


class InvariantViolation(AssertionError):
    """A theorem-level identity failed on a computed value (an implementation bug)."""


class XYVector(SparseRow):
    @classmethod
    def X(cls, a: int, b: int, coef=1) -> 'XYVector':
        return cls([(('X', a, b), coef)])

    @classmethod
    def Y(cls, d: int, coef=1) -> 'XYVector':
        return cls([(('Y', d), coef)])

    @property
    def x(self) -> Dict[Tuple[int, int], Fraction]:
        return {(k[1], k[2]): c for k, c in self.items() if k[0] == 'X'}

    @property
    def y(self) -> Dict[int, Fraction]:
        return {k[1]: c for k, c in self.items() if k[0] == 'Y'}

    def x_rows(self) -> List[list]:
        return [[a, b, c] for (a, b), c in sorted(self.x.items())]

    def y_rows(self) -> List[list]:
        return [[d, c] for d, c in sorted(self.y.items())]

    def __str__(self):
        if not self:
            return '0'
        terms = []
        for k, c in self.sorted_items():
            name = f"X[{k[1]},{k[2]}]" if k[0] == 'X' else f"Y[{k[1]}]"
            terms.append(f"{c}*{name}" if c != 1 else name)
        return ' + '.join(terms)


@dataclass(frozen=True)
class Functional:
    """Linear map on X+Y given by its values on basis elements (unmentioned -> 0)."""
    name: str
    on_x: Callable[[int, int], Fraction] = field(compare=False)
    on_y: Callable[[int], Fraction] = field(compare=False)

    def __call__(self, v: XYVector) -> Fraction:
        return apply(self, v)


def apply(fn: Functional, v: XYVector) -> Fraction:
    total = Fraction(0)
    for key, coef in v.items():
        if key[0] == 'X':
            total += coef * Fraction(fn.on_x(key[1], key[2]))
        else:
            total += coef * Fraction(fn.on_y(key[1]))
    return total


def _odd(n: int) -> bool:
    return n % 2 != 0


def _psi5_x(a: int, b: int) -> Fraction:
    s = a + b
    if not _odd(s):
        return Fraction(0)
    # s odd, so s*(s^2-4) != 0
    return Fraction(4 * (a - b + 1) - s * s, s * (s * s - 4))


def _psi6_x(a: int, b: int) -> Fraction:
    if a + b == 0:
        return Fraction(b - a - 1)
    if a + b in (2, -2):
        return Fraction(a - b, 2)
    return Fraction(0)


PSI = [
    Functional('psi1', lambda a, b: -1 if _odd(a + b) else 0, lambda d: 1 if _odd(d) else 0),
    Functional('psi2', lambda a, b: 0 if _odd(a + b) else -1, lambda d: 0 if _odd(d) else 1),
    Functional('psi3', lambda a, b: -(a + b) if _odd(a + b) else 0, lambda d: d if _odd(d) else 0),
    Functional('psi4', lambda a, b: 0 if _odd(a + b) else -(a + b), lambda d: 0 if _odd(d) else d),
    Functional('psi5', _psi5_x, lambda d: Fraction(1, d) if _odd(d) else 0),
    Functional('psi6', _psi6_x, lambda d: 1 if d == 0 else 0),
]

ETA = [
    Functional('eta1', lambda a, b: (a + b) ** 2 if _odd(a + b) else 0, lambda d: -d * d if _odd(d) else 0),
    Functional('eta2', lambda a, b: 0 if _odd(a + b) else (a + b) ** 2, lambda d: 0 if _odd(d) else -d * d),
    Functional('eta3', lambda a, b: 1 if (not _odd(a) and _odd(b)) else 0, lambda d: 0),
    Functional('eta4', lambda a, b: 1 if (not _odd(a) and not _odd(b)) else 0, lambda d: 0),
    Functional('eta5', lambda a, b: 1 if (_odd(a) and not _odd(b)) else 0, lambda d: 0),
    Functional('eta6', lambda a, b: 1 if (_odd(a) and _odd(b)) else 0, lambda d: 0),
]

PHI_PLUS = Functional('phi+', lambda a, b: 4 + (a + b) ** 2, lambda d: -d * d)
PHI_MINUS = Functional('phi-', lambda a, b: (a + b) ** 2, lambda d: -d * d)
PHI_ST = Functional('phiSt', lambda a, b: 4 * (a - b) - (a + b) ** 2, lambda d: d * d)


def h_functional(h: Callable[[int], Fraction], name: str = 'H') -> Functional:
    """H_h: Y_d -> h(d), X_{a,b} -> -h(a+b)."""
    return Functional(name, lambda a, b: -Fraction(h(a + b)), lambda d: Fraction(h(d)))


def f_X(cmap: CurveMap) -> XYVector:
    v = XYVector()
    for info in crossing_infos(cmap):
        v += XYVector.X(*info.ab)
    return v


def f_Y(cmap: CurveMap) -> XYVector:
    d = region_labels(cmap)
    v = XYVector()
    for face_id in sorted(d.d):
        v += XYVector.Y(d[face_id])
    return v


def F(cmap: CurveMap) -> XYVector:
    return f_X(cmap) + f_Y(cmap)


def phi_ab(a: int, b: int) -> XYVector:
    half = Fraction(a - b, 2)
    return (XYVector.Y(a + b - 2, half) + XYVector.Y(a + b, b - a - 1)
            + XYVector.Y(a + b + 2, half))


def to_Z(v: XYVector) -> XYVector:
    """Coordinates in the {Z_{a,b}, Y_d} basis; X keys stand for Z."""
    out = XYVector(v)
    for (a, b), coef in v.x.items():
        out.iadd_coef(coef, phi_ab(a, b))
    return out


def from_Z(v: XYVector) -> XYVector:
    out = XYVector(v)
    for (a, b), coef in v.x.items():
        out.iadd_coef(-coef, phi_ab(a, b))
    return out


def project_PZ(v: XYVector) -> XYVector:
    """P_Z: X_{a,b} -> Phi_{a,b}, Y_d -> Y_d."""
    z = to_Z(v)
    return XYVector((k, c) for k, c in z.items() if k[0] == 'Y')


def mirror_vector(v: XYVector) -> XYVector:
    out = XYVector()
    for k, c in v.items():
        key = ('X', -k[2], -k[1]) if k[0] == 'X' else ('Y', -k[1])
        out.iadd_coef(c, [(key, 1)])
    return out


def psi_vector(v: XYVector) -> Tuple[Fraction, ...]:
    return tuple(apply(fn, v) for fn in PSI)


def eta_vector(v: XYVector) -> Tuple[Fraction, ...]:
    return tuple(apply(fn, v) for fn in ETA)


def arnold(cmap: CurveMap, which: str, k1=0, k2=0, value: Optional[XYVector] = None) -> Fraction:
    """Arnold's J+, J- or St with normalization constants k1 (on psi1) and k2 (on psi2)."""
    v = F(cmap) if value is None else value
    base = {
        JPLUS: Fraction(1, 4) * apply(PHI_PLUS, v),
        JMINUS: Fraction(1, 4) * apply(PHI_MINUS, v),
        ST: Fraction(1, 24) * apply(PHI_ST, v),
    }[which]
    return base + Fraction(k1) * apply(PSI[0], v) + Fraction(k2) * apply(PSI[1], v)


def h_form(cmap: CurveMap, h: Callable[[int], Fraction]) -> Tuple[Fraction, Fraction]:
    """(H_h(F(c)), sum over smoothing regions of chi(E) h(d(E)))."""
    lhs = apply(h_functional(h), F(cmap))
    rhs = sum((reg.chi * Fraction(h(reg.d)) for reg in smooth(cmap).regions), Fraction(0))
    return lhs, rhs


def f_S(cmap: CurveMap) -> XYVector:
    return project_PZ(F(cmap))


def f_J(cmap: CurveMap) -> Tuple[Fraction, ...]:
    v = F(cmap)
    return (apply(PSI[0], v), apply(PSI[1], v)) + eta_vector(v)


def f_SJ(cmap: CurveMap) -> Tuple[XYVector, Tuple[Fraction, ...]]:
    v = F(cmap)
    return project_PZ(v), eta_vector(v)


def fin_equalities(cmap: CurveMap, value: Optional[XYVector] = None) -> Tuple[Fraction, Fraction]:
    """Left sides of the two curve equalities built from psi5 and psi6 (both are 0)."""
    v = F(cmap) if value is None else value
    return apply(PSI[4], v), apply(PSI[5], v)


@dataclass
class InvariantReport:
    code: str
    crossings: int
    homotopy_class: str
    value: XYVector
    psi: Tuple[Fraction, ...]
    eta: Tuple[Fraction, ...]
    jplus: Fraction
    jminus: Fraction
    st: Fraction

    def to_dict(self) -> dict:
        return {
            'code': self.code,
            'crossings': self.crossings,
            'class': self.homotopy_class,
            'X': self.value.x_rows(),
            'Y': self.value.y_rows(),
            'psi': list(self.psi),
            'eta': list(self.eta),
            'Jplus': self.jplus,
            'Jminus': self.jminus,
            'St': self.st,
        }


def universal_report(cmap: CurveMap, k1=0, k2=0) -> InvariantReport:
    v = F(cmap)
    psi = psi_vector(v)
    cls = regular_homotopy_class(cmap)
    if any(psi[2:]):
        raise InvariantViolation(f"psi3..psi6 = {[str(x) for x in psi[2:]]} on {cmap}")
    expected = (2, 0) if cls == OD else (0, 2)
    if psi[:2] != expected:
        raise InvariantViolation(f"(psi1, psi2) = {psi[:2]} on {cls} curve {cmap}, expected {expected}")
    logger.debug(f"report for {cmap}: {v}")
    return InvariantReport(
        code=str(canonical_form(cmap)),
        crossings=cmap.n_crossings,
        homotopy_class=cls,
        value=v,
        psi=psi,
        eta=eta_vector(v),
        jplus=arnold(cmap, JPLUS, k1, k2, value=v),
        jminus=arnold(cmap, JMINUS, k1, k2, value=v),
        st=arnold(cmap, ST, k1, k2, value=v),
    )


def supports_match_class(v: XYVector, cls: str) -> bool:
    """X indices a+b and Y indices d all even on ev curves, all odd on od curves."""
    want_odd = cls == OD
    return (all(_odd(a + b) == want_odd for a, b in v.x)
            and all(_odd(d) == want_odd for d in v.y))
