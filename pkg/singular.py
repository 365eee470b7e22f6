"""Singular curves: tangency and triple-point sites on a stable curve.

A site is described on a stable base curve. A tangency collides two edge-sides
of one face; its negative resolution is the base curve and its positive
resolution pushes one strand through the other, adding two crossings. A triple
site is a triangular face with three distinct corners; its two resolutions are
the base curve and the curve with the triangle flipped.

Resolutions are assembled as signed Gauss codes. Every crossing of the result is
a token key visited twice (roles 0 and 1) with a sign fixed for role 0 first; the
sign is negated when role 1 is met first in the assembled word.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from codec import SignedGaussCode
from curvemap import (CurveMap, FaceTable, LEFT, NotRealizable, RIGHT, build_map,
                      edge_sides, faces)
from indices import arc_index, region_labels
from invariants import F, XYVector
from symbols import Symbol, ja, jb, jplus, s_symbol

logger = logging.getLogger(__name__)

TANGENCY = 'tangency'
TRIPLE = 'triple'
POS = 'POS'
NEG = 'NEG'


class InvalidSite(ValueError):
    """The site does not satisfy the incidence preconditions on its base curve."""


@dataclass(frozen=True, order=True)
class EdgeSide:
    edge: int
    side: str

    def __str__(self):
        return f"{self.edge}{self.side}"


@dataclass(frozen=True, order=True)
class SiteDescriptor:
    kind: str
    face: int
    sides: Tuple[EdgeSide, ...]

    @classmethod
    def tangency(cls, face: int, first: EdgeSide, second: EdgeSide) -> 'SiteDescriptor':
        return cls(TANGENCY, face, tuple(sorted((first, second))))

    @classmethod
    def triple(cls, face: int, sides: Sequence[EdgeSide]) -> 'SiteDescriptor':
        return cls(TRIPLE, face, tuple(sorted(sides)))

    @property
    def edges(self) -> frozenset:
        return frozenset(s.edge for s in self.sides)

    @property
    def is_direct(self) -> bool:
        """Parallel strands: the two sides face the region from opposite sides."""
        return self.kind == TANGENCY and self.sides[0].side != self.sides[1].side

    def __str__(self):
        return f"{self.kind}@{self.face}[{' '.join(str(s) for s in self.sides)}]"


@dataclass(frozen=True)
class SitePlan:
    site: SiteDescriptor
    symbol: Symbol
    positive_swapped: bool = False


@dataclass(frozen=True)
class SingularCurve:
    base: CurveMap
    plans: Tuple[SitePlan, ...]

    def __str__(self):
        body = ', '.join(f"{p.site}={p.symbol}" for p in self.plans)
        return f"{self.base} with {body}"


def side_dart(cmap: CurveMap, es: EdgeSide) -> int:
    if es.side == LEFT:
        return 2 * es.edge + 1
    return (2 * es.edge + 2) % cmap.n_darts


def face_of_side(cmap: CurveMap, table: FaceTable, es: EdgeSide) -> int:
    if cmap.n_crossings == 0:
        return 0 if es.side == LEFT else 1
    return table.face_of_dart[side_dart(cmap, es)]


def _boundary(cmap: CurveMap, table: FaceTable, face_id: int) -> List[EdgeSide]:
    return [EdgeSide(e, s) for e, s in edge_sides(cmap, table, face_id)]


def triangle_corners(cmap: CurveMap, table: FaceTable, face_id: int) -> Optional[Tuple[int, int, int]]:
    """Corner crossings of a triangular face with three distinct corners, else None."""
    if cmap.n_crossings == 0:
        return None
    darts = table.faces.get(face_id, ())
    if len(darts) != 3:
        return None
    corners = tuple(sorted(cmap.word[h // 2] for h in darts))
    if len(set(corners)) != 3:
        return None
    return corners


def triple_site_at(cmap: CurveMap, crossing: int, side: EdgeSide, table: FaceTable = None) -> SiteDescriptor:
    """The triple site of the triangle bordered by `side` and cornered at `crossing`."""
    table = table or faces(cmap)
    if crossing not in cmap.visits or not 0 <= side.edge < cmap.n_visits:
        raise InvalidSite(f"no crossing {crossing} or edge {side.edge} on {cmap}")
    face_id = face_of_side(cmap, table, side)
    corners = triangle_corners(cmap, table, face_id)
    if corners is None or crossing not in corners:
        raise InvalidSite(f"face {face_id} of {cmap} is not a triangle cornered at {crossing}")
    return SiteDescriptor.triple(face_id, _boundary(cmap, table, face_id))


def _check_site(cmap: CurveMap, table: FaceTable, site: SiteDescriptor):
    if site.face not in table.faces:
        raise InvalidSite(f"{site}: no face {site.face} on {cmap}")
    boundary = _boundary(cmap, table, site.face)
    for es in site.sides:
        if es.side not in (LEFT, RIGHT) or es not in boundary:
            raise InvalidSite(f"{site}: {es} does not border face {site.face}")
    if site.kind == TANGENCY:
        if len(site.sides) != 2:
            raise InvalidSite(f"{site}: a tangency needs two edge-sides")
    elif site.kind == TRIPLE:
        if triangle_corners(cmap, table, site.face) is None or set(site.sides) != set(boundary):
            raise InvalidSite(f"{site}: face {site.face} is not a collapsible triangle")
    else:
        raise InvalidSite(f"unknown site kind {site.kind!r}")


def _classify_tangency(cmap: CurveMap, site: SiteDescriptor) -> Symbol:
    n2 = cmap.n_visits
    p1, p2 = sorted(s.edge for s in site.sides)
    a = arc_index(cmap, p1 + 1, p2 - p1)
    b = arc_index(cmap, p2 + 1, n2 - (p2 - p1))
    if site.is_direct:
        return jplus(a, b)
    if site.sides[0].side == LEFT:
        return jb(a, b)
    return ja(a, b)


def _plan_triple(cmap: CurveMap, table: FaceTable, site: SiteDescriptor) -> SitePlan:
    n2 = cmap.n_visits
    edges = [s.edge for s in site.sides]
    entries = []
    for i in range(3):
        p, q = edges[i], edges[(i + 1) % 3]
        here = {cmap.word[p]: p, cmap.word[(p + 1) % n2]: (p + 1) % n2}
        there = {cmap.word[q]: q, cmap.word[(q + 1) % n2]: (q + 1) % n2}
        (corner,) = set(here) & set(there)
        sign = cmap.signs[corner]
        cross = sign if here[corner] < there[corner] else -sign
        index = arc_index(cmap, p + 2, (q - p - 2) % n2)
        entries.append((index, cross < 0))
    symbol = s_symbol(entries)

    d = region_labels(cmap, table)
    here_d = d[site.face]
    flipped_d = here_d + sum(-2 if s.side == LEFT else 2 for s in site.sides)
    lower_positive = symbol.hats in (0, 1)
    base_is_lower = here_d < flipped_d
    logger.debug(f"{site} on {cmap}: {symbol}, triangle d {here_d} -> {flipped_d}")
    return SitePlan(site, symbol, positive_swapped=(base_is_lower != lower_positive))


def _plan(cmap: CurveMap, table: FaceTable, site: SiteDescriptor) -> SitePlan:
    _check_site(cmap, table, site)
    if site.kind == TANGENCY:
        return SitePlan(site, _classify_tangency(cmap, site))
    return _plan_triple(cmap, table, site)


def sites_independent(cmap: CurveMap, first: SiteDescriptor, second: SiteDescriptor,
                      table: FaceTable = None) -> bool:
    """True when both sites can be singular at once with disjoint local supports."""
    if first == second:
        return False
    shared_edges = first.edges & second.edges
    if TRIPLE in (first.kind, second.kind):
        if shared_edges:
            return False
        if first.kind == second.kind == TRIPLE:
            table = table or faces(cmap)
            return not set(triangle_corners(cmap, table, first.face)) & set(triangle_corners(cmap, table, second.face))
        return True
    if first.face != second.face:
        return True
    if shared_edges:
        return False
    table = table or faces(cmap)
    boundary = _boundary(cmap, table, first.face)
    i1, i2 = sorted(boundary.index(s) for s in first.sides)
    inside = [i1 < boundary.index(s) < i2 for s in second.sides]
    return inside[0] == inside[1]


def make_singular(cmap: CurveMap, site: SiteDescriptor, table: FaceTable = None) -> SingularCurve:
    table = table or faces(cmap)
    return SingularCurve(cmap, (_plan(cmap, table, site),))


def make_singular_pair(cmap: CurveMap, first: SiteDescriptor, second: SiteDescriptor,
                       table: FaceTable = None) -> SingularCurve:
    table = table or faces(cmap)
    plans = (_plan(cmap, table, first), _plan(cmap, table, second))
    if not sites_independent(cmap, first, second, table):
        raise InvalidSite(f"{first} and {second} interfere on {cmap}")
    return SingularCurve(cmap, plans)


def _tangency_tokens(idx: int, site: SiteDescriptor):
    """Insertions per edge and the role-0 signs of the two new crossings."""
    e1, e2 = site.sides
    u, w = ('t', idx, 'u'), ('t', idx, 'w')
    s2 = -1 if e2.side == LEFT else 1
    signs = {u: -s2, w: s2}
    if e1 == e2:
        return {e1.edge: [(u, 0), (w, 0), (w, 1), (u, 1)]}, signs
    second = [(u, 1), (w, 1)] if site.is_direct else [(w, 1), (u, 1)]
    return {e1.edge: [(u, 0), (w, 0)], e2.edge: second}, signs


def _normalize_choices(s: SingularCurve, choices) -> Tuple[str, ...]:
    if isinstance(choices, str):
        choices = (choices,)
    choices = tuple(choices)
    if len(choices) != len(s.plans) or any(c not in (POS, NEG) for c in choices):
        raise ValueError(f"need one of POS/NEG per site, got {choices}")
    return choices


def resolution_code(s: SingularCurve, choices: Union[str, Sequence[str]]) -> SignedGaussCode:
    choices = _normalize_choices(s, choices)
    base = s.base
    n2 = base.n_visits
    slots = []
    for pos, label in enumerate(base.word):
        slots.append((('v', label), 0 if base.visits[label][0] == pos else 1))
    role0_sign: Dict[tuple, int] = {('v', label): sign for label, sign in base.signs.items()}
    inserts: Dict[int, list] = {}

    for idx, (plan, choice) in enumerate(zip(s.plans, choices)):
        if plan.site.kind == TRIPLE:
            if (choice == POS) == plan.positive_swapped:
                for es in plan.site.sides:
                    p, q = es.edge, (es.edge + 1) % n2
                    slots[p], slots[q] = slots[q], slots[p]
        elif choice == POS:
            per_edge, signs = _tangency_tokens(idx, plan.site)
            role0_sign.update(signs)
            for edge, tokens in per_edge.items():
                inserts.setdefault(edge, []).extend(tokens)

    sequence = list(inserts.get(0, ())) if n2 == 0 else []
    for pos in range(n2):
        sequence.append(slots[pos])
        sequence.extend(inserts.get(pos, ()))

    labels: Dict[tuple, int] = {}
    word, signs = [], {}
    for key, role in sequence:
        if key not in labels:
            labels[key] = len(labels) + 1
            signs[labels[key]] = role0_sign[key] if role == 0 else -role0_sign[key]
        word.append(labels[key])
    return SignedGaussCode(tuple(word), signs)


def resolve(s: SingularCurve, choices: Union[str, Sequence[str]]) -> CurveMap:
    """Stable curve for one POS/NEG choice per site."""
    code = resolution_code(s, choices)
    try:
        return build_map(code)
    except NotRealizable as exc:
        raise InvalidSite(f"resolution {choices} of {s} is not spherical: {exc}") from exc


def classify(s: SingularCurve, at: int = 0) -> Symbol:
    return s.plans[at].symbol


def f1(s: SingularCurve) -> XYVector:
    if len(s.plans) != 1:
        raise ValueError("f1 needs exactly one singular point")
    return F(resolve(s, POS)) - F(resolve(s, NEG))


def f2(s: SingularCurve) -> XYVector:
    """Second difference over the four resolutions; zero for an order 1 invariant."""
    if len(s.plans) != 2:
        raise ValueError("f2 needs exactly two singular points")
    total = XYVector()
    for choices in product((POS, NEG), repeat=2):
        sign = (-1) ** sum(c == NEG for c in choices)
        total.iadd_coef(sign, F(resolve(s, choices)))
    return total


def tangency_sites(cmap: CurveMap, table: FaceTable = None) -> List[SiteDescriptor]:
    table = table or faces(cmap)
    sites = []
    for face_id in table.ids:
        boundary = _boundary(cmap, table, face_id)
        for i, first in enumerate(boundary):
            for second in boundary[i:]:
                sites.append(SiteDescriptor.tangency(face_id, first, second))
    return sites


def triple_sites(cmap: CurveMap, table: FaceTable = None) -> List[SiteDescriptor]:
    table = table or faces(cmap)
    return [SiteDescriptor.triple(face_id, _boundary(cmap, table, face_id))
            for face_id in table.ids if triangle_corners(cmap, table, face_id) is not None]
