"""Local and global indices of a stable curve.

Crossing signs i(v), exterior-arc indices (a(v), b(v)), region labels d(R),
and the oriented smoothing with its regions.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import networkx as nx
from networkx.utils import UnionFind

from curvemap import CurveMap, FaceTable, faces, left_face, right_face

logger = logging.getLogger(__name__)


class InconsistentTable(ValueError):
    """Two crossings of equal (a,b) type see different region labels."""


@dataclass(frozen=True)
class CrossingInfo:
    crossing: int
    sign: int
    ab: Tuple[int, int]
    adjacent_faces: Tuple[int, int, int, int]


@dataclass(frozen=True)
class RegionLabels:
    d: Dict[int, int]

    def __getitem__(self, face_id: int) -> int:
        return self.d[face_id]


@dataclass(frozen=True)
class SmoothRegion:
    faces: Tuple[int, ...]
    chi: int
    d: int


@dataclass(frozen=True)
class SmoothedArrangement:
    circles: List[Tuple[int, ...]]
    regions: List[SmoothRegion]


def crossing_sign(cmap: CurveMap, v: int) -> int:
    """+1 iff (first outgoing, second outgoing) is a positive frame."""
    p, q = cmap.visits[v]
    return 1 if cmap.rotation[2 * p + 1] == 2 * q + 1 else -1


def arc_index(cmap: CurveMap, start: int, length: int) -> int:
    """Index of the traversal segment covering `length` visits from `start`."""
    n2 = cmap.n_visits
    if length <= 0 or n2 == 0:
        return 0
    offset = {(start + i) % n2: i for i in range(length)}
    total = 0
    for label, (p, q) in cmap.visits.items():
        if p in offset and q in offset:
            sign = crossing_sign(cmap, label)
            total += sign if offset[p] < offset[q] else -sign
    return total


def exterior_indices(cmap: CurveMap, v: int) -> Tuple[int, int]:
    p, q = cmap.visits[v]
    n2 = cmap.n_visits
    first = arc_index(cmap, p + 1, q - p - 1)
    second = arc_index(cmap, q + 1, n2 - (q - p) - 1)
    if crossing_sign(cmap, v) > 0:
        return (first, second)
    return (second, first)


def _frame_darts(cmap: CurveMap, v: int) -> Tuple[int, int, int, int]:
    """Counterclockwise cycle at v starting from the first dart of the positive frame."""
    p, q = cmap.visits[v]
    if crossing_sign(cmap, v) > 0:
        return (2 * p + 1, 2 * q + 1, 2 * p, 2 * q)
    return (2 * q + 1, 2 * p + 1, 2 * q, 2 * p)


def crossing_infos(cmap: CurveMap, table: FaceTable = None) -> List[CrossingInfo]:
    table = table or faces(cmap)
    infos = []
    for label in cmap.labels:
        darts = _frame_darts(cmap, label)
        infos.append(CrossingInfo(
            crossing=label,
            sign=crossing_sign(cmap, label),
            ab=exterior_indices(cmap, label),
            adjacent_faces=tuple(table.face_of_dart[h] for h in darts),
        ))
    return infos


def _corner_dart(cmap: CurveMap, x: int, y: int) -> int:
    # the one of x, y whose counterclockwise successor is the other
    return x if cmap.rotation[x] == y else y


def _seifert_circles(cmap: CurveMap) -> List[Tuple[int, ...]]:
    n2 = cmap.n_visits
    other = {}
    for p, q in cmap.visits.values():
        other[p], other[q] = q, p
    seen = set()
    circles = []
    for start in range(n2):
        if start in seen:
            continue
        circle = []
        edge = start
        while edge not in seen:
            seen.add(edge)
            circle.append(edge)
            edge = other[(edge + 1) % n2]
        circles.append(tuple(circle))
    return circles


def smooth(cmap: CurveMap, table: FaceTable = None) -> SmoothedArrangement:
    """Oriented smoothing of every crossing; regions carry chi(E) and d(E)."""
    if cmap.n_crossings == 0:
        return SmoothedArrangement(
            circles=[(0,)],
            regions=[SmoothRegion((0,), 1, 1), SmoothRegion((1,), 1, -1)],
        )
    table = table or faces(cmap)
    regions = UnionFind(table.ids)
    for p, q in cmap.visits.values():
        out_corner = _corner_dart(cmap, 2 * p + 1, 2 * q + 1)
        in_corner = _corner_dart(cmap, 2 * p, 2 * q)
        regions.union(table.face_of_dart[out_corner], table.face_of_dart[in_corner])

    circles = _seifert_circles(cmap)
    tree = nx.Graph()
    roots = {regions[f] for f in table.ids}
    tree.add_nodes_from(('R', r) for r in roots)
    sides = []
    for i, circle in enumerate(circles):
        edge = circle[0]
        lhs = regions[left_face(cmap, table, edge)]
        rhs = regions[right_face(cmap, table, edge)]
        sides.append(lhs)
        tree.add_edge(('C', i), ('R', lhs))
        tree.add_edge(('C', i), ('R', rhs))
    if not nx.is_tree(tree):
        raise AssertionError(f"smoothing of {cmap} does not give a tree of regions")

    d = {r: 0 for r in roots}
    for i, lhs in enumerate(sides):
        rest = tree.copy()
        rest.remove_node(('C', i))
        left_side = nx.node_connected_component(rest, ('R', lhs))
        for r in roots:
            d[r] += 1 if ('R', r) in left_side else -1

    members: Dict[int, List[int]] = {}
    for f in table.ids:
        members.setdefault(regions[f], []).append(f)
    out = [SmoothRegion(tuple(sorted(fs)), 2 - tree.degree[('R', r)], d[r])
           for r, fs in members.items()]
    out.sort(key=lambda reg: reg.faces[0])
    return SmoothedArrangement(circles=circles, regions=out)


def region_labels(cmap: CurveMap, table: FaceTable = None, anchor: int = None) -> RegionLabels:
    """d for every face: one anchor from the smoothing, then +-2 across edges."""
    if cmap.n_crossings == 0:
        return RegionLabels({0: 1, 1: -1})
    table = table or faces(cmap)
    arrangement = smooth(cmap, table)
    anchor = table.ids[0] if anchor is None else anchor
    anchor_d = next(reg.d for reg in arrangement.regions if anchor in reg.faces)

    step = nx.DiGraph()
    step.add_nodes_from(table.ids)
    for edge in range(cmap.n_visits):
        lf, rf = left_face(cmap, table, edge), right_face(cmap, table, edge)
        step.add_edge(rf, lf, delta=2)
        step.add_edge(lf, rf, delta=-2)
    d = {anchor: anchor_d}
    for u, v in nx.bfs_edges(step, anchor):
        d[v] = d[u] + step.edges[u, v]['delta']
    return RegionLabels(d)


def figure1b_table(corpus: Iterable[CurveMap]) -> Dict[Tuple[int, int], Tuple[int, int, int, int]]:
    """(a,b) -> d-values of the four corners read counterclockwise from the positive frame."""
    found: Dict[Tuple[int, int], Tuple[int, int, int, int]] = {}
    witness: Dict[Tuple[int, int], str] = {}
    for cmap in corpus:
        if cmap.n_crossings == 0:
            continue
        table = faces(cmap)
        d = region_labels(cmap, table)
        for info in crossing_infos(cmap, table):
            labels = tuple(d[f] for f in info.adjacent_faces)
            if info.ab in found and found[info.ab] != labels:
                raise InconsistentTable(
                    f"type {info.ab}: {found[info.ab]} at {witness[info.ab]} "
                    f"but {labels} at crossing {info.crossing} of {cmap}"
                )
            found.setdefault(info.ab, labels)
            witness.setdefault(info.ab, f"{cmap}")
    logger.debug(f"corner table has {len(found)} types")
    return found
