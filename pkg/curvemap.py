"""Oriented combinatorial maps of stable spherical curves.

A curve with n double points is read from a signed Gauss code. Visit p of the
traversal (p = 0..2n-1) owns two darts: in_p = 2p (arriving) and out_p = 2p+1
(leaving). Edge p joins out_p to in_{p+1}. The rotation at each crossing is
its counterclockwise dart cycle; the sign fixes which of the two cycles is used
(see Conventions-Readme.md).

The embedded circle (n = 0) has no darts and two faces by convention:
face 0 lies left of the curve, face 1 right of it.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from codec import SignedGaussCode, validate_code

logger = logging.getLogger(__name__)

EV = 'ev'
OD = 'od'
LEFT = 'L'
RIGHT = 'R'


class NotRealizable(ValueError):
    """The signed code has no embedding in the sphere."""

    def __init__(self, code: SignedGaussCode, genus: int):
        self.code = code
        self.genus = genus
        super().__init__(f"code '{code}' is not realizable on the sphere (genus {genus})")


@dataclass(frozen=True)
class CurveMap:
    n_crossings: int
    rotation: Tuple[int, ...]
    pairing: Tuple[int, ...]
    word: Tuple[int, ...]
    signs: Dict[int, int] = field(hash=False, compare=False)
    visits: Dict[int, Tuple[int, int]] = field(hash=False, compare=False)

    @property
    def n_darts(self) -> int:
        return 4 * self.n_crossings

    @property
    def n_visits(self) -> int:
        return 2 * self.n_crossings

    @property
    def labels(self) -> List[int]:
        return sorted(self.visits)

    def inverse_rotation(self) -> Tuple[int, ...]:
        inv = [0] * self.n_darts
        for h, s in enumerate(self.rotation):
            inv[s] = h
        return tuple(inv)

    @property
    def code(self) -> SignedGaussCode:
        return SignedGaussCode(self.word, dict(self.signs))

    def __str__(self):
        return str(self.code)


@dataclass(frozen=True)
class FaceTable:
    faces: Dict[int, Tuple[int, ...]]
    face_of_dart: Dict[int, int]

    def __len__(self):
        return len(self.faces)

    @property
    def ids(self) -> List[int]:
        return sorted(self.faces)


def _crossing_cycle(p: int, q: int, sign: int) -> Tuple[int, int, int, int]:
    out_p, out_q, in_p, in_q = 2 * p + 1, 2 * q + 1, 2 * p, 2 * q
    if sign > 0:
        return (out_p, out_q, in_p, in_q)
    return (out_p, in_q, in_p, out_q)


def assemble_map(code: SignedGaussCode) -> CurveMap:
    """Build the rotation system for a code without the sphere check."""
    validate_code(code)
    n = code.n_crossings
    visits: Dict[int, List[int]] = {}
    for pos, label in enumerate(code.word):
        visits.setdefault(label, []).append(pos)
    rotation = [0] * (4 * n)
    for label, (p, q) in visits.items():
        cycle = _crossing_cycle(p, q, code.signs[label])
        for i, h in enumerate(cycle):
            rotation[h] = cycle[(i + 1) % 4]
    pairing = [0] * (4 * n)
    for p in range(2 * n):
        out_p = 2 * p + 1
        in_next = (2 * p + 2) % (4 * n)
        pairing[out_p] = in_next
        pairing[in_next] = out_p
    return CurveMap(
        n_crossings=n,
        rotation=tuple(rotation),
        pairing=tuple(pairing),
        word=tuple(code.word),
        signs=dict(code.signs),
        visits={label: (pq[0], pq[1]) for label, pq in visits.items()},
    )


def build_map(code: SignedGaussCode) -> CurveMap:
    """Realize a signed code as a spherical map; NotRealizable if genus > 0."""
    cmap = assemble_map(code)
    g = genus(cmap)
    if g != 0:
        raise NotRealizable(code, g)
    return cmap


def faces(cmap: CurveMap) -> FaceTable:
    """Orbits of h -> rotation^-1(pairing(h)); face id is the lowest dart in the orbit."""
    if cmap.n_crossings == 0:
        return FaceTable(faces={0: (), 1: ()}, face_of_dart={})
    inv = cmap.inverse_rotation()
    seen: Dict[int, int] = {}
    table: Dict[int, Tuple[int, ...]] = {}
    for start in range(cmap.n_darts):
        if start in seen:
            continue
        orbit = []
        h = start
        while h not in seen:
            seen[h] = start
            orbit.append(h)
            h = inv[cmap.pairing[h]]
        table[start] = tuple(orbit)
    return FaceTable(faces=table, face_of_dart=seen)


def genus(cmap: CurveMap) -> int:
    if cmap.n_crossings == 0:
        return 0
    v, e, f = cmap.n_crossings, 2 * cmap.n_crossings, len(faces(cmap))
    return (2 - v + e - f) // 2


def regular_homotopy_class(cmap: CurveMap) -> str:
    return EV if cmap.n_crossings % 2 == 1 else OD


def left_face(cmap: CurveMap, table: FaceTable, edge: int) -> int:
    if cmap.n_crossings == 0:
        return 0
    return table.face_of_dart[2 * edge + 1]


def right_face(cmap: CurveMap, table: FaceTable, edge: int) -> int:
    if cmap.n_crossings == 0:
        return 1
    return table.face_of_dart[(2 * edge + 2) % cmap.n_darts]


def dart_edge_side(cmap: CurveMap, h: int) -> Tuple[int, str]:
    """Edge-side bounding the face that contains dart h."""
    if h % 2 == 1:
        return (h // 2, LEFT)
    return ((h // 2 - 1) % cmap.n_visits, RIGHT)


def edge_sides(cmap: CurveMap, table: FaceTable, face_id: int) -> List[Tuple[int, str]]:
    """Edge-sides of a face in boundary order."""
    if cmap.n_crossings == 0:
        return [(0, LEFT)] if face_id == 0 else [(0, RIGHT)]
    return [dart_edge_side(cmap, h) for h in table.faces[face_id]]


def rotate_code(code: SignedGaussCode, r: int) -> SignedGaussCode:
    """Same curve read from visit r, relabeled by first appearance."""
    n2 = len(code.word)
    if n2 == 0:
        return code
    first: Dict[int, int] = {}
    for pos, label in enumerate(code.word):
        first.setdefault(label, pos)
    word = code.word[r:] + code.word[:r]
    relabel: Dict[int, int] = {}
    signs: Dict[int, int] = {}
    new_word = []
    for label in word:
        if label not in relabel:
            relabel[label] = len(relabel) + 1
            p = first[label]
            q = code.word.index(label, p + 1)
            flip = p < r <= q
            signs[relabel[label]] = -code.signs[label] if flip else code.signs[label]
        new_word.append(relabel[label])
    return SignedGaussCode(tuple(new_word), signs)


def _token_key(code: SignedGaussCode) -> Tuple[Tuple[int, int], ...]:
    return tuple((label, 0 if code.signs[label] > 0 else 1) for label in code.word)


def canonical_code(code: SignedGaussCode) -> SignedGaussCode:
    if not code.word:
        return SignedGaussCode((), {})
    candidates = (rotate_code(code, r) for r in range(len(code.word)))
    return min(candidates, key=_token_key)


def canonical_form(cmap: CurveMap) -> SignedGaussCode:
    """Lexicographically least code over all starting visits."""
    return canonical_code(cmap.code)


def to_code(cmap: CurveMap) -> SignedGaussCode:
    return cmap.code


def mirror_map(cmap: CurveMap) -> CurveMap:
    """Mirror image: every crossing sign negated."""
    return assemble_map(SignedGaussCode(cmap.word, {k: -s for k, s in cmap.signs.items()}))


def gamma_code(k: int) -> SignedGaussCode:
    """Γ_k: k curls along a circle, word 1 1 2 2 ... k k, all signs +1."""
    word = tuple(label for i in range(1, k + 1) for label in (i, i))
    return SignedGaussCode(word, {i: 1 for i in range(1, k + 1)})
