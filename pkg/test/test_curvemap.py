import random
from itertools import product

import pytest

from codec import SignedGaussCode, parse_gauss
from curvemap import (EV, OD, NotRealizable, assemble_map, build_map, canonical_code, canonical_form,
                      edge_sides, faces, gamma_code, genus, left_face, mirror_map, regular_homotopy_class,
                      right_face, to_code)
from enumeration import corpus_upto


def test_circle_has_two_faces():
    cmap = build_map(parse_gauss('gc:'))
    table = faces(cmap)
    assert cmap.n_crossings == 0
    assert len(table) == 2
    assert genus(cmap) == 0
    assert regular_homotopy_class(cmap) == OD
    assert left_face(cmap, table, 0) == 0
    assert right_face(cmap, table, 0) == 1


def test_one_curl_faces():
    cmap = build_map(gamma_code(1))
    table = faces(cmap)
    assert sorted(len(darts) for darts in table.faces.values()) == [1, 1, 2]
    assert regular_homotopy_class(cmap) == EV
    # the outer face touches both edges, once from each side
    assert sorted(edge_sides(cmap, table, 0)) == [(0, 'L'), (1, 'R')]


@pytest.mark.parametrize('k', range(6))
def test_gamma_face_count(k):
    cmap = build_map(gamma_code(k))
    assert len(faces(cmap)) == k + 2


def test_interlaced_word_is_never_spherical():
    for signs in product((1, -1), repeat=2):
        code = SignedGaussCode((1, 2, 1, 2), {1: signs[0], 2: signs[1]})
        with pytest.raises(NotRealizable) as exc:
            build_map(code)
        assert exc.value.genus == 1
    assert genus(assemble_map(SignedGaussCode((1, 2, 1, 2), {1: 1, 2: 1}))) == 1


def test_rotation_passes_straight_through():
    for _, cmap in corpus_upto(3, dedup=False):
        for p in range(cmap.n_visits):
            assert cmap.rotation[cmap.rotation[2 * p]] == 2 * p + 1


def test_every_corpus_map_has_n_plus_2_faces():
    for _, cmap in corpus_upto(4):
        assert len(faces(cmap)) == cmap.n_crossings + 2


def test_curl_sign_does_not_change_the_curve():
    plus = canonical_form(build_map(parse_gauss('gc: 1+ 1+')))
    minus = canonical_form(build_map(parse_gauss('gc: 1- 1-')))
    assert plus == minus


def test_relabeling_gives_the_same_canonical_form():
    relabeled = SignedGaussCode((2, 2, 1, 1), {1: 1, 2: 1})
    assert canonical_code(relabeled) == canonical_code(gamma_code(2))


def test_random_relabel_and_rotation():
    rng = random.Random(3)
    for code, _ in corpus_upto(4):
        labels = sorted(code.signs)
        shuffled = labels[:]
        rng.shuffle(shuffled)
        rename = dict(zip(labels, shuffled))
        renamed = SignedGaussCode(tuple(rename[x] for x in code.word),
                                  {rename[x]: s for x, s in code.signs.items()})
        assert canonical_code(renamed) == code


def test_canonical_form_is_idempotent():
    for code, cmap in corpus_upto(4):
        assert canonical_code(code) == code
        assert canonical_form(build_map(to_code(cmap))) == code


def test_mirror_negates_signs():
    cmap = build_map(parse_gauss('gc: 1+ 1+ 2- 2-'))
    assert mirror_map(cmap).signs == {1: -1, 2: 1}
    assert mirror_map(mirror_map(cmap)).rotation == cmap.rotation
