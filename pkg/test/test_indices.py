import pytest

from codec import SignedGaussCode
from curvemap import build_map, faces, gamma_code, left_face, mirror_map, right_face
from enumeration import corpus_upto
from indices import crossing_infos, crossing_sign, exterior_indices, figure1b_table, region_labels, smooth


@pytest.mark.parametrize('k', range(1, 6))
def test_gamma_crossing_types(k):
    cmap = build_map(gamma_code(k))
    for label in cmap.labels:
        assert crossing_sign(cmap, label) == 1
        assert exterior_indices(cmap, label) == (0, k - 1)


def test_sign_matches_the_code():
    for _, cmap in corpus_upto(4, dedup=False):
        for label in cmap.labels:
            assert crossing_sign(cmap, label) == cmap.signs[label]


def test_mirror_swaps_and_negates_indices():
    for _, cmap in corpus_upto(3, dedup=False):
        mirrored = mirror_map(cmap)
        for label in cmap.labels:
            a, b = exterior_indices(cmap, label)
            assert exterior_indices(mirrored, label) == (-b, -a)
        d = sorted(region_labels(cmap).d.values())
        assert sorted(region_labels(mirrored).d.values()) == sorted(-x for x in d)


def test_circle_region_labels():
    assert region_labels(build_map(SignedGaussCode((), {}))).d == {0: 1, 1: -1}


def test_one_curl_region_labels():
    cmap = build_map(gamma_code(1))
    assert region_labels(cmap).d == {0: 0, 2: -2, 3: 2}


def test_left_is_two_above_right():
    for _, cmap in corpus_upto(4, dedup=False):
        table = faces(cmap)
        d = region_labels(cmap, table)
        for edge in range(cmap.n_visits):
            assert d[left_face(cmap, table, edge)] - d[right_face(cmap, table, edge)] == 2
        for value in d.d.values():
            assert (value - cmap.n_crossings - 1) % 2 == 0


def test_labels_do_not_depend_on_the_anchor():
    for _, cmap in corpus_upto(3):
        table = faces(cmap)
        base = region_labels(cmap, table)
        for face_id in table.ids:
            assert region_labels(cmap, table, anchor=face_id) == base


def test_smoothing_of_circle_and_curl():
    circle = smooth(build_map(SignedGaussCode((), {})))
    assert len(circle.circles) == 1
    assert [reg.chi for reg in circle.regions] == [1, 1]

    curl = smooth(build_map(gamma_code(1)))
    assert len(curl.circles) == 2
    assert sorted(reg.chi for reg in curl.regions) == [0, 1, 1]
    assert sorted(reg.d for reg in curl.regions) == [-2, 0, 2]


def test_smoothing_euler_characteristic():
    for _, cmap in corpus_upto(4, dedup=False):
        assert sum(reg.chi for reg in smooth(cmap).regions) == 2


def test_corner_labels_of_a_curl():
    cmap = build_map(gamma_code(1))
    (info,) = crossing_infos(cmap)
    assert info.ab == (0, 0)
    assert tuple(region_labels(cmap)[f] for f in info.adjacent_faces) == (0, 2, 0, -2)


def test_corner_table_is_single_valued():
    table = figure1b_table(corpus_upto(4, dedup=False).maps)
    assert table[(0, 0)] == (0, 2, 0, -2)
