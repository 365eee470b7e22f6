import pytest

from codec import SignedGaussCode, parse_gauss
from curvemap import build_map, canonical_code, canonical_form, edge_sides, faces, gamma_code
from enumeration import corpus_upto, enumerate_sites
from invariants import XYVector, F, psi_vector
from singular import (NEG, POS, TANGENCY, TRIPLE, EdgeSide, InvalidSite, SiteDescriptor, classify, f1, f2,
                      face_of_side, make_singular, make_singular_pair, resolution_code, resolve,
                      sites_independent, tangency_sites, triangle_corners, triple_site_at, triple_sites)
from symbols import f1_of_symbol, ja, jb, jplus, parse_symbol, symbol_class

CIRCLE = build_map(SignedGaussCode((), {}))
X, Y = XYVector.X, XYVector.Y


def circle_site(side):
    return SiteDescriptor.tangency(0 if side == 'L' else 1, EdgeSide(0, side), EdgeSide(0, side))


def test_circle_sites():
    sites = tangency_sites(CIRCLE)
    assert sites == [circle_site('L'), circle_site('R')]
    assert triple_sites(CIRCLE) == []


def test_fold_into_the_left_face():
    s = make_singular(CIRCLE, circle_site('L'))
    assert classify(s) == jb(0, 0)
    mirrored_two_curls = SignedGaussCode((1, 1, 2, 2), {1: -1, 2: -1})
    assert canonical_form(resolve(s, POS)) == canonical_code(mirrored_two_curls)
    assert resolve(s, NEG).n_crossings == 0
    assert f1(s) == f1_of_symbol(jb(0, 0))


def test_fold_into_the_right_face():
    s = make_singular(CIRCLE, circle_site('R'))
    assert classify(s) == ja(0, 0)
    assert canonical_form(resolve(s, POS)) == canonical_code(gamma_code(2))
    assert f1(s) == 2 * X(0, 1) + Y(-1) + Y(3)


def test_one_curl_sites():
    cmap = build_map(gamma_code(1))
    sites = enumerate_sites(cmap)
    assert len(sites) == 5
    assert all(site.kind == TANGENCY for site in sites)
    (direct,) = [site for site in sites if site.is_direct]
    assert direct.sides == (EdgeSide(0, 'L'), EdgeSide(1, 'R'))

    s = make_singular(cmap, direct)
    assert classify(s) == jplus(0, 0)
    assert resolution_code(s, POS) == parse_gauss('gc: 1+ 2- 3+ 1+ 2- 3+')
    assert f1(s) == 2 * X(0, 0) + 2 * Y(0)


def test_three_curls_triangle():
    cmap = build_map(gamma_code(3))
    (site,) = triple_sites(cmap)
    assert site.kind == TRIPLE
    s = make_singular(cmap, site)
    assert classify(s) == parse_symbol('S[0,0,0]')
    assert f1(s) == 3 * X(0, 0) - 3 * X(0, 2) + Y(-2) - Y(4)
    assert canonical_form(resolve(s, POS)) == canonical_code(parse_gauss('gc: 1- 2+ 3- 1- 2+ 3-'))
    assert resolve(s, NEG).word == cmap.word


def test_flipped_triangle_has_the_same_symbol():
    s = make_singular(build_map(gamma_code(3)), triple_sites(build_map(gamma_code(3)))[0])
    flipped = resolve(s, POS)
    symbols = {classify(make_singular(flipped, site)) for site in triple_sites(flipped)}
    assert parse_symbol('S[0,0,0]') in symbols


def test_triple_site_at_a_corner():
    cmap = build_map(gamma_code(3))
    table = faces(cmap)
    (site,) = triple_sites(cmap, table)
    corners = triangle_corners(cmap, table, site.face)
    for crossing in corners:
        assert triple_site_at(cmap, crossing, site.sides[0], table) == site


def test_invalid_sites():
    two_curls = build_map(gamma_code(2))
    with pytest.raises(InvalidSite):
        triple_site_at(two_curls, 1, EdgeSide(0, 'L'))
    with pytest.raises(InvalidSite):
        make_singular(CIRCLE, SiteDescriptor.tangency(0, EdgeSide(0, 'R'), EdgeSide(0, 'R')))
    with pytest.raises(InvalidSite):
        make_singular(CIRCLE, SiteDescriptor.tangency(5, EdgeSide(0, 'L'), EdgeSide(0, 'L')))
    face = face_of_side(two_curls, faces(two_curls), EdgeSide(0, 'L'))
    with pytest.raises(InvalidSite):
        make_singular(two_curls, SiteDescriptor.triple(face, [EdgeSide(0, 'L')]))


def test_bad_choices():
    s = make_singular(CIRCLE, circle_site('L'))
    with pytest.raises(ValueError):
        resolve(s, (POS, NEG))
    with pytest.raises(ValueError):
        resolve(s, 'UP')
    with pytest.raises(ValueError):
        f2(s)


def test_resolutions_over_the_corpus():
    for code, cmap in corpus_upto(3):
        for site in enumerate_sites(cmap):
            s = make_singular(cmap, site)
            pos, neg = resolve(s, POS), resolve(s, NEG)
            assert pos.n_crossings - neg.n_crossings == (2 if site.kind == TANGENCY else 0), (code, site)
            assert code in (canonical_form(pos), canonical_form(neg))
            if site.kind == TANGENCY:
                assert canonical_form(neg) == code
            symbol = classify(s)
            assert f1(s) == f1_of_symbol(symbol), (code, site)
            assert psi_vector(F(pos) - F(neg)) == (0,) * 6
            assert symbol_class(symbol) in ('ev', 'od')


def test_opposite_folds_on_the_circle():
    s = make_singular_pair(CIRCLE, circle_site('L'), circle_site('R'))
    assert f2(s) == XYVector()


def test_fold_beside_a_triangle():
    cmap = build_map(gamma_code(3))
    table = faces(cmap)
    (triangle,) = triple_sites(cmap, table)
    side = next(EdgeSide(e, 'L') for e in range(cmap.n_visits) if e not in triangle.edges)
    fold = SiteDescriptor.tangency(face_of_side(cmap, table, side), side, side)
    assert sites_independent(cmap, triangle, fold, table)
    assert f2(make_singular_pair(cmap, triangle, fold)) == XYVector()


def test_a_site_is_not_independent_of_itself():
    site = circle_site('L')
    assert not sites_independent(CIRCLE, site, site)
    with pytest.raises(InvalidSite):
        make_singular_pair(CIRCLE, site, site)


def test_interleaved_tangencies_interfere():
    found = False
    for _, cmap in corpus_upto(3):
        table = faces(cmap)
        for face_id in table.ids:
            boundary = [EdgeSide(e, s) for e, s in edge_sides(cmap, table, face_id)]
            if len({es.edge for es in boundary[:4]}) < 4:
                continue
            b0, b1, b2, b3 = boundary[:4]
            crossing_pair = (SiteDescriptor.tangency(face_id, b0, b2), SiteDescriptor.tangency(face_id, b1, b3))
            nested_pair = (SiteDescriptor.tangency(face_id, b0, b1), SiteDescriptor.tangency(face_id, b2, b3))
            assert not sites_independent(cmap, *crossing_pair, table)
            assert sites_independent(cmap, *nested_pair, table)
            assert f2(make_singular_pair(cmap, *nested_pair, table)) == XYVector()
            found = True
    assert found


def test_pairs_on_small_curves_have_no_second_difference():
    for code, cmap in corpus_upto(2, dedup=False):
        sites = enumerate_sites(cmap)
        for i, first in enumerate(sites):
            for second in sites[i + 1:]:
                if sites_independent(cmap, first, second):
                    assert f2(make_singular_pair(cmap, first, second)) == XYVector(), (code, first, second)
