import random
from fractions import Fraction

import pytest

from codec import SignedGaussCode
from curvemap import build_map, gamma_code, mirror_map, regular_homotopy_class
from enumeration import corpus_upto, enumerate_sites
from invariants import (JMINUS, JPLUS, PSI, ST, InvariantViolation, XYVector, F, apply, arnold,
                        f_J, f_S, f_SJ, fin_equalities, from_Z, h_form, mirror_vector, phi_ab, project_PZ,
                        psi_vector, supports_match_class, to_Z, universal_report)
from singular import NEG, POS, TRIPLE, make_singular, resolve

X, Y = XYVector.X, XYVector.Y
CIRCLE = SignedGaussCode((), {})


def test_circle():
    assert F(build_map(CIRCLE)) == Y(-1) + Y(1)


def test_one_curl():
    assert F(build_map(gamma_code(1))) == X(0, 0) + Y(-2) + Y(0) + Y(2)


def test_five_curls():
    assert F(build_map(gamma_code(5))) == X(0, 4, 5) + Y(2, 5) + Y(4) + Y(6)


@pytest.mark.parametrize('k', range(11))
def test_gamma_closed_form(k):
    expected = X(0, k - 1, k) + Y(k - 3, k) + Y(k - 1) + Y(k + 1)
    assert F(build_map(gamma_code(k))) == expected


def test_psi_on_small_curves():
    assert psi_vector(F(build_map(CIRCLE))) == (2, 0, 0, 0, 0, 0)
    assert psi_vector(F(build_map(gamma_code(1)))) == (0, 2, 0, 0, 0, 0)
    assert apply(PSI[4], Y(3)) == Fraction(1, 3)


def test_arnold_values():
    circle = build_map(CIRCLE)
    curl = build_map(gamma_code(1))
    assert arnold(curl, ST) == Fraction(1, 3)
    assert arnold(circle, JMINUS) == Fraction(-1, 2)
    assert arnold(circle, JPLUS) == Fraction(-1, 2)
    # k1 shifts by k1 * psi1 = 2 * k1 on the circle
    assert arnold(circle, JPLUS, k1=Fraction(1, 2)) == Fraction(1, 2)


def test_z_coordinates_of_a_curl():
    v = F(build_map(gamma_code(1)))
    assert phi_ab(0, 0) == -Y(0)
    assert to_Z(v) == X(0, 0) + Y(-2) + Y(2)
    assert project_PZ(X(0, 0)) == -Y(0)
    assert project_PZ(v) == Y(-2) + Y(2)


def test_z_round_trip():
    rng = random.Random(11)
    for _ in range(1000):
        v = XYVector()
        for _ in range(4):
            v += X(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-3, 3))
            v += Y(rng.randint(-7, 7), Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        assert from_Z(to_Z(v)) == v
        assert project_PZ(project_PZ(v)) == project_PZ(v)


def test_psi_vanishes_on_z():
    for a in range(-12, 13):
        for b in range(-12, 13):
            assert psi_vector(X(a, b) - phi_ab(a, b)) == (0,) * 6


def test_main_identities_on_corpus():
    for code, cmap in corpus_upto(4, dedup=False):
        v = F(cmap)
        cls = regular_homotopy_class(cmap)
        assert psi_vector(v)[2:] == (0, 0, 0, 0), code
        assert psi_vector(v)[:2] == ((2, 0) if cls == 'od' else (0, 2)), code
        assert supports_match_class(v, cls), code
        assert fin_equalities(cmap, value=v) == (0, 0), code


def test_mirror_commutes_with_f():
    for code, cmap in corpus_upto(3, dedup=False):
        assert F(mirror_map(cmap)) == mirror_vector(F(cmap)), code


def test_smoothing_forms():
    weights = [lambda d: 1, lambda d: d, lambda d: d * d, lambda d: d % 2]
    for _, cmap in corpus_upto(3):
        for h in weights:
            lhs, rhs = h_form(cmap, h)
            assert lhs == rhs
    assert h_form(build_map(CIRCLE), lambda d: 1) == (2, 2)


def test_report_fields():
    report = universal_report(build_map(gamma_code(1)))
    assert report.code == 'gc: 1+ 1+'
    assert report.homotopy_class == 'ev'
    assert report.st == Fraction(1, 3)
    data = report.to_dict()
    assert data['X'] == [[0, 0, 1]]
    assert data['Y'] == [[-2, 1], [0, 1], [2, 1]]


def test_report_refuses_a_broken_value(monkeypatch):
    import invariants
    monkeypatch.setattr(invariants, 'F', lambda cmap: Y(1))
    with pytest.raises(InvariantViolation):
        invariants.universal_report(build_map(CIRCLE))


def test_vector_text():
    assert str(2 * X(0, 0) + 2 * Y(0)) == '2*X[0,0] + 2*Y[0]'
    assert str(XYVector()) == '0'


def test_universal_s_and_j_invariants_across_sites():
    checked = 0
    for code, cmap in corpus_upto(3):
        for site in enumerate_sites(cmap):
            s = make_singular(cmap, site)
            pos, neg = resolve(s, POS), resolve(s, NEG)
            if site.kind == TRIPLE:
                assert f_J(pos) == f_J(neg), (code, site)
            else:
                assert f_S(pos) == f_S(neg), (code, site)
            assert f_SJ(pos) != f_SJ(neg), (code, site)
            checked += 1
    assert checked > 0


def test_universal_invariants_of_a_curl():
    curl = build_map(gamma_code(1))
    v = F(curl)
    assert f_S(curl) == project_PZ(v)
    j = f_J(curl)
    assert j[:2] == (0, 2)
    assert len(j) == 8
    assert f_SJ(curl) == (project_PZ(v), j[2:])
