import json

import pytest

from curvemap import canonical_code, gamma_code
from enumeration import (census, census_to_jsonl, corpus_upto, enumerate_curves, enumerate_sites,
                         gauss_words, rotation_representatives)
from invariants import universal_report


def test_word_counts():
    assert list(gauss_words(0)) == [()]
    assert len(list(gauss_words(2))) == 3
    assert len(list(gauss_words(3))) == 15
    assert sorted(rotation_representatives(2)) == [(1, 1, 2, 2), (1, 2, 1, 2)]


@pytest.mark.parametrize('n, dedup, expected', [
    (0, True, 1),
    (1, True, 1),
    (1, False, 2),
    (2, True, 3),
    (2, False, 4),
    (3, True, 9),
    (3, False, 18),
    (4, True, 37),
    (4, False, 54),
])
def test_small_counts(n, dedup, expected):
    assert len(enumerate_curves(n, dedup=dedup)) == expected


def test_bounds():
    with pytest.raises(ValueError):
        enumerate_curves(-1)
    with pytest.raises(ValueError):
        enumerate_curves(7)


def test_gamma_curves_are_present():
    codes = {code for code, _ in corpus_upto(4)}
    for k in range(5):
        assert canonical_code(gamma_code(k)) in codes


def test_classes_are_distinct_and_reportable():
    corpus = corpus_upto(4)
    codes = [code for code, _ in corpus]
    assert len(codes) == len(set(codes))
    for _, cmap in corpus:
        universal_report(cmap)


def test_enumeration_is_deterministic():
    first = [code for code, _ in enumerate_curves(3)]
    second = [code for code, _ in enumerate_curves(3)]
    assert first == second


def test_site_counts():
    assert len(enumerate_sites(corpus_upto(0).maps[0])) == 2
    one_curl = enumerate_curves(1).maps[0]
    assert len(enumerate_sites(one_curl)) == 5


def test_census_rows():
    table = census(2)
    assert len(table) == 5
    assert list(table.columns[:4]) == ['code', 'crossings', 'class', 'F']
    circle = table[table['code'] == 'gc:'].iloc[0]
    assert circle['F'] == 'Y[-1] + Y[1]'
    assert circle['class'] == 'od'
    two_curls = table[table['code'] == 'gc: 1+ 1+ 2+ 2+'].iloc[0]
    assert two_curls['X'] == [[0, 1, 2]]


def test_census_row_count_up_to_four_crossings():
    table = census(4)
    assert len(table) == 51
    assert table.groupby('crossings').size().to_dict() == {0: 1, 1: 1, 2: 3, 3: 9, 4: 37}


def test_census_jsonl(tmp_path):
    out = tmp_path / 'nested' / 'census.jsonl'
    rows = census_to_jsonl(census(2), out)
    lines = out.read_text().splitlines()
    assert rows == len(lines) == 5
    records = [json.loads(line) for line in lines]
    circle = next(r for r in records if r['code'] == 'gc:')
    assert circle['Y'] == [[-1, '1'], [1, '1']]
    assert circle['crossings'] == 0
