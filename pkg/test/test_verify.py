import pytest

from verify import SUITES, SuiteReport, run_all, run_suite


@pytest.mark.parametrize('name, n', [
    ('MAIN', 5),
    ('IMAGE', 5),
    ('FIN', 5),
    ('SMOOTHING', 4),
    ('FIG1B', 5),
    ('GAMMA', 10),
    ('VANISH', 12),
    ('RELATIONS', 6),
])
def test_suite_passes(name, n):
    report = run_suite(name, n)
    assert report.ok, report.failures[:5]
    assert report.instances > 0


def test_symbols_cover_every_family():
    report = run_suite('SYMBOLS', 4)
    assert report.ok, report.failures[:5]
    assert any(note.startswith('families:') for note in report.notes)


def test_jumps():
    report = run_suite('JUMPS', 3)
    assert report.ok, report.failures[:5]


def test_second_differences_vanish():
    report = run_suite('ORDER2', 3)
    assert report.ok, report.failures[:5]
    assert report.instances >= 1000


def test_fin_notes_count_trivial_curves():
    report = run_suite('fin', 2)
    assert report.name == 'FIN'
    assert len(report.notes) == 2


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite('NOPE', 2)


def test_run_all_small():
    reports = run_all(2)
    assert [r.name for r in reports] == list(SUITES)
    assert all(r.ok for r in reports)


def test_report_frame():
    report = SuiteReport('DEMO')
    assert report.check('one', 1, 1)
    assert not report.check('two', 1, 2)
    frame = report.to_frame()
    assert list(frame.columns) == ['instance', 'expected', 'got']
    assert frame.iloc[0]['got'] == '2'
    assert report.summary() == 'DEMO: 2 checked, 1 failures'
