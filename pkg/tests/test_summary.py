import json

import pandas as pd
import pytest

from ridemin.algo import RunReport
from ridemin.anlz import read_reports, reports_to_frame, summarize, write_summary
from ridemin.errors import SpecError
from ridemin.io import get_report_writer
from ridemin.main import add_ratios, hard_failures


@pytest.fixture
def reports():
    rows = [
        RunReport('a', 'exact', drivers=2, distance=5, passengers=3, seconds=0.5, valid=True),
        RunReport('a', 'phase', drivers=3, distance=6, passengers=2, seconds=0.1, valid=True),
        RunReport('b', 'exact', status='skipped: budget'),
        RunReport('b', 'phase', drivers=4, distance=9, passengers=1, seconds=0.3, valid=False, status='invalid'),
    ]
    add_ratios(rows)
    return rows


def test_ratios(reports):
    assert reports[0].ratio == 1.0
    assert reports[1].ratio == 1.5
    assert reports[3].ratio is None


def test_hard_failures(reports):
    assert hard_failures(reports) == [reports[3]]
    assert hard_failures(reports, allow_invalid=True) == []
    assert hard_failures([RunReport('c', 'phase', status='error: boom')])


def test_summarize(reports):
    summary = summarize(reports_to_frame(reports)).set_index('algorithm')
    assert summary.loc['exact', 'runs'] == 2
    assert summary.loc['exact', 'solved'] == 1
    assert summary.loc['exact', 'skipped'] == 1
    assert summary.loc['phase', 'invalid'] == 1
    assert summary.loc['phase', 'mean_drivers'] == 3.5
    assert summary.loc['phase', 'max_ratio'] == 1.5


def test_summarize_empty():
    assert summarize(reports_to_frame([])).empty


def test_csv_round_trip(reports, tmp_path):
    path = tmp_path / 'report.csv'
    with get_report_writer(path) as fh:
        fh.write_all(reports)
    df = read_reports(path)
    assert list(df['algorithm']) == ['exact', 'phase', 'exact', 'phase']
    summary = write_summary(df, tmp_path / 'summary.csv')
    assert list(summary['algorithm']) == ['exact', 'phase']
    assert pd.read_csv(tmp_path / 'summary.csv')['runs'].tolist() == [2, 2]


def test_jsonl(reports, tmp_path):
    path = tmp_path / 'report.jsonl'
    with get_report_writer(path) as fh:
        fh.write_all(reports)
    assert json.loads(path.read_text().splitlines()[1])['drivers'] == 3
    assert len(read_reports(path)) == 4


def test_tsv_header(reports, tmp_path):
    path = tmp_path / 'report.tsv'
    with get_report_writer(path) as fh:
        fh.write(reports[0])
    assert path.read_text().splitlines()[1].split('\t')[0] == 'instance'


def test_unknown_report_type(tmp_path):
    with pytest.raises(SpecError):
        get_report_writer(tmp_path / 'report.xlsx')
    with pytest.raises(SpecError):
        read_reports(tmp_path / 'report.xlsx')


def test_jsonl_carries_extras(tmp_path):
    path = tmp_path / 'runs.jsonl'
    report = RunReport('x', 'phase', status='error:parse', valid=False, extras={'error': 'line 5: bad capacity'})
    with get_report_writer(path, mode='a') as fh:
        fh.write(report)
    with get_report_writer(path, mode='a') as fh:
        fh.write(report)
    rows = [json.loads(line) for line in path.read_text().splitlines()]
    assert len(rows) == 2
    assert rows[0]['error'] == 'line 5: bad capacity'
    assert rows[0]['status'] == 'error:parse'


def test_csv_rows_stay_on_one_line(tmp_path):
    path = tmp_path / 'report.csv'
    with get_report_writer(path) as fh:
        fh.write(RunReport('x', 'phase', status='error:spec\nsecond line'))
    assert path.read_text().splitlines()[2].endswith('error:spec ~~second line')
