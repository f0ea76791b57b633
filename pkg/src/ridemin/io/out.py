"""
Run report writers: one RunReport per line as CSV, TSV or JSONL.
"""
import csv
import json
from typing import Iterable

from ridemin.algo.result import REPORT_HEADER, RunReport
from ridemin.errors import SpecError
from ridemin.io.streams import is_stdio, open_text

REPORT_VERSION = '# ridemin report v1'


def _one_line(value):
    return str(value).replace('\n', ' ~~')


class ReportWriter:
    """Writes RunReports to a path or stdout ('-'); `header` picks and orders the columns."""

    def __init__(self, file='-', header=REPORT_HEADER, mode='w'):
        self.fp = file
        self.header = tuple(header)
        self.mode = mode
        self.fh = None
        self._ctx = None

    def __enter__(self):
        self._ctx = open_text(self.fp, self.mode, newline='')
        self.fh = self._ctx.__enter__()
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        return self._ctx.__exit__(exc_type, exc_val, exc_tb)

    def start(self):
        pass

    def write(self, report: RunReport):
        raise NotImplementedError

    def write_all(self, reports: Iterable[RunReport]):
        for report in reports:
            self.write(report)


class CsvReportWriter(ReportWriter):
    """Version comment, header row, then one row per report."""
    delimiter = ','

    def start(self):
        self.writer = csv.writer(self.fh, delimiter=self.delimiter, lineterminator='\n')
        self.fh.write(REPORT_VERSION + '\n')
        self.writer.writerow(self.header)

    def write(self, report: RunReport):
        self.writer.writerow(_one_line(v) for v in report.as_row(self.header).values())


class TsvReportWriter(CsvReportWriter):
    delimiter = '\t'


class JsonlReportWriter(ReportWriter):
    """One JSON object per report; extras such as violations ride along."""

    def write(self, report: RunReport):
        row = report.as_dict(self.header)
        row.update(report.extras)
        self.fh.write(json.dumps(row) + '\n')


WRITERS = {'csv': CsvReportWriter, 'tsv': TsvReportWriter, 'jsonl': JsonlReportWriter}


def get_report_writer(name='-', kind=None, **kwargs) -> ReportWriter:
    """Pick a writer from `kind` or the file extension; stdout gets CSV."""
    name = str(name)
    if kind is None:
        kind = 'csv' if is_stdio(name) else name.rsplit('.', 1)[-1]
    try:
        return WRITERS[kind](name, **kwargs)
    except KeyError:
        raise SpecError(f'Unrecognized report file type: {name}')


def read_report_csv(path):
    """Rows of a CSV report as dicts (the version comment is skipped)."""
    with open_text(path, newline='') as fh:
        lines = [line for line in fh if not line.startswith('#')]
    return list(csv.DictReader(lines))
