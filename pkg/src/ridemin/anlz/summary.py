"""
Per-algorithm summaries of compare reports.
"""
import pathlib
from typing import Iterable, Union

from loguru import logger

try:
    import pandas as pd
except ImportError:
    logger.warning('Need to install pandas: `pip install pandas`.')
    raise

from ridemin.algo.result import REPORT_HEADER, RunReport
from ridemin.errors import SpecError

SUMMARY_COLUMNS = ('algorithm', 'runs', 'solved', 'skipped', 'invalid',
                   'mean_drivers', 'mean_distance', 'max_ratio', 'mean_seconds')


def reports_to_frame(reports: Iterable[RunReport]) -> 'pd.DataFrame':
    return pd.DataFrame([r.as_dict() for r in reports], columns=list(REPORT_HEADER))


def read_reports(path: Union[str, pathlib.Path]) -> 'pd.DataFrame':
    path = pathlib.Path(path)
    if path.name.endswith('jsonl'):
        df = pd.read_json(path, lines=True)
    elif path.name.endswith('csv'):
        df = pd.read_csv(path, comment='#')
    else:
        raise SpecError(f'Unable to interpret filetype of {path}; expected "jsonl" or "csv".')
    return df


def summarize(df: 'pd.DataFrame') -> 'pd.DataFrame':
    """One row per algorithm: counts, mean drivers and distance, worst ratio."""
    if df.empty:
        return pd.DataFrame(columns=list(SUMMARY_COLUMNS))
    df = df.copy()
    df['status'] = df['status'].fillna('ok').astype(str)
    for col in ('drivers', 'distance', 'ratio', 'seconds'):
        df[col] = pd.to_numeric(df[col], errors='coerce')
    df['skip'] = df['status'].str.startswith('skipped')
    df['solved'] = df['status'] == 'ok'
    df['invalid'] = df['status'] == 'invalid'
    grouped = df.groupby('algorithm', sort=True)
    res = pd.DataFrame({
        'runs': grouped.size(),
        'solved': grouped['solved'].sum(),
        'skipped': grouped['skip'].sum(),
        'invalid': grouped['invalid'].sum(),
        'mean_drivers': grouped['drivers'].mean(),
        'mean_distance': grouped['distance'].mean(),
        'max_ratio': grouped['ratio'].max(),
        'mean_seconds': grouped['seconds'].mean(),
    }).reset_index()
    return res[list(SUMMARY_COLUMNS)]


def write_summary(df: 'pd.DataFrame', outpath: Union[str, pathlib.Path]):
    summary = summarize(df)
    summary.to_csv(outpath, index=False, float_format='%.4f')
    logger.info(f'Wrote summary of {len(df)} runs to {outpath}')
    return summary
