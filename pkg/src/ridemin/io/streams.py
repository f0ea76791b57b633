"""
Text streams for instance, solution, trace and report files.

'-' (or None) reads stdin and writes stdout. Files written with mode 'w'
go to a sibling ``.part`` file that replaces the target only once the block
finishes, so a run that fails midway leaves any earlier file untouched.
"""
import contextlib
import os
import sys
from pathlib import Path
from typing import Iterator, Optional, TextIO, Union

from ridemin.errors import SpecError

PathLike = Union[str, Path]


def is_stdio(path: Optional[PathLike]) -> bool:
    return path is None or str(path) == '-'


@contextlib.contextmanager
def open_text(path: Optional[PathLike] = None, mode: str = 'r', *, encoding='utf8',
              newline: Optional[str] = None) -> Iterator[TextIO]:
    """Open a text stream for reading ('r'), replacing ('w') or appending ('a')."""
    if mode not in ('r', 'w', 'a'):
        raise SpecError(f'Unsupported stream mode: {mode!r}')
    if is_stdio(path):
        yield sys.stdin if mode == 'r' else sys.stdout
        return
    path = Path(path)
    if mode == 'r':
        with open(path, encoding=encoding, newline=newline) as fh:
            yield fh
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    if mode == 'a':
        with open(path, 'a', encoding=encoding, newline=newline) as fh:
            yield fh
        return
    part = path.with_name(f'.{path.name}.part')
    try:
        with open(part, 'w', encoding=encoding, newline=newline) as fh:
            yield fh
        os.replace(part, path)
    finally:
        if part.exists():
            part.unlink()
