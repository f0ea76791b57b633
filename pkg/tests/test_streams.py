import pytest

from ridemin.errors import SpecError
from ridemin.io import open_text, read_instance, write_instance
from ridemin.pytest_utils import chain_instance


def test_failed_write_keeps_previous_file(tmp_path):
    path = tmp_path / 'out.txt'
    path.write_text('before\n')
    with pytest.raises(RuntimeError):
        with open_text(path, 'w') as fh:
            fh.write('half')
            raise RuntimeError('solver failed')
    assert path.read_text() == 'before\n'
    assert list(tmp_path.iterdir()) == [path]


def test_write_creates_directories(tmp_path):
    path = tmp_path / 'runs' / 'chain.txt'
    write_instance(chain_instance([1, 0]), path)
    assert read_instance(path).name == 'chain'


def test_append(tmp_path):
    path = tmp_path / 'trace.txt'
    for line in ('a', 'b'):
        with open_text(path, 'a') as fh:
            fh.write(f'{line}\n')
    assert path.read_text() == 'a\nb\n'


def test_dash_is_stdout(capsys):
    with open_text('-', 'w') as fh:
        fh.write('to stdout\n')
    assert capsys.readouterr().out == 'to stdout\n'


def test_unknown_mode(tmp_path):
    with pytest.raises(SpecError):
        with open_text(tmp_path / 'x.txt', 'rb'):
            pass
