import json

import pytest

from ridemin.algo import ALGORITHMS
from ridemin.errors import SpecError
from ridemin.schema import JSON_SCHEMA, validate_config


def write(tmp_path, conf, name='compare.json'):
    path = tmp_path / name
    path.write_text(json.dumps(conf))
    return path


def test_valid_config(tmp_path):
    conf = {'instances': ['data/*.txt'], 'algorithms': ['phase', 'exact'], 'budget': {'trips': 20, 'seconds': 5},
            'k': 2, 'jobs': 2, 'allow_invalid': True, 'logger': {'verbose': True}}
    assert validate_config(write(tmp_path, conf)) == conf


@pytest.mark.parametrize('conf', [
    {'algorithms': ['greedy']},
    {'budget': {'trips': 0}},
    {'budget': {'seconds': 0}},
    {'k': 0},
    {'color': 'blue'},
])
def test_invalid_config(tmp_path, conf):
    with pytest.raises(SpecError):
        validate_config(write(tmp_path, conf))


def test_unknown_extension(tmp_path):
    with pytest.raises(SpecError):
        validate_config(write(tmp_path, {}, name='compare.ini'))


def test_yaml_config(tmp_path):
    pytest.importorskip('ruamel.yaml')
    path = tmp_path / 'compare.yaml'
    path.write_text('algorithms:\n  - phase\nk: 1\n')
    assert validate_config(path) == {'algorithms': ['phase'], 'k': 1}


def test_algorithm_enum_follows_solvers():
    assert JSON_SCHEMA['properties']['algorithms']['items']['enum'] == list(ALGORITHMS)
