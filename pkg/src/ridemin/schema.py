import json

import jsonschema
try:
    from ruamel import yaml
except ModuleNotFoundError:
    yaml = False

from ridemin.algo import ALGORITHMS
from ridemin.errors import SpecError


JSON_SCHEMA = {
    'type': 'object',
    'properties': {
        'instances': {
            'type': 'array',
            'items': {'type': 'string'},  # globs of instance files
        },
        'algorithms': {
            'type': 'array',
            'items': {'type': 'string', 'enum': list(ALGORITHMS)},
        },
        'budget': {
            'type': 'object',
            'properties': {
                'trips': {'type': 'integer', 'minimum': 1},
                'seconds': {'type': 'number', 'exclusiveMinimum': 0},
            },
            'additionalProperties': False,
        },
        'k': {'type': 'integer', 'minimum': 1},
        'jobs': {'type': 'integer', 'minimum': 1},
        'out': {'type': 'string'},
        'summary': {'type': 'string'},
        'allow_invalid': {'type': 'boolean'},
        'logger': {
            'type': 'object',
            'properties': {
                'verbose': {'type': 'boolean'},
            },
        },
    },
    'additionalProperties': False,
}


def get_config(path):
    path = str(path)
    with open(path) as fh:
        if path.endswith('json'):
            return json.load(fh)
        elif (path.endswith('yaml') or path.endswith('yml')) and yaml:
            return yaml.YAML(typ='safe').load(fh)
        else:
            raise SpecError('Unrecognized configuration file type: {}'.format(path.split('.')[-1]))


def validate_config(path):
    conf = get_config(path)
    try:
        jsonschema.validate(conf, JSON_SCHEMA)
    except jsonschema.ValidationError as e:
        raise SpecError(f'Invalid configuration {path}: {e.message}')
    return conf
