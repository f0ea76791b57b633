import re

_DIGITS = re.compile(r'(\d+)')


def natural_key(value):
    """Sort key that orders 'u2' before 'u10'."""
    return tuple(int(tok) if tok.isdigit() else tok for tok in _DIGITS.split(str(value)))
