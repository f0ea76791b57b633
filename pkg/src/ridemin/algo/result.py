REPORT_HEADER = ('instance', 'algorithm', 'drivers', 'distance', 'passengers',
                 'seconds', 'valid', 'ratio', 'status')


class RunReport:
    """One solver run on one instance."""

    __slots__ = ['instance', 'algorithm', 'drivers', 'distance', 'passengers',
                 'seconds', 'valid', 'ratio', 'status', '_extras']

    def __init__(self, instance, algorithm, drivers=None, distance=None, passengers=None,
                 seconds=None, valid=None, ratio=None, status='ok', extras=None):
        self.instance = instance
        self.algorithm = algorithm
        self.drivers = drivers
        self.distance = distance
        self.passengers = passengers
        self.seconds = seconds
        self.valid = valid
        self.ratio = ratio
        self.status = status
        if not extras:
            self._extras = dict()
        elif isinstance(extras, dict):
            self._extras = dict(extras)
        else:
            self._extras = {'extras': extras}

    @classmethod
    def skipped(cls, instance, algorithm, reason):
        return cls(instance, algorithm, status=f'skipped: {reason}')

    @property
    def extras(self):
        return self._extras

    def is_skip(self):
        return self.status.startswith('skipped')

    def sort_key(self):
        return str(self.instance), self.algorithm

    def as_dict(self, header=REPORT_HEADER):
        d = {}
        for name in header:
            value = getattr(self, name)
            if isinstance(value, float):
                value = round(value, 4)
            d[name] = value
        return d

    def as_row(self, header=REPORT_HEADER):
        """Row formatter in the shape the file wrappers expect."""
        return {k: '' if v is None else v for k, v in self.as_dict(header).items()}

    def __repr__(self):
        return f'<RunReport:{self.instance}:{self.algorithm}:{self.drivers}:{self.status}>'

    def __str__(self):
        return repr(self)

    def __bool__(self):
        return bool(self.valid) and not self.is_skip()
