"""
Report documents written by the command line tool. A report is an
ordered list of key/value pairs; the text form has one `key: value` per
line in insertion order and the JSON form is an object with the same
keys in the same order. Nothing time-dependent goes into a report.
"""
import hashlib
import json
from collections import OrderedDict

import numpy as np

from . import __version__


def digest_code(code):
    """sha256 over the degree and the sorted rank list."""
    h = hashlib.sha256()
    h.update(('degree %i\n' % code.degree).encode('ascii'))
    h.update(' '.join(str(int(r)) for r in code.ranks).encode('ascii'))
    return h.hexdigest()


def digest_file(path):
    h = hashlib.sha256()
    with open(path, 'rb') as f:
        h.update(f.read())
    return h.hexdigest()


def _plain(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return OrderedDict((str(k), _plain(v)) for k, v in value.items())
    return value


def _text(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return 'none'
    if isinstance(value, list):
        return '[' + ', '.join(_text(v) for v in value) + ']'
    if isinstance(value, OrderedDict):
        return '{' + ', '.join('%s: %s' % (k, _text(v)) for k, v in value.items()) + '}'
    if isinstance(value, float):
        return repr(value)
    return str(value)


class Report(object):

    def __init__(self, command):
        self._items = OrderedDict()
        self['version'] = __version__
        self['command'] = command

    def __setitem__(self, key, value):
        self._items[key] = _plain(value)

    def __getitem__(self, key):
        return self._items[key]

    def __contains__(self, key):
        return key in self._items

    def keys(self):
        return list(self._items)

    def to_text(self):
        return ''.join('%s: %s\n' % (k, _text(v)) for k, v in self._items.items())

    def to_json(self):
        return json.dumps(self._items, indent=2) + '\n'

    def render(self, as_json=False):
        return self.to_json() if as_json else self.to_text()
