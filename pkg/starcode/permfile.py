"""
Reading and writing .perm files.

A .perm file is UTF-8 text. Lines starting with '#' are comments and
blank lines are skipped. The first data line is `degree <n>`; every
further data line is one permutation as n space-separated integers,
position i holding the image of i. Files are written in increasing
rank order, so equal codes give identical files.
"""
import logging

import numpy as np

from . import perm_core as pc
from .codes import Code

LOG = logging.getLogger(__name__)

DEGREE_LIMIT = 64


class PermFileError(ValueError):

    def __init__(self, message, source='<string>', lineno=None):
        self.message = message
        self.source = source
        self.lineno = lineno
        if lineno is None:
            text = '%s: %s' % (source, message)
        else:
            text = '%s:%i: %s' % (source, lineno, message)
        super(PermFileError, self).__init__(text)


def _data_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield lineno, line


def parse(text, source='<string>'):
    """Parse the contents of a .perm file into a Code."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise PermFileError("missing 'degree <n>' header", source)
    fields = header.split()
    if len(fields) != 2 or fields[0] != 'degree' or not fields[1].isdigit():
        raise PermFileError("expected 'degree <n>', got %r" % header, source, lineno)
    n = int(fields[1])
    if n < 1:
        raise PermFileError("degree must be at least 1", source, lineno)
    if n > DEGREE_LIMIT:
        raise PermFileError("degree %i exceeds the supported maximum %i"
                            % (n, DEGREE_LIMIT), source, lineno)

    words = []
    seen = {}
    expected = list(range(1, n + 1))
    for lineno, line in lines:
        try:
            word = [int(x) for x in line.split()]
        except ValueError:
            raise PermFileError("not a list of integers: %r" % line, source, lineno)
        if len(word) != n:
            raise PermFileError("expected %i entries, got %i" % (n, len(word)),
                                source, lineno)
        if sorted(word) != expected:
            raise PermFileError("%s is not a permutation of 1..%i" % (line, n),
                                source, lineno)
        key = tuple(word)
        if key in seen:
            raise PermFileError("duplicate of line %i" % seen[key], source, lineno)
        seen[key] = lineno
        words.append(word)

    LOG.debug("%s: %i permutations of degree %i", source, len(words), n)
    if len(words) == 0:
        return Code(n, [])
    return Code.from_words(np.array(words, dtype=np.int64), n)


def read(path):
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        lineno = data.count(b'\n', 0, e.start) + 1
        raise PermFileError("not valid UTF-8", str(path), lineno)
    return parse(text, source=str(path))


def parse_word(text):
    """A single permutation given inline, e.g. '2 1 3 4' or '2,1,3,4'."""
    try:
        word = [int(x) for x in text.replace(',', ' ').split()]
    except ValueError:
        raise pc.PermutationError("not a list of integers: %r" % text)
    return pc.Permutation(word)


def format_code(code, comments=()):
    lines = ['# ' + c for c in comments]
    lines.append('degree %i' % code.degree)
    lines.extend(' '.join(str(x) for x in w) for w in code.words.tolist())
    return '\n'.join(lines) + '\n'


def write(path, code, comments=()):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_code(code, comments))
    LOG.info("wrote %i permutations of degree %i to %s", len(code), code.degree, path)
