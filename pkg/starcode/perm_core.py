"""
Permutations of {1..n} in one-line notation.

A permutation is stored as its image word: word[i-1] is the image of i.
Composition applies the right factor first, (p*q)(x) = p(q(x)).

Besides the scalar Permutation class, this module carries the
vectorized helpers used everywhere else: a batch of m permutations
of degree n is an integer array of shape (m, n), and ranks are the
positions of the words in lexicographic order (Lehmer code).
"""
import itertools
import math
from collections import namedtuple

import numpy as np

DEGREE_CAP = 9
# ranks of larger degrees no longer fit an int64
INT64_DEGREE = 20


class PermutationError(ValueError):
    pass


class CapExceededError(ValueError):
    pass


CycleType = namedtuple('CycleType', ['lengths', 'fixed_points'])


class Permutation(object):
    """
    Immutable permutation of {1..n} given by its image word.
    """

    def __init__(self, word):
        word = tuple(int(x) for x in word)
        n = len(word)
        if n < 1:
            raise PermutationError("a permutation needs degree at least 1")
        if sorted(word) != list(range(1, n + 1)):
            raise PermutationError(
                "%s is not a bijection on {1..%i}" % (list(word), n))
        self._word = word

    @property
    def degree(self):
        return len(self._word)

    @property
    def word(self):
        return self._word

    def __call__(self, x):
        return self._word[x - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._word == other._word

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._word < other._word

    def __hash__(self):
        return hash(self._word)

    def __len__(self):
        return len(self._word)

    def __repr__(self):
        return 'Permutation(%s)' % list(self._word)

    def __str__(self):
        cycles = self.cycles()
        if len(cycles) == 0:
            return '()'
        return ''.join('(' + ' '.join(str(x) for x in c) + ')' for c in cycles)

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        cycles = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                cycles.append(tuple(cycle))
        return cycles

    def preimage(self, x):
        return self._word.index(x) + 1


def _check_degrees(p, q):
    if p.degree != q.degree:
        raise PermutationError(
            "degree mismatch: %i and %i" % (p.degree, q.degree))


def identity(n):
    if n < 1:
        raise PermutationError("degree must be at least 1, got %i" % n)
    return Permutation(range(1, n + 1))


def compose(p, q):
    """p*q, with q applied first."""
    _check_degrees(p, q)
    return Permutation(p._word[x - 1] for x in q._word)


def inverse(p):
    word = [0] * p.degree
    for i, x in enumerate(p.word):
        word[x - 1] = i + 1
    return Permutation(word)


def transposition(n, a, b):
    if not (1 <= a <= n and 1 <= b <= n):
        raise PermutationError(
            "points %i, %i out of range for degree %i" % (a, b, n))
    if a == b:
        raise PermutationError("a transposition needs two distinct points")
    word = list(range(1, n + 1))
    word[a - 1], word[b - 1] = b, a
    return Permutation(word)


def from_cycles(n, cycles):
    """Build a permutation of degree n from disjoint cycles of 1-based points."""
    word = list(range(1, n + 1))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if not 1 <= x <= n:
                raise PermutationError(
                    "point %i out of range for degree %i" % (x, n))
            if word[x - 1] != x:
                raise PermutationError("cycles must be disjoint")
            word[x - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(word)


def conjugate(p, by):
    """by * p * by^-1"""
    _check_degrees(p, by)
    return compose(compose(by, p), inverse(by))


def cycle_type(p):
    lengths = sorted(len(c) for c in p.cycles())
    return CycleType(tuple(lengths), p.degree - sum(lengths))


def is_pure_cycle_of_length(p, m):
    if m < 2:
        raise PermutationError("cycle length must be at least 2, got %i" % m)
    return cycle_type(p) == CycleType((m,), p.degree - m)


def rank(p):
    return int(rank_words(np.asarray(p.word)[None, :])[0])


def unrank(n, k):
    if not 0 <= k < math.factorial(n):
        raise PermutationError(
            "rank %i out of range for degree %i" % (k, n))
    return Permutation(unrank_words(n, [k])[0])


def all_permutations(n, cap=DEGREE_CAP):
    """Every permutation of degree n, lexicographically (rank order)."""
    if n > cap:
        raise CapExceededError(
            "degree %i exceeds the enumeration cap %i" % (n, cap))
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


# Batch helpers. Words are 1-based integer arrays of shape (m, n).

def rank_dtype(n):
    return np.int64 if n <= INT64_DEGREE else object


def factorials(n):
    return [math.factorial(k) for k in range(n + 1)]


def rank_words(words):
    """Lexicographic ranks of a batch of words."""
    words = np.atleast_2d(np.asarray(words, dtype=np.int64))
    m, n = words.shape
    fact = factorials(n)
    ranks = np.zeros(m, dtype=rank_dtype(n))
    for i in range(n - 1):
        smaller = (words[:, i + 1:] < words[:, i:i + 1]).sum(axis=1)
        ranks += smaller.astype(ranks.dtype) * fact[n - 1 - i]
    return ranks


def unrank_words(n, ranks):
    """Inverse of rank_words."""
    ranks = np.array(ranks, dtype=rank_dtype(n)).ravel()
    m = len(ranks)
    fact = factorials(n)
    words = np.empty((m, n), dtype=np.int64)
    available = np.ones((m, n), dtype=bool)
    rows = np.arange(m)
    for i in range(n):
        digit = (ranks // fact[n - 1 - i]).astype(np.int64)
        ranks = ranks % fact[n - 1 - i]
        counts = np.cumsum(available, axis=1)
        column = np.argmax((counts == digit[:, None] + 1) & available, axis=1)
        words[:, i] = column + 1
        available[rows, column] = False
    return words


def all_words(n, cap=DEGREE_CAP):
    """All n! words as one array, in rank order."""
    if n > cap:
        raise CapExceededError(
            "degree %i exceeds the enumeration cap %i" % (n, cap))
    return np.array(list(itertools.permutations(range(1, n + 1))),
                    dtype=np.int64).reshape(-1, n)


def compose_words(p, q):
    """
    Batch composition p*q (q applied first). Either argument may be a
    single word of shape (n,), which is broadcast against the other.
    """
    p = np.asarray(p, dtype=np.int64)
    q = np.asarray(q, dtype=np.int64)
    if p.shape[-1] != q.shape[-1]:
        raise PermutationError(
            "degree mismatch: %i and %i" % (p.shape[-1], q.shape[-1]))
    if p.ndim == 1:
        return p[q - 1]
    if q.ndim == 1:
        return p[:, q - 1]
    return np.take_along_axis(p, q - 1, axis=-1)


def inverse_words(words):
    words = np.asarray(words, dtype=np.int64)
    inv = np.empty_like(words)
    points = np.broadcast_to(np.arange(1, words.shape[-1] + 1), words.shape)
    np.put_along_axis(inv, words - 1, points, axis=-1)
    return inv


def preimage_of_one(words):
    """For each word, the point mapped to 1."""
    words = np.atleast_2d(words)
    return np.argmax(words == 1, axis=1) + 1
