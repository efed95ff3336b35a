"""
Codes and perfect bitrades in the Star graph, their verification, and
the constructions built on Stab_1 and PGL(2,5).
"""
import logging
import math
from collections import namedtuple

import numpy as np

from . import perm_core as pc
from . import group_algebra as ga
from .star_graph import StarGraph, feng_map_words

LOG = logging.getLogger(__name__)

CANONICAL_CAP = 6


class CodeError(ValueError):
    pass


class Code(ga.PermutationSet):
    """
    A code in S_n: a set of distinct permutations of degree n, kept as a
    sorted rank array.
    """

    @classmethod
    def from_set(cls, s):
        return cls(s.degree, s.ranks)


class Bitrade(object):
    """
    An ordered pair (T0, T1) of disjoint codes of the same degree. The
    ball condition itself is checked by verify_bitrade.
    """

    def __init__(self, t0, t1, relaxed=False):
        if t0.degree != t1.degree:
            raise CodeError("degree mismatch: %i and %i" % (t0.degree, t1.degree))
        if t0 == t1:
            raise CodeError("the two sides of a bitrade must differ")
        if not relaxed and len(t0.intersection(t1)):
            raise CodeError("the two sides of a bitrade must be disjoint")
        self._t0 = Code.from_set(t0)
        self._t1 = Code.from_set(t1)
        self._relaxed = relaxed

    @property
    def t0(self):
        return self._t0

    @property
    def t1(self):
        return self._t1

    @property
    def degree(self):
        return self._t0.degree

    @property
    def relaxed(self):
        return self._relaxed

    def swapped(self):
        return Bitrade(self._t1, self._t0, relaxed=self._relaxed)

    def __eq__(self, other):
        return isinstance(other, Bitrade) and \
            self._t0 == other.t0 and self._t1 == other.t1

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._t0, self._t1))

    def __repr__(self):
        return 'Bitrade(degree=%i, volume=%i)' % (self.degree, len(self._t0))


InClass = namedtuple('InClass', ['point'])
NotInClass = namedtuple('NotInClass', ['witness'])
IntersectionStats = namedtuple('IntersectionStats', ['common', 'size_a', 'size_b'])
TilingDefect = namedtuple('TilingDefect', ['uncovered', 'overcovered'])


def stab1_code(n):
    return Code.from_set(ga.stab1(n))


def pgl_code(q=5, n=None):
    """PGL(2,q) as a code, embedded in degree n >= q+1 (default q+1)."""
    group = ga.pgl2(q)
    if n is not None:
        group = ga.embed(group, n)
    return Code.from_set(group)


def min_distance_at_least_3(c):
    """
    True iff no codeword has another codeword at distance one or two.
    """
    if len(c) < 2:
        LOG.warning("minimum distance of a code with %i codeword(s) is vacuous", len(c))
        return True
    if c.degree < 3:
        return False
    graph = StarGraph(c.degree)
    words = c.words
    near = np.concatenate([graph.neighbor_words(words),
                           graph.sphere2_words(words)], axis=1)
    ranks = pc.rank_words(near.reshape(-1, c.degree))
    return not c.contains_ranks(ranks).any()


def is_perfect(c):
    n = c.degree
    if n < 2 or len(c) != math.factorial(n - 1):
        return False
    return min_distance_at_least_3(c)


def tiling_defect(c):
    """How many vertices no ball covers, and how many several balls cover."""
    counts = StarGraph(c.degree).ball_counts(c.ranks)
    return TilingDefect(int((counts == 0).sum()), int((counts > 1).sum()))


def coset_code(c, g, side):
    return Code.from_set(ga.coset(c, g, side))


def extend_degree(c, n=None):
    """Append fixed points so that c lives in degree n (default degree + 1)."""
    if n is None:
        n = c.degree + 1
    return Code.from_set(ga.embed(c, n))


def lift(c):
    """
    The code C u (2 n)C u ... u (n-1 n)C of degree n, for a code C whose
    codewords fix n and have minimum distance at least 3.
    """
    n = c.degree
    if n < 3:
        raise CodeError("lift needs degree at least 3, got %i" % n)
    words = c.words
    if len(words) and not (words[:, -1] == n).all():
        raise CodeError("every codeword must fix the point %i" % n)
    if not min_distance_at_least_3(c):
        raise CodeError("lift needs a code with minimum distance at least 3")
    parts = [words]
    for i in range(2, n):
        swap = np.asarray(pc.transposition(n, i, n).word)
        parts.append(pc.compose_words(swap, words))
    lifted = Code.from_words(np.concatenate(parts), n)
    assert len(lifted) == (n - 1) * len(c)
    LOG.info("lifted a code of size %i to size %i in S_%i", len(c), len(lifted), n)
    return lifted


def lift_to(c, n):
    """Extend and lift repeatedly until the code has degree n."""
    while c.degree < n:
        c = lift(extend_degree(c))
    return c


def bitrade_from_codes(c, c2):
    if c == c2:
        raise CodeError("the two codes must differ")
    for code in (c, c2):
        if not is_perfect(code):
            raise CodeError("%r is not a perfect code" % (code,))
    return Bitrade(c.difference(c2), c2.difference(c))


def verify_bitrade(t):
    """
    True iff every closed ball meets T0 and T1 in the same number of
    vertices, and that number is zero or one.
    """
    graph = StarGraph(t.degree)
    counts0 = graph.ball_counts(t.t0.ranks)
    counts1 = graph.ball_counts(t.t1.ranks)
    if not np.array_equal(counts0, counts1) or counts0.max(initial=0) > 1:
        return False
    # each vertex lies in n balls, so equal counts everywhere force |T0| = |T1|
    assert counts0.sum() == t.degree * len(t.t0)
    assert len(t.t0) == len(t.t1)
    return True


def volume(t):
    assert len(t.t0) == len(t.t1)
    return len(t.t0)


def stab1_class_certificate(c):
    """
    Codes in the isomorphism class of Stab_1 are exactly the sets
    {g : g^-1(1) = p}. Returns InClass(p) when every codeword maps p to 1,
    and otherwise NotInClass with two codewords that disagree.
    """
    if len(c) == 0:
        raise CodeError("the certificate needs a nonempty code")
    points = pc.preimage_of_one(c.words)
    differ = np.flatnonzero(points != points[0])
    if len(differ) == 0:
        return InClass(int(points[0]))
    first = pc.Permutation(c.words[0])
    other = pc.Permutation(c.words[differ[0]])
    return NotInClass((first, other))


def canonical_form(c, cap=CANONICAL_CAP):
    """
    The lexicographically smallest sorted rank list among the images
    l*C*r, l fixing 1, r arbitrary. The smallest image contains the
    identity, so only r = g^-1 l^-1 with g in C needs to be tried; the
    image is then l (C g^-1) l^-1.
    """
    n = c.degree
    if n > cap:
        raise pc.CapExceededError(
            "canonical form is capped at degree %i, got %i" % (cap, n))
    if len(c) == 0:
        return ()
    words = c.words
    # row g*|C| + c holds c * g^-1
    shifted = words[:, pc.inverse_words(words) - 1].transpose(1, 0, 2).reshape(-1, n)
    best = None
    for l in pc.all_words(n - 1):
        l = pc.Permutation(np.concatenate([[1], l + 1]))
        images = feng_map_words(l, pc.inverse(l), shifted)
        ranks = np.sort(pc.rank_words(images.reshape(-1, n)).reshape(len(words), -1),
                        axis=1)
        row = ranks[np.lexsort(ranks.T[::-1])[0]]
        if best is None or tuple(row) < best:
            best = tuple(int(x) for x in row)
    return best


def is_isomorphic(a, b):
    if a.degree != b.degree or len(a) != len(b):
        return False
    return canonical_form(a) == canonical_form(b)


def intersection_stats(a, b):
    common = a.intersection(b)
    return IntersectionStats(len(common), len(a), len(b))


def coset_decomposition(c, h, side):
    """
    Representatives of the cosets of h that make up c, or None if c is
    not a union of such cosets.
    """
    if c.degree != h.degree:
        raise pc.PermutationError(
            "degree mismatch: %i and %i" % (c.degree, h.degree))
    remaining = Code.from_set(c)
    representatives = []
    while len(remaining):
        g = pc.unrank(c.degree, int(remaining.ranks[0]))
        part = ga.coset(h, g, side)
        if not remaining.contains_ranks(part.ranks).all():
            return None
        remaining = remaining.difference(part)
        representatives.append(g)
    return representatives
