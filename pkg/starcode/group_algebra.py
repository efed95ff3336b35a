"""
Sets and groups of permutations, and PGL(2,q) acting on the projective
line over a prime field.

The points of the projective line are labeled Finite(a) -> a+1 and
Infinity -> q+1, so PGL(2,q) becomes a set of permutations of degree q+1.
"""
import itertools
import logging
import math
from collections import namedtuple

import galois
import numpy as np

from . import perm_core as pc

LOG = logging.getLogger(__name__)

Q_CAP = 31
CLOSURE_CAP = 10 ** 6
# membership switches from binary search to a boolean bitmap up to this order
BITMAP_LIMIT = 2 ** 26


class PermutationSet(object):
    """
    A finite set of permutations of a common degree, stored as the
    sorted, duplicate-free array of their ranks.
    """

    def __init__(self, degree, ranks):
        if degree < 1:
            raise pc.PermutationError("degree must be at least 1")
        self._degree = degree
        ranks = np.unique(np.asarray(ranks, dtype=pc.rank_dtype(degree)))
        if len(ranks) and (ranks[0] < 0 or ranks[-1] >= math.factorial(degree)):
            raise pc.PermutationError(
                "ranks out of range for degree %i" % degree)
        self._ranks = ranks
        self._words = None
        self._mask = None

    @classmethod
    def from_words(cls, words, degree=None):
        words = np.asarray(words, dtype=np.int64)
        if degree is None:
            degree = words.shape[-1]
        words = words.reshape(-1, degree)
        if len(words) == 0:
            return cls(degree, [])
        if not np.array_equal(np.sort(words, axis=1),
                              np.broadcast_to(np.arange(1, degree + 1), words.shape)):
            raise pc.PermutationError("rows are not permutations of {1..%i}" % degree)
        return cls(degree, pc.rank_words(words))

    @classmethod
    def from_permutations(cls, perms, degree=None):
        perms = list(perms)
        if degree is None:
            if len(perms) == 0:
                raise pc.PermutationError("cannot infer the degree of an empty set")
            degree = perms[0].degree
        for p in perms:
            if p.degree != degree:
                raise pc.PermutationError(
                    "degree mismatch: %i and %i" % (p.degree, degree))
        return cls.from_words([p.word for p in perms], degree)

    @property
    def degree(self):
        return self._degree

    @property
    def ranks(self):
        return self._ranks

    @property
    def words(self):
        if self._words is None:
            self._words = pc.unrank_words(self._degree, self._ranks)
        return self._words

    def __len__(self):
        return len(self._ranks)

    def __iter__(self):
        for w in self.words:
            yield pc.Permutation(w)

    def __contains__(self, p):
        if p.degree != self._degree:
            return False
        return bool(self.contains_ranks([pc.rank(p)])[0])

    def __eq__(self, other):
        return isinstance(other, PermutationSet) and \
            self._degree == other._degree and \
            np.array_equal(self._ranks, other._ranks)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._degree, tuple(self._ranks.tolist())))

    def __repr__(self):
        return '%s(degree=%i, size=%i)' % (type(self).__name__, self._degree, len(self))

    def contains_ranks(self, ranks):
        """Vectorized membership test for an array of ranks."""
        ranks = np.asarray(ranks)
        order = math.factorial(self._degree)
        if order <= BITMAP_LIMIT:
            if self._mask is None:
                self._mask = np.zeros(order, dtype=bool)
                self._mask[self._ranks.astype(np.int64)] = True
            return self._mask[ranks.astype(np.int64)]
        if len(self._ranks) == 0:
            return np.zeros(ranks.shape, dtype=bool)
        pos = np.searchsorted(self._ranks, ranks)
        pos = np.minimum(pos, len(self._ranks) - 1)
        return self._ranks[pos] == ranks

    def _check_same_degree(self, other):
        if self._degree != other.degree:
            raise pc.PermutationError(
                "degree mismatch: %i and %i" % (self._degree, other.degree))

    def intersection(self, other):
        self._check_same_degree(other)
        return type(self)(self._degree, np.intersect1d(self._ranks, other.ranks,
                                                       assume_unique=True))

    def union(self, other):
        self._check_same_degree(other)
        return type(self)(self._degree, np.union1d(self._ranks, other.ranks))

    def difference(self, other):
        self._check_same_degree(other)
        return type(self)(self._degree, np.setdiff1d(self._ranks, other.ranks,
                                                     assume_unique=True))


class ProjectivePoint(namedtuple('ProjectivePoint', ['value'])):
    """A point of the projective line: a field value, or None for infinity."""

    @property
    def is_infinity(self):
        return self.value is None

    def __str__(self):
        return 'inf' if self.value is None else str(self.value)


INFINITY = ProjectivePoint(None)


def _field(q):
    if q > Q_CAP:
        raise pc.CapExceededError("q = %i exceeds the field cap %i" % (q, Q_CAP))
    if q < 2 or not galois.is_prime(q):
        raise ValueError("q must be prime, got %i" % q)
    return galois.GF(q)


class MoebiusMap(object):
    """
    The fractional linear map x -> (ax+b)/(cx+d) over GF(q), normalized
    so that the first nonzero coefficient is 1.
    """

    def __init__(self, q, a, b, c, d):
        self._gf = _field(q)
        coeffs = self._gf([x % q for x in (a, b, c, d)])
        a, b, c, d = coeffs
        if a * d - b * c == 0:
            raise ValueError("singular matrix [[%s, %s], [%s, %s]]" % (a, b, c, d))
        lead = coeffs[np.flatnonzero(coeffs)[0]]
        self._coeffs = coeffs / lead

    @property
    def q(self):
        return self._gf.order

    @property
    def coefficients(self):
        return tuple(int(x) for x in self._coeffs)

    def __eq__(self, other):
        return isinstance(other, MoebiusMap) and self.q == other.q and \
            self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.q, self.coefficients))

    def __repr__(self):
        return 'MoebiusMap(q=%i, %s)' % (self.q, self.coefficients)

    def __call__(self, x):
        a, b, c, d = self._coeffs
        if x.is_infinity:
            if c == 0:
                return INFINITY
            return ProjectivePoint(int(a / c))
        x = self._gf(x.value % self.q)
        den = c * x + d
        if den == 0:
            return INFINITY
        return ProjectivePoint(int((a * x + b) / den))

    def as_permutation(self):
        q = self.q
        labels = dict(point_labeling(q))
        return pc.Permutation(labels[self(p)] for p, _ in point_labeling(q))


def point_labeling(q):
    """[(point, label)] with Finite(a) -> a+1 and infinity -> q+1."""
    _field(q)
    return [(ProjectivePoint(a), a + 1) for a in range(q)] + [(INFINITY, q + 1)]


def moebius_apply(m, x):
    return m(x)


def normalized_coefficients(q):
    """All normalized (a, b, c, d) with ad - bc != 0, as an (m, 4) array."""
    gf = _field(q)
    coeffs = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
    nonzero = coeffs != 0
    lead = coeffs[np.arange(len(coeffs)), np.argmax(nonzero, axis=1)]
    coeffs = coeffs[nonzero.any(axis=1) & (lead == 1)]
    a, b, c, d = (gf(coeffs[:, i]) for i in range(4))
    det = (a * d - b * c).view(np.ndarray)
    return coeffs[det != 0]


def pgl2(q):
    """PGL(2,q) as permutations of degree q+1."""
    gf = _field(q)
    coeffs = normalized_coefficients(q)
    a, b, c, d = (gf(coeffs[:, i])[:, None] for i in range(4))
    x = gf(np.arange(q))[None, :]
    num = a * x + b
    den = c * x + d
    pole = den.view(np.ndarray) == 0
    den[pole] = 1
    finite = (num / den).view(np.ndarray) + 1
    finite[pole] = q + 1
    c_flat = c.view(np.ndarray)[:, 0]
    c_safe = c.copy()
    c_safe[c_flat == 0] = 1
    at_infinity = (a / c_safe).view(np.ndarray)[:, 0] + 1
    at_infinity[c_flat == 0] = q + 1
    words = np.column_stack([finite, at_infinity]).astype(np.int64)
    group = PermutationSet.from_words(words, q + 1)
    LOG.info("PGL(2,%i): %i elements of degree %i", q, len(group), q + 1)
    return group


def is_sharply_3_transitive(g):
    """
    True iff every ordered triple of distinct points is sent to every
    other such triple by exactly one element of g.
    """
    n = g.degree
    if n < 3:
        return False
    n_triples = n * (n - 1) * (n - 2)
    if len(g) != n_triples:
        return False
    words = g.words - 1
    for triple in itertools.permutations(range(n), 3):
        images = words[:, triple]
        codes = (images[:, 0] * n + images[:, 1]) * n + images[:, 2]
        if len(np.unique(codes)) != n_triples:
            return False
    return True


def closure(generators, cap=CLOSURE_CAP):
    """Smallest composition-closed set containing the generators and the identity."""
    n = generators.degree
    gens = generators.words
    seen = {pc.rank(pc.identity(n))}
    frontier = pc.identity(n).word
    frontier = np.asarray(frontier, dtype=np.int64)[None, :]
    while len(frontier):
        products = np.concatenate([pc.compose_words(frontier, g) for g in gens]) \
            if len(gens) else frontier[:0]
        ranks = pc.rank_words(products) if len(products) else []
        fresh = []
        for i, r in enumerate(ranks):
            r = int(r)
            if r not in seen:
                seen.add(r)
                fresh.append(i)
        if len(seen) > cap:
            raise pc.CapExceededError(
                "closure exceeds the cap of %i elements" % cap)
        frontier = products[fresh]
    return PermutationSet(n, sorted(seen))


def coset(h, g, side):
    """g*h (left) or h*g (right)."""
    if h.degree != g.degree:
        raise pc.PermutationError(
            "degree mismatch: %i and %i" % (h.degree, g.degree))
    word = np.asarray(g.word, dtype=np.int64)
    if side == 'left':
        words = pc.compose_words(word, h.words)
    elif side == 'right':
        words = pc.compose_words(h.words, word)
    else:
        raise ValueError("side must be 'left' or 'right', got %r" % (side,))
    return type(h).from_words(words, h.degree)


def conjugate_subgroup(h, by):
    if h.degree != by.degree:
        raise pc.PermutationError(
            "degree mismatch: %i and %i" % (h.degree, by.degree))
    word = np.asarray(by.word, dtype=np.int64)
    inv = pc.inverse_words(word)
    words = pc.compose_words(pc.compose_words(word, h.words), inv)
    return type(h).from_words(words, h.degree)


def stab1(n):
    """All permutations fixing 1: exactly the first (n-1)! ranks."""
    if n < 2:
        raise pc.PermutationError("stab1 needs degree at least 2")
    return PermutationSet(n, np.arange(math.factorial(n - 1)))


def point_stabilizer(h, point):
    keep = h.words[:, point - 1] == point
    return PermutationSet(h.degree, h.ranks[keep])


def orbit(h, point):
    """Orbit of a point under the group generated by h."""
    words = h.words
    reached = {point}
    frontier = [point]
    while frontier:
        images = set(words[:, np.asarray(frontier) - 1].ravel().tolist())
        frontier = sorted(images - reached)
        reached |= images
    return sorted(reached)


def is_subgroup(h):
    """Closed under composition and inverses, and contains the identity."""
    if len(h) == 0:
        return False
    words = h.words
    if not h.contains_ranks(pc.rank_words(pc.inverse_words(words))).all():
        return False
    for w in words:
        if not h.contains_ranks(pc.rank_words(pc.compose_words(w, words))).all():
            return False
    return True


def is_normal_subgroup(h):
    """Normality in Sym_n, tested on the generators (1 i)."""
    n = h.degree
    for i in range(2, n + 1):
        if conjugate_subgroup(h, pc.transposition(n, 1, i)) != h:
            return False
    return True


def embed(h, n):
    """Extend every element of h to degree n by fixing the new points."""
    if n < h.degree:
        raise pc.PermutationError(
            "cannot embed degree %i into degree %i" % (h.degree, n))
    words = h.words
    extra = np.broadcast_to(np.arange(h.degree + 1, n + 1), (len(words), n - h.degree))
    return type(h).from_words(np.hstack([words, extra]), n)
