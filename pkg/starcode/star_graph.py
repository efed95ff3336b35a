"""
The Star graph S_n: the Cayley graph of Sym_n generated by the
transpositions (1 i), 2 <= i <= n. A vertex g is adjacent to (1 i)*g,
which swaps the values 1 and i in the word of g.

The graph is never stored; neighbors are generated on the fly, in
increasing order of i, from words or from ranks.
"""
import logging
import math

import numpy as np

from . import perm_core as pc
from .group_algebra import PermutationSet

LOG = logging.getLogger(__name__)

DISTANCE_CAP = 9


class StarGraph(object):

    def __init__(self, n):
        if n < 2:
            raise pc.PermutationError("the Star graph needs n >= 2, got %i" % n)
        self._n = n

    @property
    def n(self):
        return self._n

    @property
    def order(self):
        return math.factorial(self._n)

    @property
    def degree(self):
        return self._n - 1

    def __repr__(self):
        return 'StarGraph(%i)' % self._n

    def neighbor_words(self, words):
        """
        Neighbors of a batch of words, shape (m, n-1, n); entry [:, i-2]
        is the neighbor through (1 i).
        """
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        out = np.empty((len(words), self._n - 1, self._n), dtype=np.int64)
        for i in range(2, self._n + 1):
            out[:, i - 2] = np.where(words == 1, i, np.where(words == i, 1, words))
        return out

    def sphere2_words(self, words):
        """
        Words at distance exactly two, shape (m, (n-1)(n-2), n): the
        vertices (1 x)(1 y)*g for x != y.
        """
        first = self.neighbor_words(words)
        m = len(first)
        out = []
        for y in range(2, self._n + 1):
            second = self.neighbor_words(first[:, y - 2])
            keep = [x - 2 for x in range(2, self._n + 1) if x != y]
            out.append(second[:, keep])
        return np.concatenate(out, axis=1).reshape(m, -1, self._n)

    def neighbor_ranks(self, ranks):
        ranks = np.asarray(ranks)
        words = pc.unrank_words(self._n, ranks)
        nbrs = self.neighbor_words(words)
        return pc.rank_words(nbrs.reshape(-1, self._n)).reshape(len(ranks), -1)

    def ball_words(self, words):
        """Closed balls: the word itself followed by its n-1 neighbors."""
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        return np.concatenate([words[:, None, :], self.neighbor_words(words)], axis=1)

    def ball_ranks(self, ranks):
        ranks = np.asarray(ranks)
        words = pc.unrank_words(self._n, ranks)
        balls = self.ball_words(words)
        return pc.rank_words(balls.reshape(-1, self._n)).reshape(len(ranks), self._n)

    def ball_counts(self, ranks):
        """For every vertex, how many of the given vertices lie in its closed ball."""
        balls = self.ball_ranks(ranks)
        return np.bincount(balls.ravel().astype(np.int64), minlength=self.order)

    def bfs_layers(self, cap=DISTANCE_CAP):
        """Distance from the identity to every vertex, indexed by rank."""
        if self._n > cap:
            raise pc.CapExceededError(
                "BFS over S_%i exceeds the cap %i" % (self._n, cap))
        dist = np.full(self.order, -1, dtype=np.int16)
        frontier = np.array([0])
        dist[0] = 0
        level = 0
        while len(frontier):
            level += 1
            nxt = np.unique(self.neighbor_ranks(frontier).ravel())
            nxt = nxt[dist[nxt] < 0]
            dist[nxt] = level
            frontier = nxt
        LOG.debug("S_%i: breadth-first layers up to distance %i", self._n, level - 1)
        return dist

    def bfs_order(self):
        """Vertex ranks sorted by distance from the identity, then by rank."""
        dist = self.bfs_layers()
        return np.lexsort((np.arange(self.order), dist))


def _graph(g):
    if g.degree < 2:
        raise pc.PermutationError("the Star graph needs n >= 2, got %i" % g.degree)
    return StarGraph(g.degree)


def neighbors(g):
    return [pc.Permutation(w) for w in _graph(g).neighbor_words(g.word)[0]]


def closed_ball(g):
    return PermutationSet.from_words(_graph(g).ball_words(g.word)[0], g.degree)


def sphere2(g):
    if g.degree < 3:
        raise pc.PermutationError("sphere2 needs n >= 3, got %i" % g.degree)
    return PermutationSet.from_words(_graph(g).sphere2_words(g.word)[0], g.degree)


def distance(g, h, cap=DISTANCE_CAP):
    """Graph distance by bidirectional breadth-first search."""
    if g.degree != h.degree:
        raise pc.PermutationError(
            "degree mismatch: %i and %i" % (g.degree, h.degree))
    if g.degree > cap:
        raise pc.CapExceededError(
            "distance in S_%i exceeds the cap %i" % (g.degree, cap))
    if g == h:
        return 0
    graph = _graph(g)
    dist = [np.full(graph.order, -1, dtype=np.int16) for _ in range(2)]
    frontier = [np.array([pc.rank(g)]), np.array([pc.rank(h)])]
    dist[0][frontier[0]] = 0
    dist[1][frontier[1]] = 0
    depth = [0, 0]
    while len(frontier[0]) and len(frontier[1]):
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        other = 1 - side
        nxt = np.unique(graph.neighbor_ranks(frontier[side]).ravel())
        nxt = nxt[dist[side][nxt] < 0]
        depth[side] += 1
        dist[side][nxt] = depth[side]
        met = dist[other][nxt]
        met = met[met >= 0]
        if len(met):
            return int(depth[side] + met.min())
        frontier[side] = nxt
    raise AssertionError("the Star graph is connected")


def feng_map(l, r, g):
    """The automorphism g -> l*g*r; l must fix 1."""
    if not (l.degree == r.degree == g.degree):
        raise pc.PermutationError("degree mismatch")
    if l(1) != 1:
        raise ValueError("l must fix the point 1, but l(1) = %i" % l(1))
    return pc.compose(pc.compose(l, g), r)


def feng_map_words(l, r, words):
    """Batch version of feng_map over an (m, n) array of words."""
    if l(1) != 1:
        raise ValueError("l must fix the point 1, but l(1) = %i" % l(1))
    left = pc.compose_words(np.asarray(l.word), words)
    return pc.compose_words(left, np.asarray(r.word))


def block_of(g):
    """The index i of the block Gamma_i = {g : g(n) = i} containing g."""
    if g.degree < 3:
        raise pc.PermutationError("blocks need n >= 3, got %i" % g.degree)
    return g(g.degree)


def block_subgraph_is_star(n, i):
    """
    Check that Gamma_i, relabeled into Sym_{n-1} by left multiplication
    with (i n), induces exactly the edges of S_{n-1}.
    """
    if not 2 <= i <= n:
        raise ValueError("block index must lie in 2..%i, got %i" % (n, i))
    graph = StarGraph(n)
    small = StarGraph(n - 1)
    words = pc.all_words(n)
    block = words[words[:, -1] == i]
    relabel = np.asarray(pc.transposition(n, i, n).word) if i != n \
        else np.arange(1, n + 1)
    inside = pc.compose_words(relabel, block)[:, :-1]
    nbrs = graph.neighbor_words(block)
    for w, ns in zip(inside, nbrs):
        ns = ns[ns[:, -1] == i]
        ns = pc.compose_words(relabel, ns)[:, :-1]
        expected = small.neighbor_words(w)[0]
        if len(ns) != n - 2:
            return False
        if not np.array_equal(np.sort(pc.rank_words(ns)),
                              np.sort(pc.rank_words(expected))):
            return False
    return True
