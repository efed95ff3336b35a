import math

import networkx as nx
import numpy as np
import pytest

from starcode import perm_core as pc
from starcode import star_graph as sg
from starcode import codes
from starcode.group_algebra import PermutationSet, stab1


def networkx_star_graph(n):
    graph = sg.StarGraph(n)
    nbrs = graph.neighbor_ranks(np.arange(graph.order))
    g = nx.Graph()
    for r, row in enumerate(nbrs):
        for s in row:
            g.add_edge(r, int(s))
    return g


def test_neighbors_of_identity():
    e = pc.identity(4)
    assert sg.neighbors(e) == [pc.transposition(4, 1, i) for i in range(2, 5)]
    ball = sg.closed_ball(e)
    assert len(ball) == 4 and e in ball


def test_neighbors_swap_values():
    g = pc.Permutation([3, 1, 4, 2])
    assert [h.word for h in sg.neighbors(g)] == [(3, 2, 4, 1), (1, 3, 4, 2), (3, 4, 1, 2)]


@pytest.mark.parametrize('n', [3, 4, 5])
def test_regular_and_connected(n):
    g = networkx_star_graph(n)
    assert g.number_of_nodes() == sg.StarGraph(n).order
    assert set(dict(g.degree()).values()) == {n - 1}
    assert nx.is_connected(g)
    assert nx.is_bipartite(g)


@pytest.mark.parametrize('n, diameter', [(3, 3), (4, 4), (5, 6)])
def test_bfs_layers_against_networkx(n, diameter):
    lengths = nx.single_source_shortest_path_length(networkx_star_graph(n), 0)
    dist = sg.StarGraph(n).bfs_layers()
    assert all(dist[r] == d for r, d in lengths.items())
    assert dist.max() == diameter


def test_distance_against_networkx():
    n = 5
    g = networkx_star_graph(n)
    rng = np.random.default_rng(3)
    for a, b in rng.integers(0, 120, size=(40, 2)):
        expected = nx.shortest_path_length(g, int(a), int(b))
        assert sg.distance(pc.unrank(n, int(a)), pc.unrank(n, int(b))) == expected


def test_small_distances():
    e = pc.identity(3)
    assert sg.distance(e, pc.transposition(3, 2, 3)) == 3
    assert sg.distance(e, pc.Permutation([2, 3, 1])) == 2
    assert sg.distance(e, pc.transposition(3, 1, 2)) == 1
    assert sg.distance(e, e) == 0
    with pytest.raises(pc.PermutationError):
        sg.distance(e, pc.identity(4))
    with pytest.raises(pc.CapExceededError):
        sg.distance(pc.identity(10), pc.identity(10))


def test_sphere2():
    e = pc.identity(5)
    s = sg.sphere2(e)
    assert len(s) == 12
    for h in s:
        assert sg.distance(e, h) == 2


def test_feng_maps_preserve_adjacency():
    n = 6
    graph = sg.StarGraph(n)
    rng = np.random.default_rng(11)
    for _ in range(1000):
        l = pc.Permutation(np.concatenate([[1], rng.permutation(n - 1) + 2]))
        r = pc.Permutation(rng.permutation(n) + 1)
        g = pc.Permutation(rng.permutation(n) + 1)
        i = int(rng.integers(2, n + 1))
        h = pc.compose(pc.transposition(n, 1, i), g)
        fg = sg.feng_map(l, r, g)
        fh = sg.feng_map(l, r, h)
        assert pc.rank(fh) in graph.neighbor_ranks([pc.rank(fg)])[0]


def test_feng_map_words_match_scalar():
    l = pc.Permutation([1, 3, 2, 4])
    r = pc.Permutation([4, 3, 2, 1])
    words = pc.all_words(4)
    batch = sg.feng_map_words(l, r, words)
    for w, image in zip(words, batch):
        assert sg.feng_map(l, r, pc.Permutation(w)).word == tuple(image)
    with pytest.raises(ValueError):
        sg.feng_map(pc.Permutation([2, 1, 3, 4]), r, pc.identity(4))


def test_blocks():
    assert sg.block_of(pc.Permutation([2, 4, 1, 3])) == 3
    for i in range(2, 6):
        assert sg.block_subgraph_is_star(5, i)
    with pytest.raises(ValueError):
        sg.block_subgraph_is_star(5, 1)


def test_stab1_balls_tile():
    counts = sg.StarGraph(5).ball_counts(stab1(5).ranks)
    assert (counts == 1).all()


def test_bfs_order_starts_at_identity():
    order = sg.StarGraph(4).bfs_order()
    dist = sg.StarGraph(4).bfs_layers()
    assert order[0] == 0
    assert (np.diff(dist[order]) >= 0).all()


@pytest.mark.parametrize('n', [4, 5, 6, 7])
def test_block_one_is_perfect(n):
    words = pc.all_words(n)
    block = codes.Code.from_words(words[words[:, -1] == 1], n)
    assert len(block) == math.factorial(n - 1)
    assert codes.is_perfect(block)


def test_one_neighbor_leaves_the_block():
    n = 5
    for g in pc.all_permutations(n):
        i = sg.block_of(g)
        others = [sg.block_of(h) for h in sg.neighbors(g) if sg.block_of(h) != i]
        if 2 <= i <= n - 1:
            assert others == [1]


def parity(p):
    return sum(length - 1 for length in pc.cycle_type(p).lengths) % 2


def test_distance_parity_is_sign():
    for g in pc.all_permutations(4):
        for h in pc.all_permutations(4):
            assert sg.distance(g, h) % 2 == (parity(g) + parity(h)) % 2


def test_sphere2_misses_the_ball():
    for g in pc.all_permutations(4):
        assert len(sg.sphere2(g).intersection(sg.closed_ball(g))) == 0


def test_sphere2_of_s3_identity():
    expected = PermutationSet.from_permutations(
        [pc.Permutation([2, 3, 1]), pc.Permutation([3, 1, 2])])
    assert sg.sphere2(pc.identity(3)) == expected


def test_distance_to_a_transposition_avoiding_1():
    assert sg.distance(pc.identity(6), pc.transposition(6, 2, 3)) == 3
