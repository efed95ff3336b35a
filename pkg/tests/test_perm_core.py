import itertools
import math

import numpy as np
import pytest

from starcode import perm_core as pc


def test_composition_applies_right_factor_first():
    p = pc.Permutation([2, 3, 1, 4])
    q = pc.transposition(4, 1, 4)
    r = pc.compose(p, q)
    for x in range(1, 5):
        assert r(x) == p(q(x))
    assert p * q == r


def test_group_laws_on_s4():
    perms = list(pc.all_permutations(4))
    e = pc.identity(4)
    for a in perms:
        assert a * pc.inverse(a) == e
        assert pc.inverse(a) * a == e
        assert a * e == a and e * a == a
    for a, b, c in itertools.product(perms, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_group_laws_on_random_triples_of_degree_7():
    e = pc.identity(7)
    rng = np.random.default_rng(1)
    for _ in range(1000):
        a, b, c = (pc.Permutation(rng.permutation(7) + 1) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * pc.inverse(a) == e
        assert pc.inverse(a) * a == e


def test_conjugation_preserves_cycle_type():
    rng = np.random.default_rng(6)
    for _ in range(100):
        p = pc.Permutation(rng.permutation(6) + 1)
        by = pc.Permutation(rng.permutation(6) + 1)
        assert pc.cycle_type(pc.conjugate(p, by)) == pc.cycle_type(p)


def test_star_generator_moves_two_positions():
    for g in pc.all_permutations(4):
        for i in range(2, 5):
            h = pc.compose(pc.transposition(4, 1, i), g)
            moved = {x for x in range(1, 5) if h(x) != g(x)}
            assert moved == {g.preimage(1), g.preimage(i)}


def test_rank_and_unrank():
    assert pc.unrank(3, 5) == pc.Permutation([3, 2, 1])
    assert pc.rank(pc.identity(6)) == 0
    for k, p in enumerate(pc.all_permutations(4)):
        assert pc.rank(p) == k
        assert pc.unrank(4, k) == p
    with pytest.raises(pc.PermutationError):
        pc.unrank(3, 6)


def test_batch_ranks_follow_lexicographic_order():
    words = pc.all_words(5)
    assert np.array_equal(pc.rank_words(words), np.arange(120))
    assert np.array_equal(pc.unrank_words(5, np.arange(120)), words)


def test_large_degree_ranks_use_objects():
    word = np.arange(22, 0, -1)
    r = pc.rank_words(word)[0]
    assert r == math.factorial(22) - 1
    assert np.array_equal(pc.unrank_words(22, [r])[0], word)


def test_batch_composition_matches_scalar():
    rng = np.random.default_rng(7)
    words = np.array([rng.permutation(6) + 1 for _ in range(20)])
    other = np.array([rng.permutation(6) + 1 for _ in range(20)])
    batch = pc.compose_words(words, other)
    left = pc.compose_words(words[0], other)
    right = pc.compose_words(words, other[0])
    inv = pc.inverse_words(words)
    for i in range(20):
        p, q = pc.Permutation(words[i]), pc.Permutation(other[i])
        assert tuple(batch[i]) == (p * q).word
        assert tuple(left[i]) == (pc.Permutation(words[0]) * q).word
        assert tuple(right[i]) == (p * pc.Permutation(other[0])).word
        assert tuple(inv[i]) == pc.inverse(p).word


def test_cycles_and_cycle_type():
    p = pc.from_cycles(6, [(1, 2, 3), (4, 5)])
    assert p.word == (2, 3, 1, 5, 4, 6)
    assert p.cycles() == [(1, 2, 3), (4, 5)]
    assert str(p) == '(1 2 3)(4 5)'
    assert str(pc.identity(3)) == '()'
    assert pc.cycle_type(p) == pc.CycleType((2, 3), 1)
    assert pc.is_pure_cycle_of_length(pc.transposition(5, 2, 4), 2)
    assert not pc.is_pure_cycle_of_length(p, 3)
    assert pc.is_pure_cycle_of_length(pc.from_cycles(5, [(1, 4, 2)]), 3)


def test_conjugate_relabels_cycles():
    p = pc.from_cycles(5, [(1, 2, 3)])
    by = pc.from_cycles(5, [(1, 4)])
    assert pc.conjugate(p, by) == pc.from_cycles(5, [(4, 2, 3)])


def test_preimage():
    p = pc.Permutation([3, 1, 2])
    assert p.preimage(1) == 2
    assert list(pc.preimage_of_one(np.array([[3, 1, 2], [1, 2, 3]]))) == [2, 1]


@pytest.mark.parametrize('word', [[1, 1, 2], [0, 1, 2], [2, 3, 4], []])
def test_invalid_words(word):
    with pytest.raises(pc.PermutationError):
        pc.Permutation(word)


def test_degree_mismatch_and_caps():
    with pytest.raises(pc.PermutationError):
        pc.compose(pc.identity(3), pc.identity(4))
    with pytest.raises(pc.PermutationError):
        pc.transposition(3, 2, 2)
    with pytest.raises(pc.CapExceededError):
        pc.all_words(10)
    with pytest.raises(pc.CapExceededError):
        next(pc.all_permutations(10))


def test_all_permutations_in_rank_order():
    perms = list(pc.all_permutations(3))
    assert [p.word for p in perms] == list(itertools.permutations([1, 2, 3]))
