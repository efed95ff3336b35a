import logging
import math

import numpy as np
import pytest

from starcode import perm_core as pc
from starcode import group_algebra as ga
from starcode import codes
from starcode.codes import Code, Bitrade


@pytest.fixture(scope='module')
def pgl():
    return codes.pgl_code(5)


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_stab1_is_perfect(n):
    c = codes.stab1_code(n)
    assert codes.is_perfect(c)
    assert codes.tiling_defect(c) == codes.TilingDefect(0, 0)
    assert codes.stab1_class_certificate(c) == codes.InClass(1)


def test_pgl_and_its_cosets_are_perfect(pgl):
    assert codes.is_perfect(pgl)
    reps = [pc.Permutation(w) for w in pc.all_words(6)[::120]]
    for side in ('left', 'right'):
        for g in reps:
            assert codes.is_perfect(codes.coset_code(pgl, g, side))


def test_right_translates_preserve_perfection():
    c = codes.stab1_code(5)
    rng = np.random.default_rng(5)
    for _ in range(10):
        g = pc.Permutation(rng.permutation(5) + 1)
        translate = codes.coset_code(c, g, 'right')
        assert codes.is_perfect(translate)
        assert codes.stab1_class_certificate(translate) == codes.InClass(g.preimage(1))


def test_left_translate_negative_control():
    c = codes.coset_code(codes.stab1_code(4), pc.transposition(4, 1, 2), 'left')
    assert (c.words[:, 0] == 2).all()
    assert not codes.min_distance_at_least_3(c)
    assert not codes.is_perfect(c)
    defect = codes.tiling_defect(c)
    assert defect.uncovered > 0 and defect.overcovered > 0


def test_missing_codeword_is_not_perfect():
    c = Code(6, np.arange(1, 120))
    assert codes.min_distance_at_least_3(c)
    assert not codes.is_perfect(c)
    assert codes.tiling_defect(c) == codes.TilingDefect(6, 0)


def test_tiny_codes_warn(caplog):
    with caplog.at_level(logging.WARNING):
        assert codes.min_distance_at_least_3(Code(4, [7]))
    assert 'vacuous' in caplog.text


def test_lift_of_stab1_is_stab1():
    lifted = codes.lift(codes.extend_degree(codes.stab1_code(3)))
    assert lifted == codes.stab1_code(4)


def test_lift_chain_from_pgl(pgl):
    c7 = codes.lift_to(pgl, 7)
    assert len(c7) == 720
    assert codes.is_perfect(c7)
    assert isinstance(codes.stab1_class_certificate(c7), codes.NotInClass)
    a, b = codes.stab1_class_certificate(c7).witness
    assert a.preimage(1) != b.preimage(1)


def test_lift_rejects_bad_input(pgl):
    with pytest.raises(codes.CodeError):
        codes.lift(pgl)
    with pytest.raises(codes.CodeError):
        codes.lift(codes.extend_degree(Code(4, np.arange(24))))


def test_blocks_of_a_lift(pgl):
    lifted = codes.lift(codes.extend_degree(pgl))
    blocks = lifted.words[:, -1]
    counts = np.bincount(blocks, minlength=8)
    assert counts[1] == 0
    assert (counts[2:] == 120).all()


@pytest.fixture(scope='module')
def bitrades(pgl):
    s = codes.stab1_code(6)
    shifted = codes.coset_code(s, pc.transposition(6, 1, 6), 'right')
    conjugate = Code.from_set(ga.conjugate_subgroup(pgl, pc.transposition(6, 1, 2)))
    return [(s, shifted), (s, pgl), (pgl, conjugate)]


def test_bitrades_from_code_pairs(bitrades):
    volumes = []
    for c, c2 in bitrades:
        t = codes.bitrade_from_codes(c, c2)
        assert codes.verify_bitrade(t)
        assert codes.verify_bitrade(t.swapped())
        assert len(t.t0) == len(t.t1)
        volumes.append(codes.volume(t))
        assert codes.intersection_stats(c, c2).common == 120 - volumes[-1]
    assert volumes == [120, 100, 96]


def test_bitrade_validation():
    s = codes.stab1_code(4)
    with pytest.raises(codes.CodeError):
        Bitrade(s, s)
    with pytest.raises(codes.CodeError):
        Bitrade(s, Code(4, [0, 23]))
    relaxed = Bitrade(s, Code(4, [0, 23]), relaxed=True)
    assert not codes.verify_bitrade(relaxed)
    assert not codes.verify_bitrade(Bitrade(s, Code(4, [23])))
    with pytest.raises(codes.CodeError):
        Bitrade(s, codes.stab1_code(5))
    with pytest.raises(codes.CodeError):
        codes.bitrade_from_codes(s, Code(4, [23]))


def test_canonical_form():
    s = codes.stab1_code(5)
    translate = codes.coset_code(s, pc.Permutation([3, 5, 1, 2, 4]), 'right')
    assert codes.canonical_form(s) == codes.canonical_form(translate)
    assert codes.canonical_form(s)[0] == 0
    assert codes.is_isomorphic(s, translate)
    assert not codes.is_isomorphic(s, Code(5, np.arange(23)))
    with pytest.raises(pc.CapExceededError):
        codes.canonical_form(codes.stab1_code(7))


def test_pgl_is_not_isomorphic_to_stab1(pgl):
    conjugate = Code.from_set(ga.conjugate_subgroup(pgl, pc.transposition(6, 2, 5)))
    assert codes.is_isomorphic(pgl, conjugate)
    assert not codes.is_isomorphic(pgl, codes.stab1_code(6))


def test_coset_decomposition():
    s = codes.stab1_code(4)
    g = pc.transposition(4, 1, 2)
    union = s.union(codes.coset_code(s, g, 'right'))
    reps = codes.coset_decomposition(union, s, 'right')
    assert len(reps) == 2
    assert codes.coset_decomposition(union, s, 'left') is None


def test_lift_is_a_union_of_left_cosets(pgl):
    lifted = codes.lift(codes.extend_degree(pgl))
    reps = codes.coset_decomposition(lifted, ga.embed(ga.pgl2(5), 7), 'left')
    assert len(reps) == 6
    assert sorted(r(7) for r in reps) == [2, 3, 4, 5, 6, 7]


def test_canonical_form_of_right_translates_at_degree_6():
    s = codes.stab1_code(6)
    form = codes.canonical_form(s)
    rng = np.random.default_rng(60)
    for _ in range(10):
        g = pc.Permutation(rng.permutation(6) + 1)
        assert codes.canonical_form(codes.coset_code(s, g, 'right')) == form


def test_single_vertex_pair_is_not_a_bitrade():
    e = pc.identity(3)
    t = Bitrade(Code.from_permutations([e], 3),
                Code.from_permutations([pc.transposition(3, 1, 2)], 3))
    assert not codes.verify_bitrade(t)


@pytest.mark.parametrize('start', ['stab1', 'pgl'])
def test_every_lift_keeps_minimum_distance(start):
    c = codes.stab1_code(3) if start == 'stab1' else codes.pgl_code(5)
    while c.degree < 8:
        c = codes.lift(codes.extend_degree(c))
        assert len(c) == math.factorial(c.degree - 1)
        assert codes.min_distance_at_least_3(c)
