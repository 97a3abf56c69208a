from math import comb

import pytest
import sympy

from relweight.repdim import (
    Partition,
    codim_bound,
    dims_table,
    gl_irrep_dim,
    insufficient_pairs,
    lyndon_words,
    mobius,
    paper_dim_kk,
    paper_dim_kk1,
    partition_for_degree,
    sp_top_dim,
    ssyt_count,
    structural_dims,
    theorem_threshold,
    witt_dim,
)


def test_mobius_matches_sympy():
    for n in range(1, 60):
        assert mobius(n) == sympy.mobius(n)


def test_witt_examples():
    assert witt_dim(2, 1) == 2
    assert witt_dim(2, 2) == 1
    assert witt_dim(3, 3) == 8


def test_witt_counts_lyndon_words():
    for r in range(1, 5):
        for m in range(1, 8):
            words = list(lyndon_words(r, m))
            assert len(words) == len(set(words)) == witt_dim(r, m)


def test_lyndon_words_are_lyndon():
    for w in lyndon_words(3, 5):
        rotations = [w[i:] + w[:i] for i in range(1, len(w))]
        assert all(w < r for r in rotations)


def test_partition():
    lam = Partition([3, 1])
    assert lam.conjugate() == (2, 1, 1) and lam.length == 2
    with pytest.raises(ValueError):
        Partition([1, 2])


def test_gl_irrep_examples():
    for g in range(1, 6):
        assert gl_irrep_dim([1], g) == g
    assert gl_irrep_dim([1, 1, 1], 7) == 35 == comb(7, 3)
    assert gl_irrep_dim([2, 2], 3) == 6 == ssyt_count([2, 2], 3)
    with pytest.raises(ValueError):
        gl_irrep_dim([1, 1, 1], 2)


def test_hook_content_matches_ssyt():
    for lam in ([2], [1, 1], [2, 1], [3, 2], [2, 2, 1], [3, 3], [3, 1, 1]):
        for g in range(len(lam), 6):
            assert gl_irrep_dim(lam, g) == ssyt_count(lam, g)


def test_closed_forms():
    assert paper_dim_kk(3, 2) == 6
    assert paper_dim_kk(6, 2) == 105
    assert paper_dim_kk1(4, 2) == 20


def test_partition_for_degree():
    assert partition_for_degree(4) == (2, 2)
    assert partition_for_degree(3) == (2, 2, 1)
    assert partition_for_degree(1) == (1, 1, 1)


def test_codim_bound_examples():
    assert codim_bound(7, 1) == 7
    assert codim_bound(3, 4) == 0
    assert codim_bound(4, 3) == 10
    assert sp_top_dim(7) == 28
    with pytest.raises(ValueError):
        codim_bound(2, 2)


def test_thresholds_and_insufficient_pairs():
    assert [theorem_threshold(g) for g in (3, 4, 6, 7, 10)] == [4, 2, 2, 1, 1]
    pairs = insufficient_pairs()
    assert (3, 4) in pairs and (6, 2) in pairs
    assert all(codim_bound(g, m) <= 0 and m >= theorem_threshold(g) for g, m in pairs)


def test_dims_table_rows():
    rows = dims_table([7], [1, 2])
    assert rows[0].as_dict() == {"g": 7, "m": 1, "partition": [1, 1, 1], "dim": 35,
                                 "bound": 7, "covered": True, "sufficient": True}
    assert rows[1].partition == (1, 1)


def test_structural_dims():
    d = structural_dims(3)
    assert d == {"wedge3_H": 20, "hom_A_L2A": 9, "hom_A_L3A": 24,
                 "hom_V_wedge2V": 9, "wedge2_hom_A_L2A": 36}
