from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from jacktorus import perms
from jacktorus.errors import InvalidShape
from jacktorus.tableaux import (
    Partition,
    RSYT,
    enumerate_rsyt,
    identity_matrix,
    jucys_murphy,
    norm0,
    norm0_diag,
    rep_matrix,
    simple_reflection,
    t_zero,
    valid_shapes,
)

CONTENTS_31 = {(2, 1, -1, 0), (2, -1, 1, 0), (-1, 2, 1, 0)}
CONTENTS_311 = {
    (2, 1, -2, -1, 0),
    (2, -2, 1, -1, 0),
    (-2, 2, 1, -1, 0),
    (2, -2, -1, 1, 0),
    (-2, 2, -1, 1, 0),
    (-2, -1, 2, 1, 0),
}


def test_content_lists_31():
    assert {t.content for t in enumerate_rsyt(Partition((3, 1)))} == CONTENTS_31


def test_content_lists_311():
    assert {t.content for t in enumerate_rsyt(Partition((3, 1, 1)))} == CONTENTS_311


def test_enumeration_count_21():
    # 3!/(3*1*1) = 2 fillings, by brute hook count
    assert len(enumerate_rsyt(Partition((2, 1)))) == 2


def test_canonical_order_is_decreasing_lex():
    for shape in (Partition((3, 1)), Partition((3, 1, 1)), Partition((2, 2))):
        contents = [t.content for t in enumerate_rsyt(shape)]
        assert contents == sorted(contents, reverse=True)


def test_t_zero_331():
    assert t_zero(Partition((3, 3, 1))).content == (1, 2, 0, 1, -2, -1, 0)


def test_t_zero_21():
    t0 = t_zero(Partition((2, 1)))
    assert t0.rows == ((3, 1), (2,))
    assert t0.content == (1, -1, 0)


def test_t_zero_311_heads_canonical_list():
    shape = Partition((3, 1, 1))
    assert t_zero(shape).content == (2, 1, -2, -1, 0)
    assert enumerate_rsyt(shape)[0] == t_zero(shape)


def test_invalid_shapes():
    with pytest.raises(InvalidShape):
        Partition((4,))
    with pytest.raises(InvalidShape):
        Partition((1, 1))
    with pytest.raises(InvalidShape):
        Partition((2, 3))


def test_norm0_values_21():
    ta, tb = enumerate_rsyt(Partition((2, 1)))
    assert ta.content == (1, -1, 0) and norm0(ta) == 1
    assert tb.content == (-1, 1, 0) and norm0(tb) == Fraction(3, 4)


def test_norm0_empty_product():
    # contents (0, 1, -1, 0): no pair satisfies c(i) <= c(j) - 2
    t = RSYT(((4, 2), (3, 1)))
    assert t.content == (0, 1, -1, 0)
    assert norm0(t) == 1


def test_simple_reflection_21_block():
    shape = Partition((2, 1))
    s1 = simple_reflection(shape, 1)
    assert s1.tolist() == [
        [Fraction(1, 2), Fraction(3, 4)],
        [Fraction(1), Fraction(-1, 2)],
    ]
    s2 = simple_reflection(shape, 2)
    assert s2.tolist() == [[Fraction(-1), Fraction(0)], [Fraction(0), Fraction(1)]]


def test_simple_reflection_out_of_range():
    with pytest.raises(IndexError):
        simple_reflection(Partition((2, 1)), 3)


def test_rep_matrix_braid_and_identity():
    shape = Partition((2, 1))
    ident = rep_matrix(shape, perms.identity(3))
    assert np.all(ident == identity_matrix(2))
    w131 = perms.compose(perms.simple(3, 1), perms.compose(perms.simple(3, 2), perms.simple(3, 1)))
    w212 = perms.compose(perms.simple(3, 2), perms.compose(perms.simple(3, 1), perms.simple(3, 2)))
    assert w131 == w212
    m = rep_matrix(shape, w131)
    assert np.all(m @ m == identity_matrix(2))


def test_jucys_murphy_21_and_31():
    shape = Partition((2, 1))
    assert jucys_murphy(shape, 1).tolist() == [[1, 0], [0, -1]]
    assert np.all(jucys_murphy(shape, 3) == identity_matrix(2) * 0)
    shape31 = Partition((3, 1))
    diag = [jucys_murphy(shape31, 2)[k, k] for k in range(3)]
    assert diag == [t.content[1] for t in enumerate_rsyt(shape31)]


@pytest.mark.parametrize("n", range(3, 7))
def test_representation_suite(n):
    """Involutions, braid relations, commutations, D-orthogonality, JM diagonality."""
    for shape in valid_shapes(n):
        dim = shape.dim
        ident = identity_matrix(dim)
        dmat = np.diag(np.array(norm0_diag(shape), dtype=object))
        gens = [simple_reflection(shape, i) for i in range(1, n)]
        for s in gens:
            assert np.all(s @ s == ident)
            assert np.all(s.T @ dmat @ s == dmat)
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            assert np.all(a @ b @ a == b @ a @ b)
        for i in range(len(gens)):
            for j in range(i + 2, len(gens)):
                assert np.all(gens[i] @ gens[j] == gens[j] @ gens[i])
        basis = enumerate_rsyt(shape)
        for i in range(1, n + 1):
            jm = jucys_murphy(shape, i)
            for a in range(dim):
                for b in range(dim):
                    expect = basis[a].content[i - 1] if a == b else 0
                    assert jm[a, b] == expect
        assert len(basis) * shape.hook_product() == factorial(n)


def test_norm_relation_under_entry_swap():
    # <T', T'>_0 = (1 - b^2) <T, T>_0 for the seminormal pair with 0 < b <= 1/2
    for shape in valid_shapes(5):
        for t in enumerate_rsyt(shape):
            for i in range(1, shape.N):
                diff = t.content[i - 1] - t.content[i]
                if diff >= 2:
                    b = Fraction(1, diff)
                    assert norm0(t.swap_entries(i)) == (1 - b * b) * norm0(t)


def test_reduced_word_reconstructs():
    w = (3, 1, 4, 2)
    word = perms.reduced_word(w)
    out = perms.identity(4)
    for i in word:
        out = perms.compose(out, perms.simple(4, i))
    assert out == w
