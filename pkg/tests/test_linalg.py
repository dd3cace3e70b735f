"""Tests for row vectors, matrices, and their JSON codecs."""

import random

import pytest

from umcert import (
    Matrix,
    RingMismatchError,
    RowVector,
    ShapeError,
    Zmod,
    Zring,
    det,
    elementary,
    identity,
    mat_mul,
    mat_vec,
    matrix_from_json,
    matrix_to_json,
    row_act,
    row_from_json,
    row_to_json,
    unit_row,
)

from oracles import apply_matrix_to_row, elementary_matrix, mat_mul as oracle_mul, zmod_table


def random_matrix(ring, n, rng):
    return Matrix(ring, n, n, tuple(ring.elem(rng.randrange(ring.size())) for _ in range(n * n)))


def as_lists(m):
    return [[m.at(i, j).payload for j in range(1, m.cols + 1)] for i in range(1, m.rows + 1)]


def test_matrix_product_matches_oracle():
    """Matrix products over Z/12 agree with plain integer arithmetic."""
    ring = Zmod(12)
    table = zmod_table(12)
    rng = random.Random(3)
    for n in (2, 3, 4):
        for _ in range(20):
            a = random_matrix(ring, n, rng)
            b = random_matrix(ring, n, rng)
            got = as_lists(mat_mul(a, b))
            want = oracle_mul(table, as_lists(a), as_lists(b))
            assert got == want, f"product mismatch at n={n}"


def test_row_act_matches_oracle():
    """Acting on a row by a matrix agrees with the oracle row-times-matrix."""
    ring = Zmod(12)
    table = zmod_table(12)
    rng = random.Random(5)
    for _ in range(40):
        n = rng.choice((2, 3))
        v = RowVector(ring, tuple(ring.elem(rng.randrange(12)) for _ in range(n)))
        m = random_matrix(ring, n, rng)
        got = row_act(v, m).payloads()
        want = apply_matrix_to_row(table, v.payloads(), as_lists(m))
        assert got == want


def test_elementary_and_identity():
    """elementary(i, j, a) is the identity plus a single off-diagonal entry."""
    ring = Zmod(7)
    table = zmod_table(7)
    for n in (2, 3):
        assert as_lists(identity(ring, n)) == [
            [1 if i == j else 0 for j in range(n)] for i in range(n)
        ]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                m = elementary(ring, n, i, j, ring.elem(4))
                assert as_lists(m) == elementary_matrix(table, n, i, j, 4)


def test_mat_vec_is_column_action():
    """mat_vec multiplies a matrix into a column written as a RowVector."""
    ring = Zmod(10)
    m = Matrix(ring, 2, 2, tuple(ring.elem(v) for v in (1, 2, 3, 4)))
    col = RowVector(ring, (ring.elem(5), ring.elem(6)))
    got = mat_vec(m, col).payloads()
    assert got == ((1 * 5 + 2 * 6) % 10, (3 * 5 + 4 * 6) % 10)


def test_det_small_cases():
    """Determinants of elementary products are 1; a swap-like matrix is not."""
    ring = Zmod(9)
    e1 = elementary(ring, 3, 1, 2, ring.elem(4))
    e2 = elementary(ring, 3, 3, 1, ring.elem(7))
    assert det(mat_mul(e1, e2)).payload == 1
    twist = Matrix(ring, 2, 2, tuple(ring.elem(v) for v in (0, 1, 8, 0)))
    assert det(twist).payload == 1, "antidiagonal (1, -1) has determinant 1"
    sing = Matrix(ring, 2, 2, tuple(ring.elem(v) for v in (3, 6, 6, 3)))
    assert det(sing).payload == (3 * 3 - 6 * 6) % 9


def test_transpose_and_shapes():
    """Transpose swaps indices; shape mismatches raise."""
    ring = Zmod(5)
    m = Matrix(ring, 2, 2, tuple(ring.elem(v) for v in (1, 2, 3, 4)))
    t = m.transpose()
    for i in (1, 2):
        for j in (1, 2):
            assert t.at(i, j) == m.at(j, i)
    v2 = unit_row(ring, 2)
    v3 = unit_row(ring, 3)
    with pytest.raises(ShapeError):
        v2.dot(v3)
    with pytest.raises(RingMismatchError):
        v2.dot(unit_row(Zmod(7), 2))


def test_unit_row():
    """unit_row is (1, 0, ..., 0)."""
    ring = Zmod(6)
    assert unit_row(ring, 4).payloads() == (1, 0, 0, 0)


def test_row_vector_ops():
    """Row addition, subtraction, scaling, and dot products."""
    ring = Zmod(8)
    a = RowVector(ring, (1, 2, 3))
    b = RowVector(ring, (4, 5, 6))
    assert (a + b).payloads() == (5, 7, 1)
    assert (a - b).payloads() == (5, 5, 5)
    assert a.scale(2).payloads() == (2, 4, 6)
    assert a.dot(b).payload == (4 + 10 + 18) % 8


def test_matrix_json_round_trip():
    """Matrices and rows survive the JSON codec over several rings."""
    rng = random.Random(9)
    for ring in (Zmod(12), Zmod(16)):
        for _ in range(10):
            m = random_matrix(ring, rng.choice((2, 3)), rng)
            assert matrix_from_json(ring, matrix_to_json(m)) == m
            v = RowVector(ring, tuple(ring.elem(rng.randrange(12)) for _ in range(3)))
            assert row_from_json(ring, row_to_json(v)) == v
    z = Zring()
    v = RowVector(z, (-3, 0, 7))
    assert row_from_json(z, row_to_json(v)) == v


def test_matrix_entry_validation():
    """Matrices reject wrong entry counts."""
    ring = Zmod(5)
    with pytest.raises(ShapeError):
        Matrix(ring, 2, 2, (ring.elem(1), ring.elem(2), ring.elem(3)))
