"""Exact linear algebra kernel: rank, kernels, solving, edge shapes."""

import random
from fractions import Fraction

import pytest
import sympy

from mcybe import InputError, Matrix
from mcybe.linalg import ratio, rational_from_json, rational_to_json


def rand_matrix(rng, r, c, span=6, frac=False):
    def entry():
        if frac and rng.random() < 0.3:
            return Fraction(rng.randint(-span, span), rng.randint(1, 4))
        return rng.randint(-span, span)
    return Matrix([[entry() for _ in range(c)] for _ in range(r)])


def test_rank_zero_matrices():
    for r, c in [(1, 1), (3, 5), (5, 3), (4, 4)]:
        assert Matrix.zero(r, c).rank() == 0


def test_rank_identity():
    assert Matrix.identity(3).rank() == 3


def test_kernel_identity_empty():
    assert Matrix.identity(4).kernel_basis() == []


def test_kernel_one_by_two():
    basis = Matrix([[1, 1]]).kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    # spans (1, -1)
    assert v[0] * (-1) == v[1] * 1 and any(v)


def test_solve_identity():
    b = (3, Fraction(-1, 2), 7)
    assert Matrix.identity(3).solve(b) == b


def test_solve_zero_matrix_nonzero_rhs():
    assert Matrix.zero(3, 2).solve((1, 0, 0)) is None


def test_solve_dimension_mismatch():
    with pytest.raises(InputError):
        Matrix.identity(3).solve((1, 2))


def test_rank_plus_nullity(rng=random.Random(101)):
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = rand_matrix(rng, r, c, frac=True)
        kernel = m.kernel_basis()
        assert m.rank() + len(kernel) == c
        for v in kernel:
            assert all(not x for x in m.apply(v))


def test_solve_exactness(rng=random.Random(102)):
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = rand_matrix(rng, r, c)
        x0 = tuple(rng.randint(-4, 4) for _ in range(c))
        b = m.apply(x0)
        x = m.solve(b)
        assert x is not None
        assert m.apply(x) == b


def test_rank_invariant_under_row_ops(rng=random.Random(103)):
    for _ in range(25):
        r, c = rng.randint(2, 6), rng.randint(2, 6)
        m = rand_matrix(rng, r, c, frac=True)
        rows = m.rows_list()
        rng.shuffle(rows)
        scaled = []
        for row in rows:
            s = Fraction(rng.choice([1, 2, 3, -1, -5]), rng.randint(1, 3))
            scaled.append([s * x for x in row])
        assert Matrix(scaled).rank() == m.rank()


def test_rank_matches_sympy(rng=random.Random(104)):
    for _ in range(25):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        m = rand_matrix(rng, r, c, frac=True)
        assert m.rank() == sympy.Matrix(m.rows_list()).rank()


def test_det_matches_sympy(rng=random.Random(105)):
    for _ in range(20):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n, n, frac=True)
        assert m.det() == sympy.Matrix(m.rows_list()).det()


def test_inverse_roundtrip(rng=random.Random(106)):
    hits = 0
    while hits < 10:
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n, n)
        inv = m.inverse()
        if inv is None:
            continue
        hits += 1
        assert m @ inv == Matrix.identity(n)
        assert inv @ m == Matrix.identity(n)


def test_singular_inverse_none():
    assert Matrix.zero(2, 2).inverse() is None


def test_matmul_shapes_and_zero_rows():
    a = Matrix.zero(0, 3)
    b = Matrix.identity(3)
    prod = a @ b
    assert prod.shape == (0, 3)
    assert prod.is_zero()
    assert Matrix.zero(0, 5).kernel_basis() == [tuple(1 if i == j else 0 for i in range(5))
                                                for j in range(5)]


def test_no_floats_accepted():
    with pytest.raises(InputError):
        Matrix([[0.5]])
    with pytest.raises(InputError):
        ratio(1.25)


def test_rational_json_roundtrip():
    for v in (3, -7, Fraction(2, 3), Fraction(-9, 4), 0):
        assert rational_from_json(rational_to_json(v)) == v
    assert rational_to_json(Fraction(4, 2)) == 2
    with pytest.raises(InputError):
        rational_from_json("not-a-number")
    with pytest.raises(InputError):
        rational_from_json(0.5)


def test_entry_normalization():
    m = Matrix([[Fraction(4, 2), Fraction(1, 3)]])
    assert m.entry(0, 0) == 2 and isinstance(m.entry(0, 0), int)
    assert m.entry(0, 1) == Fraction(1, 3)
