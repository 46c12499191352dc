"""Shared fixtures: catalog instances, extra algebras, random generators."""

import random
from fractions import Fraction

import pytest

from mcybe import Endo, LieAlgebra, Matrix, catalog
from mcybe.cochain import Cochain, basis_tuples


@pytest.fixture(scope="session")
def sl2():
    return catalog("sl-borel", 2)


@pytest.fixture(scope="session")
def sl3():
    return catalog("sl-borel", 3)


@pytest.fixture(scope="session")
def sl4():
    return catalog("sl-borel", 4)


@pytest.fixture(scope="session")
def abelian3():
    return catalog("abelian", 3)


@pytest.fixture(scope="session")
def affine2():
    """Solvable 2-dim algebra [a, n] = n with the involutive split R = diag(1, -1).

    Both eigenspaces are subalgebras, so R is a modified r-matrix, and n is
    a genuine Nijenhuis element with d n != 0.
    """
    algebra = LieAlgebra(2, {(0, 1): (0, 1)}, basis_names=["a", "n"])
    return algebra, Endo.from_diagonal(algebra, [1, -1])


@pytest.fixture(scope="session")
def gl2_like():
    """sl(2) plus a central line: a 4-dimensional non-abelian algebra."""
    structure = {
        (0, 1): (0, 0, 1, 0),
        (0, 2): (-2, 0, 0, 0),
        (1, 2): (0, 2, 0, 0),
    }
    return LieAlgebra(4, structure, basis_names=["e", "f", "h", "z"])


def rand_rational(rng, span=4):
    num = rng.randint(-span, span)
    den = rng.randint(1, 3)
    return Fraction(num, den)


def rand_vector(rng, n, span=3):
    return tuple(rng.randint(-span, span) for _ in range(n))


def rand_endo(rng, algebra, span=2):
    n = algebra.dim
    return Endo(Matrix([[rng.randint(-span, span) for _ in range(n)]
                        for _ in range(n)]), algebra)


def rand_cochain(rng, algebra, arity, support=2, span=3):
    tuples = basis_tuples(algebra.dim, arity)
    if not tuples:
        return Cochain.zero(algebra, arity)
    coeffs = {}
    for tup in rng.sample(tuples, min(support, len(tuples))):
        coeffs[tup] = tuple(rng.randint(-span, span) for _ in range(algebra.dim))
    return Cochain(algebra, arity, coeffs)


def rand_invertible(rng, n, span=2):
    while True:
        m = Matrix([[rng.randint(-span, span) for _ in range(n)] for _ in range(n)])
        inv = m.inverse()
        if inv is not None:
            return m, inv


def rand_involution(rng, algebra, k=None):
    """P diag(+-1) P^(-1): a random involution with a k-dimensional +1 space."""
    n = algebra.dim
    if k is None:
        k = rng.randint(0, n)
    p, pinv = rand_invertible(rng, n)
    d = Matrix.diagonal([1] * k + [-1] * (n - k))
    return Endo(p @ d @ pinv, algebra)


def nilpotent_exp(algebra, x):
    """exp(ad_x) for ad_x nilpotent, as an exact inner automorphism."""
    ad = algebra.ad(x).matrix
    n = algebra.dim
    acc = Matrix.identity(n)
    term = Matrix.identity(n)
    k = 1
    while True:
        term = term @ ad
        if term.is_zero():
            break
        if k > n + 1:
            raise ValueError("ad_x is not nilpotent")
        acc = acc + term.scale(Fraction(1, _factorial(k)))
        k += 1
    return Endo(acc, algebra)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def conjugate(A: Endo, R: Endo) -> Endo:
    """A R A^(-1); preserves solutions of the modified Yang-Baxter equation
    when A is a Lie algebra automorphism."""
    inv = A.matrix.inverse()
    assert inv is not None
    return Endo(A.matrix @ R.matrix @ inv, R.algebra)
