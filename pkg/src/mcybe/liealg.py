"""Lie algebras over Q by structure constants, plus endomorphisms of them.

A LieAlgebra stores only the brackets [e_i, e_j] for i < j; antisymmetry
and vanishing diagonal brackets are structural, so inconsistent tables
cannot be represented.  The Jacobi identity is verified eagerly on
construction unless explicitly deferred.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .linalg import Matrix, Rational, ratio, rational_from_json, rational_to_json

Vector = tuple  # tuple of Rational, length = algebra dimension


# -- small exact vector helpers ---------------------------------------

def vzero(n) -> Vector:
    return (0,) * n


def vadd(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u) -> Vector:
    return tuple(c * a for a in u)


def vneg(u) -> Vector:
    return tuple(-a for a in u)


def is_zero_vector(u) -> bool:
    return all(not a for a in u)


def vector_from_json(data, dim) -> Vector:
    vec = tuple(rational_from_json(v) for v in data)
    if len(vec) != dim:
        raise InputError(f"vector length {len(vec)} != dim {dim}")
    return vec


def vector_to_json(u):
    return [rational_to_json(a) for a in u]


def vector_str(u) -> str:
    from .linalg import rational_str
    return "(" + ", ".join(rational_str(a) for a in u) + ")"


@dataclass(frozen=True)
class JacobiResult:
    ok: bool
    triple: tuple | None = None
    value: Vector | None = None

    def __bool__(self):
        return self.ok


class LieAlgebra:
    """Finite-dimensional Lie algebra given by rational structure constants."""

    def __init__(self, dim, structure, basis_names=None, check=True):
        if dim < 0:
            raise InputError("negative dimension")
        self.dim = dim
        if basis_names is None:
            basis_names = [f"x{i + 1}" for i in range(dim)]
        basis_names = [str(s) for s in basis_names]
        if len(basis_names) != dim:
            raise InputError(f"{len(basis_names)} basis names for dimension {dim}")
        self.basis_names = tuple(basis_names)
        table = {}
        for key, value in structure.items():
            i, j = key
            if not (0 <= i < j < dim):
                raise InputError(f"structure key {key}: need 0 <= i < j < dim")
            vec = tuple(ratio(x) for x in value)
            if len(vec) != dim:
                raise InputError(f"structure value for {key} has length {len(vec)}")
            if not is_zero_vector(vec):
                table[(i, j)] = vec
        self.structure = table
        if check:
            jac = self.verify_jacobi()
            if not jac.ok:
                i, j, k = jac.triple
                names = self.basis_names
                raise InputError(
                    f"Jacobi identity fails on ({names[i]}, {names[j]}, {names[k]}): "
                    f"jacobiator = {vector_str(jac.value)}")

    # -- basics -------------------------------------------------------

    def zero(self) -> Vector:
        return vzero(self.dim)

    def basis_vector(self, i) -> Vector:
        if not 0 <= i < self.dim:
            raise InputError(f"basis index {i} out of range")
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def is_abelian(self) -> bool:
        return not self.structure

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.structure == other.structure

    __hash__ = None

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, names={list(self.basis_names)})"

    # -- bracket ------------------------------------------------------

    def bracket_basis(self, i, j) -> Vector:
        """[e_i, e_j]; antisymmetry comes from the i<j storage."""
        if i == j:
            return self.zero()
        if i < j:
            return self.structure.get((i, j), self.zero())
        vec = self.structure.get((j, i))
        return vneg(vec) if vec is not None else self.zero()

    def bracket(self, x, y) -> Vector:
        """Bilinear antisymmetric extension of the structure table."""
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError(f"bracket arguments must have length {self.dim}")
        acc = [0] * self.dim
        for (i, j), vec in self.structure.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for k, v in enumerate(vec):
                    if v:
                        acc[k] += c * v
        return tuple(ratio(a) if isinstance(a, Fraction) else a for a in acc)

    def verify_jacobi(self) -> JacobiResult:
        """Check [[e_i,e_j],e_k] + cyclic = 0 on all i<j<k; first violation wins."""
        n = self.dim
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(i + 1, n):
                ej = self.basis_vector(j)
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    ek = self.basis_vector(k)
                    jac = vadd(vadd(self.bracket(bij, ek),
                                    self.bracket(self.bracket_basis(j, k), ei)),
                               self.bracket(self.bracket_basis(k, i), ej))
                    if not is_zero_vector(jac):
                        return JacobiResult(False, (i, j, k), jac)
        return JacobiResult(True)

    def ad(self, x) -> "Endo":
        """Matrix of y -> [x, y] in the chosen basis."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return Endo(Matrix.from_columns(cols, nrows=self.dim), self)

    # -- JSON ---------------------------------------------------------

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "basis": list(self.basis_names),
            "brackets": [
                {"i": i, "j": j, "value": vector_to_json(vec)}
                for (i, j), vec in sorted(self.structure.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data, check=True):
        try:
            dim = data["dim"]
            names = data.get("basis")
            entries = data.get("brackets", [])
        except (TypeError, KeyError) as exc:
            raise InputError(f"bad algebra JSON: {exc}") from exc
        if not isinstance(dim, int) or dim < 0:
            raise InputError(f"bad algebra dim {dim!r}")
        structure = {}
        for entry in entries:
            try:
                i, j = entry["i"], entry["j"]
                value = entry["value"]
            except (TypeError, KeyError) as exc:
                raise InputError(f"bad bracket entry {entry!r}") from exc
            if not (isinstance(i, int) and isinstance(j, int) and i < j):
                raise InputError(f"bracket entry needs integer i < j, got i={i!r} j={j!r}")
            if (i, j) in structure:
                raise InputError(f"duplicate bracket entry for ({i}, {j})")
            structure[(i, j)] = [rational_from_json(v) for v in value]
        return cls(dim, structure, basis_names=names, check=check)


class Endo:
    """Linear endomorphism of a Lie algebra, stored as a square matrix.

    Columns are images of basis vectors: (E x)_i = sum_j M[i][j] x_j.
    """

    __slots__ = ("matrix", "algebra")

    def __init__(self, matrix: Matrix, algebra: LieAlgebra):
        if matrix.nrows != algebra.dim or matrix.ncols != algebra.dim:
            raise InputError(
                f"endomorphism matrix {matrix.shape} does not fit dim {algebra.dim}")
        self.matrix = matrix
        self.algebra = algebra

    @classmethod
    def identity(cls, algebra):
        return cls(Matrix.identity(algebra.dim), algebra)

    @classmethod
    def zero(cls, algebra):
        return cls(Matrix.zero(algebra.dim, algebra.dim), algebra)

    @classmethod
    def from_diagonal(cls, algebra, entries):
        entries = list(entries)
        if len(entries) != algebra.dim:
            raise InputError("diagonal length mismatch")
        return cls(Matrix.diagonal(entries), algebra)

    def apply(self, vec) -> Vector:
        return self.matrix.apply(vec)

    def compose(self, other: "Endo") -> "Endo":
        """self after other."""
        return Endo(self.matrix @ other.matrix, self.algebra)

    def __add__(self, other):
        return Endo(self.matrix + other.matrix, self.algebra)

    def __sub__(self, other):
        return Endo(self.matrix - other.matrix, self.algebra)

    def __neg__(self):
        return Endo(-self.matrix, self.algebra)

    def scale(self, c: Rational) -> "Endo":
        return Endo(self.matrix.scale(c), self.algebra)

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return self.algebra == other.algebra and self.matrix == other.matrix

    __hash__ = None

    def __repr__(self):
        return f"Endo({self.matrix!r})"

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def involution_defect(self):
        """None when E^2 = Id, else the first basis index j with E^2 e_j != e_j."""
        sq = self.matrix @ self.matrix
        n = self.algebra.dim
        for j in range(n):
            for i in range(n):
                if sq.entry(i, j) != (1 if i == j else 0):
                    return j
        return None

    def to_json_dict(self):
        return {"matrix": [[rational_to_json(x) for x in self.matrix.row(i)]
                           for i in range(self.matrix.nrows)]}

    @classmethod
    def from_json_dict(cls, data, algebra):
        try:
            rows = data["matrix"]
        except (TypeError, KeyError) as exc:
            raise InputError(f"bad endomorphism JSON: {exc}") from exc
        return cls(Matrix([[rational_from_json(x) for x in row] for row in rows]),
                   algebra)


def subspace_closure(algebra: LieAlgebra, basis_vectors):
    """Whether span(basis_vectors) is closed under the bracket.

    Membership is decided by an exact linear solve against the spanning
    matrix.  Returns (is_closed, failing_pair_or_None); the empty subspace
    is closed.
    """
    vecs = [tuple(v) for v in basis_vectors]
    if not vecs:
        return True, None
    span = Matrix.from_columns(vecs, nrows=algebra.dim)
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            w = algebra.bracket(vecs[i], vecs[j])
            if not is_zero_vector(w) and span.solve(w) is None:
                return False, (i, j)
    return True, None


def nijenhuis_torsion(N: Endo, i, j) -> Vector:
    """[Ne_i, Ne_j] - N([Ne_i, e_j] + [e_i, Ne_j]) + N^2([e_i, e_j])."""
    a = N.algebra
    ei, ej = a.basis_vector(i), a.basis_vector(j)
    ni, nj = N.apply(ei), N.apply(ej)
    mixed = vadd(a.bracket(ni, ej), a.bracket(ei, nj))
    return vadd(vsub(a.bracket(ni, nj), N.apply(mixed)),
                N.apply(N.apply(a.bracket_basis(i, j))))


# -- catalog ----------------------------------------------------------

def _sl_basis(n):
    """Basis order: upper E_ij row-major, lower E_ij row-major, Cartan H_i."""
    upper = [(i, j) for i in range(n) for j in range(n) if i < j]
    lower = [(i, j) for i in range(n) for j in range(n) if i > j]
    return upper, lower


def _sl_names(n):
    if n == 2:
        return ["e", "f", "h"]
    upper, lower = _sl_basis(n)
    names = [f"E{i + 1}{j + 1}" for i, j in upper]
    names += [f"E{i + 1}{j + 1}" for i, j in lower]
    names += [f"H{i + 1}" for i in range(n - 1)]
    return names


def _sl_structure(n):
    upper, lower = _sl_basis(n)
    offdiag = upper + lower
    dim = n * n - 1

    def elementary(i, j):
        m = [[0] * n for _ in range(n)]
        m[i][j] = 1
        return m

    def cartan(i):
        m = [[0] * n for _ in range(n)]
        m[i][i] = 1
        m[i + 1][i + 1] = -1
        return m

    mats = [elementary(i, j) for i, j in offdiag] + [cartan(i) for i in range(n - 1)]

    def commutator(a, b):
        return [[sum(a[i][k] * b[k][j] - b[i][k] * a[k][j] for k in range(n))
                 for j in range(n)] for i in range(n)]

    def decompose(m):
        coeffs = [0] * dim
        for idx, (i, j) in enumerate(offdiag):
            coeffs[idx] = m[i][j]
        diag = [m[i][i] for i in range(n)]
        running = 0
        for i in range(n - 1):
            running += diag[i]
            coeffs[len(offdiag) + i] = running
        return tuple(coeffs)

    structure = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            structure[(a, b)] = decompose(commutator(mats[a], mats[b]))
    return dim, structure


def sl_algebra(n) -> LieAlgebra:
    """sl(n, Q) with basis: upper E_ij, lower E_ij, Cartan H_i = E_ii - E_(i+1)(i+1)."""
    if n < 2:
        raise InputError("sl(n) needs n >= 2")
    dim, structure = _sl_structure(n)
    return LieAlgebra(dim, structure, basis_names=_sl_names(n), check=False)


def borel_r_matrix(algebra: LieAlgebra, n) -> Endo:
    """+1 on the Borel part (upper + Cartan), -1 on the strictly lower part."""
    k = n * (n - 1) // 2
    diag = [1] * k + [-1] * k + [1] * (n - 1)
    return Endo.from_diagonal(algebra, diag)


CATALOG_NAMES = ("sl-borel", "abelian")


def catalog(name, n):
    """Named example algebras with a distinguished operator.

    sl-borel: sl(n, Q) with the involutive Borel r-matrix; abelian: the
    n-dimensional abelian algebra with the identity operator.
    """
    if n < 2:
        raise InputError(f"catalog needs n >= 2, got {n}")
    if name == "sl-borel":
        algebra = sl_algebra(n)
        return algebra, borel_r_matrix(algebra, n)
    if name == "abelian":
        algebra = LieAlgebra(n, {}, basis_names=[f"a{i + 1}" for i in range(n)])
        return algebra, Endo.identity(algebra)
    if name == "custom":
        raise InputError(
            "catalog name 'custom' is a placeholder; load an algebra from its "
            "JSON form instead (LieAlgebra.from_json_dict)")
    raise InputError(f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")
