"""Modified r-matrices and Rota-Baxter operators.

The central object is the defect

    S(R)(x, y) = [Rx, Ry] - R([Rx, y] + [x, Ry]) + [x, y],

which vanishes exactly when R solves the modified classical Yang-Baxter
equation.  The module also covers the weight-lambda Rota-Baxter axiom,
the correspondence R = Id + 2B, the induced bracket [x, y]_R, the
representation rho, and the involutive-case equivalence analyzer.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError
from .liealg import (Endo, LieAlgebra, Vector, is_zero_vector, nijenhuis_torsion,
                     subspace_closure, vadd, vector_str, vsub)
from .cochain import Cochain


def defect_value(R: Endo, i, j) -> Vector:
    """S(R)(e_i, e_j)."""
    a = R.algebra
    ei, ej = a.basis_vector(i), a.basis_vector(j)
    ri, rj = R.apply(ei), R.apply(ej)
    inner = vadd(a.bracket(ri, ej), a.bracket(ei, rj))
    return vadd(vsub(a.bracket(ri, rj), R.apply(inner)), a.bracket_basis(i, j))


@dataclass
class DefectReport:
    """Defect of the modified Yang-Baxter equation on all basis pairs."""
    is_zero: bool
    worst_pair: tuple | None
    defect_cochain: Cochain

    def __bool__(self):
        return self.is_zero


def mcybe_defect(R: Endo) -> DefectReport:
    """Evaluate S(R) on every basis pair; zero iff R is a modified r-matrix."""
    a = R.algebra
    coeffs = {}
    worst = None
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            value = defect_value(R, i, j)
            if not is_zero_vector(value):
                coeffs[(i, j)] = value
                if worst is None:
                    worst = (i, j)
    return DefectReport(worst is None, worst, Cochain(a, 2, coeffs))


def require_modified(R: Endo, what="this operation"):
    report = mcybe_defect(R)
    if not report.is_zero:
        i, j = report.worst_pair
        names = R.algebra.basis_names
        raise PreconditionError(
            f"{what} needs a modified r-matrix, but S(R)({names[i]}, {names[j]}) = "
            f"{vector_str(report.defect_cochain.get(report.worst_pair))}")
    return report


@dataclass
class RotaBaxterReport:
    ok: bool
    weight: object
    failing_pair: tuple | None = None
    value: Vector | None = None

    def __bool__(self):
        return self.ok


def is_rota_baxter(B: Endo, weight) -> RotaBaxterReport:
    """Check [Bx, By] = B([Bx, y] + [x, By] + weight [x, y]) on basis pairs."""
    a = B.algebra
    for i in range(a.dim):
        ei = a.basis_vector(i)
        bi = B.apply(ei)
        for j in range(i + 1, a.dim):
            ej = a.basis_vector(j)
            bj = B.apply(ej)
            inner = vadd(vadd(a.bracket(bi, ej), a.bracket(ei, bj)),
                         tuple(weight * c for c in a.bracket_basis(i, j)))
            diff = vsub(a.bracket(bi, bj), B.apply(inner))
            if not is_zero_vector(diff):
                return RotaBaxterReport(False, weight, (i, j), diff)
    return RotaBaxterReport(True, weight)


def rb_from_r(R: Endo) -> Endo:
    """B = (R - Id)/2; weight-1 Rota-Baxter iff R is a modified r-matrix."""
    return (R - Endo.identity(R.algebra)).scale(Fraction(1, 2))


def r_from_rb(B: Endo) -> Endo:
    """R = Id + 2B; exact inverse of rb_from_r."""
    return Endo.identity(B.algebra) + B.scale(2)


def induced_bracket_table(R: Endo):
    """Structure table of [x, y]_R = [Rx, y] + [x, Ry] on basis pairs."""
    a = R.algebra
    table = {}
    for i in range(a.dim):
        ei = a.basis_vector(i)
        ri = R.apply(ei)
        for j in range(i + 1, a.dim):
            ej = a.basis_vector(j)
            value = vadd(a.bracket(ri, ej), a.bracket(ei, R.apply(ej)))
            if not is_zero_vector(value):
                table[(i, j)] = value
    return table


def induced_bracket(R: Endo, force=False) -> LieAlgebra:
    """The Lie algebra (g, [.,.]_R).

    Refuses operators that are not modified r-matrices, since the induced
    bracket need not satisfy Jacobi then; force=True returns the raw table
    unchecked (run verify_jacobi on the result to see its status).
    """
    if not force:
        require_modified(R, "induced_bracket")
    return LieAlgebra(R.algebra.dim, induced_bracket_table(R),
                      basis_names=R.algebra.basis_names, check=False)


def rho(R: Endo, x) -> Endo:
    """Matrix of y -> [Rx, y] - R([x, y]).

    For a modified r-matrix this is a representation of (g, [.,.]_R) on g;
    the formula itself is evaluated for any conforming R.
    """
    a = R.algebra
    if len(x) != a.dim:
        raise InputError(f"vector length {len(x)} != dim {a.dim}")
    rx = R.apply(x)
    cols = []
    for j in range(a.dim):
        ej = a.basis_vector(j)
        cols.append(vsub(a.bracket(rx, ej), R.apply(a.bracket(x, ej))))
    from .linalg import Matrix
    return Endo(Matrix.from_columns(cols, nrows=a.dim), a)


@dataclass
class InvolutiveReport:
    """Four equivalent certificates for an involution R (R^2 = Id).

    One consistency cross-check, not four features: the verdicts are
    computed along independent routes and must coincide.
    """
    mcybe_ok: bool
    nijenhuis_operator_ok: bool
    eigensplit_ok: bool
    product_structure_ok: bool
    plus_basis: tuple
    minus_basis: tuple
    failing_pair: tuple | None = None

    @property
    def verdict(self) -> bool:
        return self.mcybe_ok

    def all_agree(self) -> bool:
        return (self.mcybe_ok == self.nijenhuis_operator_ok
                == self.eigensplit_ok == self.product_structure_ok)

    def __bool__(self):
        return self.verdict


def involutive_analyze(R: Endo) -> InvolutiveReport:
    """For R with R^2 = Id, decide the four equivalent structures together.

    Routes: (1) MCYBE defect on basis pairs; (2) vanishing Nijenhuis
    torsion; (3) both eigenspaces of R closed under the bracket; (4) the
    projector identities P[Px, Py] = [Px, Py] for P = (Id +- R)/2.
    """
    a = R.algebra
    bad = R.involution_defect()
    if bad is not None:
        raise InputError(
            f"involutive_analyze needs R^2 = Id; fails on basis vector "
            f"{a.basis_names[bad]}")

    defect = mcybe_defect(R)
    mcybe_ok = defect.is_zero

    nij_ok = True
    nij_pair = None
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if not is_zero_vector(nijenhuis_torsion(R, i, j)):
                nij_ok = False
                nij_pair = (i, j)
                break
        if not nij_ok:
            break

    ident = Endo.identity(a)
    plus_basis = tuple((R - ident).matrix.kernel_basis())
    minus_basis = tuple((R + ident).matrix.kernel_basis())
    assert len(plus_basis) + len(minus_basis) == a.dim
    plus_closed, _ = subspace_closure(a, plus_basis)
    minus_closed, _ = subspace_closure(a, minus_basis)
    eigensplit_ok = plus_closed and minus_closed

    half = Fraction(1, 2)
    p_plus = (ident + R).scale(half)
    p_minus = (ident - R).scale(half)
    product_ok = True
    for proj in (p_plus, p_minus):
        for i in range(a.dim):
            pi = proj.apply(a.basis_vector(i))
            for j in range(i + 1, a.dim):
                w = a.bracket(pi, proj.apply(a.basis_vector(j)))
                if proj.apply(w) != w:
                    product_ok = False
                    break
            if not product_ok:
                break
        if not product_ok:
            break

    report = InvolutiveReport(mcybe_ok, nij_ok, eigensplit_ok, product_ok,
                              plus_basis, minus_basis,
                              failing_pair=defect.worst_pair or nij_pair)
    if not report.all_agree():
        raise RuntimeError(f"involutive certificates disagree: {report}")
    return report
