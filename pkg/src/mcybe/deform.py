"""Linear deformations R + t Rhat of a modified r-matrix.

All conditions "for all t" are handled as polynomial identities in an
indeterminate t with every coefficient extracted exactly; no t values are
ever sampled.  The defect of R + t Rhat is quadratic in t:

    S(R + t Rhat) = S(R) + t d_R(Rhat) + t^2 S2(Rhat)

where S2 is the weight-0 Rota-Baxter defect of Rhat, so a deformation is
valid exactly when Rhat is a 2-cocycle (t coefficient) and a weight-0
Rota-Baxter operator (t^2 coefficient).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError
from .liealg import (Endo, LieAlgebra, Vector, is_zero_vector, vadd, vsub,
                     vzero)
from .cochain import Cochain, d_apply
from .rmatrix import induced_bracket_table, mcybe_defect, require_modified


def weight0_defect_cochain(B: Endo) -> Cochain:
    """[Bx, By] - B([Bx, y] + [x, By]) on basis pairs, as an arity-2 cochain."""
    a = B.algebra
    coeffs = {}
    for i in range(a.dim):
        bi = B.apply(a.basis_vector(i))
        for j in range(i + 1, a.dim):
            ej = a.basis_vector(j)
            bj = B.apply(ej)
            inner = vadd(a.bracket(bi, ej), a.bracket(a.basis_vector(i), bj))
            value = vsub(a.bracket(bi, bj), B.apply(inner))
            if not is_zero_vector(value):
                coeffs[(i, j)] = value
    return Cochain(a, 2, coeffs)


def defect_polynomial(R: Endo, Rhat: Endo):
    """Coefficient cochains (S0, S1, S2) of S(R + t Rhat) in t.

    S1 is the coboundary of Rhat in the R-complex and S2 the weight-0
    defect of Rhat; both are cross-checked against an independent exact
    interpolation of the defect at t = 0, 1, -1.
    """
    s0 = mcybe_defect(R).defect_cochain
    s1 = d_apply(R, Cochain.from_endo(Rhat), check=False)
    s2 = weight0_defect_cochain(Rhat)
    plus = mcybe_defect(R + Rhat).defect_cochain
    minus = mcybe_defect(R - Rhat).defect_cochain
    half = Fraction(1, 2)
    if (plus - minus).scale(half) != s1 or (plus + minus).scale(half) - s0 != s2:
        raise RuntimeError("polynomial defect coefficients disagree with "
                           "interpolated defect values")
    return s0, s1, s2


@dataclass
class DeformationVerdict:
    """Coefficientwise validity of R + t Rhat as a family of r-matrices."""
    cocycle_ok: bool
    weight0_ok: bool
    valid: bool
    failing_pair: tuple | None = None

    def __bool__(self):
        return self.valid


def check_linear_deformation(R: Endo, Rhat: Endo) -> DeformationVerdict:
    """Rhat generates a linear deformation iff both t-coefficients vanish."""
    require_modified(R, "check_linear_deformation")
    _, s1, s2 = defect_polynomial(R, Rhat)
    cocycle_ok = s1.is_zero()
    weight0_ok = s2.is_zero()
    failing = None
    if not cocycle_ok:
        failing = min(s1.coeffs)
    elif not weight0_ok:
        failing = min(s2.coeffs)
    return DeformationVerdict(cocycle_ok, weight0_ok, cocycle_ok and weight0_ok,
                              failing)


@dataclass
class EquivalenceVerdict:
    """phi_t = Id + t ad_x as an equivalence of two linear deformations.

    homomorphism_ok is the t^2 bracket condition [[x,y],[x,z]] = 0 (the t
    coefficient is the Jacobi identity and holds automatically);
    intertwine_linear_ok is Rhat1 - Rhat2 = d x; intertwine_quadratic_ok is
    the t^2 coefficient Rhat2 ad_x = ad_x Rhat1.
    """
    homomorphism_ok: bool
    intertwine_linear_ok: bool
    intertwine_quadratic_ok: bool
    ok: bool
    failing_pair: tuple | None = None

    def __bool__(self):
        return self.ok


def check_equivalence(R: Endo, Rhat1: Endo, Rhat2: Endo, x) -> EquivalenceVerdict:
    """Decide whether Id + t ad_x intertwines R + t Rhat1 with R + t Rhat2.

    Both defining conditions are polynomial identities in t and are checked
    coefficient by coefficient.
    """
    a = R.algebra
    x = tuple(x)
    if len(x) != a.dim:
        raise InputError(f"element length {len(x)} != dim {a.dim}")

    hom_ok = True
    failing = None
    for j in range(a.dim):
        xj = a.bracket(x, a.basis_vector(j))
        for k in range(j + 1, a.dim):
            if not is_zero_vector(a.bracket(xj, a.bracket(x, a.basis_vector(k)))):
                hom_ok = False
                failing = (j, k)
                break
        if not hom_ok:
            break

    dx = d_apply(R, Cochain.from_vector(a, x), check=False).to_endo()
    linear_ok = (Rhat1 - Rhat2) == dx

    ad_x = a.ad(x)
    quadratic_ok = Rhat2.compose(ad_x) == ad_x.compose(Rhat1)

    ok = hom_ok and linear_ok and quadratic_ok
    return EquivalenceVerdict(hom_ok, linear_ok, quadratic_ok, ok, failing)


@dataclass
class NijenhuisVerdict:
    """Exact verdict of the two Nijenhuis-element equations for x.

    eq1: [[x, y], [x, z]] = 0 for all basis y, z;
    eq2: [x, [x, Ry]] = [x, R([x, y])] for all basis y.
    """
    eq1_ok: bool
    eq2_ok: bool
    is_nijenhuis_element: bool
    eq1_witness: tuple | None = None
    eq2_witness: int | None = None

    def __bool__(self):
        return self.is_nijenhuis_element


def nijenhuis_check(R: Endo, x) -> NijenhuisVerdict:
    a = R.algebra
    x = tuple(x)
    if len(x) != a.dim:
        raise InputError(f"element length {len(x)} != dim {a.dim}")
    eq1_ok, eq1_witness = True, None
    for j in range(a.dim):
        xj = a.bracket(x, a.basis_vector(j))
        for k in range(j + 1, a.dim):
            if not is_zero_vector(a.bracket(xj, a.bracket(x, a.basis_vector(k)))):
                eq1_ok, eq1_witness = False, (j, k)
                break
        if not eq1_ok:
            break
    eq2_ok, eq2_witness = True, None
    for j in range(a.dim):
        ej = a.basis_vector(j)
        lhs = a.bracket(x, a.bracket(x, R.apply(ej)))
        rhs = a.bracket(x, R.apply(a.bracket(x, ej)))
        if lhs != rhs:
            eq2_ok, eq2_witness = False, j
            break
    return NijenhuisVerdict(eq1_ok, eq2_ok, eq1_ok and eq2_ok,
                            eq1_witness, eq2_witness)


def nijenhuis_scan(R: Endo, candidates=None):
    """Check a family of candidate elements; a heuristic search, not a
    classification (the defining equations are quadratic in x).

    Default candidates: all basis vectors, then all pairwise sums e_i + e_j.
    """
    a = R.algebra
    if candidates is None:
        candidates = a.basis()
        candidates += [vadd(a.basis_vector(i), a.basis_vector(j))
                       for i in range(a.dim) for j in range(i + 1, a.dim)]
    return [(tuple(x), nijenhuis_check(R, x)) for x in candidates]


def trivial_deformation(R: Endo, x):
    """Rhat = d x for a Nijenhuis element x, certified trivial.

    Returns (Rhat, DeformationVerdict); the verdict is always valid and the
    equivalence of R + t Rhat with the zero deformation via Id + t ad_x is
    re-verified, both guaranteed by the Nijenhuis equations.
    """
    verdict = nijenhuis_check(R, x)
    if not verdict:
        a = R.algebra
        if not verdict.eq1_ok:
            j, k = verdict.eq1_witness
            raise PreconditionError(
                f"x is not a Nijenhuis element: [[x, {a.basis_names[j]}], "
                f"[x, {a.basis_names[k]}]] != 0")
        raise PreconditionError(
            f"x is not a Nijenhuis element: [x, [x, R "
            f"{a.basis_names[verdict.eq2_witness]}]] != [x, R([x, "
            f"{a.basis_names[verdict.eq2_witness]}])]")
    rhat = d_apply(R, Cochain.from_vector(R.algebra, tuple(x))).to_endo()
    dv = check_linear_deformation(R, rhat)
    if not dv.valid:
        raise RuntimeError("trivial deformation failed the validity check")
    eq = check_equivalence(R, rhat, Endo.zero(R.algebra), x)
    if not eq.ok:
        raise RuntimeError("trivial deformation failed the equivalence certificate")
    return rhat, dv


@dataclass
class NijenhuisOperatorReport:
    ok: bool
    failing_pair: tuple | None = None
    value: Vector | None = None

    def __bool__(self):
        return self.ok


def nijenhuis_operator_check(a: LieAlgebra, N: Endo) -> NijenhuisOperatorReport:
    """[Nx, Ny] = N([Nx, y] + [x, Ny]) - N^2([x, y]) on all basis pairs of a.

    The brackets are taken in a (typically an induced algebra (g, [.,.]_R));
    only the matrix of N is used.
    """
    if N.matrix.nrows != a.dim:
        raise InputError("operator does not fit the algebra")
    for i in range(a.dim):
        ei = a.basis_vector(i)
        ni = N.apply(ei)
        for j in range(i + 1, a.dim):
            ej = a.basis_vector(j)
            nj = N.apply(ej)
            inner = vadd(a.bracket(ni, ej), a.bracket(ei, nj))
            torsion = vadd(vsub(a.bracket(ni, nj), N.apply(inner)),
                           N.apply(N.apply(a.bracket_basis(i, j))))
            if not is_zero_vector(torsion):
                return NijenhuisOperatorReport(False, (i, j), torsion)
    return NijenhuisOperatorReport(True)


@dataclass
class InducedDeformationReport:
    """omega(x,y) = [Rhat x, y] + [x, Rhat y] deforming the induced bracket."""
    omega: Cochain
    jacobi_ok: bool
    failing_triple: tuple | None = None

    def __bool__(self):
        return self.jacobi_ok


def induced_bracket_deformation(R: Endo, Rhat: Endo) -> InducedDeformationReport:
    """omega for a valid deformation, with the polynomial Jacobi family check.

    The Jacobiator of [.,.]_R + t omega is quadratic in t; all coefficient
    cochains are computed exactly on basis triples.
    """
    dv = check_linear_deformation(R, Rhat)
    if not dv.valid:
        raise PreconditionError(
            f"induced_bracket_deformation needs a valid deformation; failing "
            f"pair {dv.failing_pair}")
    a = R.algebra
    omega_coeffs = {}
    for i in range(a.dim):
        ei = a.basis_vector(i)
        ri = Rhat.apply(ei)
        for j in range(i + 1, a.dim):
            ej = a.basis_vector(j)
            value = vadd(a.bracket(ri, ej), a.bracket(ei, Rhat.apply(ej)))
            if not is_zero_vector(value):
                omega_coeffs[(i, j)] = value
    omega = Cochain(a, 2, omega_coeffs)

    base = Cochain(a, 2, induced_bracket_table(R))
    jacobi_ok, failing = _bracket_family_jacobi(a, base, omega)
    return InducedDeformationReport(omega, jacobi_ok, failing)


def _pair_value(cochain: Cochain, i, j) -> Vector:
    if i == j:
        return vzero(cochain.algebra.dim)
    if i < j:
        return cochain.get((i, j))
    return tuple(-x for x in cochain.get((j, i)))


def _bracket_family_jacobi(a: LieAlgebra, base: Cochain, omega: Cochain):
    """Jacobiator coefficients of base + t omega in t; True when all vanish."""
    def jac_coeff(b1, b2, i, j, k):
        # sum over cyclic (i,j,k) of b1(i, b2(j, k)) expanded bilinearly
        acc = vzero(a.dim)
        for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = _pair_value(b2, y, z)
            for s, c in enumerate(inner):
                if c:
                    acc = vadd(acc, tuple(c * v for v in _pair_value(b1, x, s)))
        return acc

    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            for k in range(j + 1, a.dim):
                t0 = jac_coeff(base, base, i, j, k)
                if not is_zero_vector(t0):
                    return False, (i, j, k)
                t1 = vadd(jac_coeff(base, omega, i, j, k),
                          jac_coeff(omega, base, i, j, k))
                if not is_zero_vector(t1):
                    return False, (i, j, k)
                t2 = jac_coeff(omega, omega, i, j, k)
                if not is_zero_vector(t2):
                    return False, (i, j, k)
    return True, None


@dataclass
class CompatibleBracketReport:
    """Sum of two deformed brackets: Jacobi plus the midpoint identity."""
    jacobi_ok: bool
    midpoint_ok: bool
    ok: bool
    failing: tuple | None = None

    def __bool__(self):
        return self.ok


def compatible_bracket_check(R: Endo, Rhat: Endo, t1, t2) -> CompatibleBracketReport:
    """[.,.]_{R_{t1}} + [.,.]_{R_{t2}} is a Lie bracket equal to twice the
    bracket of the midpoint operator R + ((t1+t2)/2) Rhat."""
    dv = check_linear_deformation(R, Rhat)
    if not dv.valid:
        raise PreconditionError(
            f"compatible_bracket_check needs a valid deformation; failing "
            f"pair {dv.failing_pair}")
    a = R.algebra
    r1 = R + Rhat.scale(t1)
    r2 = R + Rhat.scale(t2)
    table1 = induced_bracket_table(r1)
    table2 = induced_bracket_table(r2)
    summed = {}
    for key in set(table1) | set(table2):
        value = vadd(table1.get(key, vzero(a.dim)), table2.get(key, vzero(a.dim)))
        if not is_zero_vector(value):
            summed[key] = value

    candidate = LieAlgebra(a.dim, summed, basis_names=a.basis_names, check=False)
    jac = candidate.verify_jacobi()

    mid = R + Rhat.scale(Fraction(t1 + t2, 2))
    mid_table = induced_bracket_table(mid)
    doubled = {k: tuple(2 * x for x in v) for k, v in mid_table.items()}
    midpoint_ok = doubled == summed

    ok = jac.ok and midpoint_ok
    return CompatibleBracketReport(jac.ok, midpoint_ok, ok,
                                   None if jac.ok else jac.triple)
