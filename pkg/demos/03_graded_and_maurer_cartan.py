#!/usr/bin/env python3
"""The graded Lie algebra that governs deformations.

On the graded space of alternating cochains there is a bracket [[.,.]]
with two characterizations built in:

  * [[B, B]] = 0        iff B is a weight-0 Rota-Baxter operator,
  * [[R, R]] = 2 pi     iff R is a modified r-matrix (pi = the bracket).

With d_R = [[R, .]] the triple (C*, [[.,.]], d_R) is a differential
graded Lie algebra, and R + R' is again a modified r-matrix exactly when
R' solves the Maurer-Cartan equation d_R R' + (1/2)[[R', R']] = 0.
"""

from mcybe import (Endo, Matrix, catalog, d_graded, graded_bracket,
                   is_maurer_cartan_weight0, kuranishi, mc_deformation_check,
                   pi_cochain, satisfies_mc_modified)
from mcybe.cochain import Cochain, coboundary_matrix

algebra, R = catalog("sl-borel", 2)
two_pi = pi_cochain(algebra).scale(2)

print("[[R, R]] == 2 pi:", graded_bracket(R, R) == two_pi)
print("satisfies_mc_modified(R):", satisfies_mc_modified(R))

B = Endo(Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]), algebra)   # f -> e
print("\nB: f -> e is a weight-0 Rota-Baxter operator:",
      is_maurer_cartan_weight0(B))

print("\nd_R R = [[R, R]] = 2 pi:", d_graded(R, R) == two_pi)
print("2 pi is central: [[2 pi, R]] = 0:", graded_bracket(two_pi,
      Cochain.from_endo(R)).is_zero())

ident = Endo.identity(algebra)
print("\nMaurer-Cartan deformation test around Id:")
print("  R' = R - Id (deforming Id into the Borel solution):",
      mc_deformation_check(ident, R - ident))
print("  R' = R (doubling the Borel solution fails):",
      mc_deformation_check(R, R))

print("\nKuranishi obstruction on the 2-cocycle basis of sl(2):")
kernel = coboundary_matrix(R, 1).matrix.kernel_basis()
for vec in kernel:
    f = Cochain.from_coeff_vector(algebra, 1, vec)
    rep = kuranishi(R, f)
    support = sorted(f.coeffs)
    print(f"  cocycle supported on {support}: [[f, f]] closed = {rep.is_cocycle}, "
          f"class vanishes in H^3 = {rep.vanishes_in_H3}")

assert satisfies_mc_modified(R)
print("\nall good")
