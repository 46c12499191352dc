#!/usr/bin/env python3
"""Checking modified r-matrices and Rota-Baxter operators.

The modified classical Yang-Baxter equation for an endomorphism R of a
Lie algebra g reads

    [Rx, Ry] = R([Rx, y] + [x, Ry]) - [x, y].

This walkthrough builds sl(2) from structure constants, verifies the
classic Borel solution, shows a one-parameter family of solutions, and
a genuine non-solution with its witness pair.
"""

from fractions import Fraction

from mcybe import Endo, catalog, is_rota_baxter, mcybe_defect, rb_from_r

algebra, R = catalog("sl-borel", 2)
print("basis:", algebra.basis_names)
print("[e, f] =", algebra.bracket_basis(0, 1))
print("[h, e] =", algebra.bracket(algebra.basis_vector(2), algebra.basis_vector(0)))

print("\nBorel r-matrix R = diag(1, -1, 1):")
print("  solves the equation:", mcybe_defect(R).is_zero)

print("\nThe whole family diag(1, -1, t) solves it too:")
for t in (0, 2, Fraction(-7, 3)):
    Rt = Endo.from_diagonal(algebra, [1, -1, t])
    print(f"  t = {t}: defect zero = {mcybe_defect(Rt).is_zero}")

print("\ndiag(1, 1, -1) is not a solution (its +1 eigenspace span{e, f}")
print("is not a subalgebra):")
bad = Endo.from_diagonal(algebra, [1, 1, -1])
report = mcybe_defect(bad)
i, j = report.worst_pair
print(f"  defect at ({algebra.basis_names[i]}, {algebra.basis_names[j]}) =",
      report.defect_cochain.get(report.worst_pair))

print("\nRota-Baxter correspondence B = (R - Id)/2:")
B = rb_from_r(R)
print("  B = diag(0, -1, 0)")
print("  weight 1:", is_rota_baxter(B, 1).ok, " weight 0:", is_rota_baxter(B, 0).ok)

assert mcybe_defect(R).is_zero and not report.is_zero
print("\nall good")
