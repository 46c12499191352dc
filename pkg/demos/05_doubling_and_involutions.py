#!/usr/bin/env python3
"""Doubling constructions and the involutive equivalences.

Inside the direct product g (+) g the diagonal {(x, x)} is always a
subalgebra.  The graph {(x - Rx, -x - Rx)} of an operator R is a
subalgebra exactly when R solves the modified Yang-Baxter equation, and
then it is a complement of the diagonal: g (+) g = diagonal (+) graph.

For involutions (R^2 = Id) four structures coincide: MCYBE solution,
Nijenhuis operator, product structure, and a splitting of g into two
subalgebras.
"""

from mcybe import (Endo, Matrix, build_double, catalog, complement_certificate,
                   deformed_complements, graph_complement, involutive_analyze,
                   d_apply)
from mcybe.cochain import Cochain

algebra, R = catalog("sl-borel", 2)

dbl = build_double(algebra)
print("double of sl(2): dim", dbl.algebra.dim)
print("diagonal is a subalgebra:", dbl.diagonal_cert.is_subalgebra)
print("antidiagonal is a subalgebra:", dbl.antidiagonal_cert.is_subalgebra,
      " (fails since [(e,-e), (f,-f)] = (h, h))")

print("\ngraph criterion:")
print("  Borel R:", graph_complement(R).is_subalgebra)
bad = Endo.from_diagonal(algebra, [1, 1, -1])
cert = graph_complement(bad)
print("  diag(1, 1, -1):", cert.is_subalgebra, " failing pair", cert.failing_pair)

print("\ncomplement certificate for the Borel solution:")
rep = complement_certificate(R)
print(f"  rank {rep.rank_total} of {2 * algebra.dim}, intersection dim "
      f"{rep.intersection_dim}, both summands subalgebras: "
      f"{rep.diagonal_subalgebra_ok and rep.graph_subalgebra_ok}")

print("\nthe certificate persists along a valid linear deformation:")
rhat = d_apply(R, Cochain.from_vector(algebra, algebra.basis_vector(0))).to_endo()
for t, r in deformed_complements(R, rhat, [0, 1, -2]):
    print(f"  t = {t}: ok = {r.ok}")

print("\ninvolutive equivalences on sl(3):")
algebra3, R3 = catalog("sl-borel", 3)
rep3 = involutive_analyze(R3)
print("  Borel: all four verdicts true =", rep3.verdict,
      "| +1 eigenspace dim", len(rep3.plus_basis),
      "| -1 eigenspace dim", len(rep3.minus_basis))

swap = Endo(Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), algebra)
neg = involutive_analyze(swap)
print("  sl(2) swap e <-> f: all four verdicts false =", not neg.verdict,
      "| they still agree =", neg.all_agree())

assert rep.ok and rep3.verdict and not neg.verdict
print("\nall good")
