"""
The frame calculus: bounds, coefficients, duals
===============================================

A finite family spans the space exactly when its frame operator is
invertible; then every vector has a canonical minimal-norm expansion,
a dual family reconstructs it from plain inner products, and one
normalization makes the family tight.
"""

import numpy as np

from qframes.frames import Frame
from qframes.qlinalg import QVector
from qframes.quaternion import Quaternion
from qframes.sampling import random_frame, random_vector

rng = np.random.default_rng(21)

# a tiny concrete frame of H^2: the first basis vector twice, the second once
e = QVector.basis
fr = Frame([e(2, 0), e(2, 0), e(2, 1)])
print(fr)
print("optimal bounds:", fr.optimal_bounds().as_tuple())
print("spectrum of the frame operator:", fr.spectrum)

# coefficients split the duplicated direction evenly: that is what
# minimal norm means in practice
u = e(2, 0) * Quaternion(2, 0, 0, 0)
c = fr.coefficients(u)
print("\ncoefficients of 2*e1:", [str(x) for x in c])
print("reconstruction:", [str(x) for x in fr.reconstruct(c)])

# an alternative representation costs more: norm splitting in action
offered = QVector([Quaternion(2), Quaternion(), Quaternion()])
chk = fr.pythagoras_check(u, offered)
print("offered norm^2 =", chk.lhs,
      " canonical norm^2 + gap^2 =", chk.rhs,
      " residual =", chk.residual)

# the canonical dual reconstructs by plain analysis, and its bounds
# are the reciprocals of the original ones in reverse order
dual = fr.canonical_dual()
print("\ndual vectors:", [[str(x) for x in v] for v in dual])
print("dual bounds:", dual.optimal_bounds().as_tuple())
rebuilt = fr.reconstruct(dual.analysis(u))
print("mixed reconstruction error:", (rebuilt - u).norm())

# Parseval normalization makes the frame operator the identity
tight = fr.parseval_normalize()
print("\nparseval bounds:", tight.optimal_bounds().as_tuple())

# the same story holds for a random frame at double precision
big = random_frame(4, 9, rng)
w = random_vector(4, rng)
err = (big.natural_representation(w) - w).norm() / w.norm()
report = big.report()
print("\nrandom frame:", big)
print("bounds:", report.to_dict()["bounds"])
print("reconstruction residual:", err)
print("operator-identity residuals:", report.residuals)
