"""
Matrices over the quaternions and their spectra
===============================================

Vectors live in a right module: matrices act from the left, scalars
multiply from the right, and the inner product is conjugate-linear in
its first slot. Spectral computations route through the complex
embedding of doubled size, where every quaternionic eigenvalue shows
up twice.
"""

import numpy as np

from qframes.qlinalg import (
    QMatrix, QVector, complex_adjoint, herm_eig, inner, operator_norm,
    pinv, svd,
)
from qframes.quaternion import I, J, K, Quaternion
from qframes.sampling import random_hermitian, random_matrix

rng = np.random.default_rng(7)

# right-module conventions in one picture: M(u q) = (M u) q
M = QMatrix([[I, J], [K, Quaternion(1.0)]])
u = QVector([Quaternion(1, 1, 0, 0), Quaternion(0, 0, 2, 0)])
q = Quaternion(0.5, -1.0, 0.25, 2.0)
print("M(uq) - (Mu)q =", ((M @ (u * q)) - (M @ u) * q).norm())

# the adjoint is the conjugate transpose, and <Mu, v> = <u, M* v>
v = QVector([Quaternion(0, 1, 0, 1), Quaternion(3, 0, -1, 0)])
lhs = inner(M @ u, v)
rhs = inner(u, M.H @ v)
print("adjoint identity gap:", (lhs - rhs).modulus())

# the complex embedding doubles sizes and preserves products
A = random_matrix(3, 3, rng)
B = random_matrix(3, 3, rng)
drift = np.linalg.norm(complex_adjoint(A @ B)
                       - complex_adjoint(A) @ complex_adjoint(B))
print("embedding product drift:", drift)

# Hermitian matrices have real eigenvalues; in the embedding each one
# appears twice, and the solver collapses the doubling back down
H = random_hermitian(4, rng)
eig = herm_eig(H)
doubled = np.linalg.eigvalsh(complex_adjoint(H))
print("\nquaternionic eigenvalues:", np.round(eig.eigenvalues, 6))
print("doubled complex spectrum:", np.round(doubled, 6))
recon = eig.apply(lambda lam: lam)
print("factorization residual:", (recon - H).frobenius_norm())

# the SVD gives rank, operator norm, and the pseudoinverse
R = random_matrix(4, 6, rng)
dec = svd(R)
print("\nsingular values:", np.round(dec.singular_values, 6))
print("operator norm:", operator_norm(R))
X = pinv(R)
print("Penrose residual MXM-M:", (R @ X @ R - R).frobenius_norm())
print("Penrose residual XMX-X:", (X @ R @ X - X).frobenius_norm())
