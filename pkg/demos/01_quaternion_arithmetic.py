"""
Quaternion arithmetic from the ground up
========================================

The scalar type behind everything else in the package: four real
components, a noncommutative product, and a conjugate that makes
the modulus multiplicative.
"""

from qframes.quaternion import I, J, K, ONE, Quaternion

# the defining relations of the unit quaternions
print("i*j =", I * J, "   j*i =", J * I)
print("j*k =", J * K, "   k*j =", K * J)
print("k*i =", K * I, "   i*k =", I * K)
print("i*i =", I * I, "   j*j =", J * J, "   k*k =", K * K)

# a general product, spelled out once by hand: (1+i)(1+j) = 1+i+j+k
p = ONE + I
q = ONE + J
print("\n(1+i)(1+j) =", p * q)
print("(1+j)(1+i) =", q * p, " <- order matters")

# conjugation negates the imaginary parts and reverses products
r = Quaternion(1.0, 2.0, -0.5, 3.0)
s = Quaternion(-2.0, 0.25, 1.0, -1.0)
print("\nconj(r)      =", r.conjugate())
print("conj(r*s)    =", (r * s).conjugate())
print("conj(s)conj(r) =", s.conjugate() * r.conjugate())

# the modulus is multiplicative, which is what makes frame norms work
print("\n|r| * |s| =", r.modulus() * s.modulus())
print("|r * s|   =", (r * s).modulus())

# every nonzero quaternion has an inverse: conj(q) / |q|^2
inv = r.inverse()
print("\nr * r^-1 =", r * inv)
print("r^-1 * r =", inv * r)

# the complex split q = z1 + z2 j is how matrices store entries internally;
# note the twist rule j z = conj(z) j that drives all the matrix formulas
z1, z2 = r.to_complex_pair()
print("\nsplit of r:", z1, "+ (", z2, ") j")
print("round trip:", Quaternion.from_complex_pair(z1, z2))
z = Quaternion(0.0, 1.5, 0.0, 0.0)  # a complex number inside H
print("j * z        =", J * z)
print("conj(z) * j  =", z.conjugate() * J)
