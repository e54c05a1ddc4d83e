"""Walkthrough: cochain products, the pairing, and the homotopy identity.

Run with `python demos/02_products_and_pairing.py`.
"""

from hochfrob import (Cochain, Field, circle_product, coboundary,
                      convolution_cup, convolution_unit, cyclic,
                      homotopy_commutator_defect, homotopy_signs, norm_pairing,
                      random_cochain, random_identity_supported_cochain,
                      simplicial_cup, simplicial_cup_one, symmetric)

Q = Field.rationals()
c3 = cyclic(3)
s3 = symmetric(3)

# On dual generators the convolution product twists the first slots:
# (a0, a1)^* . (b0, b1)^* = (b0 a0, a1, b1)^*.
a = Cochain.dual_basis(c3, Q, (1, 0))
b = Cochain.dual_basis(c3, Q, (2, 1))
prod = convolution_cup(a, b)
expected = Cochain.dual_basis(c3, Q, (c3.mul(2, 1), 0, 1))
print("generator product matches the twist rule:", prod == expected)

u = convolution_unit(s3, Q)
beta = random_cochain(s3, Q, 2, seed=5)
print("unit laws:", convolution_cup(u, beta) == beta,
      convolution_cup(beta, u) == beta)

# The pairing contracts both functionals against the norm element.
alpha = random_cochain(s3, Q, 1, seed=8)
gamma = random_cochain(s3, Q, 1, seed=9)
print("pairing symmetry:", norm_pairing(alpha, gamma) == norm_pairing(gamma, alpha))
print("Frobenius associativity:",
      norm_pairing(convolution_cup(alpha, gamma), beta)
      == norm_pairing(alpha, convolution_cup(gamma, beta)))

# Identity-supported functionals form a subalgebra on which the
# convolution product is the simplicial cup product, and the transported
# insertion product is Steenrod's cup-one.
ea = random_identity_supported_cochain(s3, Q, 1, seed=11)
eb = random_identity_supported_cochain(s3, Q, 2, seed=12)
print("cup agreement on identity support:",
      convolution_cup(ea, eb) == simplicial_cup(ea, eb))
print("cup-one agreement on identity support:",
      circle_product(ea, eb) == simplicial_cup_one(ea, eb))

# The cup commutator is a coboundary homotopy of the insertion product.
# The signs depend on the degrees; the pinned convention is:
for (p, q) in ((1, 1), (1, 2), (2, 2)):
    print(f"homotopy signs for degrees {(p, q)}:", homotopy_signs(p, q))
x = random_cochain(s3, Q, 2, seed=21)
y = random_cochain(s3, Q, 2, seed=22)
print("homotopy identity holds:", homotopy_commutator_defect(x, y).is_zero())

# Coboundaries leave the pairing alone in the right parities (degree 1
# cocycle beta, shift alpha by a coboundary):
from hochfrob import random_cocycle

beta1 = random_cocycle(s3, Q, 1, seed=31)
shift = coboundary(random_cochain(s3, Q, 0, seed=32))
print("parity descent (odd, odd):",
      norm_pairing(alpha.add(shift), beta1) == norm_pairing(alpha, beta1))
