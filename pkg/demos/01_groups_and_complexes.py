"""Walkthrough: finite groups, the cyclic chain complex, and its coproducts.

Run with `python demos/01_groups_and_complexes.py`.
"""

from hochfrob import (Chain, Field, apply_counit_left, aw_coproduct, boundary,
                      convolution_coproduct, counit, cyclic, face,
                      has_identity_product, norm_element, symmetric)

Q = Field.rationals()

# Groups are validated multiplication tables; elements are indices with labels.
s3 = symmetric(3)
print(f"{s3.name}: order {s3.order}, identity index {s3.id}")
print("conjugacy class sizes:", [len(c) for c in s3.conjugacy_classes()])

n = norm_element(s3, Q)
print("norm element N =", n)
print("N * N == |G| * N:", n.mul(n) == n.scale(s3.order))

# Chains are sparse combinations of tuples; the boundary multiplies
# adjacent slots and wraps at the end.
c2 = cyclic(2)
x = 1
sigma = Chain.basis(c2, Q, (x, x, x))
print("\nboundary of (x,x,x) over C2:", boundary(sigma))
print("boundary twice:", boundary(boundary(sigma)))

a, b = 1, 2
tau = Chain.basis(s3, Q, (a, b))
print(f"\nboundary of ({s3.labels[a]},{s3.labels[b]}) over S3:", boundary(tau))

# The convolution coproduct splits a tuple in all positions against all
# group elements; composing with the counit on the left recovers sigma.
t = convolution_coproduct(Chain.basis(c2, Q, (x,)))
print("\ncoproduct of (x) over C2:", t)
print("counit law recovers the chain:",
      apply_counit_left(convolution_coproduct(sigma)) == sigma)

# On tuples multiplying to the identity, the front/back-face coproduct is
# exactly the identity-supported part of the convolution coproduct.
w = (x, x)
print("\n(x,x) multiplies to e:", has_identity_product(c2, w))
full = convolution_coproduct(Chain.basis(c2, Q, w))
print("full coproduct:       ", full)
print("identity part:        ", full.restrict_to_identity_product())
print("front/back coproduct: ", aw_coproduct(Chain.basis(c2, Q, w)))
