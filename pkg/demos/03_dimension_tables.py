"""Walkthrough: exact (co)homology dimension tables and the pairing radical.

Run with `python demos/03_dimension_tables.py` (about a minute: the
order-8 tables at degree 3 do real eliminations).
"""

from hochfrob import (Complex, Field, betti_table, cyclic, dihedral,
                      radical_basis, symmetric, verify_phi_iso)

Q = Field.rationals()
F2 = Field.prime(2)
F3 = Field.prime(3)

# Over F_2 the cyclic group of order 2 has dimension 2 in every degree;
# over Q everything above degree 0 dies.
c2 = cyclic(2)
for fld in (F2, Q):
    table = betti_table(c2, fld, 4, Complex.CHAIN_B)
    print(f"C2 over {fld.spec()}: dims", [d for _, d in table.betti])

# The identity-supported subcomplex computes group cohomology: one
# dimension per degree for cyclic groups at their own characteristic.
print("C2/F2 identity-supported dims:",
      [d for _, d in betti_table(c2, F2, 4, Complex.WE_SUB).betti])
print("C3/F3 identity-supported dims:",
      [d for _, d in betti_table(cyclic(3), F3, 3, Complex.WE_SUB).betti])

# Degree-0 cocycles of the dual complex are class functions.
s3 = symmetric(3)
print("S3 class count:", len(s3.conjugacy_classes()),
      "= H^0 dim:", betti_table(s3, Q, 0, Complex.COCHAIN_BSTAR).betti[0][1])

# Both cochain models give the same dimensions; the report also checks
# round trips of the comparison maps.
report = verify_phi_iso(s3, Q, 2)
print("comparison-map report for S3/Q:",
      [(d["degree"], d["dual_dim"], d["bar_dim"]) for d in report["degrees"]],
      "passed:", report["passed"])

# The pairing radical is exactly the norm-radical subspace.
basis, rad = radical_basis(dihedral(4), Q, 1)
print("D4 degree-1 radical:", rad)
