"""Walkthrough: the degree-0 TQFT, cobordism words, and surface counts.

Run with `python demos/04_tqft_surfaces.py`.
"""

from hochfrob import (CobordismWord, DegeneratePairingError, Field, cyclic,
                      dihedral, evaluate_cobordism, frobenius_data,
                      handle_element, hom_count_oracle, surface_invariant,
                      symmetric)

Q = Field.rationals()

# The circle carries the class functions with convolution; the pairing
# matrix is diagonal with class sizes against inverse classes.
s3 = symmetric(3)
data = frobenius_data(s3, Q)
print(f"S3: dim H = {data.dim}, pairing matrix {data.pairing_matrix}")
print("handle element coordinates:", handle_element(data))

# Cobordism words compose the elementary maps; the torus evaluates to
# the dimension of H however it is cut.
torus = CobordismWord.parse("unit comul mul counit")
torus_twisted = CobordismWord.parse("unit comul swap mul counit")
print("torus value:", evaluate_cobordism(data, torus),
      "| cut differently:", evaluate_cobordism(data, torus_twisted))

# Closed-surface values against brute-force counting of surface-group
# homomorphisms: |G| * Z(genus g) counts 2g-tuples with vanishing
# interleaved commutator product.
for g in (cyclic(2), cyclic(4), s3, dihedral(4)):
    dat = frobenius_data(g, Q)
    row = []
    for genus in (1, 2):
        z = surface_invariant(dat, genus)
        count = hom_count_oracle(g, genus)
        row.append(f"g={genus}: {z} (x{g.order} = {count})")
    print(f"{g.name:6s}", " | ".join(row))

# In characteristic dividing a class size the pairing degenerates and
# the TQFT refuses to exist rather than silently misbehaving.
try:
    frobenius_data(s3, Field.prime(3))
except DegeneratePairingError as exc:
    print("S3 over F_3:", exc)
