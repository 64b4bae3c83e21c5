"""Arithmetic in small Galois fields and canonical subspace representatives.

Every element of GF(q) is an integer 0..q-1; for prime powers the integer is
read in base p as the coefficients of a polynomial.  All operations are table
lookups, so they vectorize over numpy arrays for free.
"""

import numpy as np

from lsext import canonical_count, canonical_representatives, gf

# Prime field: plain modular arithmetic.
f3 = gf(3)
print("GF(3): 2 + 2 =", int(f3.add(2, 2)), " 2 * 2 =", int(f3.mul(2, 2)))

# GF(4) = GF(2)[x] / (x^2+x+1): code 2 is x, code 3 is x+1.
f4 = gf(4)
print("GF(4): 2 + 3 =", int(f4.add(2, 3)), " 2 * 2 =", int(f4.mul(2, 2)),
      " inv(2) =", int(f4.invert(2)))

print("\nGF(4) multiplication table:")
print(f4.mul_table)

# Operations broadcast over arrays: add a vector to a vector, no loops.
u = np.array([0, 1, 2, 3])
v = np.array([3, 3, 3, 3])
print("\nGF(4) elementwise u + v:", f4.add(u, v))

# One representative per one-dimensional subspace of GF(q)^k, first nonzero
# entry normalized to 1, in a fixed lexicographic order.  These vectors index
# everything downstream: candidate extension columns, projective points and
# hyperplane normals.
reps = canonical_representatives(f3, 2)
print("\ncanonical representatives of GF(3)^2 (one per line):")
for r in reps:
    print(" ", tuple(int(x) for x in r))

# The count (q^k - 1)/(q - 1) grows quickly; the toolkit refuses to enumerate
# past a cap (LSEXT_ENUM_CAP).  For q=3, k=8 there are exactly 3280.
print("\nnumber of candidate columns for q=3, k=8:", canonical_count(3, 8))
