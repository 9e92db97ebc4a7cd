"""Small codes over GF(8) whose hull is a single line.

Run:  python3 demos/01_binary_field.py
"""

import numpy as np

from hullforge import GF, construct, hull_dim
from hullforge.code import hull, rref

F = GF(2, 3)                  # x^3 + x + 1
print(F, "modulus", F.modulus, "primitive element", F.g)

# In characteristic 2 every element is a square, so any a, b of the right
# degrees work.  n = 5, s = 1 gives a [5, 3] code.
hc = construct(F, "even-q", n=5, s=1)
print("points", hc.spec.alpha, "multipliers", hc.spec.v)
G = hc.generator()
print("generator\n", G)

R, r, _ = rref(F, G)
print("systematic form\n", R[:r])

c = hc.cert
print(f"[{c.n},{c.k},{c.d}]  hull dim {c.hull_dim}  MDS {c.is_mds}")

# the hull is spanned by one explicit word
w = np.array(hc.hull_witness)
print("hull witness", w, "self inner product", F.vsum(F.vmul(w, w)))
print("hull row space\n", hull(hc.code()).gen)

# varying s trades dimension for distance
for s in range(1, 4):
    hc = construct(F, "even-q", n=6, s=s)
    print(f"n=6 s={s}: [{hc.n},{hc.k},{hc.cert.d}] hull {hull_dim(hc.code())}")
