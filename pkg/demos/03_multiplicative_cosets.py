"""Unions of cosets of a cyclic subgroup, without square roots.

Here h' factors as c * f^2 * g1 * g2 and the multipliers are rational in the
points.  Past the guaranteed range of t a construction may still exist, but
only when a spare point avoiding every root of g1 g2 is left in the field.

Run:  python3 demos/03_multiplicative_cosets.py
"""

import time

from hullforge import GF, construct
from hullforge.constructions import PreconditionError

F = GF(3, 4)

for params in (dict(n=8, t=1, s=3, variant=7), dict(n=8, t=2, s=2, variant=8)):
    hc = construct(F, "mult-cosets", **params)
    print(params, f"-> [{hc.n},{hc.k},{hc.cert.d}]  coset reps {hc.info['coset_reps']}")

try:
    construct(F, "mult-cosets", n=8, t=5, s=1, variant=8)
except PreconditionError as e:
    print("without extend:", e)

# 48 = 6 * 8 points, and g has degree 32; that leaves 81 - 48 - 32 - 1 = 0
# spare points for the smallest coset choice, so other choices are searched
for s in range(1, 8):
    t0 = time.perf_counter()
    hc = construct(F, "mult-cosets", n=8, t=5, s=s, variant=8, extend=True)
    c = hc.cert
    print(f"s={s}: [{c.n},{c.k},{c.d}] hull {c.hull_dim}  e-point {hc.info['e_point']}"
          f"  ({time.perf_counter() - t0:.2f}s)")

# the dual shares the hull
d = construct(F, "mult-cosets", n=8, t=1, s=3, variant=7, dual=True)
print("dual:", f"[{d.n},{d.k},{d.cert.d}] hull {d.cert.hull_dim}")
