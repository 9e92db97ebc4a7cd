"""Odd characteristic: square roots, square classes and sign choices.

Run:  python3 demos/02_square_classes.py
"""

from hullforge import GF, Poly, construct, eval_set
from hullforge.code import certify
from hullforge.constructions import build_ab

F = GF(19)
U = eval_set(F, "3b", N=9)       # ninth roots of unity, 0 excluded
print("points", U)

hp = Poly.from_roots(F, U).derivative()
vals = [hp(u) for u in U]
print("h'(u)         ", vals)
print("is square     ", [F.is_square(v) for v in vals])
print("u*h'(u) square", [F.is_square(F.mul(u, v)) for u, v in zip(U, vals)])

hc = construct(F, "square-3b", N=9, s=1)
print("scale applied to a:", hc.info["scale"], " aux points", hc.info["alpha_aux"], hc.info["beta_aux"])
print(f"[{hc.n},{hc.k},{hc.cert.d}] hull {hc.cert.hull_dim}")

# each coordinate needs *a* square root; the other choice changes the
# code by a diagonal +-1 scaling and leaves hull and distance alone
split = hc.info["split"]
for flips in ([], [0], [1, 4, 7], list(range(9))):
    spec, _ = build_ab(F, hc.spec.alpha, split, flips=flips)
    c = certify(spec.code())
    print(f"flip {flips!s:22} -> hull {c.hull_dim}, d {c.d}")

# larger field, union of cosets of an additive subgroup
F81 = GF(3, 4)
for fam, params in [("square-7", dict(t=2, s=2)), ("square-12", dict(l=2, s=1))]:
    hc = construct(F81, fam, **params)
    print(fam, params, f"-> [{hc.n},{hc.k},{hc.cert.d}]")
