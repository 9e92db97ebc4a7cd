"""A table of every admissible construction for a few small fields.

Run:  python3 demos/04_atlas.py
"""

from collections import Counter

from hullforge.atlas import build_atlas, to_markdown

rows = build_atlas([8, 9, 19], max_N=12)
print(to_markdown(rows[:20]))
print(len(rows), "rows")
print(Counter(r.family for r in rows))

lengths = sorted({(r.q, r.N, r.K) for r in rows if r.certified})
print("distinct [N, K] per field:")
for q in (8, 9, 19):
    print(q, [(n, k) for qq, n, k in lengths if qq == q])
