"""
Core inverses by hand and by machine
====================================

A short tour: build a few elements, compute their generalized inverses,
and read the verification traces that come back with every result.
"""

from starinv import compute_core, compute_drazin, compute_mp, parse_element
from starinv.errors import NotCoreInvertible

# A rank-one idempotent over the rationals. Its core inverse is the
# orthogonal projector onto its column space, here e11.
a = parse_element("[Q 2] 1 1 / 0 0")
core = compute_core(a)
print("a =", a)
print("core(a) =", core.value)
for row in core.trace.rows:
    print("   ", "ok" if row.equal else "FAIL", row.label)

# The Moore-Penrose inverse is different: it also projects on the row side.
print("mp(a) =", compute_mp(a).value)

# Nilpotents have index 2, so no core inverse exists, but Drazin still works.
n = parse_element("[Q 2] 0 1 / 0 0")
try:
    compute_core(n)
except NotCoreInvertible as exc:
    print("core(n) fails:", exc.reason)
d = compute_drazin(n)
print("drazin(n) =", d.value, "index", d.index)

# Scalars mod 6: every residue is regular, so every one has a core inverse.
for k in range(6):
    x = compute_core(parse_element(f"ZN 1 6 {k}")).value
    print(f"core({k}) in Z_6 =", x.entries[0][0])

# Gaussian rationals use the conjugate transpose.
g = parse_element("QI 2\n1 i\n0 0")
print("core(g) =", compute_core(g).value)
