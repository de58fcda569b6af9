"""
Annihilators in Z_12
====================
"""

from starinv import CarrierSpec, classify_carrier, make_element
from starinv.annihil import check_lemma31, left_annihilator
from starinv.geninv import core

Z12 = CarrierSpec("ZN", 1, 12)
print(classify_carrier(Z12))

# Z_12 = Z_4 x Z_3, so 2 is nilpotent in one factor and has no core inverse.
for k in (2, 3, 4, 8, 9):
    a = make_element(Z12, [k])
    ann = sorted(x.entries[0][0] for x in left_annihilator(a).members)
    c = core(a)
    print(f"{k:2d}: ann = {ann}, core = {None if c is None else c.entries[0][0]}")

# The cancellation and annihilator identities, checked over every b (and c).
for k in (3, 4, 8, 9):
    print(k, check_lemma31(make_element(Z12, [k])).status.value)
