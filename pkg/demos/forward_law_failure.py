"""
When core(ab) is not core(a) core(b)
====================================

Over Z_2 the two unipotent matrices below are units, so their core
inverses are their ordinary inverses and (ab)^core = (ab)^-1 = b^-1 a^-1.
That is not a^-1 b^-1. The star-twisted criterion agrees: both sides of
the biconditional come out false.
"""

from starinv import CarrierSpec, MiningJob, make_element, mine
from starinv.geninv import core
from starinv.laws import law_thm39_iff_star

M = CarrierSpec("ZN", 2, 2)
a = make_element(M, [1, 1, 0, 1])
b = make_element(M, [1, 0, 1, 1])

print("core(ab)         =", core(a * b).entries)
print("core(a) core(b)  =", (core(a) * core(b)).entries)

v = law_thm39_iff_star(a, b)
(eq,) = v.equivalences
print(v.status.value, "| left:", eq.left, "| right:", eq.right)

# The whole ring has plenty of such pairs.
report = mine(MiningJob(M, "thm39"))
t = report.totals
print(f"{t['nonvacuous']} admissible pairs; both sides true on {t['both_true']}, "
      f"both false on {t['both_false']}; failures: {t['equivalence_fails']}")
