"""
Which hypotheses does a product law actually need?
==================================================

Mine every ordered pair of M_2(Z_2), first with all hypotheses in force,
then with some of them masked. Masked runs turn up counterexamples that
show the dropped assumptions matter (or report none within the carrier).
"""

from starinv import CarrierSpec, MiningJob, mine
from starinv.search import replay

M = CarrierSpec("ZN", 2, 2)

full = mine(MiningJob(M, "thm32"))
print("all hypotheses:", full.totals["nonvacuous"], "non-vacuous,",
      full.totals["counterexamples"], "counterexamples")

# No single commutation hypothesis is needed inside M_2(Z_2), but some
# pairs of them are.
masks = [
    {"ab core(b) = b core(b) a"},
    {"aba = ba^2"},
    {"ba^2 = a^2b", "ab core(b) = b core(b) a"},
    {"aba = ba^2", "ab core(a) = a core(a) b"},
]
for mask in masks:
    job = MiningJob(M, "thm32", mask=mask)
    r = mine(job)
    print(sorted(mask), "->", r.totals["counterexamples"], "counterexamples")
    if r.counterexamples:
        first = r.counterexamples[0]
        print("   first:", first["inputs"], "fails", first["failed"])
        # every reported counterexample replays through the law checker
        assert replay(job, first).status.value == "COUNTEREXAMPLE"
