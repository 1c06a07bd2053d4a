"""
Randomized verification sweep
=============================

Every inequality in the package is re-checked here on a few hundred
random instances per theorem.  The checker recomputes both sides with
an independent summation path, so an implementation bug in either the
coefficients or the tails shows up as a violation.

Seeds are fixed: rerunning this script prints identical output.
"""

from tailbounds import FuzzConfig, fuzz_all

config = FuzzConfig(trials=300, seed=2024)
summaries = fuzz_all(config)

total = 0
for s in summaries:
    total += s.violations
    print(f"{s.theorem:<20} trials={s.trials_run:<5} violations={s.violations:<3} "
          f"worst_slack={s.worst_slack:.6g}")
print("total violations:", total)
assert total == 0
