"""
Staircase bounds from a single transform
========================================
"""

from tailbounds import (
    PositivePart,
    PowerPositive,
    ThresholdLadder,
    general_chebyshev,
    make_finite,
    markov_staircase,
)

# Classical Markov controls one tail of one threshold.  The staircase
# forms spend the same budget E[phi(X)] across a whole ladder of
# thresholds at once.  Increment form pairs phi increments with upper
# tails; cell form pairs phi values with the probability of landing
# between consecutive rungs.  Abel summation makes the two left sides
# identical.

die = make_finite([(v, 1 / 6) for v in range(1, 7)])
ladder = ThresholdLadder((2.0, 5.0))

inc = general_chebyshev(die, PositivePart(), ladder)
cell = markov_staircase(die, PositivePart(), ladder)
print("increment form: c =", inc.coefficients, " tails =", inc.tails)
print("cell form     : c =", cell.coefficients, " cells =", cell.tails)
print("lhs agree:", inc.lhs, "==", cell.lhs)
print("rhs = E[phi(X)] =", cell.rhs)
print("slack:", cell.slack, " satisfied:", cell.satisfied)

# heavier transforms buy tighter control of the far tail
for p in (1.0, 2.0, 3.0):
    r = general_chebyshev(die, PowerPositive(p=p), ladder)
    print(f"p={p}: lhs={r.lhs:.6f} rhs={r.rhs:.6f} slack={r.slack:.6f}")

# refining the ladder only tightens the combined inequality: every new
# threshold adds a nonnegative term to the lhs while the rhs stays put
coarse = general_chebyshev(die, PositivePart(), ThresholdLadder((3.0,)))
fine = general_chebyshev(die, PositivePart(), ThresholdLadder((1.5, 3.0, 4.5)))
print("coarse lhs:", coarse.lhs, " fine lhs:", fine.lhs, " shared rhs:", fine.rhs)
