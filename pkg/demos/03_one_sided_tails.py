"""
Two-sided vs one-sided deviation ladders, and solving for a missing tail
========================================================================

Three things in one script:

 * symmetric deviation bounds vs their one-sided sharpening on the
   same ladder,
 * tail ladders for a bounded variable approached from above,
 * recovering the largest tail probability still consistent with a
   budget when the other rungs are pinned.
"""

from tailbounds import (
    ThresholdLadder,
    cantelli_gen,
    chebyshev_gen,
    eisenberg,
    make_finite,
    reverse_markov_gen,
    solve_unknown_tail,
)

die = make_finite([(v, 1 / 6) for v in range(1, 7)])

# deviations from the mean, two thresholds at once
lad = ThresholdLadder((1.0, 2.0))
sym = chebyshev_gen(die, lad)
one = cantelli_gen(die, lad)
print("symmetric : lhs =", sym.lhs, " rhs =", sym.rhs)
print("one-sided : lhs =", one.lhs, " rhs =", one.rhs)
print("one-sided first coefficient is pinned at", one.coefficients[0])

# mean-weighted ladder: coefficients come from the weights, the budget
# from a weighted first moment
ew = eisenberg(die, ThresholdLadder((2.0, 5.0)), (1.0, 2.0))
print("weighted  : lhs =", ew.lhs, " rhs =", ew.rhs, " params =", ew.params)

# lower tails of a variable known to stay below m = 6
rv = reverse_markov_gen(die, ThresholdLadder((2.0, 4.0)), 6.0)
print("reverse   : lhs =", rv.lhs, " rhs =", rv.rhs)

# inversion.  Suppose c = (2, 3), budget 1, and the last tail is known
# to be 0.1.  How large can the middle tail still be?
sol = solve_unknown_tail([2.0, 3.0], 1.0, {2: 0.1}, 1)
print("largest admissible tail =", sol.bound)

# when the arithmetic would allow more than probability 1, the bound
# clips and .raw keeps the unclipped value
sol = solve_unknown_tail([0.1, 3.0], 2.0, {2: 0.2}, 1)
print("clipped =", sol.bound, " raw =", sol.raw)
