"""
Exponential bounds for sums of bounded variables
================================================

A sum of independent variables, each confined to a known interval,
concentrates around its mean at an exponential rate.  The engine forms
the exact distribution of the centered sum by convolution, so the
inequality is checked against the true tails, not a simulation.
"""

import math

from tailbounds import (
    RangedVariable,
    ThresholdLadder,
    hoeffding_gen,
    hoeffding_lemma_gap,
    make_finite,
    optimal_rate,
    optimal_shift,
)

# ten biased coins, each in [0, 1]
coin = make_finite([(0.0, 0.7), (1.0, 0.3)])
variables = [RangedVariable(coin, 0.0, 1.0) for _ in range(10)]

r = hoeffding_gen(variables, ThresholdLadder((2.0,)))
print("P(sum - mean >= 2) <=", r.rhs, "  exact lhs term:", r.lhs)
print("optimal exponent used:", r.params)

# two rungs share one exponential budget
r2 = hoeffding_gen(variables, ThresholdLadder((1.0, 3.0)))
print("two rungs: coefficients =", r2.coefficients)
print("           lhs =", r2.lhs, " rhs =", r2.rhs)

# the rate s0 comes from a scalar minimization; the closed form is
# known, so compare the two
ssq = sum(v.width_sq for v in variables)
s0, bound = optimal_rate(2.0, ssq)
print("s0 =", s0, " bound =", bound, " closed form =", math.exp(-2 * 4.0 / ssq))

# same story for the variance-based shift
t0, value = optimal_shift(coin.moments().variance, 1.5)
print("t0 =", t0, " value =", value)

# the single-variable ingredient: E[e^{sX}] for a centered bounded X
# never exceeds e^{s^2 (b-a)^2 / 8}
centered = coin.shift(-coin.moments().mean)
for s in (0.5, 1.0, 2.0):
    mgf, cap = hoeffding_lemma_gap(centered, (-0.3, 0.7), s)
    print(f"s={s}: mgf={mgf:.6f} cap={cap:.6f} gap={cap - mgf:.6f}")
