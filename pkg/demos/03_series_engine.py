# Exact truncated power series: arithmetic, exp/log, rational powers,
# composition and reversion.

from fractions import Fraction

from ordmult.series import TruncatedSeries, compose, eval_float, exp, log, pow_rational, revert

t = TruncatedSeries.variable(8)

# 1/(1-t), log(1+t) and exp(t), all with exact coefficients
print((1 / (1 - t)).coeffs)
print([str(c) for c in log(1 + t)])
print([str(c) for c in exp(t)])

# Fractional powers of a series with constant term 1
root = pow_rational(1 + t + t**2, Fraction(1, 2))
print([str(c) for c in root])
print(root * root == 1 + t + t**2)

# Reversion: the inverse of t + t^2 has signed Catalan coefficients
g = revert(t + t * t)
print([int(c) for c in g])
print(compose(t + t * t, g) == t)

# Truncation is explicit: mixing orders keeps the smaller one
print((TruncatedSeries([1, 1, 1], 2) * TruncatedSeries([1, 2, 3, 4, 5], 4)).order)

# Numeric evaluation happens only at the boundary, at 50 digits
value, last = eval_float(1 / (1 - TruncatedSeries.variable(60)), 0.5)
print(value, last)
