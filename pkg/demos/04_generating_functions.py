# Generalized multinomials binom(z, k)_q for rational z and the generating
# functions built from them.

from fractions import Fraction

import mpmath

from ordmult.generalized import (
    g4_closed_form,
    g_q_series,
    gen_multinomial_direct,
    gen_multinomial_lemma,
    gen_multinomial_series,
    gq_closed_forms,
    lagrange_sequence,
    verify_c4n_reconstruction,
    verify_corollary_first_sum,
    verify_corollary_second_sum,
    verify_g2_closed_form,
    verify_g4_closed_form,
)

z = Fraction(1, 2)

# Three ways to the same numbers: chains, partitions, and the series power.
print([str(gen_multinomial_direct(z, 4, k)) for k in range(6)])
print([str(gen_multinomial_lemma(z, 4, k)) for k in range(6)])
print([str(c) for c in gen_multinomial_series(z, 4, 5)])

# The diagonal binom(nz, n)_q from Lagrange inversion. For z = 1, q = 2
# these are the central trinomial coefficients.
print([int(c) for c in lagrange_sequence(1, 2, 8)])

# G_2: sum c_{2,n} t^n = (1 + t/3)^(-1/2) (1 - t)^(-1/2), exactly.
print(verify_g2_closed_form(30).passed)

# G_4 has half-integer convolution powers among its coefficients.
for g in g_q_series(4, 5):
    print(g.n, g.coefficient, "* 5^-", g.exponent, "=", mpmath.nstr(g.value, 12))

# Closed form against the series at t = 0.5
r = verify_g4_closed_form(0.5, 200)
print(mpmath.nstr(r.lhs, 20), mpmath.nstr(r.rhs, 20))

# Both parametric forms of G_q agree with each other and with the series.
print(gq_closed_forms(6, 0.4))

# The alternating sum at t = -1 converges like 1/sqrt(n). Euler averaging
# of the partial sums recovers 2/sqrt(5).
r = verify_corollary_second_sum(400, 1e-6, depth=20)
print(mpmath.nstr(r.details["plain_partial_sum"], 12), mpmath.nstr(r.lhs, 15), mpmath.nstr(r.rhs, 15))

# The sum of (-5)^-n binom(n/2, n)_4 converges geometrically, but to
# G_4(-1/sqrt 5) and not to 2.
r = verify_corollary_first_sum(200)
print(mpmath.nstr(r.lhs, 15), mpmath.nstr(g4_closed_form(-1 / mpmath.sqrt(5)), 15), r.passed)

# Even part of G_4 recovers the integer convolution powers c_{4,n}.
print(verify_c4n_reconstruction(0.25, 60).passed)
