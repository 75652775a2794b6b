# Sums of L independent uniforms on {0, ..., q}: exact pmf, the maximal
# probability c_{q,L}, and the sqrt(6 / (pi q (q+2) L)) upper bound.

import mpmath

from ordmult.convolution import check_mattner_roos, max_prob, pmf

# Two fair three-sided dice.
print([str(p) for p in pmf(2, 2).probs])

# The maximum sits at floor((qL+1)/2).
for q, L in [(4, 2), (5, 3), (1, 10)]:
    m = max_prob(q, L)
    print(q, L, m.value, "at", m.arg, "modes", m.mode_indices, "agrees:", m.agrees)

# c_{q,L} shrinks as L grows, roughly like 1/sqrt(L).
print([str(max_prob(3, L).value) for L in range(1, 7)])

# Bound check. Rows with L = 2 and q >= 4 sit just above the bound:
# c_{q,2} = 1/(q+1) while the bound tends to sqrt(3/pi)/q.
print(" q  L   c_{q,L}        bound          slack")
for q in range(1, 9):
    for L in (1, 2, 3, 10):
        r = check_mattner_roos(q, L)
        print(f"{q:2d} {L:2d}  {float(r.value):.8f}  {mpmath.nstr(r.bound, 9):>12}  "
              f"{mpmath.nstr(r.slack, 4):>10}  {'ok' if r.holds else 'FAILS'}")
