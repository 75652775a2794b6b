# Ordinary multinomials: rows of (1 + x + ... + x^q)^L, their modes and
# log-concavity. Run with `python demos/01_triangles_and_modes.py`.

from ordmult.core import (
    expand_row,
    index_set,
    mode_formula,
    modes,
    multinomial_nested,
    scan_slc,
    slc_violations,
    smallest_mode,
    verify_mode_recurrence,
)

# The pentanomial triangle (q = 4). Modes are in brackets.
for L in range(6):
    row = expand_row(4, L)
    m = modes(4, L)
    print(L, " ".join(f"[{v}]" if k in m else str(v) for k, v in enumerate(row)))

# Each entry is the sum of the q + 1 entries above it, and it can also be
# written as a sum of chained binomial coefficients.
print(expand_row(4, 3)[6], multinomial_nested(4, 3, 6))

# For odd qL the maximum is a plateau of two equal values. The closed form
# floor((qL+1)/2) lands on the right end of it; floor(qL/2) on the left.
m = modes(5, 3)
print(m.mode_indices, m.kind.value, m.max_value)
print("floor((qL+1)/2) =", mode_formula(5, 3), " floor(qL/2) =", smallest_mode(5, 3))

# The row-to-row mode recurrence: the maximum of row L is a window sum of
# q + 1 entries of row L - 1 around its mode.
print(index_set(5, 2).offsets, verify_mode_recurrence(5, 2))
print(all(verify_mode_recurrence(q, L) for q in range(1, 9) for L in range(1, 41)))
# anchored at the larger mode instead, the same offsets miss for odd q, even L
print(verify_mode_recurrence(5, 2, anchor="formula"))

# Strict log-concavity: a_l^2 > a_{l-1} a_{l+1} for every interior l.
print(slc_violations(expand_row(4, 3)))
# On the grid q <= 8, L <= 40 only the flat rows L = 1 fail.
for q, L, idx in scan_slc(range(1, 9), range(1, 41)):
    print("not strictly log-concave:", q, L, list(expand_row(q, L)))
