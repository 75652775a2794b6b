"""Exact computations with ordinary multinomials.

``binom(L, k)_q`` is the coefficient of ``x^k`` in ``(1 + x + ... + x^q)^L``.
The package computes these coefficients and their modes, the convolution
powers of the discrete uniform distribution they describe, and the
generating functions of their generalizations to rational upper argument.
"""

from .convolution import check_mattner_roos, max_prob, pmf
from .core import (
    expand_row,
    is_unimodal,
    mode_formula,
    modes,
    multinomial,
    multinomial_nested,
    scan_slc,
    slc_violations,
    verify_mode_recurrence,
)
from .generalized import (
    g_q_series,
    gen_multinomial,
    gen_multinomial_direct,
    gen_multinomial_lemma,
    gen_multinomial_series,
    lagrange_sequence,
)
from .series import TruncatedSeries

__version__ = "0.1.0"
