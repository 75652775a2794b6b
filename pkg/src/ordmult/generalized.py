"""Generalized ordinary multinomials and their generating functions.

For rational ``z`` the generalized multinomial ``binom(z, k)_q`` is the
coefficient of ``t^k`` in ``(1 + t + ... + t^q)^z``. Three routes compute it:
a sum over weakly decreasing chains (:func:`gen_multinomial_direct`), a sum
over partitions with bounded parts (:func:`gen_multinomial_lemma`), and the
series power (:func:`gen_multinomial_series`). The diagonal ``binom(nz, n)_q``
also comes out of Lagrange inversion (:func:`lagrange_sequence`).

The ``verify_*`` functions compare closed forms against these coefficients
and return an :class:`IdentityReport`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Any, Iterator

import mpmath

from .accel import accelerated_sum, partial_sums
from .convolution import max_prob
from .core import _decreasing_chains, multinomial
from .series import TruncatedSeries, compose, pow_rational, revert

__all__ = [
    "IdentityReport",
    "GqTerm",
    "falling",
    "gen_multinomial_direct",
    "gen_multinomial_lemma",
    "gen_multinomial_series",
    "gen_multinomial",
    "lagrange_sequence",
    "g_q_series",
    "g4_closed_form",
    "gq_closed_forms",
    "verify_lemma",
    "verify_gf",
    "verify_lagrange",
    "verify_g2_closed_form",
    "verify_g4_closed_form",
    "verify_gq_parametric",
    "verify_corollary_first_sum",
    "verify_corollary_second_sum",
    "verify_corollary_sums",
    "verify_c4n_reconstruction",
]

DPS = 50


@dataclass
class IdentityReport:
    """Outcome of one identity check.

    Exact checks carry tuples of ``Fraction`` in ``lhs``/``rhs`` and a zero
    tolerance; numeric checks carry ``mpmath.mpf`` values.
    """

    name: str
    lhs: Any
    rhs: Any
    difference: Any
    tolerance: Any
    passed: bool
    terms_used: int
    exact: bool = False
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class GqTerm:
    """Coefficient ``c_{q,2n/q} = coefficient * (q+1)^(-exponent)``."""

    n: int
    coefficient: Fraction
    exponent: Fraction
    value: mpmath.mpf


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be an integer >= 1, got {q!r}")


def _mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def falling(z: Fraction, n: int) -> Fraction:
    """Falling factorial ``z (z - 1) ... (z - n + 1)``."""
    return prod((z - i for i in range(n)), start=Fraction(1))


def gen_multinomial_direct(z, q: int, k: int) -> Fraction:
    """Sum over chains ``k_1 >= ... >= k_q >= 0`` with ``sum k_i = k`` of
    ``falling(z, k_1) / ((k_1 - k_2)! ... (k_{q-1} - k_q)! k_q!)``.
    """
    _check_q(q)
    z = Fraction(z)
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for chain in _decreasing_chains(k, q, k):
        gaps = [a - b for a, b in zip(chain, chain[1:])] + [chain[-1]]
        total += falling(z, chain[0]) / prod(factorial(g) for g in gaps)
    return total


def _bounded_partitions(k: int, q: int) -> Iterator[tuple[int, ...]]:
    # multiplicities (h_1, ..., h_q) with sum i * h_i = k
    def rec(rest, part):
        if part == 0:
            if rest == 0:
                yield ()
            return
        for h in range(rest // part, -1, -1):
            for tail in rec(rest - h * part, part - 1):
                yield (*tail, h)

    yield from rec(k, q)


def gen_multinomial_lemma(z, q: int, k: int) -> Fraction:
    """Sum over ``h_1 + 2 h_2 + ... + q h_q = k`` of
    ``falling(z, h_1 + ... + h_q) / (h_1! ... h_q!)``.
    """
    _check_q(q)
    z = Fraction(z)
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for hs in _bounded_partitions(k, q):
        total += falling(z, sum(hs)) / prod(factorial(h) for h in hs)
    return total


def _base_polynomial(q: int, order: int) -> TruncatedSeries:
    return TruncatedSeries.polynomial([1] * (q + 1), order)


def gen_multinomial_series(z, q: int, N: int) -> list[Fraction]:
    """Coefficients ``0..N`` of ``(1 + t + ... + t^q)^z``."""
    _check_q(q)
    if N < 0:
        raise ValueError("N must be non-negative")
    return list(pow_rational(_base_polynomial(q, N), Fraction(z)).coeffs)


def gen_multinomial(z, q: int, k: int) -> Fraction:
    """Single coefficient ``binom(z, k)_q``; O(qk) via the series recursion."""
    if k < 0:
        return Fraction(0)
    return gen_multinomial_series(z, q, k)[k]


def lagrange_sequence(z, q: int, N: int) -> list[Fraction]:
    """``binom(nz, n)_q`` for ``n = 0..N`` through Lagrange inversion.

    With ``P(u) = 1 + u + ... + u^q``, ``u(t)`` is the reversion of
    ``u P(u)^(-z)`` and the generating function is
    ``1 / (1 - z u P'(u) / P(u))`` evaluated at ``u(t)``.
    """
    _check_q(q)
    if N < 1:
        raise ValueError("N must be at least 1")
    z = Fraction(z)
    inv_pow = pow_rational(_base_polynomial(q, N - 1), -z)
    f = TruncatedSeries([0, *inv_pow.coeffs], N)
    u = revert(f)
    P = _base_polynomial(q, N)
    uP = TruncatedSeries.polynomial(list(range(q + 1)), N)
    F = 1 / (1 - z * (uP / P))
    return list(compose(F, u).coeffs)


def g_q_series(q: int, N: int, dps: int = DPS) -> list[GqTerm]:
    """Coefficients of ``G_q(t) = sum t^n c_{q,2n/q}`` for even ``q``.

    ``c_{q,2n/q} = binom(2n/q, n)_q / (q+1)^(2n/q)``; the power of ``q + 1``
    is irrational unless ``q/2`` divides ``n``, so each term keeps the exact
    rational part and its exponent next to a ``dps``-digit float.
    """
    _check_q(q)
    if q % 2:
        raise ValueError(f"G_q is defined for even q only, got q={q}")
    z = Fraction(2, q)
    out = []
    with mpmath.workdps(dps):
        for n in range(N + 1):
            coef = gen_multinomial(n * z, q, n)
            expo = n * z
            value = _mpf(coef) * mpmath.power(q + 1, -_mpf(expo))
            out.append(GqTerm(n, coef, expo, value))
    return out


def g4_closed_form(t, dps: int = DPS) -> mpmath.mpf:
    """``(1 - t^2/4 - t^4/8 - t (5 t^2 + 20)^(3/2) / 200)^(-1/2)``."""
    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        if not (-mpmath.sqrt(5) < t < 1):
            raise ValueError(f"G_4 closed form is stated for -sqrt(5) < t < 1, got {t}")
        inner = 1 - t**2 / 4 - t**4 / 8 - t * (5 * t**2 + 20) ** mpmath.mpf(1.5) / 200
        return +(inner ** mpmath.mpf(-0.5))


def gq_closed_forms(q: int, t0, dps: int = DPS) -> dict:
    """Evaluate the parametric closed forms of ``G_q`` at ``t0``.

    Solves ``t0 = u ((q+1) / P(u))^(2/q)`` for real ``u`` near the origin and
    returns both displayed expressions for ``G_q`` plus the symmetric form of
    the ``t`` equation (valid as a real number for ``u > 0``).
    """
    if q % 2 or q < 2:
        raise ValueError("q must be even and >= 2")
    half = q // 2
    with mpmath.workdps(dps):
        t0 = mpmath.mpf(t0)
        z = mpmath.mpf(2) / q

        def P(u):
            return mpmath.fsum(u**k for k in range(q + 1))

        def uPprime(u):
            return mpmath.fsum(k * u**k for k in range(1, q + 1))

        if t0 == 0:
            u = mpmath.mpf(0)
            first = second = mpmath.mpf(1)
            t_sym = None
        else:
            u = mpmath.findroot(
                lambda v: v * ((q + 1) / P(v)) ** z - t0, t0 / (q + 1) ** z
            )
            first = 1 / (1 - z * uPprime(u) / P(u))
            sym = 1 + mpmath.fsum(u**-k + u**k for k in range(1, half + 1))
            second = mpmath.mpf(q) / 2 * sym / mpmath.fsum(
                k * (u**-k - u**k) for k in range(1, half + 1)
            )
            t_sym = ((q + 1) / sym) ** z if u > 0 else None
        return {"u": +u, "first": +first, "second": +second, "t_symmetric": t_sym}


# exact coefficient checks


def _exact_report(name, lhs, rhs, **details) -> IdentityReport:
    lhs, rhs = tuple(lhs), tuple(rhs)
    diff = max((abs(a - b) for a, b in zip(lhs, rhs)), default=Fraction(0))
    return IdentityReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        difference=diff,
        tolerance=Fraction(0),
        passed=len(lhs) == len(rhs) and lhs == rhs,
        terms_used=len(lhs),
        exact=True,
        details=details,
    )


def verify_lemma(z, q: int, K: int) -> IdentityReport:
    """Chain sum against partition sum for ``k = 0..K``."""
    z = Fraction(z)
    return _exact_report(
        "lemma",
        [gen_multinomial_direct(z, q, k) for k in range(K + 1)],
        [gen_multinomial_lemma(z, q, k) for k in range(K + 1)],
        z=z, q=q,
    )


def verify_gf(z, q: int, N: int) -> IdentityReport:
    """Series coefficients of ``P(t)^z`` against the chain sum, ``k = 0..N``."""
    z = Fraction(z)
    return _exact_report(
        "gf",
        gen_multinomial_series(z, q, N),
        [gen_multinomial_direct(z, q, k) for k in range(N + 1)],
        z=z, q=q,
    )


def verify_lagrange(z, q: int, N: int) -> IdentityReport:
    """Lagrange-inversion coefficients against ``binom(nz, n)_q`` by chain sum."""
    z = Fraction(z)
    return _exact_report(
        "lagrange",
        lagrange_sequence(z, q, N),
        [gen_multinomial_direct(n * z, q, n) for n in range(N + 1)],
        z=z, q=q,
    )


def verify_g2_closed_form(N: int) -> IdentityReport:
    """``(1 + t/3)^(-1/2) (1 - t)^(-1/2)`` against ``c_{2,n}``, exactly."""
    if N < 1:
        raise ValueError("N must be at least 1")
    t = TruncatedSeries.variable(N)
    closed = pow_rational(1 + t / 3, Fraction(-1, 2)) * pow_rational(1 - t, Fraction(-1, 2))
    direct = [Fraction(multinomial(2, n, n), 3**n) for n in range(N + 1)]
    return _exact_report("g2", closed.coeffs, direct)


# numeric checks


def _numeric_report(name, lhs, rhs, tol, terms, **details) -> IdentityReport:
    diff = abs(lhs - rhs)
    return IdentityReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        difference=diff,
        tolerance=tol,
        passed=bool(diff <= tol),
        terms_used=terms,
        details=details,
    )


def _powers_sum(values, t0):
    acc = mpmath.mpf(0)
    p = mpmath.mpf(1)
    for v in values:
        acc += v * p
        p *= t0
    return acc


def verify_g4_closed_form(
    t0, N: int = 200, tol=1e-8, depth: int = 20, dps: int = DPS
) -> IdentityReport:
    """Closed form of ``G_4`` at ``t0`` against ``sum_{n<=N} t0^n c_{4,n/2}``.

    For ``t0 <= -1`` the power series no longer converges absolutely and the
    partial sums are Euler-averaged with ``depth`` passes.
    """
    with mpmath.workdps(dps):
        x = mpmath.mpf(t0)
        if not (-mpmath.sqrt(5) < x < 1):
            raise ValueError(f"t0 must lie in (-sqrt(5), 1), got {t0}")
        closed = g4_closed_form(x, dps)
        terms = [g.value * x**g.n for g in g_q_series(4, N, dps)]
        if x <= -1:
            partial = accelerated_sum(terms, depth, dps)
            method = f"euler depth {depth}"
        else:
            partial = mpmath.fsum(terms)
            method = "partial sum"
        return _numeric_report(
            "g4", closed, partial, mpmath.mpf(tol), N + 1, t0=x, method=method
        )


def verify_gq_parametric(q: int, t0, N: int = 200, tol=1e-8, dps: int = DPS) -> IdentityReport:
    """Both parametric forms of ``G_q`` against its partial sum at ``t0``.

    ``lhs`` is the first closed form; the report fails if the partial sum,
    the second closed form, or the symmetric ``t`` equation disagree with it
    by more than ``tol``.
    """
    with mpmath.workdps(dps):
        x = mpmath.mpf(t0)
        if not (-1 < x < 1):
            raise ValueError("t0 must lie in (-1, 1) for the partial sum to converge")
        forms = gq_closed_forms(q, x, dps)
        partial = _powers_sum([g.value for g in g_q_series(q, N, dps)], x)
        tol = mpmath.mpf(tol)
        gaps = [abs(forms["first"] - partial), abs(forms["first"] - forms["second"])]
        if forms["t_symmetric"] is not None:
            gaps.append(abs(forms["t_symmetric"] - x))
        report = _numeric_report(
            f"g{q}-parametric", forms["first"], partial, tol, N + 1,
            t0=x, u=forms["u"], second_form=forms["second"],
        )
        report.difference = max(gaps)
        report.passed = bool(report.difference <= tol)
        return report


def verify_corollary_first_sum(N: int = 200, tol=1e-10, dps: int = DPS) -> IdentityReport:
    """``sum_{n<=N} (-5)^(-n) binom(n/2, n)_4`` against the stated value 2.

    The series converges geometrically (ratio ``1/sqrt(5)``) to
    ``G_4(-1/sqrt(5))``, which is about 0.9284, so this check fails; the
    limit is recorded in ``details`` for comparison.
    """
    with mpmath.workdps(dps):
        terms = []
        for n in range(N + 1):
            terms.append(gen_multinomial(Fraction(n, 2), 4, n) / Fraction(-5) ** n)
        lhs = _mpf(sum(terms, Fraction(0)))
        limit = g4_closed_form(-1 / mpmath.sqrt(5), dps)
        return _numeric_report(
            "corollary-first", lhs, mpmath.mpf(2), mpmath.mpf(tol), N + 1,
            closed_form_limit=limit,
        )


def verify_corollary_second_sum(
    N: int = 400, tol=1e-6, depth: int = 20, dps: int = DPS
) -> IdentityReport:
    """Euler-averaged ``sum (-1)^n c_{4,n/2}`` against ``2/sqrt(5)``."""
    with mpmath.workdps(dps):
        terms = [(-1) ** g.n * g.value for g in g_q_series(4, N, dps)]
        lhs = accelerated_sum(terms, depth, dps)
        plain = partial_sums(terms)[-1]
        return _numeric_report(
            "corollary-second", lhs, 2 / mpmath.sqrt(5), mpmath.mpf(tol), N + 1,
            depth=depth, plain_partial_sum=plain,
        )


def verify_corollary_sums(
    N: int = 400, tolerance=1e-6, depth: int = 20, first_N: int = 200,
    first_tolerance=1e-10, dps: int = DPS,
) -> tuple[IdentityReport, IdentityReport]:
    return (
        verify_corollary_first_sum(first_N, first_tolerance, dps),
        verify_corollary_second_sum(N, tolerance, depth, dps),
    )


def verify_c4n_reconstruction(t0, N: int = 60, tol=1e-8, dps: int = DPS) -> IdentityReport:
    """``sum t^n c_{4,n}`` against ``(G_4(sqrt t) + G_4(-sqrt t)) / 2`` for ``0 <= t < 1``."""
    with mpmath.workdps(dps):
        x = mpmath.mpf(t0)
        if not (0 <= x < 1):
            raise ValueError(f"t0 must lie in [0, 1), got {t0}")
        lhs = _powers_sum([_mpf(max_prob(4, n).value) for n in range(N + 1)], x)
        r = mpmath.sqrt(x)
        rhs = (g4_closed_form(r, dps) + g4_closed_form(-r, dps)) / 2
        return _numeric_report("c4n", lhs, rhs, mpmath.mpf(tol), N + 1, t0=x)
