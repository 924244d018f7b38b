"""Closed forms for the super lambda-operation and the character products.

For a class a = (e, o) z^m the lambda-operation is the alternating sum of
exterior powers of the even part tensored with symmetric powers of the odd
part.  On one graded line it has the closed form

    lambda(a z^m) = (1 - z^m)^e * (1/(1 - z^{2m}), -z^m/(1 - z^{2m}))^o,

and on a line tensored with the adjoint sl2 character (t-weights -2,0,2)

    lambda(a z^m [adjoint]) = (1 - [2]_t z^m + z^{2m}, 0)^e *
        (sum_i [2i+1]_t z^{2im}, -sum_i [2i+2]_t z^{(2i+1)m})^o.

Infinite products over lines n >= 1 are finite after truncation because the
n-th factor is congruent to 1 mod z^n.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .rings import (
    GDIM_ONE,
    GDIM_ZERO,
    GDim,
    RLaurent,
    SuperSeries,
    TZSeries,
    t_integer,
)


def _require_no_constant(a: SuperSeries, name: str) -> None:
    if a[0]:
        raise ValueError(f"{name} must have zero constant term")


def odd_line(m: int, order: int) -> SuperSeries:
    """(1/(1-z^{2m}), -z^m/(1-z^{2m})): lambda of one odd vector in degree m."""
    if m < 1:
        raise ValueError("line degree must be >= 1")
    coeffs = [GDIM_ZERO] * (order + 1)
    j = 0
    while j * m <= order:
        coeffs[j * m] = GDIM_ONE if j % 2 == 0 else GDim(0, -1)
        j += 1
    return SuperSeries(order, coeffs)


def _one_minus_pow(c: GDim, texp: int, m: int, k: int, order: int) -> TZSeries:
    """(1 - c * t^texp * z^m) ** k for any integer k, via binomial series.

    Closed-form expansion keeps factors sparse even for huge exponents:
    for k >= 0 the sum is finite, for k < 0 it is the generalized binomial
    series, truncated at z^order either way.
    """
    jmax = order // m
    if k >= 0:
        jmax = min(jmax, k)
    terms: list[RLaurent] = [RLaurent.zero()] * (order + 1)
    for j in range(jmax + 1):
        if k >= 0:
            coef = comb(k, j) * (-1) ** j
        else:
            coef = comb(-k + j - 1, j)
        terms[j * m] = RLaurent({j * texp: (c**j) * coef})
    return TZSeries(order, terms)


def _collapse_t_free(f: TZSeries) -> SuperSeries:
    return SuperSeries(f.order, [c[0] for c in f.coeffs])


def line_pow_even(m: int, k: int, order: int) -> SuperSeries:
    """(1 - z^m)^k for any integer k."""
    return _collapse_t_free(_one_minus_pow(GDIM_ONE, 0, m, k, order))


def line_pow_odd(m: int, k: int, order: int) -> SuperSeries:
    """(1/(1-z^{2m}), -z^m/(1-z^{2m}))^k for any integer k."""
    f = _one_minus_pow(GDIM_ONE, 0, 2 * m, -k, order) * _one_minus_pow(
        GDim(0, 1), 0, m, k, order
    )
    return _collapse_t_free(f)


def lambda_line(a: GDim, m: int, order: int) -> SuperSeries:
    """lambda of the class a z^m, for one graded line in degree m >= 1."""
    if m < 1:
        raise ValueError("line degree must be >= 1")
    return line_pow_even(m, a.even, order) * line_pow_odd(m, a.odd, order)


def lambda_series(a: SuperSeries) -> SuperSeries:
    """lambda of an arbitrary a(z) in zR[[z]], as the product of line factors."""
    _require_no_constant(a, "a")
    out = SuperSeries.one(a.order)
    for n in range(1, a.order + 1):
        if a[n]:
            out = out * lambda_line(a[n], n, a.order)
    return out


def adjoint_even_line(m: int, order: int) -> TZSeries:
    """(1 - [2]_t z^m + z^{2m}, 0): lambda of one even vector tensor adjoint."""
    out = TZSeries.one(order)
    out = out + TZSeries.monomial(-t_integer(2), m, order)
    out = out + TZSeries.monomial(RLaurent.one(), 2 * m, order)
    return out


def adjoint_odd_line(m: int, order: int) -> TZSeries:
    """(sum_i [2i+1]_t z^{2im}, -sum_i [2i+2]_t z^{(2i+1)m})."""
    coeffs = []
    j = 0
    while j * m <= order:
        if j % 2 == 0:
            coeffs.append(t_integer(j + 1))
        else:
            coeffs.append(t_integer(j + 1) * GDim(0, -1))
        j += 1
    full = [RLaurent.zero()] * (order + 1)
    for j, c in enumerate(coeffs):
        full[j * m] = c
    return TZSeries(order, full)


def adjoint_even_line_pow(m: int, k: int, order: int) -> TZSeries:
    """(1 - [2]_t z^m + z^{2m})^k, factored as ((1 - t z^m)(1 - z^m/t))^k."""
    return _one_minus_pow(GDIM_ONE, 1, m, k, order) * _one_minus_pow(
        GDIM_ONE, -1, m, k, order
    )


def adjoint_odd_line_pow(m: int, k: int, order: int) -> TZSeries:
    """k-th power of the odd adjoint line, via its four-factor closed form.

    The base line equals (1/(1-t^2 z^{2m}), -t z^m/(1-t^2 z^{2m})) times the
    same with t replaced by 1/t, so its powers reduce to four binomial
    expansions.
    """
    f = _one_minus_pow(GDIM_ONE, 2, 2 * m, -k, order)
    f = f * _one_minus_pow(GDIM_ONE, -2, 2 * m, -k, order)
    f = f * _one_minus_pow(GDim(0, 1), 1, m, k, order)
    f = f * _one_minus_pow(GDim(0, 1), -1, m, k, order)
    return f


def lambda_adjoint_line(a: GDim, m: int, order: int) -> TZSeries:
    """lambda of the class a z^m tensored with the adjoint sl2 character."""
    if m < 1:
        raise ValueError("line degree must be >= 1")
    return adjoint_even_line_pow(m, a.even, order) * adjoint_odd_line_pow(
        m, a.odd, order
    )


def lambda_adjoint_series(a: SuperSeries) -> TZSeries:
    """lambda of a(z) tensor adjoint: the product of adjoint line factors."""
    _require_no_constant(a, "a")
    out = TZSeries.one(a.order)
    for n in range(1, a.order + 1):
        if a[n]:
            out = out * lambda_adjoint_line(a[n], n, a.order)
    return out


def theta_series(a: SuperSeries, b: SuperSeries) -> SuperSeries:
    """The t-free cofactor: lambda of (a + b)(z) in R[[z]]."""
    _require_no_constant(a, "a")
    _require_no_constant(b, "b")
    return lambda_series(a + b)


def phi_series(a: SuperSeries, b: SuperSeries) -> TZSeries:
    """lambda of a(z) tensor adjoint plus b(z), as the explicit product.

    Identically equal to lambda_adjoint_series(a) * theta_series(a, b); the
    product form below keeps the factors line by line.
    """
    _require_no_constant(a, "a")
    _require_no_constant(b, "b")
    a._check(b)
    order = a.order
    out = TZSeries.one(order)
    for n in range(1, order + 1):
        an, bn = a[n], b[n]
        if an.even:
            out = out * adjoint_even_line_pow(n, an.even, order)
        if an.even + bn.even:
            out = out * _one_minus_pow(GDIM_ONE, 0, n, an.even + bn.even, order)
        if an.odd:
            out = out * adjoint_odd_line_pow(n, an.odd, order)
        if an.odd + bn.odd:
            out = out * TZSeries.from_super(
                line_pow_odd(n, an.odd + bn.odd, order)
            )
    return out


def residue_kernel(d1: int, d2: int, order: int) -> TZSeries:
    """The weight factor (d1 z, d2 z) t^-1 + (1 - d1 z, -d2 z) + (-1, 0) t.

    Pairing it with the adjoint character product under Res_{t=0} gives the
    recurrence that determines the graded dimensions.
    """
    if d1 < 0 or d2 < 0:
        raise ValueError("generator counts must be >= 0")
    z0 = RLaurent({0: GDIM_ONE, 1: GDim(-1, 0)})
    z1 = RLaurent({-1: GDim(d1, d2), 0: GDim(-d1, -d2)})
    coeffs = [z0]
    if order >= 1:
        coeffs.append(z1)
    return TZSeries(order, coeffs)


def lambda_direct(pieces: Sequence[tuple[GDim, int]], order: int) -> SuperSeries:
    """Brute-force lambda of a graded superspace, by basis enumeration.

    ``pieces`` lists (graded dimension, z-degree) for finitely many graded
    components with nonnegative entries.  Expands every exterior-power
    subset of the even basis and every symmetric-power multiset of the odd
    basis, with sign (-1)^(p+q); the multiset parity decides even/odd.
    Serves as an independent oracle for the closed-form line factors.
    """
    even_degs: list[int] = []
    odd_degs: list[int] = []
    for g, m in pieces:
        if m < 1:
            raise ValueError("graded pieces must sit in degree >= 1")
        if g.even < 0 or g.odd < 0:
            raise ValueError("direct enumeration needs an effective class")
        even_degs.extend([m] * g.even)
        odd_degs.extend([m] * g.odd)

    # Exterior powers of the even part: plain subsets.
    ext = [GDIM_ZERO] * (order + 1)  # signed count per total degree, parity even
    for p in range(len(even_degs) + 1):
        for sub in combinations(even_degs, p):
            d = sum(sub)
            if d <= order:
                ext[d] = ext[d] + (GDIM_ONE if p % 2 == 0 else GDim(-1, 0))
    ext_series = SuperSeries(order, ext)

    # Symmetric powers of the odd part: multisets, enumerated recursively.
    # Each multiset of size q contributes (-1)^q with parity q mod 2.
    sym = [GDIM_ZERO] * (order + 1)
    sym[0] = GDIM_ONE

    def visit(i: int, deg: int, q: int) -> None:
        for j in range(i, len(odd_degs)):
            d, k = deg, q
            while True:
                d += odd_degs[j]
                k += 1
                if d > order:
                    break
                sym[d] = sym[d] + (GDim(1, 0) if k % 2 == 0 else GDim(0, -1))
                visit(j + 1, d, k)

    visit(0, 0, 0)
    sym_series = SuperSeries(order, sym)
    return ext_series * sym_series
