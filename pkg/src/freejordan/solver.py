"""Order-by-order solution of the residue equations for graded dimensions.

Two solvers live here.  ``solve_dims`` determines the series a(z) from the
single residue equation

    Res_{t=0} psi * Psi(a) dt = 0        (psi the degree-1 weight factor),

``solve_dims_pair`` determines (a(z), b(z)) from the two-equation system

    Res_{t=0} (t^-1 - 1) Phi(a, b) dt = (1, 0),
    Res_{t=0} (1 - t)    Phi(a, b) dt = -(D1, D2) z.

Both proceed degree by degree: the z^n coefficient of each residue depends
affinely on the unknown n-th coefficient, so three (resp. five) evaluations
assemble an exact integer linearization that is solved over the rationals
and required to be integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .lambda_ops import (
    adjoint_even_line_pow,
    adjoint_odd_line_pow,
    lambda_adjoint_series,
    phi_series,
    residue_kernel,
)
from .rings import GDIM_ZERO, GDim, SuperSeries


class SolverStepError(Exception):
    """Failure of the order-by-order scheme at a specific degree."""

    def __init__(self, step: int, message: str) -> None:
        super().__init__(f"step {step}: {message}")
        self.step = step


class SingularStepError(SolverStepError):
    pass


class NonIntegralStepError(SolverStepError):
    pass


class InconsistentStepError(SolverStepError):
    pass


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a solver run: coefficients plus per-step diagnostics."""

    d1: int
    d2: int
    order: int
    a: tuple[GDim, ...]  # coefficients for n = 1..order
    b: Optional[tuple[GDim, ...]]
    step_matrices: tuple[tuple[tuple[int, ...], ...], ...]
    residual_order: int

    def a_series(self) -> SuperSeries:
        return SuperSeries(self.order, (GDIM_ZERO,) + self.a)

    def b_series(self) -> SuperSeries:
        if self.b is None:
            raise ValueError("report carries no b coefficients")
        return SuperSeries(self.order, (GDIM_ZERO,) + self.b)


def _check_args(d1: int, d2: int, order: int) -> None:
    if d1 < 0 or d2 < 0 or d1 + d2 < 1:
        raise ValueError("need d1, d2 >= 0 with d1 + d2 >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")


def residual_series(a: SuperSeries, d1: int, d2: int, order: int | None = None) -> SuperSeries:
    """Res_{t=0} psi * Psi(a) dt as a series; callers assert vanishing.

    When ``order`` exceeds a's truncation the series is zero-padded, which
    treats the missing coefficients as literal zeros.
    """
    if order is None:
        order = a.order
    a = a.pad(order) if order > a.order else a.truncate(order)
    psi = residue_kernel(d1, d2, order)
    return (psi * lambda_adjoint_series(a)).residue_series()


def _integral_solution(m, rhs, n: int) -> list[int]:
    try:
        sol = linalg.solve(m, rhs)
    except ValueError as exc:
        if "inconsistent" in str(exc):
            raise InconsistentStepError(n, "no solution to the step system") from exc
        raise SingularStepError(n, "step linearization is singular") from exc
    out = []
    for v in sol:
        if v.denominator != 1:
            raise NonIntegralStepError(n, f"non-integral step solution {sol}")
        out.append(int(v))
    return out


def solve_dims(d1: int, d2: int, order: int) -> SolveReport:
    """Solve the single residue equation for a(z) through z^order."""
    _check_args(d1, d2, order)
    a: list[GDim] = [GDIM_ZERO]  # index 0 unused
    matrices = []
    for n in range(1, order + 1):
        psi = residue_kernel(d1, d2, n)
        base = psi * lambda_adjoint_series(SuperSeries(n, a + [GDIM_ZERO]))

        def coeff_at_n(candidate: GDim) -> GDim:
            f = base
            if candidate.even:
                f = f * adjoint_even_line_pow(n, candidate.even, n)
            if candidate.odd:
                f = f * adjoint_odd_line_pow(n, candidate.odd, n)
            return f.residue_series()[n]

        r0 = coeff_at_n(GDIM_ZERO)
        re = coeff_at_n(GDim(1, 0))
        ro = coeff_at_n(GDim(0, 1))
        m = [
            [re.even - r0.even, ro.even - r0.even],
            [re.odd - r0.odd, ro.odd - r0.odd],
        ]
        sol = _integral_solution(m, [-r0.even, -r0.odd], n)
        a.append(GDim(sol[0], sol[1]))
        matrices.append(tuple(tuple(row) for row in m))

    series = SuperSeries(order, a)
    res = residual_series(series, d1, d2)
    return SolveReport(
        d1=d1,
        d2=d2,
        order=order,
        a=tuple(a[1:]),
        b=None,
        step_matrices=tuple(matrices),
        residual_order=res.vanishing_order(),
    )


def pair_residuals(
    a: SuperSeries, b: SuperSeries, d1: int, d2: int
) -> tuple[SuperSeries, SuperSeries]:
    """Defects of the two-equation system for given (a, b); zero on solution."""
    from .rings import extract_L0, extract_L2

    phi = phi_series(a, b)
    e1 = extract_L0(phi) - SuperSeries.one(a.order)
    e2 = extract_L2(phi) + SuperSeries.monomial(GDim(d1, d2), 1, a.order)
    return e1, e2


def solve_dims_pair(d1: int, d2: int, order: int) -> SolveReport:
    """Solve the two-equation system for (a(z), b(z)) through z^order."""
    _check_args(d1, d2, order)
    a: list[GDim] = [GDIM_ZERO]
    b: list[GDim] = [GDIM_ZERO]
    matrices = []
    unit_steps = [GDim(1, 0), GDim(0, 1)]
    for n in range(1, order + 1):

        def defects(an: GDim, bn: GDim) -> list[int]:
            sa = SuperSeries(n, a + [an])
            sb = SuperSeries(n, b + [bn])
            e1, e2 = pair_residuals(sa, sb, d1, d2)
            return [e1[n].even, e1[n].odd, e2[n].even, e2[n].odd]

        r0 = defects(GDIM_ZERO, GDIM_ZERO)
        cols = []
        for u in unit_steps:
            cols.append([x - y for x, y in zip(defects(u, GDIM_ZERO), r0)])
        for u in unit_steps:
            cols.append([x - y for x, y in zip(defects(GDIM_ZERO, u), r0)])
        m = [[cols[j][i] for j in range(4)] for i in range(4)]
        sol = _integral_solution(m, [-x for x in r0], n)
        a.append(GDim(sol[0], sol[1]))
        b.append(GDim(sol[2], sol[3]))
        matrices.append(tuple(tuple(row) for row in m))

    sa = SuperSeries(order, a)
    sb = SuperSeries(order, b)
    e1, e2 = pair_residuals(sa, sb, d1, d2)
    res_order = min(e1.vanishing_order(), e2.vanishing_order())
    return SolveReport(
        d1=d1,
        d2=d2,
        order=order,
        a=tuple(a[1:]),
        b=tuple(b[1:]),
        step_matrices=tuple(matrices),
        residual_order=res_order,
    )
