import random
from itertools import combinations_with_replacement

from freejordan.lambda_ops import (
    adjoint_even_line,
    adjoint_even_line_pow,
    adjoint_odd_line,
    adjoint_odd_line_pow,
    lambda_adjoint_series,
    lambda_direct,
    lambda_line,
    lambda_series,
    phi_series,
    residue_kernel,
    theta_series,
)
from freejordan.rings import (
    GDIM_ONE,
    GDIM_ZERO,
    GDim,
    RLaurent,
    SuperSeries,
    TZSeries,
    t_integer,
)


def series_from_pieces(pieces, order):
    coeffs = [GDIM_ZERO] * (order + 1)
    for g, m in pieces:
        coeffs[m] = coeffs[m] + g
    return SuperSeries(order, coeffs)


class TestLambdaLine:
    def test_single_even_vector(self):
        # One even vector in degree m: lambda = 1 - z^m.
        f = lambda_line(GDim(1, 0), 2, 8)
        assert f == SuperSeries.one(8) - SuperSeries.monomial(GDIM_ONE, 2, 8)

    def test_single_odd_vector(self):
        # One odd vector: alternating tail 1 - (0,1)z^m + z^{2m} - ...
        f = lambda_line(GDim(0, 1), 1, 6)
        expect = [GDIM_ONE, GDim(0, -1), GDIM_ONE, GDim(0, -1),
                  GDIM_ONE, GDim(0, -1), GDIM_ONE]
        assert f == SuperSeries(6, expect)

    def test_against_direct_enumeration(self):
        """Closed forms agree with brute-force basis enumeration for every
        graded superspace with at most 4 basis vectors in degrees <= 4."""
        order = 8
        slots = [(par, m) for par in (0, 1) for m in range(1, 5)]
        for total in range(1, 5):
            for chosen in combinations_with_replacement(slots, total):
                pieces = {}
                for par, m in chosen:
                    g = pieces.get(m, GDIM_ZERO)
                    pieces[m] = g + (GDim(1, 0) if par == 0 else GDim(0, 1))
                piece_list = [(g, m) for m, g in pieces.items()]
                direct = lambda_direct(piece_list, order)
                closed = lambda_series(series_from_pieces(piece_list, order))
                assert direct == closed, f"mismatch for pieces {piece_list}"

    def test_homomorphism_random(self):
        """lambda(a + b) = lambda(a) lambda(b) on random effective classes."""
        rng = random.Random(11)
        order = 10
        for _ in range(100):
            a = SuperSeries(order, [GDIM_ZERO] + [
                GDim(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(order)
            ])
            b = SuperSeries(order, [GDIM_ZERO] + [
                GDim(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(order)
            ])
            assert lambda_series(a + b) == lambda_series(a) * lambda_series(b)
            assert lambda_adjoint_series(a + b) == (
                lambda_adjoint_series(a) * lambda_adjoint_series(b)
            )


class TestAdjointLines:
    def test_odd_line_closed_form(self):
        # The explicit t-integer sum equals the four-factor closed form,
        # checked deep (order 30).
        for m in (1, 2, 3):
            assert adjoint_odd_line_pow(m, 1, 30) == adjoint_odd_line(m, 30)

    def test_even_line_closed_form(self):
        for m in (1, 2, 3):
            assert adjoint_even_line_pow(m, 1, 12) == adjoint_even_line(m, 12)

    def test_pow_consistency(self):
        for k in (2, 3, -1, -2):
            direct = adjoint_odd_line_pow(1, k, 8)
            if k > 0:
                expect = TZSeries.one(8)
                for _ in range(k):
                    expect = expect * adjoint_odd_line(1, 8)
            else:
                expect = adjoint_odd_line(1, 8).inverse() ** (-k)
            assert direct == expect

    def test_even_times_inverse(self):
        f = adjoint_even_line_pow(2, 5, 10) * adjoint_even_line_pow(2, -5, 10)
        assert f == TZSeries.one(10)


class TestCharacterProducts:
    def test_phi_factorization(self):
        # Phi = Theta * Psi identically.
        rng = random.Random(13)
        for _ in range(20):
            order = 6
            a = SuperSeries(order, [GDIM_ZERO] + [
                GDim(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(order)
            ])
            b = SuperSeries(order, [GDIM_ZERO] + [
                GDim(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(order)
            ])
            lhs = phi_series(a, b)
            rhs = lambda_adjoint_series(a) * TZSeries.from_super(theta_series(a, b))
            assert lhs == rhs

    def test_residue_kernel_shape(self):
        psi = residue_kernel(2, 3, 5)
        assert psi.coeffs[0] == RLaurent({0: GDIM_ONE, 1: GDim(-1, 0)})
        assert psi.coeffs[1] == RLaurent({-1: GDim(2, 3), 0: GDim(-2, -3)})
        assert all(not psi.coeffs[n] for n in range(2, 6))


def t_component(f: TZSeries, i: int) -> SuperSeries:
    return SuperSeries(f.order, [c[i] for c in f.coeffs])


def poly(order, **terms):
    # poly(4, z0=(1,0), z2=(4,0)) -> 1 + 4z^2
    coeffs = [GDIM_ZERO] * (order + 1)
    for key, val in terms.items():
        coeffs[int(key[1:])] = GDim(*val)
    return SuperSeries(order, coeffs)


class TestHandExpansions:
    """t-components of the adjoint character product, against hand values."""

    def test_one_odd_generator(self):
        # a = (0,1)z only: Psi = (sum [2i+1] z^{2i}, -sum [2i+2] z^{2i+1}).
        order = 9
        a = SuperSeries.monomial(GDim(0, 1), 1, order)
        psi = lambda_adjoint_series(a)
        for n in range(order + 1):
            expect = t_integer(n + 1) * (GDIM_ONE if n % 2 == 0 else GDim(0, -1))
            assert psi.coeffs[n] == expect
        # t-components: 1/(1-z^2) patterns
        assert t_component(psi, 0) == poly(
            order, z0=(1, 0), z2=(1, 0), z4=(1, 0), z6=(1, 0), z8=(1, 0)
        )
        assert t_component(psi, -1) == poly(
            order, z1=(0, -1), z3=(0, -1), z5=(0, -1), z7=(0, -1), z9=(0, -1)
        )
        assert t_component(psi, -2) == poly(
            order, z2=(1, 0), z4=(1, 0), z6=(1, 0), z8=(1, 0)
        )

    def test_two_odd_generators(self):
        # a = (0,2),(1,0),(0,2),(5,0): hand expansion mod z^5.
        a = SuperSeries(4, [GDIM_ZERO, GDim(0, 2), GDim(1, 0), GDim(0, 2), GDim(5, 0)])
        psi = lambda_adjoint_series(a)
        assert t_component(psi, 0) == poly(4, z0=(1, 0), z2=(4, 0), z3=(0, 4), z4=(18, 0))
        assert t_component(psi, -1) == poly(4, z1=(0, -2), z2=(-1, 0), z3=(0, -8), z4=(-12, 0))
        assert t_component(psi, -2) == poly(4, z2=(3, 0), z3=(0, 2), z4=(12, 0))

    def test_mixed_generators(self):
        # a = (1,1),(1,1),(2,2),(3,3): hand expansion mod z^5.
        a = SuperSeries(4, [GDIM_ZERO, GDim(1, 1), GDim(1, 1), GDim(2, 2), GDim(3, 3)])
        psi = lambda_adjoint_series(a)
        assert t_component(psi, 0) == poly(
            4, z0=(1, 0), z2=(2, 2), z3=(4, 4), z4=(12, 12)
        )
        assert t_component(psi, -1) == poly(
            4, z1=(-1, -1), z2=(-1, -1), z3=(-4, -4), z4=(-9, -9)
        )
        assert t_component(psi, -2) == poly(
            4, z2=(1, 1), z3=(2, 2), z4=(7, 7)
        )
