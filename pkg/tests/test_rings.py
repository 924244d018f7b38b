import random

import pytest

from freejordan.rings import (
    GDIM_ONE,
    GDIM_X,
    GDIM_ZERO,
    GDim,
    RLaurent,
    SuperSeries,
    TZSeries,
    extract_L0,
    extract_L2,
    t_integer,
)


def rand_gdim(rng, lo=-5, hi=5):
    return GDim(rng.randint(lo, hi), rng.randint(lo, hi))


class TestGDim:
    def test_multiplication_rule(self):
        # (a0, a1)(b0, b1) = (a0 b0 + a1 b1, a0 b1 + a1 b0)
        assert GDim(1, 2) * GDim(3, 4) == GDim(11, 10)
        assert GDIM_X * GDIM_X == GDIM_ONE

    def test_ring_axioms_random(self):
        rng = random.Random(0)
        for _ in range(200):
            a, b, c = (rand_gdim(rng) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_units_are_involutions(self):
        for u in (GDIM_ONE, -GDIM_ONE, GDIM_X, -GDIM_X):
            assert u.is_unit()
            assert u.inverse() * u == GDIM_ONE
            assert u * u == GDIM_ONE

    def test_nonunit_inverse_raises(self):
        assert not GDim(2, 0).is_unit()
        with pytest.raises(ZeroDivisionError):
            GDim(2, 0).inverse()
        with pytest.raises(ZeroDivisionError):
            GDim(1, 1).inverse()

    def test_pow(self):
        assert GDim(1, 1) ** 3 == GDim(4, 4)
        assert GDim(2, 1) ** 0 == GDIM_ONE

    def test_truthiness_and_neg(self):
        assert not GDIM_ZERO
        assert GDim(0, 1)
        assert -GDim(1, -2) == GDim(-1, 2)


class TestSuperSeries:
    def test_geometric_inverse(self):
        one_minus_z = SuperSeries.one(10) - SuperSeries.monomial(GDIM_ONE, 1, 10)
        inv = one_minus_z.inverse()
        assert all(inv[n] == GDIM_ONE for n in range(11))
        assert inv * one_minus_z == SuperSeries.one(10)

    def test_order_mismatch_raises(self):
        with pytest.raises(ValueError):
            SuperSeries.one(3) * SuperSeries.one(4)

    def test_truncate_pad_roundtrip(self):
        rng = random.Random(1)
        f = SuperSeries(6, [rand_gdim(rng) for _ in range(7)])
        assert f.truncate(3).pad(6).truncate(3) == f.truncate(3)
        assert f.pad(9).truncate(6) == f

    def test_vanishing_order(self):
        f = SuperSeries.monomial(GDim(0, 2), 3, 8)
        assert f.vanishing_order() == 3
        assert SuperSeries.zero(5).vanishing_order() == 6

    def test_ring_axioms_random(self):
        rng = random.Random(2)
        for _ in range(30):
            f, g, h = (
                SuperSeries(5, [rand_gdim(rng, -3, 3) for _ in range(6)])
                for _ in range(3)
            )
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h


class TestRLaurent:
    def test_t_integer(self):
        # [m]_t = t^{m-1} + t^{m-3} + ... + t^{1-m}
        assert t_integer(1) == RLaurent.one()
        assert t_integer(2) == RLaurent({-1: GDIM_ONE, 1: GDIM_ONE})
        assert t_integer(3) == RLaurent({-2: GDIM_ONE, 0: GDIM_ONE, 2: GDIM_ONE})

    def test_t_integer_product_rule(self):
        # [2]_t [m]_t = [m+1]_t + [m-1]_t
        for m in range(2, 8):
            assert t_integer(2) * t_integer(m) == t_integer(m + 1) + t_integer(m - 1)

    def test_residue(self):
        f = RLaurent({-1: GDim(3, 1), 0: GDim(9, 9), 2: GDim(1, 0)})
        assert f.residue() == GDim(3, 1)
        assert RLaurent.zero().residue() == GDIM_ZERO

    def test_symmetry(self):
        assert t_integer(5).is_t_symmetric()
        assert not RLaurent({1: GDIM_ONE}).is_t_symmetric()

    def test_monomial_inverse_and_pow(self):
        t = RLaurent.t_power(1)
        assert t ** -3 == RLaurent.t_power(-3)
        f = t_integer(2)
        assert f ** 3 == f * f * f


class TestTZSeries:
    def test_from_super_and_residue_series(self):
        f = SuperSeries(4, [GDim(n, 0) for n in range(5)])
        g = TZSeries.from_super(f)
        assert g.residue_series() == SuperSeries.zero(4)
        h = g * TZSeries.monomial(RLaurent.t_power(-1), 0, 4)
        assert h.residue_series() == f

    def test_inverse(self):
        f = TZSeries.one(6) + TZSeries.monomial(t_integer(2), 1, 6)
        assert f * f.inverse() == TZSeries.one(6)

    def test_order_mismatch_raises(self):
        with pytest.raises(ValueError):
            TZSeries.one(2) * TZSeries.one(3)


class TestExtractors:
    def test_on_pure_t_powers(self):
        # L0 pairs against (t^-1 - 1): picks c_1 - c_0 per z-coefficient,
        # L2 pairs against (1 - t): picks c_{-1} - c_{-2}.
        f = TZSeries(2, [RLaurent({i: GDim(10 + i, 0) for i in range(-2, 3)})] * 3)
        assert extract_L0(f)[0] == GDim(1, 0)
        assert extract_L2(f)[0] == GDim(1, 0)

    def test_on_t_integers(self):
        # L0 = c_0 - c_{-1}; L2 = c_{-1} - c_{-2} per z-coefficient.
        f = TZSeries(1, [t_integer(3), t_integer(2)])
        assert extract_L0(f) == SuperSeries(1, [GDIM_ONE, -GDIM_ONE])
        assert extract_L2(f) == SuperSeries(1, [-GDIM_ONE, GDIM_ONE])

    def test_linear(self):
        rng = random.Random(3)
        for _ in range(50):
            f = TZSeries(3, [
                RLaurent({rng.randint(-3, 3): rand_gdim(rng) for _ in range(3)})
                for _ in range(4)
            ])
            g = TZSeries(3, [
                RLaurent({rng.randint(-3, 3): rand_gdim(rng) for _ in range(3)})
                for _ in range(4)
            ])
            assert extract_L0(f + g) == extract_L0(f) + extract_L0(g)
            assert extract_L2(f + g) == extract_L2(f) + extract_L2(g)
