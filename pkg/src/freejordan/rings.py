"""Exact arithmetic in the graded-dimension ring and its series extensions.

The base ring is R = Z[x]/(x^2 - 1), with (a, b) standing for a + b*x.  A
pair records the dimensions of the even and odd parts of a superspace, so
multiplication follows the tensor-product rule for superspaces:

    (a0, a1) * (b0, b1) = (a0*b0 + a1*b1, a0*b1 + a1*b0).

On top of R live three series rings, all truncated exactly:

* ``SuperSeries``  -- R[[z]] mod z^(N+1),
* ``RLaurent``     -- finitely supported Laurent polynomials in t over R,
* ``TZSeries``     -- R[t, t^-1][[z]] mod z^(N+1).

All values are immutable; every operation returns a fresh value.  Integer
coefficients are arbitrary precision throughout.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class GDim:
    """An element (even, odd) of R = Z[x]/(x^2 - 1)."""

    __slots__ = ("even", "odd")

    def __init__(self, even: int, odd: int = 0) -> None:
        object.__setattr__(self, "even", even)
        object.__setattr__(self, "odd", odd)

    def __setattr__(self, name, value):
        raise AttributeError("GDim is immutable")

    def __repr__(self) -> str:
        return f"GDim({self.even}, {self.odd})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GDim(other)
        if not isinstance(other, GDim):
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        return hash((self.even, self.odd))

    def __bool__(self) -> bool:
        return self.even != 0 or self.odd != 0

    def __add__(self, other: "GDim | int") -> "GDim":
        other = _as_gdim(other)
        return GDim(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self) -> "GDim":
        return GDim(-self.even, -self.odd)

    def __sub__(self, other: "GDim | int") -> "GDim":
        return self + (-_as_gdim(other))

    def __rsub__(self, other: "GDim | int") -> "GDim":
        return _as_gdim(other) + (-self)

    def __mul__(self, other: "GDim | int") -> "GDim":
        if isinstance(other, int):
            return GDim(self.even * other, self.odd * other)
        if not isinstance(other, GDim):
            return NotImplemented
        return GDim(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        """Units of R are +-1 and +-x, i.e. even^2 - odd^2 = +-1."""
        return abs(self.even * self.even - self.odd * self.odd) == 1

    def inverse(self) -> "GDim":
        # Every unit of R squares to 1, so a unit is its own inverse.
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit of R")
        return self

    def __pow__(self, k: int) -> "GDim":
        if k < 0:
            return self.inverse() ** (-k)
        out = GDIM_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def pair(self) -> tuple[int, int]:
        return (self.even, self.odd)

    def __str__(self) -> str:
        return f"({self.even},{self.odd})"


GDIM_ZERO = GDim(0, 0)
GDIM_ONE = GDim(1, 0)
GDIM_X = GDim(0, 1)


def _as_gdim(v: "GDim | int") -> GDim:
    return GDim(v) if isinstance(v, int) else v


def gdim_mul(a: GDim, b: GDim) -> GDim:
    """Product in R; exposed as a plain function for the tests' sake."""
    return a * b


class SuperSeries:
    """Truncated series sum_{n=0}^{N} c_n z^n with c_n in R.

    The truncation order N is fixed at construction; binary operations
    insist on equal orders to rule out silent order mixing.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[GDim | int]) -> None:
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_as_gdim(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError("too many coefficients for the truncation order")
        cs.extend([GDIM_ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("SuperSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "SuperSeries":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "SuperSeries":
        return cls(order, [GDIM_ONE])

    @classmethod
    def monomial(cls, c: GDim | int, m: int, order: int) -> "SuperSeries":
        if m < 0:
            raise ValueError("z-degree must be >= 0")
        if m > order:
            return cls.zero(order)
        cs = [GDIM_ZERO] * (m + 1)
        cs[m] = _as_gdim(c)
        return cls(order, cs)

    def __getitem__(self, n: int) -> GDim:
        if 0 <= n <= self.order:
            return self.coeffs[n]
        raise IndexError(f"z-degree {n} outside truncation order {self.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other: "SuperSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} != {other.order}"
            )

    def __add__(self, other: "SuperSeries") -> "SuperSeries":
        self._check(other)
        return SuperSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "SuperSeries":
        return SuperSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "SuperSeries") -> "SuperSeries":
        return self + (-other)

    def __mul__(self, other: "SuperSeries") -> "SuperSeries":
        self._check(other)
        n = self.order
        out = [GDIM_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return SuperSeries(n, out)

    def scale(self, c: GDim | int) -> "SuperSeries":
        c = _as_gdim(c)
        return SuperSeries(self.order, [c * a for a in self.coeffs])

    def inverse(self) -> "SuperSeries":
        """Multiplicative inverse; requires a unit constant term."""
        c0 = self.coeffs[0]
        if not c0.is_unit():
            raise ZeroDivisionError("constant term is not a unit of R")
        inv0 = c0.inverse()
        out = [GDIM_ZERO] * (self.order + 1)
        out[0] = inv0
        for n in range(1, self.order + 1):
            acc = GDIM_ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out[n] = -(inv0 * acc)
        return SuperSeries(self.order, out)

    def __pow__(self, k: int) -> "SuperSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = SuperSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def truncate(self, order: int) -> "SuperSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return SuperSeries(order, self.coeffs[: order + 1])

    def pad(self, order: int) -> "SuperSeries":
        """Reinterpret with a higher truncation order, zero-padding.

        Only meaningful when the extra coefficients are genuinely known to
        vanish (e.g. a polynomial); callers take that responsibility.
        """
        if order < self.order:
            raise ValueError("use truncate to lower the order")
        return SuperSeries(order, self.coeffs)

    def vanishes_through(self, k: int) -> bool:
        """True if the coefficients at z^0..z^k are all zero."""
        k = min(k, self.order)
        return not any(self.coeffs[: k + 1])

    def vanishing_order(self) -> int:
        """Index of the first nonzero coefficient; order + 1 if none."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def __str__(self) -> str:
        parts = [f"{c}z^{n}" for n, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"SuperSeries(order={self.order}, {self})"


class RLaurent:
    """Finitely supported Laurent polynomial in t with GDim coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, GDim | int] | Iterable[tuple[int, GDim | int]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, GDim] = {}
        for e, c in items:
            c = _as_gdim(c)
            if c:
                acc = d.get(e, GDIM_ZERO) + c
                if acc:
                    d[e] = acc
                else:
                    d.pop(e, None)
        object.__setattr__(self, "terms", tuple(sorted(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("RLaurent is immutable")

    @classmethod
    def zero(cls) -> "RLaurent":
        return cls()

    @classmethod
    def one(cls) -> "RLaurent":
        return cls({0: GDIM_ONE})

    @classmethod
    def t_power(cls, e: int, c: GDim | int = GDIM_ONE) -> "RLaurent":
        return cls({e: c})

    def __getitem__(self, e: int) -> GDim:
        for exp, c in self.terms:
            if exp == e:
                return c
        return GDIM_ZERO

    def items(self) -> Iterator[tuple[int, GDim]]:
        return iter(self.terms)

    def support(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "RLaurent") -> "RLaurent":
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, GDIM_ZERO) + c
        return RLaurent(d)

    def __neg__(self) -> "RLaurent":
        return RLaurent([(e, -c) for e, c in self.terms])

    def __sub__(self, other: "RLaurent") -> "RLaurent":
        return self + (-other)

    def __mul__(self, other: "RLaurent | GDim | int") -> "RLaurent":
        if isinstance(other, (GDim, int)):
            c = _as_gdim(other)
            return RLaurent([(e, c * a) for e, a in self.terms])
        if not isinstance(other, RLaurent):
            return NotImplemented
        d: dict[int, GDim] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                d[e] = d.get(e, GDIM_ZERO) + c1 * c2
        return RLaurent(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RLaurent":
        if k < 0:
            inv = self.monomial_inverse()
            return inv ** (-k)
        out = RLaurent.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monomial_inverse(self) -> "RLaurent":
        """Inverse of a single-term Laurent monomial with a unit coefficient."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are inverted in R[t,1/t]")
        e, c = self.terms[0]
        return RLaurent({-e: c.inverse()})

    def residue(self) -> GDim:
        """Res_{t=0} f dt: the coefficient at t^-1."""
        return self[-1]

    def is_t_symmetric(self) -> bool:
        """Whether the coefficient at t^e always equals the one at t^-e."""
        return all(self[e] == self[-e] for e, _ in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}t^{e}" for e, c in self.terms)

    def __repr__(self) -> str:
        return f"RLaurent({self})"


RLAURENT_ZERO = RLaurent()
RLAURENT_ONE = RLaurent.one()


def t_integer(m: int) -> RLaurent:
    """The t-integer [m]_t = (t^m - t^-m)/(t - t^-1) = sum t^(m-1-2i)."""
    if m < 1:
        raise ValueError("t-integers are defined for m >= 1")
    return RLaurent({m - 1 - 2 * i: GDIM_ONE for i in range(m)})


def residue(f: RLaurent) -> GDim:
    return f.residue()


class TZSeries:
    """Truncated series in z whose coefficients are RLaurent values."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[RLaurent] = ()) -> None:
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = list(coeffs)
        if len(cs) > order + 1:
            raise ValueError("too many coefficients for the truncation order")
        cs.extend([RLAURENT_ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TZSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TZSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TZSeries":
        return cls(order, [RLAURENT_ONE])

    @classmethod
    def monomial(cls, c: RLaurent, m: int, order: int) -> "TZSeries":
        if m > order:
            return cls.zero(order)
        cs = [RLAURENT_ZERO] * (m + 1)
        cs[m] = c
        return cls(order, cs)

    @classmethod
    def from_super(cls, f: SuperSeries) -> "TZSeries":
        """Embed R[[z]] into R[t,1/t][[z]] as t-free series."""
        return cls(f.order, [RLaurent({0: c}) for c in f.coeffs])

    def __getitem__(self, n: int) -> RLaurent:
        if 0 <= n <= self.order:
            return self.coeffs[n]
        raise IndexError(f"z-degree {n} outside truncation order {self.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other: "TZSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} != {other.order}"
            )

    def __add__(self, other: "TZSeries") -> "TZSeries":
        self._check(other)
        return TZSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "TZSeries":
        return TZSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "TZSeries") -> "TZSeries":
        return self + (-other)

    def __mul__(self, other: "TZSeries") -> "TZSeries":
        self._check(other)
        n = self.order
        out: list[dict[int, GDim]] = [dict() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b:
                    continue
                acc = out[i + j]
                for e1, c1 in a.terms:
                    for e2, c2 in b.terms:
                        e = e1 + e2
                        acc[e] = acc.get(e, GDIM_ZERO) + c1 * c2
        return TZSeries(n, [RLaurent(d) for d in out])

    def scale(self, c: RLaurent) -> "TZSeries":
        return TZSeries(self.order, [c * a for a in self.coeffs])

    def inverse(self) -> "TZSeries":
        inv0 = self.coeffs[0].monomial_inverse()
        out = [RLAURENT_ZERO] * (self.order + 1)
        out[0] = inv0
        for n in range(1, self.order + 1):
            acc = RLAURENT_ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out[n] = -(inv0 * acc)
        return TZSeries(self.order, out)

    def __pow__(self, k: int) -> "TZSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = TZSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def truncate(self, order: int) -> "TZSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TZSeries(order, self.coeffs[: order + 1])

    def residue_series(self) -> SuperSeries:
        """Apply Res_{t=0} (.) dt coefficientwise in z."""
        return SuperSeries(self.order, [c.residue() for c in self.coeffs])

    def __str__(self) -> str:
        parts = [f"({c})z^{n}" for n, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TZSeries(order={self.order}, {self})"


_T_INV_MINUS_ONE = RLaurent({-1: GDIM_ONE, 0: -GDIM_ONE})
_ONE_MINUS_T = RLaurent({0: GDIM_ONE, 1: -GDIM_ONE})


def extract_L0(f: TZSeries) -> SuperSeries:
    """Trivial-isotype extractor: Res_{t=0}(t^-1 - 1) f dt per z-degree."""
    return f.scale(_T_INV_MINUS_ONE).residue_series()


def extract_L2(f: TZSeries) -> SuperSeries:
    """Adjoint-isotype extractor: Res_{t=0}(1 - t) f dt per z-degree."""
    return f.scale(_ONE_MINUS_T).residue_series()
