"""Degreewise brute-force construction of the free Jordan superalgebra.

The algebra on d1 even and d2 odd generators is graded by word length.
Degree n >= 2 starts from the supercommutative pair space

    W_n = direct sum over i + j = n, i <= j of (basis_i x basis_j)

(with u.u = 0 for odd u, and only ordered pairs u <= v when i = j), and is
cut down by every top-level instance of the super Jordan operator identity

    sum over cyclic (x,y,z) of (-1)^{|x||z|} [L_{x.y}, L_z] = 0

applied to a fourth basis element w, with total degree n.  Inner products
use the already-reduced lower-degree tables, so embedded instances of the
identity vanish automatically.  The quotient is taken by exact rational
row reduction; quotient bases are the non-pivot pair coordinates in a
canonical order (parity even-first, then the lexicographic pair shape),
which makes the structure constants reproducible.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .rings import GDim, SuperSeries

FORMAT_VERSION = 1

Vector = tuple[Fraction, ...]


class ResourceBudgetExceeded(Exception):
    """The relation matrix for some degree outgrew the configured budget."""


def _zero(n: int) -> list[Fraction]:
    return [Fraction(0)] * n


@dataclass
class GradedJordanAlgebra:
    """Truncation of the free Jordan superalgebra with exact mult tables.

    ``parities[n]`` lists the parity (0 or 1) of each degree-n basis
    element; ``tables[(i, j)]`` (only i <= j) maps a pair of basis indices
    to the coordinates of their product in degree i + j.  Instances are
    treated as immutable once built.
    """

    d1: int
    d2: int
    max_degree: int
    parities: dict[int, tuple[int, ...]]
    labels: dict[int, tuple[str, ...]]
    tables: dict[tuple[int, int], list[list[Vector]]]
    dims: dict[int, GDim] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.dims:
            self.dims = {
                n: GDim(p.count(0), p.count(1)) for n, p in self.parities.items()
            }

    def dim(self, n: int) -> int:
        return len(self.parities[n])

    def graded_dims(self) -> SuperSeries:
        """Graded dimensions as a series prefix (coefficient of z^n)."""
        coeffs = [GDim(0, 0)] + [self.dims[n] for n in range(1, self.max_degree + 1)]
        return SuperSeries(self.max_degree, coeffs)

    def basis_vector(self, n: int, idx: int) -> Vector:
        v = _zero(self.dim(n))
        v[idx] = Fraction(1)
        return tuple(v)

    def multiply_basis(self, i: int, u: int, j: int, v: int) -> Vector:
        """Product of basis elements, as coordinates in degree i + j."""
        if i + j > self.max_degree:
            raise ValueError(f"product degree {i + j} beyond truncation")
        if i <= j:
            return self.tables[(i, j)][u][v]
        sign = (-1) ** (self.parities[i][u] * self.parities[j][v])
        w = self.tables[(j, i)][v][u]
        return w if sign == 1 else tuple(-c for c in w)

    def multiply(self, i: int, x: Sequence[Fraction], j: int, y: Sequence[Fraction]) -> Vector:
        """Bilinear extension of the basis product."""
        if i + j > self.max_degree:
            raise ValueError(f"product degree {i + j} beyond truncation")
        out = _zero(self.dim(i + j))
        for u, cu in enumerate(x):
            if not cu:
                continue
            for v, cv in enumerate(y):
                if not cv:
                    continue
                w = self.multiply_basis(i, u, j, v)
                c = cu * cv
                for k, wk in enumerate(w):
                    if wk:
                        out[k] += c * wk
        return tuple(out)

    def derivation_of(self, i: int, x: Sequence[Fraction], j: int, y: Sequence[Fraction], m: int) -> list[Vector]:
        """Matrix columns of [L_x, L_y] restricted to degree m.

        Column u is the image of the u-th degree-m basis element, living in
        degree i + j + m.
        """
        sign = (-1) ** (self._vec_parity(i, x) * self._vec_parity(j, y))
        cols = []
        for u in range(self.dim(m)):
            zu = self.basis_vector(m, u)
            yz = self.multiply(j, y, m, zu)
            xz = self.multiply(i, x, m, zu)
            first = self.multiply(i, x, j + m, yz)
            second = self.multiply(j, y, i + m, xz)
            cols.append(tuple(a - sign * b for a, b in zip(first, second)))
        return cols

    def _vec_parity(self, n: int, x: Sequence[Fraction]) -> int:
        pars = {self.parities[n][u] for u, c in enumerate(x) if c}
        if len(pars) > 1:
            raise ValueError("vector is not parity-homogeneous")
        return pars.pop() if pars else 0

    def jordan_residual(
        self,
        x: tuple[int, Sequence[Fraction]],
        y: tuple[int, Sequence[Fraction]],
        z: tuple[int, Sequence[Fraction]],
        w: tuple[int, Sequence[Fraction]],
    ) -> Vector:
        """The super Jordan identity operator applied to (x, y, z) and w.

        Vanishes identically on a Jordan superalgebra; evaluated through
        the stored multiplication tables.
        """
        n = x[0] + y[0] + z[0] + w[0]
        if n > self.max_degree:
            raise ValueError("total degree beyond truncation")
        out = _zero(self.dim(n))
        triple = [x, y, z]
        for r in range(3):
            (di, xi), (dj, xj), (dk, xk) = triple[r % 3], triple[(r + 1) % 3], triple[(r + 2) % 3]
            pi = self._vec_parity(di, xi)
            pj = self._vec_parity(dj, xj)
            pk = self._vec_parity(dk, xk)
            s1 = (-1) ** (pi * pk)
            s2 = (-1) ** ((pi + pj) * pk)
            ab = self.multiply(di, xi, dj, xj)
            zw = self.multiply(dk, xk, w[0], w[1])
            t1 = self.multiply(di + dj, ab, dk + w[0], zw)
            abw = self.multiply(di + dj, ab, w[0], w[1])
            t2 = self.multiply(dk, xk, di + dj + w[0], abw)
            for idx in range(len(out)):
                out[idx] += s1 * (t1[idx] - s2 * t2[idx])
        return tuple(out)

    # -- serialization ---------------------------------------------------

    def cache_key(self) -> str:
        raw = f"{self.d1}|{self.d2}|{self.max_degree}|{FORMAT_VERSION}"
        return hashlib.sha256(raw.encode()).hexdigest()[:16]

    def to_json(self) -> str:
        def frac(f: Fraction) -> str:
            return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)

        payload = {
            "format_version": FORMAT_VERSION,
            "d1": self.d1,
            "d2": self.d2,
            "max_degree": self.max_degree,
            "key": self.cache_key(),
            "parities": {str(n): list(p) for n, p in self.parities.items()},
            "labels": {str(n): list(v) for n, v in self.labels.items()},
            "dims": {str(n): [str(d.even), str(d.odd)] for n, d in self.dims.items()},
            "tables": {
                f"{i},{j}": [[[frac(c) for c in vec] for vec in row] for row in tab]
                for (i, j), tab in self.tables.items()
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "GradedJordanAlgebra":
        payload = json.loads(text)
        if payload.get("format_version") != FORMAT_VERSION:
            raise ValueError("unsupported cache format version")
        tables = {}
        for key, tab in payload["tables"].items():
            i, j = (int(s) for s in key.split(","))
            tables[(i, j)] = [
                [tuple(Fraction(c) for c in vec) for vec in row] for row in tab
            ]
        alg = cls(
            d1=payload["d1"],
            d2=payload["d2"],
            max_degree=payload["max_degree"],
            parities={int(n): tuple(p) for n, p in payload["parities"].items()},
            labels={int(n): tuple(v) for n, v in payload["labels"].items()},
            tables=tables,
            dims={
                int(n): GDim(int(e), int(o))
                for n, (e, o) in payload["dims"].items()
            },
        )
        if alg.cache_key() != payload.get("key"):
            raise ValueError("cache key mismatch")
        return alg


def _pair_coords(parities: dict[int, tuple[int, ...]], n: int) -> list[tuple[int, int, int, int]]:
    """Canonical W_n coordinates (i, u, j, v): parity even-first, then shape."""
    coords = []
    for i in range(1, n // 2 + 1):
        j = n - i
        if i > j:
            break
        for u in range(len(parities[i])):
            vs = range(len(parities[j])) if i < j else range(u, len(parities[j]))
            for v in vs:
                if i == j and u == v and parities[i][u] == 1:
                    continue  # odd squares vanish in characteristic 0
                coords.append((i, u, j, v))
    par = lambda c: (parities[c[0]][c[1]] + parities[c[2]][c[3]]) % 2
    coords.sort(key=lambda c: (par(c), c))
    return coords


def build_free_jordan(
    d1: int, d2: int, max_degree: int, budget: int | None = 20_000_000
) -> GradedJordanAlgebra:
    """Construct the free Jordan superalgebra through the given degree."""
    if d1 < 0 or d2 < 0 or d1 + d2 < 1:
        raise ValueError("need d1, d2 >= 0 with d1 + d2 >= 1")
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")

    parities: dict[int, tuple[int, ...]] = {1: (0,) * d1 + (1,) * d2}
    labels: dict[int, tuple[str, ...]] = {
        1: tuple(f"x{k + 1}" for k in range(d1)) + tuple(f"y{k + 1}" for k in range(d2))
    }
    tables: dict[tuple[int, int], list[list[Vector]]] = {}
    alg = GradedJordanAlgebra(d1, d2, 1, dict(parities), dict(labels), tables)

    for n in range(2, max_degree + 1):
        coords = _pair_coords(parities, n)
        index = {c: k for k, c in enumerate(coords)}
        nw = len(coords)
        coord_parity = [
            (parities[i][u] + parities[j][v]) % 2 for (i, u, j, v) in coords
        ]

        def outer_basis(i: int, u: int, j: int, v: int) -> tuple[int, int] | None:
            """W_n coordinate and sign of the product of two basis elements."""
            sign = 1
            if i > j or (i == j and u > v):
                sign = (-1) ** (parities[i][u] * parities[j][v])
                i, u, j, v = j, v, i, u
            if i == j and u == v and parities[i][u] == 1:
                return None
            return index[(i, u, j, v)], sign

        def outer_vec(i: int, x: Sequence[Fraction], j: int, y: Sequence[Fraction]) -> list[Fraction]:
            out = _zero(nw)
            for u, cu in enumerate(x):
                if not cu:
                    continue
                for v, cv in enumerate(y):
                    if not cv:
                        continue
                    hit = outer_basis(i, u, j, v)
                    if hit is not None:
                        k, s = hit
                        out[k] += s * cu * cv
            return out

        # Top-level super Jordan instances with total degree n.
        rows: dict[tuple[tuple[int, Fraction], ...], None] = {}
        compositions = [
            (p, q, r, s)
            for p in range(1, n - 2)
            for q in range(1, n - 2)
            for r in range(1, n - 2)
            for s in range(1, n - 2)
            if p + q + r + s == n
        ]
        for (p, q, r, s) in compositions:
            np_, nq, nr, ns = (len(parities[t]) for t in (p, q, r, s))
            if budget is not None:
                projected = (len(rows) + np_ * nq * nr * ns) * nw
                if projected > budget:
                    raise ResourceBudgetExceeded(
                        f"degree {n}: relation matrix would exceed budget {budget}"
                    )
            for xu in range(np_):
                xv = alg.basis_vector(p, xu)
                for yu in range(nq):
                    yv = alg.basis_vector(q, yu)
                    for zu in range(nr):
                        zv = alg.basis_vector(r, zu)
                        px, py, pz = parities[p][xu], parities[q][yu], parities[r][zu]
                        for wu in range(ns):
                            wv = alg.basis_vector(s, wu)
                            row = _sj_row(
                                alg, outer_vec, nw,
                                (p, xv, px), (q, yv, py), (r, zv, pz), (s, wv),
                            )
                            if any(row):
                                rows[tuple((k, c) for k, c in enumerate(row) if c)] = None

        # Row-reduce per parity block (relations are parity-homogeneous).
        n_even = coord_parity.count(0)
        quotient_index: dict[int, int] = {}
        pivot_expr: dict[int, list[tuple[int, Fraction]]] = {}
        new_parities: list[int] = []
        new_labels: list[str] = []
        for block_par, lo, hi in ((0, 0, n_even), (1, n_even, nw)):
            block_rows = []
            for key in rows:
                if any(lo <= k < hi for k, _ in key):
                    if not all(lo <= k < hi for k, _ in key):
                        raise AssertionError("relation row mixes parities")
                    rvec = _zero(hi - lo)
                    for k, c in key:
                        rvec[k - lo] = c
                    block_rows.append(rvec)
            reduced, pivots = linalg.rref(block_rows) if block_rows else ([], [])
            pivset = set(pivots)
            for k in range(lo, hi):
                if (k - lo) not in pivset:
                    quotient_index[k] = len(new_parities)
                    new_parities.append(block_par)
                    (i, u, j, v) = coords[k]
                    new_labels.append(f"({labels[i][u]}.{labels[j][v]})")
            for rowvec, piv in zip(reduced, pivots):
                expr = []
                for k in range(hi - lo):
                    if k != piv and rowvec[k]:
                        expr.append((k + lo, -rowvec[k]))
                pivot_expr[piv + lo] = expr

        dim_n = len(new_parities)

        def project(wvec: Sequence[Fraction]) -> Vector:
            out = _zero(dim_n)
            for k, c in enumerate(wvec):
                if not c:
                    continue
                if k in quotient_index:
                    out[quotient_index[k]] += c
                else:
                    for k2, c2 in pivot_expr[k]:
                        out[quotient_index[k2]] += c * c2
            return tuple(out)

        parities[n] = tuple(new_parities)
        labels[n] = tuple(new_labels)
        for i in range(1, n // 2 + 1):
            j = n - i
            tab = []
            for u in range(len(parities[i])):
                row_tab = []
                for v in range(len(parities[j])):
                    hit = outer_basis(i, u, j, v)
                    if hit is None:
                        row_tab.append(tuple(_zero(dim_n)))
                    else:
                        k, sgn = hit
                        base = _zero(nw)
                        base[k] = Fraction(sgn)
                        row_tab.append(project(base))
                tab.append(row_tab)
            tables[(i, j)] = tab

        alg = GradedJordanAlgebra(d1, d2, n, dict(parities), dict(labels), tables)

    return alg


def _sj_row(alg, outer_vec, nw, x, y, z, w):
    """Expand one top-level super Jordan instance into W_n coordinates."""
    (s, wv) = w
    out = _zero(nw)
    triple = [x, y, z]
    for r in range(3):
        (di, xi, pi) = triple[r % 3]
        (dj, xj, pj) = triple[(r + 1) % 3]
        (dk, xk, pk) = triple[(r + 2) % 3]
        s1 = (-1) ** (pi * pk)
        s2 = (-1) ** ((pi + pj) * pk)
        ab = alg.multiply(di, xi, dj, xj)
        zw = alg.multiply(dk, xk, s, wv)
        t1 = outer_vec(di + dj, ab, dk + s, zw)
        abw = alg.multiply(di + dj, ab, s, wv)
        t2 = outer_vec(dk, xk, di + dj + s, abw)
        for idx in range(len(out)):
            out[idx] += s1 * (t1[idx] - s2 * t2[idx])
    return out
