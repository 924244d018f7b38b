"""Graded Chevalley-Eilenberg homology of the TAG algebra, exactly.

Chains with trivial coefficients form the super exterior algebra
Lambda(g_even) (x) S(g_odd); a degree-r monomial is a weakly increasing
tuple of basis indices in which even indices may not repeat.  The boundary
extracts each pair of factors with Koszul signs and replaces it by its
bracket:

    d(a_1 ... a_r) = sum over s < t of +- [a_s, a_t] ^ a_1 ... a_s^ ... a_t^ ... a_r

where the sign moves a_s and then a_t to the front through the adjacent
swap rule x ^ y = -(-1)^{|x||y|} y ^ x, and the bracket is re-inserted in
canonical position with the same rule.  d^2 = 0 is asserted on every block
as the acceptance gate for this sign convention.

Everything splits into finite blocks by (homological degree r, z-degree d,
h-weight w, chain parity): the boundary preserves d, w, and parity.  A
block at (r, d) is complete once d <= d_max and r <= min(r_max, d) (every
chain factor has z-degree >= 1), which makes truncation artifacts
explicit rather than silent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .lambda_ops import phi_series
from .rings import GDIM_ZERO, GDim, RLaurent, SuperSeries
from .tag import TagAlgebra

Monomial = tuple[int, ...]
BlockKey = tuple[int, int, int, int]  # (r, z-degree, weight, parity)


class ChainComplex:
    """CE chains of a TAG truncation through r <= r_max, z-degree <= d_max."""

    def __init__(self, tag: TagAlgebra, r_max: int, d_max: int) -> None:
        if d_max > tag.max_degree:
            raise ValueError("z-degree horizon beyond the TAG truncation")
        self.tag = tag
        self.r_max = r_max
        self.d_max = d_max
        self.blocks: dict[BlockKey, list[Monomial]] = {}
        self.index: dict[BlockKey, dict[Monomial, int]] = {}
        self._enumerate()
        self.boundaries: dict[BlockKey, list[dict[int, Fraction]]] = {}
        for key in self.blocks:
            self.boundaries[key] = self._boundary_block(key)
        self._check_d_squared()

    # -- chain enumeration ----------------------------------------------

    def _enumerate(self) -> None:
        basis = self.tag.basis
        nb = len(basis)

        def add(mon: Monomial, d: int, w: int, par: int) -> None:
            key = (len(mon), d, w, par)
            blk = self.blocks.setdefault(key, [])
            self.index.setdefault(key, {})[mon] = len(blk)
            blk.append(mon)

        def extend(mon: list[int], start: int, d: int, w: int, par: int) -> None:
            add(tuple(mon), d, w, par)
            if len(mon) == self.r_max:
                return
            for g in range(start, nb):
                el = basis[g]
                if d + el.degree > self.d_max:
                    continue
                if el.parity == 0 and mon and mon[-1] == g:
                    continue  # even factors square to zero
                mon.append(g)
                extend(mon, g if el.parity == 1 else g + 1,
                       d + el.degree, w + el.weight, (par + el.parity) % 2)
                mon.pop()

        extend([], 0, 0, 0, 0)

    def block_key(self, mon: Monomial) -> BlockKey:
        basis = self.tag.basis
        d = sum(basis[g].degree for g in mon)
        w = sum(basis[g].weight for g in mon)
        par = sum(basis[g].parity for g in mon) % 2
        return (len(mon), d, w, par)

    def is_complete(self, r: int, d: int) -> bool:
        """Whether the chain block V_r at z-degree d has every monomial."""
        return d <= self.d_max and (r <= self.r_max or r > d)

    def block_dim(self, r: int, d: int) -> dict[tuple[int, int], int]:
        """Dimensions per (weight, parity) of V_r at z-degree d."""
        out: dict[tuple[int, int], int] = {}
        for (rr, dd, w, par), mons in self.blocks.items():
            if rr == r and dd == d:
                out[(w, par)] = len(mons)
        return out

    # -- boundary --------------------------------------------------------

    def _insert(self, g: int, rest: Monomial) -> tuple[Monomial, int] | None:
        """Canonical insertion g ^ rest with Koszul signs; None if it dies."""
        basis = self.tag.basis
        pg = basis[g].parity
        sign = 1
        pos = 0
        for h in rest:
            if h < g:
                sign *= -((-1) ** (pg * basis[h].parity))
                pos += 1
            else:
                break
        if pg == 0 and pos < len(rest) and rest[pos] == g:
            return None
        return rest[:pos] + (g,) + rest[pos:], sign

    def boundary_monomial(self, mon: Monomial) -> dict[Monomial, Fraction]:
        """d applied to one monomial, as a sparse combination."""
        basis = self.tag.basis
        tag = self.tag
        out: dict[Monomial, Fraction] = {}
        r = len(mon)
        pars = [basis[g].parity for g in mon]
        for s in range(r):
            for t in range(s + 1, r):
                # Each unordered slot pair appears exactly once; repeated odd
                # factors contribute once per pair of slots, as S(g_odd)
                # requires.
                terms = tag.brackets.get((mon[s], mon[t]), ())
                if not terms:
                    continue
                sign = (-1) ** s * (-1) ** (pars[s] * sum(pars[:s]))
                sign *= (-1) ** (t - 1) * (-1) ** (
                    pars[t] * (sum(pars[:t]) - pars[s])
                )
                rest = mon[:s] + mon[s + 1:t] + mon[t + 1:]
                for k, c in terms:
                    ins = self._insert(k, rest)
                    if ins is None:
                        continue
                    new, s2 = ins
                    out[new] = out.get(new, Fraction(0)) + sign * s2 * c
        return {m: c for m, c in out.items() if c}

    def _boundary_block(self, key: BlockKey) -> list[dict[int, Fraction]]:
        """Sparse boundary columns for a block, rows indexed in V_{r-1}."""
        r, d, w, par = key
        if r == 0:
            return []
        target = (r - 1, d, w, par)
        tindex = self.index.get(target, {})
        cols = []
        for mon in self.blocks[key]:
            col: dict[int, Fraction] = {}
            for m2, c in self.boundary_monomial(mon).items():
                if self.block_key(m2) != target:
                    raise AssertionError("boundary leaves its block")
                col[tindex[m2]] = c
            cols.append(col)
        return cols

    def _check_d_squared(self) -> None:
        for (r, d, w, par), cols in self.boundaries.items():
            if r < 2:
                continue
            below = self.boundaries.get((r - 1, d, w, par), [])
            for col in cols:
                acc: dict[int, Fraction] = {}
                for i, c in col.items():
                    for k, c2 in below[i].items():
                        acc[k] = acc.get(k, Fraction(0)) + c * c2
                if any(acc.values()):
                    raise AssertionError(
                        f"d^2 != 0 on block r={r} d={d} weight={w} parity={par}"
                    )

    # -- ranks and homology ----------------------------------------------

    def _rank(self, key: BlockKey) -> int:
        cols = self.boundaries.get(key)
        if not cols:
            return 0
        target = (key[0] - 1,) + key[1:]
        nrows = len(self.blocks.get(target, []))
        if nrows == 0:
            return 0
        dense = [[col.get(i, Fraction(0)) for col in cols] for i in range(nrows)]
        return linalg.rank(dense)

    def homology_weights(self, r: int, d: int) -> dict[int, GDim]:
        """dim H_r at z-degree d, per h-weight, as an even/odd pair.

        Requires the incoming boundary block V_{r+1} to be complete;
        otherwise the rank of the image would be a lower bound only.
        """
        if not (self.is_complete(r, d) and self.is_complete(r + 1, d)):
            raise ValueError(f"block r={r}, d={d} is not complete at this truncation")
        out: dict[int, GDim] = {}
        weights = {w for (rr, dd, w, _p) in self.blocks if rr == r and dd == d}
        for w in sorted(weights):
            pair = [0, 0]
            for par in (0, 1):
                key = (r, d, w, par)
                dim = len(self.blocks.get(key, []))
                if dim == 0:
                    continue
                pair[par] = (
                    dim - self._rank(key) - self._rank((r + 1, d, w, par))
                )
            if pair[0] or pair[1]:
                out[w] = GDim(pair[0], pair[1])
        return out

    def isotypic_multiplicities(self, r: int, d: int) -> dict[int, GDim]:
        """Multiplicity of the irreducible of highest weight 2m in H_r.

        mult(2m) = dim(weight 2m) - dim(weight 2m + 2); all weights here
        are even, and a negative multiplicity signals a broken weight
        string, which is raised rather than returned.
        """
        ws = self.homology_weights(r, d)
        if any(w % 2 for w in ws):
            raise AssertionError(f"odd h-weight in H_{r} at z-degree {d}")
        top = max((w for w in ws), default=0)
        out: dict[int, GDim] = {}
        for w in range(0, top + 1, 2):
            m = ws.get(w, GDIM_ZERO) - ws.get(w + 2, GDIM_ZERO)
            if m.even < 0 or m.odd < 0:
                raise AssertionError(
                    f"negative multiplicity at weight {w} in H_{r}, z-degree {d}"
                )
            if m:
                out[w] = m
        return out

    # -- Euler characteristic cross-check --------------------------------

    def chain_character(self, d: int) -> RLaurent:
        """sum over r of (-1)^r char V_r at z-degree d, in t^(weight/2)."""
        if d > self.d_max or self.r_max < d:
            raise ValueError("chain column incomplete at this z-degree")
        acc: dict[int, GDim] = {}
        for (r, dd, w, par), mons in self.blocks.items():
            if dd != d:
                continue
            c = (-1) ** r * len(mons)
            g = GDim(c, 0) if par == 0 else GDim(0, c)
            acc[w // 2] = acc.get(w // 2, GDIM_ZERO) + g
        return RLaurent(acc)

    def euler_check(self, through: int | None = None) -> int:
        """Verify the chain Euler characteristic against the lambda product.

        For each z-degree d with a complete chain column, the alternating
        sum of chain characters must equal the z^d coefficient of the
        lambda-operation applied to [g] = a(z).adjoint + b(z), with a the
        algebra dimensions and b the Bs dimensions.  Returns the number of
        degrees checked; raises on the first mismatch.
        """
        if through is None:
            through = min(self.d_max, self.r_max)
        tag = self.tag
        order = through
        a = [GDIM_ZERO] * (order + 1)
        b = [GDIM_ZERO] * (order + 1)
        for n in range(1, order + 1):
            a[n] = tag.alg.dims[n]
            if n in tag.bs:
                b[n] = tag.bs[n].dim
        phi = phi_series(SuperSeries(order, a), SuperSeries(order, b))
        for d in range(0, through + 1):
            lhs = self.chain_character(d)
            if lhs != phi[d]:
                raise AssertionError(
                    f"Euler characteristic mismatch at z-degree {d}: "
                    f"chains give {lhs}, lambda gives {phi[d]}"
                )
        return through + 1


def build_chain_complex(tag: TagAlgebra, r_max: int, d_max: int) -> ChainComplex:
    return ChainComplex(tag, r_max, d_max)


@dataclass
class HomologyReport:
    """Homology of one TAG truncation: weights, multiplicities, flags."""

    d1: int
    d2: int
    r_max: int
    d_max: int
    # per (r, d) on complete blocks
    weights: dict[tuple[int, int], dict[int, GDim]] = field(default_factory=dict)
    multiplicities: dict[tuple[int, int], dict[int, GDim]] = field(default_factory=dict)
    incomplete: list[tuple[int, int]] = field(default_factory=list)
    euler_checked_through: int = -1

    def to_json_dict(self) -> dict:
        def gd(g: GDim) -> list[str]:
            return [str(g.even), str(g.odd)]

        return {
            "d1": self.d1,
            "d2": self.d2,
            "r_max": self.r_max,
            "d_max": self.d_max,
            "weights": {
                f"{r},{d}": {str(w): gd(g) for w, g in ws.items()}
                for (r, d), ws in sorted(self.weights.items())
            },
            "multiplicities": {
                f"{r},{d}": {str(w): gd(g) for w, g in ms.items()}
                for (r, d), ms in sorted(self.multiplicities.items())
            },
            "incomplete": [list(p) for p in sorted(self.incomplete)],
            "euler_checked_through": self.euler_checked_through,
        }


def compute_homology(tag: TagAlgebra, r_max: int, d_max: int) -> HomologyReport:
    """Full report: homology on complete (r, d) blocks plus the Euler gate."""
    cc = build_chain_complex(tag, r_max, d_max)
    report = HomologyReport(tag.alg.d1, tag.alg.d2, r_max, d_max)
    for r in range(0, r_max + 1):
        for d in range(0, d_max + 1):
            if not (cc.is_complete(r, d) and cc.is_complete(r + 1, d)):
                report.incomplete.append((r, d))
                continue
            ws = cc.homology_weights(r, d)
            if ws:
                report.weights[(r, d)] = ws
                report.multiplicities[(r, d)] = cc.isotypic_multiplicities(r, d)
    if r_max >= 1:
        report.euler_checked_through = min(d_max, r_max) + 1
        cc.euler_check(min(d_max, r_max))
    return report
