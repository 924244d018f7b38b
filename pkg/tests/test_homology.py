import pytest

from freejordan.homology import build_chain_complex, compute_homology
from freejordan.jordan import build_free_jordan
from freejordan.rings import GDim
from freejordan.tag import build_tag


def tag_for(d1, d2, n):
    return build_tag(build_free_jordan(d1, d2, n), n)


class TestChainComplex:
    def test_h0_is_the_ground_field(self):
        cc = build_chain_complex(tag_for(0, 1, 3), 3, 3)
        assert cc.homology_weights(0, 0) == {0: GDim(1, 0)}

    def test_symmetric_square_block(self):
        # For one odd generator: g_odd = sl2 (x) y (3 elements, z-degree 1),
        # g_even = {y(x)y} (z-degree 2).  V_2 at z-degree 2 is S^2 of the
        # odd part: 6 monomials, no exterior contribution.
        cc = build_chain_complex(tag_for(0, 1, 4), 4, 4)
        dims = cc.block_dim(2, 2)
        assert sum(dims.values()) == 6
        assert all(par == 0 for (_w, par) in dims)

    def test_d_squared_gate_runs(self):
        # construction asserts d^2 = 0 on every block
        build_chain_complex(tag_for(0, 1, 6), 4, 6)
        build_chain_complex(tag_for(1, 1, 4), 4, 4)

    def test_boundary_preserves_grading(self):
        cc = build_chain_complex(tag_for(1, 1, 3), 3, 3)
        for key, mons in cc.blocks.items():
            for mon in mons:
                for m2 in cc.boundary_monomial(mon):
                    assert cc.block_key(m2) == (key[0] - 1,) + key[1:]

    def test_completeness_horizon(self):
        cc = build_chain_complex(tag_for(0, 1, 5), 3, 5)
        assert cc.is_complete(3, 5)
        assert not cc.is_complete(4, 5)  # r_max cut
        assert cc.is_complete(6, 5)  # empty: every factor has z-degree >= 1
        with pytest.raises(ValueError):
            cc.homology_weights(3, 4)  # incoming V_4 incomplete

    def test_depth_guard(self):
        with pytest.raises(ValueError):
            build_chain_complex(tag_for(0, 1, 3), 2, 4)


class TestHomologyValues:
    def test_one_odd_generator_pattern(self):
        """H_r sits at z-degree r, alternating parity, isotypic of highest
        weight 2r — the hand-checkable case."""
        rep = compute_homology(tag_for(0, 1, 6), 6, 6)
        for r in range(0, 7):
            blocks = {d: ws for (rr, d), ws in rep.weights.items() if rr == r}
            assert list(blocks) == [r]
            mult = rep.multiplicities[(r, r)]
            expect = GDim(1, 0) if r % 2 == 0 else GDim(0, 1)
            assert mult == {2 * r: expect}

    def test_h1_detects_generators(self):
        # H_1 = sl2 (x) (degree-1 part), nothing at higher z-degree.
        rep = compute_homology(tag_for(1, 1, 4), 4, 4)
        assert rep.multiplicities[(1, 1)] == {2: GDim(1, 1)}
        for d in range(2, 5):
            assert (1, d) not in rep.weights

    def test_h2_has_no_trivial_or_adjoint_part(self):
        for d1, d2, n in [(0, 1, 5), (1, 1, 5)]:
            rep = compute_homology(tag_for(d1, d2, n), 5, 5)
            for (r, d), mult in rep.multiplicities.items():
                if r == 2:
                    assert 0 not in mult and 2 not in mult, (d1, d2, r, d)
                    assert set(mult) <= {4}, "L(4)-isotypic"

    def test_euler_characteristic(self):
        cc = build_chain_complex(tag_for(1, 1, 5), 5, 5)
        assert cc.euler_check() == 6

    def test_euler_needs_complete_columns(self):
        cc = build_chain_complex(tag_for(1, 1, 4), 2, 4)
        with pytest.raises(ValueError):
            cc.chain_character(3)

    def test_report_serializes(self):
        import json

        rep = compute_homology(tag_for(0, 1, 4), 3, 4)
        payload = rep.to_json_dict()
        assert json.loads(json.dumps(payload)) == payload
        assert payload["weights"]["0,0"] == {"0": ["1", "0"]}

    def test_incomplete_blocks_flagged(self):
        rep = compute_homology(tag_for(0, 1, 5), 3, 5)
        assert (3, 4) in rep.incomplete
        assert (3, 5) in rep.incomplete
        assert (3, 3) in rep.weights
