import json
import os

import numpy as np
import pytest

from minklab.lattice import (CAUSAL, CHRONOLOGICAL, GALILEI, IntegerGrid,
                             Region, backend_name, complement, completion,
                             covering_counterexample, de_morgan_check,
                             diamond, distributivity_counterexample,
                             fig2_counterexample, galilei_chron_complement,
                             is_complete, join, lattice_property_suite, meet,
                             modularity_counterexample,
                             orthomodularity_check, random_region,
                             region_from_json, region_to_json, region_to_pbm)
from minklab.lattice import _kernels_py
from minklab.lattice.engine import _kernels


@pytest.fixture(scope="module")
def grid():
    return IntegerGrid.centered(21, 21)


@pytest.fixture(scope="module")
def grid41():
    return IntegerGrid.centered(41, 41)


@pytest.fixture(scope="module")
def grid3d():
    return IntegerGrid.centered(9, 9, 9)


class TestGridAndRegion:
    def test_coords_lexicographic(self, grid):
        assert grid.size == 441
        assert tuple(grid.coords[0]) == (-10, -10)
        assert tuple(grid.coords[-1]) == (10, 10)
        assert grid.index_of((0, 0)) == grid.size // 2

    def test_interval_exact(self, grid):
        assert grid.interval2((3, 1), (0, 0)) == 8
        assert grid.interval2((1, 1), (0, 0)) == 0
        assert grid.interval2((0, 5), (0, 0)) == -25

    def test_set_algebra(self, grid):
        a = Region.from_points(grid, [(0, 0), (1, 1)])
        b = Region.from_points(grid, [(1, 1), (2, 2)])
        assert (a & b).points() == [(1, 1)]
        assert (a | b).count == 3
        assert (a - b).points() == [(0, 0)]
        assert a <= (a | b)

    def test_near_boundary(self, grid):
        inner_r = Region.from_points(grid, [(0, 0)])
        edge_r = Region.from_points(grid, [(10, 0)])
        assert not inner_r.near_boundary()
        assert edge_r.near_boundary()

    def test_grid_mismatch_rejected(self, grid):
        other = IntegerGrid.centered(13, 13)
        with pytest.raises(ValueError):
            Region.empty(grid) & Region.empty(other)


class TestKernels:
    """Every accelerated path must be bit-identical to the brute-force oracle."""

    @pytest.mark.parametrize("mode_code", [0, 1, 2])
    def test_backends_match_bruteforce(self, grid, mode_code, rng):
        mode = (CAUSAL, CHRONOLOGICAL, GALILEI)[mode_code]
        for _ in range(100):
            mask = rng.random(grid.size) < float(rng.uniform(0.02, 0.5))
            brute = _kernels_py.complement_mask_bruteforce(grid.coords, mask, mode_code)
            sel = grid.coords[mask]
            numpy_out = _kernels_py.complement_mask(grid.coords, sel, mode_code)
            fast_out = _kernels.complement_mask(grid.coords, sel, mode_code)
            table_out = complement(Region(grid, mask), mode).mask
            assert np.array_equal(brute, numpy_out)
            assert np.array_equal(brute, fast_out)
            assert np.array_equal(brute, table_out)

    def test_backends_match_on_41(self, grid41, rng):
        for i in range(100):
            mask = rng.random(grid41.size) < float(rng.uniform(0.02, 0.3))
            code = i % 3
            mode = (CAUSAL, CHRONOLOGICAL, GALILEI)[code]
            brute = _kernels_py.complement_mask_bruteforce(grid41.coords, mask, code)
            sel = grid41.coords[mask]
            assert np.array_equal(brute, _kernels.complement_mask(grid41.coords, sel, code))
            assert np.array_equal(brute, complement(Region(grid41, mask), mode).mask)

    def test_thread_count_does_not_change_bits(self, grid41, rng):
        region = random_region(grid41, rng)
        base = complement(region, CAUSAL)
        os.environ["MINKLAB_THREADS"] = "5"
        try:
            threaded = complement(region, CAUSAL)
        finally:
            os.environ.pop("MINKLAB_THREADS")
        assert base == threaded

    def test_backend_name(self):
        assert backend_name() in ("compiled", "python")


class TestComplement:
    def test_empty_gives_full(self, grid):
        for mode in (CAUSAL, CHRONOLOGICAL):
            assert complement(Region.empty(grid), mode) == Region.full(grid)

    def test_single_point_causal(self, grid):
        got = complement(Region.from_points(grid, [(0, 0)]), CAUSAL)
        # strictly spacelike events only
        expect = Region(grid, grid.coords[:, 0] ** 2 - grid.coords[:, 1] ** 2 < 0)
        assert got == expect

    def test_single_point_chronological(self, grid):
        got = complement(Region.from_points(grid, [(0, 0)]), CHRONOLOGICAL)
        interval = grid.coords[:, 0] ** 2 - grid.coords[:, 1] ** 2
        on_point = (grid.coords == 0).all(axis=1)
        expect = Region(grid, (interval <= 0) & ~on_point)
        assert got == expect
        # lightlike-separated events are inside now
        assert got.mask[grid.index_of((1, 1))]

    def test_causally_disjoint_implies_disjoint(self, grid, rng):
        s = random_region(grid, rng)
        assert (complement(s, CAUSAL) & s).is_empty
        # converse fails: disjoint sets need not be causally disjoint
        a = Region.from_points(grid, [(0, 0)])
        b = Region.from_points(grid, [(2, 0)])
        assert (a & b).is_empty
        assert not (complement(a, CAUSAL) & b) == b


class TestCompletionLaws:
    @pytest.mark.parametrize("mode", [CAUSAL, CHRONOLOGICAL])
    def test_complete_region_is_fixed_point(self, grid, mode, rng):
        s = completion(random_region(grid, rng), mode)
        assert completion(s, mode) == s

    @pytest.mark.parametrize("mode", [CAUSAL, CHRONOLOGICAL])
    def test_triple_complement(self, grid, mode, rng):
        for _ in range(25):
            s = random_region(grid, rng)
            sc = complement(s, mode)
            assert complement(completion(s, mode), mode) == sc

    @pytest.mark.parametrize("mode", [CAUSAL, CHRONOLOGICAL])
    def test_monotonicity(self, grid, mode, rng):
        for _ in range(25):
            s2 = random_region(grid, rng)
            sub_mask = s2.mask & (rng.random(grid.size) < 0.5)
            s1 = Region(grid, sub_mask)
            assert complement(s2, mode) <= complement(s1, mode)
            assert completion(s1, mode) <= completion(s2, mode)

    def test_completion_contains_region(self, grid, rng):
        for mode in (CAUSAL, CHRONOLOGICAL):
            s = random_region(grid, rng)
            assert s <= completion(s, mode)

    def test_smallest_complete_superset(self, grid, rng):
        # any complete K between S and S'' must be S'' itself
        for _ in range(10):
            s = random_region(grid, rng, density=0.05)
            scc = completion(s, CAUSAL)
            grew = scc - s
            if grew.is_empty:
                continue
            probe_mask = s.mask | (grew.mask & (rng.random(grid.size) < 0.5))
            k = Region(grid, probe_mask)
            if is_complete(k, CAUSAL) and k <= scc:
                assert k == scc


class TestDiamonds:
    def test_degenerate_point(self, grid):
        p = (0, 0)
        assert diamond(grid, p, p, closed=True).points() == [p]
        assert diamond(grid, p, p, closed=False).is_empty

    def test_closed_diamond_complete_both_modes(self, grid):
        d = diamond(grid, (0, 0), (4, 0), closed=True)
        assert is_complete(d, CAUSAL)
        assert is_complete(d, CHRONOLOGICAL)

    def test_open_diamond_complete_only_causal(self, grid):
        d = diamond(grid, (-6, 0), (6, 0), closed=False)
        assert is_complete(d, CAUSAL)
        # the non-timelike mode adds no grid cells back here either; the
        # continuum distinction shows up through the joins instead
        assert d.count == 61

    def test_join_of_timelike_points_is_closed_diamond(self, grid):
        p, q = (0, 0), (4, 0)
        jp = join(Region.from_points(grid, [p]), Region.from_points(grid, [q]), CAUSAL)
        assert jp == diamond(grid, p, q, closed=True)

    def test_join_chronological_drops_equator(self, grid):
        p, q = (0, 0), (4, 0)
        jp = join(Region.from_points(grid, [p]), Region.from_points(grid, [q]),
                  CHRONOLOGICAL)
        closed = diamond(grid, p, q, closed=True)
        corners = Region.from_points(grid, [(2, 2), (2, -2)])
        assert jp == closed - corners

    def test_argument_order_irrelevant(self, grid):
        assert diamond(grid, (4, 0), (0, 0), closed=True) == \
            diamond(grid, (0, 0), (4, 0), closed=True)


class TestMeetJoinDeMorgan:
    @pytest.mark.parametrize("mode", [CAUSAL, CHRONOLOGICAL])
    def test_meet_join_complete(self, grid, mode, rng):
        for _ in range(10):
            a = completion(random_region(grid, rng), mode)
            b = completion(random_region(grid, rng), mode)
            m = meet(a, b, mode)
            j = join(a, b, mode)
            assert is_complete(m, mode) and is_complete(j, mode)
            assert m <= a and m <= b and a <= j and b <= j

    def test_join_empty_is_completion(self, grid, rng):
        s = random_region(grid, rng)
        sc = completion(s, CAUSAL)
        assert join(Region.empty(grid), sc, CAUSAL) == sc

    def test_meet_of_disjoint_diamonds(self, grid):
        d1 = diamond(grid, (-8, -6), (-4, -6), closed=True)
        d2 = diamond(grid, (4, 6), (8, 6), closed=True)
        assert meet(d1, d2, CAUSAL).is_empty

    @pytest.mark.parametrize("mode", [CAUSAL, CHRONOLOGICAL])
    def test_de_morgan(self, grid, mode, rng):
        pairs = [(completion(random_region(grid, rng), mode),
                  completion(random_region(grid, rng), mode))
                 for _ in range(20)]
        assert de_morgan_check(pairs, mode) == []

    def test_self_complement_pair(self, grid, rng):
        s = completion(random_region(grid, rng), CAUSAL)
        sc = complement(s, CAUSAL)
        assert meet(s, sc, CAUSAL) == Region.empty(grid)
        assert join(s, sc, CAUSAL) == Region.full(grid)


class TestOrthomodularity:
    def test_trivial_equal_case(self, grid, rng):
        a = completion(random_region(grid, rng), CAUSAL)
        got = orthomodularity_check(a, a, CAUSAL)
        assert got["holds"] and got["witness"].is_empty

    def test_fig2_fails_causal(self, grid41):
        fig = fig2_counterexample(grid41)
        assert not fig["holds"]
        assert fig["witness"].count > 0
        # witness sits inside the wedge, outside the small diamond
        assert fig["witness"] <= fig["b"]
        assert (fig["witness"] & fig["a"]).is_empty

    def test_fig2_join_exceeds_union(self, grid41):
        fig = fig2_counterexample(grid41)
        union = fig["a"] | fig["bprime"]
        assert union <= fig["join_a_bprime"]
        assert fig["join_a_bprime"].count > union.count

    def test_fig2_regions_causally_disjoint(self, grid41):
        fig = fig2_counterexample(grid41)
        assert fig["a"] <= complement(fig["bprime"], CAUSAL)

    def test_fig2_resolution_doubling(self):
        fig = fig2_counterexample(IntegerGrid.centered(81, 81))
        assert not fig["holds"] and fig["witness"].count > 0

    def test_fig2_chron_analogue_holds(self, grid41):
        fig = fig2_counterexample(grid41)
        assert fig["chron_analogue_holds"] is True

    def test_grid_too_small_rejected(self):
        with pytest.raises(ValueError):
            fig2_counterexample(IntegerGrid.centered(15, 15))

    def test_requires_complete_inputs(self, grid):
        ragged = Region.from_points(grid, [(0, 0), (3, 0)])
        with pytest.raises(ValueError):
            orthomodularity_check(ragged, Region.full(grid), CAUSAL)


class TestPropertySuite:
    @pytest.mark.parametrize("mode", [CAUSAL, CHRONOLOGICAL])
    def test_laws_and_counterexamples(self, grid, mode):
        rep = lattice_property_suite(grid, mode, seed=11, n_regions=25)
        assert rep["failures"] == []
        assert rep["atom_complete"]
        assert rep["covering"]["intermediate"] is not None
        assert rep["covering"]["join_is_expected_diamond"]
        assert rep["modularity"] is not None
        assert rep["distributivity"] is not None

    def test_covering_intermediate_is_strict(self, grid):
        got = covering_counterexample(grid, (0, 0), (4, 0), CAUSAL)
        k = got["intermediate"]
        atom = Region.from_points(grid, [(0, 0)])
        dia = diamond(grid, (0, 0), (4, 0), closed=True)
        assert atom <= k and k <= dia and k != atom and k != dia
        assert is_complete(k, CAUSAL)

    def test_modularity_counterexample_verified(self, grid):
        got = modularity_counterexample(grid, CAUSAL, seed=2)
        assert got is not None
        a, b, c = got["a"], got["b"], got["c"]
        assert a <= b
        assert join(a, meet(b, c, CAUSAL), CAUSAL) != meet(b, join(a, c, CAUSAL), CAUSAL)

    def test_distributivity_counterexample_verified(self, grid):
        got = distributivity_counterexample(grid, CAUSAL, seed=2)
        assert got is not None
        assert got["lhs"] != got["rhs"]


class TestGalilei:
    def test_point_complement_is_slice_minus_point(self, grid):
        p = Region.from_points(grid, [(0, 3)])
        got = galilei_chron_complement(p)
        slice0 = Region(grid, grid.coords[:, 0] == 0)
        assert got == slice0 - p

    def test_one_slice_subset_complete(self, grid):
        s = Region.from_points(grid, [(2, -5), (2, 0), (2, 7)])
        assert completion(s, GALILEI) == s

    def test_multi_slice_completion_is_full(self, grid):
        s = Region.from_points(grid, [(0, 0), (1, 3)])
        assert complement(s, GALILEI).is_empty
        assert completion(s, GALILEI) == Region.full(grid)

    def test_distributive_within_slice(self, grid, rng):
        slice_mask = grid.coords[:, 0] == 0
        for _ in range(20):
            tri = []
            for _ in range(3):
                m = slice_mask & (rng.random(grid.size) < 0.4)
                tri.append(Region(grid, m))
            a, b, c = tri
            lhs = meet(a, join(b, c, GALILEI), GALILEI)
            rhs = join(meet(a, b, GALILEI), meet(a, c, GALILEI), GALILEI)
            assert lhs == rhs


class TestThreeDimensional:
    def test_laws_on_3d_grid(self, grid3d, rng):
        for mode in (CAUSAL, CHRONOLOGICAL):
            for _ in range(5):
                s = random_region(grid3d, rng)
                sc = complement(s, mode)
                assert complement(completion(s, mode), mode) == sc
                assert completion(sc, mode) == sc

    def test_3d_kernel_identity(self, grid3d, rng):
        mask = rng.random(grid3d.size) < 0.05
        brute = _kernels_py.complement_mask_bruteforce(grid3d.coords, mask, 0)
        assert np.array_equal(
            brute, _kernels.complement_mask(grid3d.coords, grid3d.coords[mask], 0))


class TestExport:
    def test_json_round_trip(self, grid, rng):
        s = random_region(grid, rng)
        doc = region_to_json(s)
        back = region_from_json(doc)
        assert back.grid.extents == grid.extents
        assert back == Region(back.grid, s.mask)

    def test_json_schema_fields(self, grid):
        s = Region.from_points(grid, [(0, -1), (0, 0), (0, 1), (2, 5)])
        doc = json.loads(region_to_json(s))
        assert doc["schema_version"] == 1
        assert doc["dim"] == 2
        assert doc["extents"] == [[-10, 10], [-10, 10]]
        assert [[0], [-1, 3]] in doc["rows"]  # run of three cells at t=0
        assert [[2], [5, 1]] in doc["rows"]

    def test_pbm_shape(self, grid):
        s = Region.from_points(grid, [(0, 0)])
        pbm = region_to_pbm(s).splitlines()
        assert pbm[0] == "P1"
        assert pbm[1] == "21 21"
        assert len(pbm) == 2 + 21
        assert pbm[2 + 10].split()[10] == "1"

    def test_pbm_rejects_3d(self, grid3d):
        with pytest.raises(ValueError):
            region_to_pbm(Region.empty(grid3d))

    def test_json_round_trip_3d(self, grid3d, rng):
        s = random_region(grid3d, rng, density=0.1)
        assert region_from_json(region_to_json(s)) == Region(grid3d, s.mask)


class TestBackendDispatch:
    def test_forced_fallback_matches_compiled(self, grid, rng):
        region = random_region(grid, rng)
        default = complement(region, CAUSAL)
        os.environ["MINKLAB_FORCE_PY_KERNELS"] = "1"
        try:
            assert backend_name() == "python"
            forced = complement(region, CAUSAL)
        finally:
            os.environ.pop("MINKLAB_FORCE_PY_KERNELS")
        assert default == forced

    def test_large_grid_skips_relation_table(self):
        big = IntegerGrid.centered(101, 101)
        assert big.relation_matrix(0) is None
        small = IntegerGrid.centered(13, 13)
        rel = small.relation_matrix(1)
        assert rel.shape == (small.size, small.size)
        assert rel is small.relation_matrix(1)  # cached
