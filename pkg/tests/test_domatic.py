"""Family validation and the d_R^k / d_k solvers."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_graphs, bipartite, complete, cycle, empty, gnp, path
from rkdom import (Family, GuardError, d_k_exact, d_rk_exact, d_rk_oracle,
                   gamma_kr_exact, validate_family, validate_partition,
                   weight)


class TestValidateFamily:
    def test_constant_pair_on_trivial_graph(self):
        fam = [(1,), (2,)]
        assert validate_family(complete(1), 2, fam) == []

    def test_duplicate_function(self):
        f = (1, 1)
        vs = validate_family(complete(2), 2, [f, f])
        assert [v.kind for v in vs] == ["duplicate-function"]
        assert vs[0].member == 1

    def test_rotation_family_on_k3(self):
        members = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
        assert validate_family(complete(3), 1, members) == []
        for v in range(3):
            assert sum(f[v] for f in members) == 2

    def test_capacity_exceeded(self):
        vs = validate_family(complete(2), 1, [(2, 0), (2, 1)])
        kinds = {v.kind for v in vs}
        assert "capacity-exceeded" in kinds
        bad = next(v for v in vs if v.kind == "capacity-exceeded")
        assert bad.vertex == 0

    def test_member_rkdf_failure_carries_index(self):
        vs = validate_family(complete(3), 1, [(0, 0, 2), (0, 1, 0)])
        assert any(v.member == 1 and v.kind == "zero-vertex-undercovered"
                   for v in vs)

    def test_structural_failure_aborts_family_checks(self):
        vs = validate_family(complete(3), 1, [(0, 2), (0, 2)])
        assert all(v.kind == "length-mismatch" for v in vs)

    def test_accepts_family_objects(self):
        fam = Family(((2, 0), (0, 2)), 1)
        assert validate_family(complete(2), 1, fam) == []


class TestDrkOracle:
    @pytest.mark.parametrize("g,k,expect", [
        (complete(2), 1, 2),
        (complete(1), 1, 1),
        (complete(4), 2, 4),
        (complete(3), 2, 3),
    ])
    def test_examples(self, g, k, expect):
        assert d_rk_oracle(g, k) == expect

    def test_guards(self):
        with pytest.raises(GuardError):
            d_rk_oracle(empty(7), 1)
        with pytest.raises(GuardError):
            d_rk_oracle(empty(2), 4)


class TestDrkExact:
    @pytest.mark.parametrize("g,k,expect", [
        (complete(3), 1, 3),
        (empty(4), 1, 1),
        (complete(1), 2, 2),
        (empty(2), 4, 4),          # 2^n functions once k >= 2^n
        (cycle(4), 1, 2),
        (complete(4), 2, 4),
        (complete(3), 2, 3),
        (bipartite(3, 3), 1, 3),
    ])
    def test_examples(self, g, k, expect):
        assert d_rk_exact(g, k).value == expect

    def test_witness_certifies(self):
        for g in (cycle(5), complete(5), gnp(6, 0.5, 4), bipartite(2, 3)):
            for k in (1, 2):
                res = d_rk_exact(g, k)
                fam = res.witness
                assert isinstance(fam, Family)
                assert len(fam) == res.value
                assert validate_family(g, k, fam) == []

    def test_agrees_with_oracle_exhaustive_small(self):
        for n in (1, 2, 3, 4):
            for g in all_graphs(n):
                for k in (1, 2, 3):
                    assert d_rk_exact(g, k).value == d_rk_oracle(g, k)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(4, 5), st.integers(0, 2 ** 32 - 1),
           st.integers(1, 2), st.sampled_from([0.3, 0.5, 0.7]))
    def test_agrees_with_oracle_random(self, n, seed, k, prob):
        g = gnp(n, prob, seed)
        assert d_rk_exact(g, k).value == d_rk_oracle(g, k)

    def test_always_at_least_one_and_two_for_k2(self):
        for g in (empty(3), path(4), cycle(5)):
            assert d_rk_exact(g, 1).value >= 1
            assert d_rk_exact(g, 2).value >= 2

    def test_product_bound(self):
        for g in (cycle(6), gnp(7, 0.5, 8), complete(6)):
            for k in (1, 2):
                gkr = gamma_kr_exact(g, k).value
                drk = d_rk_exact(g, k).value
                assert gkr * drk <= 2 * k * g.n

    def test_product_equality_forces_uniform_families(self):
        # K_n at k=1 attains gamma_kr * d_rk = 2n; check the witness shape.
        g = complete(4)
        res = d_rk_exact(g, 1)
        gkr = gamma_kr_exact(g, 1).value
        assert gkr * res.value == 2 * g.n
        for f in res.witness:
            assert weight(f) == gkr
        for v in range(g.n):
            assert sum(f[v] for f in res.witness) == 2

    def test_guards(self):
        with pytest.raises(GuardError):
            d_rk_exact(empty(9), 1)
        with pytest.raises(GuardError):
            d_rk_exact(empty(2), 5)
        assert d_rk_exact(empty(9), 1, max_n=9).value == 1

    def test_deterministic_reruns(self):
        g = gnp(6, 0.5, 21)
        a = d_rk_exact(g, 2)
        b = d_rk_exact(g, 2)
        assert (a.value, a.witness, a.nodes_explored) == \
               (b.value, b.witness, b.nodes_explored)

    def test_witness_matches_plain_branch_and_bound(self):
        # reference semantics: include-first DFS over the (weight, values)
        # sorted pool, updating on strict improvement, no other pruning;
        # the witness is the family that sets the final optimum
        from rkdom import enumerate_rkdfs

        def reference(g, k):
            pool = sorted(enumerate_rkdfs(g, k).labelings,
                          key=lambda f: (sum(f), f))
            best = -1
            best_members = None

            def rec(idx, rescap, chosen):
                nonlocal best, best_members
                if len(chosen) > best:
                    best = len(chosen)
                    best_members = tuple(chosen)
                for i in range(idx, len(pool)):
                    c = pool[i]
                    if all(rescap[v] >= c[v] for v in range(g.n)):
                        rec(i + 1, [rescap[v] - c[v] for v in range(g.n)],
                            chosen + [c])

            rec(0, [2 * k] * g.n, [])
            return best, best_members

        corpus = list(all_graphs(3)) + [cycle(4), path(4), gnp(5, 0.5, 31)]
        for g in corpus:
            for k in (1, 2):
                value, members = reference(g, k)
                res = d_rk_exact(g, k)
                assert res.value == value, (g.label, k)
                assert res.witness.members == members, (g.label, k)


class TestDkExact:
    @pytest.mark.parametrize("g,k,expect", [
        (complete(4), 1, 4),
        (empty(5), 1, 1),
        (empty(3), 2, 1),
        (complete(5), 2, 2),
        (cycle(4), 1, 2),
    ])
    def test_examples(self, g, k, expect):
        assert d_k_exact(g, k).value == expect

    def test_witness_is_valid_partition(self):
        for g in (complete(5), cycle(6), gnp(7, 0.6, 13), path(5)):
            for k in (1, 2):
                res = d_k_exact(g, k)
                assert len(res.witness) == res.value
                assert validate_partition(g, k, res.witness) == []

    def test_brute_force_agreement(self):
        # independent check: maximize block count over all set partitions
        from itertools import product as iproduct
        from rkdom import is_k_dominating

        def brute(g, k):
            best = 1
            n = g.n
            for colors in iproduct(range(n), repeat=n):
                used = sorted(set(colors))
                if used != list(range(len(used))):
                    continue
                blocks = [[v for v in range(n) if colors[v] == c]
                          for c in used]
                if all(is_k_dominating(g, k, b) for b in blocks):
                    best = max(best, len(blocks))
            return best

        for g in all_graphs(4):
            for k in (1, 2):
                assert d_k_exact(g, k).value == brute(g, k)

    def test_at_most_d_rk(self):
        for g in (complete(4), cycle(5), gnp(6, 0.5, 17), empty(4)):
            for k in (1, 2):
                assert d_k_exact(g, k).value <= d_rk_exact(g, k).value

    def test_guard(self):
        with pytest.raises(GuardError):
            d_k_exact(empty(11), 1)


class TestPartitionValidator:
    def test_detects_overlap_and_gap(self):
        g = complete(3)
        assert validate_partition(g, 1, [(0, 1), (1, 2)]) != []
        assert validate_partition(g, 1, [(0, 1)]) != []
        assert validate_partition(g, 1, [(0, 1), (2,)]) == []


class TestFamilySerialization:
    def test_roundtrip(self):
        from rkdom import family_from_lines, family_to_lines
        fam = Family(((2, 0, 0), (0, 2, 0), (0, 0, 2)), 1)
        text = family_to_lines(fam)
        assert text == "200\n020\n002\n"
        assert family_from_lines(text, 1) == fam

    def test_rejects_bad_input(self):
        from rkdom import family_from_lines
        with pytest.raises(ValueError):
            family_from_lines("", 1)
        with pytest.raises(ValueError):
            family_from_lines("20\n020\n", 1)
