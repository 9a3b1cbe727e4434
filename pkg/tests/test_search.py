import itertools

import pytest
from hypothesis import given, settings, strategies as st

from multishelf import (
    canonical_form,
    canonical_form_set,
    certify_no_nonabelian,
    compatibility_graph,
    distributive_witness,
    enumerate_racks,
    is_invertible,
    make_table,
    relabel,
    right_trivial,
)
from multishelf.fixtures import BERMAN_SIGMA, BERMAN_TAU


class TestEnumerateRacks:
    def test_n1(self):
        assert len(enumerate_racks(1).racks) == 1

    def test_n2_exactly_two(self):
        catalog = enumerate_racks(2)
        assert set(catalog.racks) == {
            right_trivial(2),
            make_table(2, [[1, 1], [0, 0]]),
        }

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_pruned_matches_unpruned(self, n):
        pruned = enumerate_racks(n, use_pruning=True, bound=4)
        unpruned = enumerate_racks(n, use_pruning=False)
        assert pruned.racks == unpruned.racks

    def test_every_member_is_a_rack(self):
        for rack in enumerate_racks(3).racks:
            assert is_invertible(rack)
            assert distributive_witness(rack, rack) is None

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            enumerate_racks(5, use_pruning=False)

    def test_known_isomorphism_class_counts(self):
        # racks on 1..4 points up to relabeling: 1, 2, 6, 19
        assert [len(enumerate_racks(n).canonical) for n in (1, 2, 3, 4)] == [1, 2, 6, 19]


class TestCanonicalForm:
    def test_right_trivial_fixed(self):
        assert canonical_form(right_trivial(4)) == right_trivial(4)

    def test_swap_table_singleton_orbit(self):
        t = make_table(2, [[1, 1], [0, 0]])
        assert canonical_form(t) == t
        assert relabel(t, [1, 0]) == t

    @given(st.permutations(list(range(6))))
    @settings(max_examples=25, deadline=None)
    def test_constant_on_orbits(self, pi):
        assert canonical_form(relabel(BERMAN_TAU, pi)) == canonical_form(BERMAN_TAU)

    def test_idempotent(self):
        c = canonical_form(BERMAN_SIGMA)
        assert canonical_form(c) == c

    @given(st.permutations(list(range(3))), st.integers(0, 12))
    @settings(max_examples=60)
    def test_relabeling_a_rack_yields_a_rack(self, pi, idx):
        racks = enumerate_racks(3).racks
        r = relabel(racks[idx % len(racks)], pi)
        assert is_invertible(r)
        assert distributive_witness(r, r) is None

    def test_set_canonical_form(self):
        pair = (BERMAN_TAU, BERMAN_SIGMA)
        c = canonical_form_set(pair)
        for pi in itertools.islice(itertools.permutations(range(6)), 0, 120, 17):
            moved = tuple(relabel(op, pi) for op in pair)
            assert canonical_form_set(moved) == c


class TestCompatibilityGraph:
    def test_n2_complete(self):
        adj = compatibility_graph(enumerate_racks(2))
        assert adj == {0: [1], 1: [0]}

    def test_right_trivial_adjacent_to_all(self):
        catalog = enumerate_racks(3)
        ident_idx = catalog.racks.index(right_trivial(3))
        adj = compatibility_graph(catalog)
        assert len(adj[ident_idx]) == len(catalog.racks) - 1

    def test_berman_pair_mutually_compatible(self):
        assert distributive_witness(BERMAN_TAU, BERMAN_SIGMA) is None
        assert distributive_witness(BERMAN_SIGMA, BERMAN_TAU) is None


class TestCertify:
    def test_n2_commutative_only(self):
        report = certify_no_nonabelian(2)
        assert report.conclusion == "commutative-only"
        assert report.racks_found == 2

    def test_n3_commutative_only(self):
        report = certify_no_nonabelian(3)
        assert report.conclusion == "commutative-only"

    def test_n6_seeded_berman(self):
        report = certify_no_nonabelian(6, seed_pair=(BERMAN_TAU, BERMAN_SIGMA))
        assert report.conclusion == "nonabelian-found"
        assert report.nonabelian_groups[0]["closure_order"] == 6
        assert report.seeded

    def test_budget_zero_reports_partial(self):
        report = certify_no_nonabelian(3, budget=0.0)
        assert report.conclusion == "partial"

    def test_report_document_excludes_timing_by_default(self):
        doc = certify_no_nonabelian(2).to_document()
        assert "wall_time_s" not in doc["statistics"]
        assert "wall_time_s" in certify_no_nonabelian(2).to_document(include_timing=True)["statistics"]

    def test_report_document_deterministic(self):
        import json

        a = json.dumps(certify_no_nonabelian(3).to_document(), sort_keys=True)
        b = json.dumps(certify_no_nonabelian(3).to_document(), sort_keys=True)
        assert a == b
