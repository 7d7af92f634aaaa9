from __future__ import annotations

import random

import pytest

import oracles
from treeabel import (
    chi_form_semistable_at,
    enumerate_quasistable,
    enumerate_semistable,
    is_quasistable,
    is_semistable,
    is_semistable_at,
    polarization,
)


def sample_multidegrees(tree, d, count, rng):
    """Deterministic sample of total-degree-d multidegrees near the box."""
    genus_map, edges = oracles.tree_data(tree)
    box = oracles.degree_box(genus_map, edges, d, margin=1)
    ids = tree.ids
    out = []
    for _ in range(count):
        values = [rng.choice(list(box[cid])) for cid in ids[:-1]]
        values.append(d - sum(values))
        out.append(tree.multidegree(tuple(values)))
    return out


class TestSemistableAt:
    def test_boundary_case_holds(self, two22):
        md = two22.multidegree((1, 0))
        assert is_semistable_at(two22, md, two22.subcurve(["C2"]))

    def test_zero_multidegree_everywhere(self, chain111):
        md = chain111.zero_multidegree()
        for sub in chain111.connected_subcurves:
            assert is_semistable_at(chain111, md, sub)

    def test_violation_detected(self, two22):
        md = two22.multidegree((2, -1))
        assert not is_semistable_at(two22, md, two22.subcurve(["C2"]))

    def test_improper_subcurve_rejected(self, two22):
        with pytest.raises(ValueError):
            is_semistable_at(two22, two22.multidegree((1, 0)), two22.full)

    def test_complement_symmetry_on_examples(self, two22, chain111):
        rng = random.Random(5)
        for tree in (two22, chain111):
            for d in range(0, 4):
                for md in sample_multidegrees(tree, d, 20, rng):
                    for sub in tree.connected_subcurves:
                        assert is_semistable_at(tree, md, sub) == is_semistable_at(
                            tree, md, tree.complement(sub)
                        )


class TestVerdict:
    def test_degree_one_set(self, two22):
        assert is_semistable(two22, two22.multidegree((1, 0))).semistable
        assert is_semistable(two22, two22.multidegree((0, 1))).semistable

    def test_zero_multidegree_semistable(self, star):
        assert is_semistable(star, star.zero_multidegree()).semistable

    def test_witness_names_failing_subcurve(self, two22):
        verdict = is_semistable(two22, two22.multidegree((3, -2)))
        assert not verdict.semistable
        failing = [two22.members(sub) for sub, _ in verdict.witnesses]
        assert ("C2",) in failing

    def test_witnesses_iff_unstable(self, corpus500):
        rng = random.Random(11)
        for tree in corpus500[:30]:
            for md in sample_multidegrees(tree, 2, 10, rng):
                verdict = is_semistable(tree, md)
                assert verdict.semistable == (not verdict.witnesses)


class TestQuasistable:
    def test_degree_one_unit_is_quasistable(self, two22):
        assert is_quasistable(two22, two22.multidegree((1, 0)), "C1")
        assert not is_quasistable(two22, two22.multidegree((0, 1)), "C1")

    def test_balanced_degree_two(self, two22):
        assert is_quasistable(two22, two22.multidegree((1, 1)), "C1")

    def test_zero_multidegree(self, chain111):
        for cid in chain111.ids:
            assert is_quasistable(chain111, chain111.zero_multidegree(), cid)

    def test_unknown_component(self, two22):
        with pytest.raises(KeyError):
            is_quasistable(two22, two22.multidegree((1, 0)), "C9")


class TestChiForm:
    def test_degree_g_minus_one_boundary(self, two22):
        pol = polarization(two22, two22.genus - 1)
        assert pol.rank == 1
        assert pol.degree_on(two22.subcurve(["C2"])) == 0
        md = two22.multidegree((2, 1))
        assert chi_form_semistable_at(two22, md, two22.subcurve(["C2"]))

    def test_degree_one_boundary(self, two22):
        pol = polarization(two22, 1)
        assert pol.rank == 2 * two22.genus - 2 == 6
        assert pol.degree_on(two22.subcurve(["C2"])) == 2 * 3
        md = two22.multidegree((1, 0))
        assert chi_form_semistable_at(two22, md, two22.subcurve(["C2"]))

    def test_zero_multidegree(self, chain111):
        md = chain111.zero_multidegree()
        for sub in chain111.connected_subcurves:
            assert chi_form_semistable_at(chain111, md, sub)

    def test_two_sided_failure_detected(self, chain111):
        # fails the upper bound at {C1, C2} even though the lower bound holds
        md = chain111.multidegree((1, 1, -1))
        sub = chain111.subcurve(["C1", "C2"])
        assert not is_semistable_at(chain111, md, sub)
        assert not chi_form_semistable_at(chain111, md, sub)

    def test_matches_inequality_form_exactly(self, corpus500):
        rng = random.Random(23)
        for tree in corpus500[:60]:
            for d in (0, 1, tree.genus - 1, tree.genus):
                for md in sample_multidegrees(tree, d, 8, rng):
                    for sub in tree.connected_subcurves:
                        assert is_semistable_at(tree, md, sub) == chi_form_semistable_at(
                            tree, md, sub
                        )


class TestEnumerate:
    def test_degree_one(self, two22):
        got = [md.degrees for md in enumerate_semistable(two22, 1)]
        assert got == [(0, 1), (1, 0)]

    def test_degree_two_matches_oracle(self, two22):
        genus_map, edges = oracles.tree_data(two22)
        expected = oracles.enumerate_semistable_bruteforce(genus_map, edges, 2)
        got = [two22.multidegree_as_dict(md) for md in enumerate_semistable(two22, 2)]
        assert got == expected == [{"C1": 1, "C2": 1}]

    def test_chain_degree_zero_contains_zero_vector(self, chain111):
        got = enumerate_semistable(chain111, 0)
        assert chain111.zero_multidegree() in got
        genus_map, edges = oracles.tree_data(chain111)
        expected = oracles.enumerate_semistable_bruteforce(genus_map, edges, 0)
        assert [chain111.multidegree_as_dict(md) for md in got] == expected

    def test_negative_degree_rejected(self, two22):
        with pytest.raises(ValueError):
            enumerate_semistable(two22, -1)

    def test_matches_oracle_on_small_trees(self, small_trees):
        for tree in small_trees[:30]:
            genus_map, edges = oracles.tree_data(tree)
            for d in range(0, 4):
                expected = oracles.enumerate_semistable_bruteforce(genus_map, edges, d)
                got = [
                    tree.multidegree_as_dict(md)
                    for md in enumerate_semistable(tree, d)
                ]
                assert got == expected

    def test_sorted_canonically(self, chain111):
        for d in range(0, 4):
            got = [md.degrees for md in enumerate_semistable(chain111, d)]
            assert got == sorted(got)


class TestEnumerateQuasistable:
    def test_degree_one_unique(self, two22, g31):
        assert [md.degrees for md in enumerate_quasistable(two22, 1, "C1")] == [(1, 0)]
        assert [md.degrees for md in enumerate_quasistable(g31, 1, "C1")] == [(1, 0)]

    def test_degree_two(self, two22):
        got = [md.degrees for md in enumerate_quasistable(two22, 2, "C1")]
        assert got == [(1, 1)]

    def test_never_empty_at_desk_scale(self, small_trees):
        for tree in small_trees[:15]:
            for cid in tree.ids:
                for d in range(0, 4):
                    assert enumerate_quasistable(tree, d, cid)


class TestAgainstAllSubsetsOracle:
    def test_semistable_and_quasistable_match(self, small_trees):
        rng = random.Random(7)
        for tree in small_trees[:40]:
            genus_map, edges = oracles.tree_data(tree)
            for d in range(0, 4):
                for md in sample_multidegrees(tree, d, 8, rng):
                    degrees = tree.multidegree_as_dict(md)
                    assert is_semistable(tree, md).semistable == (
                        oracles.semistable_all_subsets(genus_map, edges, degrees)
                    )
                    for cid in tree.ids:
                        assert is_quasistable(tree, md, cid) == (
                            oracles.quasistable_all_subsets(genus_map, edges, degrees, cid)
                        )
