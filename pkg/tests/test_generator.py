from __future__ import annotations

import pytest

from treeabel import GenSpec, UnsatisfiableSpecError, is_in_delta_half, random_tree, validate


class TestRandomTree:
    def test_single_component_shape(self):
        tree = random_tree(GenSpec(genus=2, max_components=1, seed=7))
        assert [(c.id, c.genus) for c in tree.components] == [("C1", 2)]
        assert tree.nodes == ()

    def test_forced_half_split_smallest_case(self):
        tree = random_tree(GenSpec(genus=4, max_components=2, seed=1, force_delta_half=True))
        assert sorted(c.genus for c in tree.components) == [2, 2]
        assert len(tree.nodes) == 1
        assert is_in_delta_half(tree)

    @pytest.mark.parametrize("seed", range(100))
    def test_many_seeds_all_valid(self, seed):
        tree = random_tree(GenSpec(genus=3, max_components=3, seed=seed))
        assert validate(tree.to_data()).ok
        assert tree.genus == 3
        assert len(tree.ids) <= 3

    def test_deterministic(self):
        spec = GenSpec(genus=7, max_components=6, seed=123456789)
        assert random_tree(spec) == random_tree(spec)
        assert random_tree(spec).to_data() == random_tree(spec).to_data()

    def test_forced_half_split_always_on_locus(self):
        for seed in range(40):
            tree = random_tree(
                GenSpec(genus=6, max_components=5, seed=seed, force_delta_half=True)
            )
            assert is_in_delta_half(tree)
            assert tree.genus == 6

    def test_bounds_respected(self, corpus500):
        for tree in corpus500[:100]:
            assert validate(tree.to_data()).ok


class TestUnsatisfiable:
    def test_odd_genus_half_split(self):
        with pytest.raises(UnsatisfiableSpecError):
            random_tree(GenSpec(genus=5, max_components=4, seed=0, force_delta_half=True))

    def test_half_split_needs_two_components(self):
        with pytest.raises(UnsatisfiableSpecError):
            random_tree(GenSpec(genus=4, max_components=1, seed=0, force_delta_half=True))

    def test_genus_below_two(self):
        with pytest.raises(UnsatisfiableSpecError):
            random_tree(GenSpec(genus=1, max_components=3, seed=0))

    def test_nonpositive_component_budget(self):
        with pytest.raises(UnsatisfiableSpecError):
            random_tree(GenSpec(genus=4, max_components=0, seed=0))
