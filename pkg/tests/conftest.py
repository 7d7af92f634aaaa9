from __future__ import annotations

import pytest

from treeabel import CurveTree, GenSpec, random_tree


@pytest.fixture
def two22() -> CurveTree:
    return CurveTree.build([("C1", 2), ("C2", 2)], [("n", "C1", "C2")])


@pytest.fixture
def g31() -> CurveTree:
    return CurveTree.build([("C1", 3), ("C2", 1)], [("n", "C1", "C2")])


@pytest.fixture
def g41() -> CurveTree:
    return CurveTree.build([("C1", 4), ("C2", 1)], [("n", "C1", "C2")])


@pytest.fixture
def chain111() -> CurveTree:
    return CurveTree.build(
        [("C1", 1), ("C2", 1), ("C3", 1)],
        [("n1", "C1", "C2"), ("n2", "C2", "C3")],
    )


@pytest.fixture
def chain1111() -> CurveTree:
    return CurveTree.build(
        [("C1", 1), ("C2", 1), ("C3", 1), ("C4", 1)],
        [("n1", "C1", "C2"), ("n2", "C2", "C3"), ("n3", "C3", "C4")],
    )


@pytest.fixture
def star() -> CurveTree:
    return CurveTree.build(
        [("C0", 1), ("C1", 1), ("C2", 1), ("C3", 1)],
        [("n1", "C0", "C1"), ("n2", "C0", "C2"), ("n3", "C0", "C3")],
    )


@pytest.fixture
def star0() -> CurveTree:
    """Genus-0 center of degree 3: stable despite the zero-genus component."""
    return CurveTree.build(
        [("C0", 0), ("C1", 1), ("C2", 1), ("C3", 1)],
        [("n1", "C0", "C1"), ("n2", "C0", "C2"), ("n3", "C0", "C3")],
    )


def make_corpus(count: int, max_genus: int, max_components: int, seed_base: int):
    trees = []
    for i in range(count):
        spec = GenSpec(
            genus=2 + i % (max_genus - 1),
            max_components=1 + i % max_components,
            seed=seed_base + i,
        )
        trees.append(random_tree(spec))
    return trees


def make_delta_corpus(count: int, seed_base: int):
    trees = []
    for i in range(count):
        spec = GenSpec(
            genus=(4, 6, 8)[i % 3],
            max_components=2 + i % 7,
            seed=seed_base + i,
            force_delta_half=True,
        )
        trees.append(random_tree(spec))
    return trees


@pytest.fixture(scope="session")
def corpus200():
    return make_corpus(200, max_genus=10, max_components=8, seed_base=0)


@pytest.fixture(scope="session")
def corpus100():
    return make_corpus(100, max_genus=8, max_components=6, seed_base=10_000)


@pytest.fixture(scope="session")
def corpus500():
    return make_corpus(500, max_genus=10, max_components=8, seed_base=20_000)


@pytest.fixture(scope="session")
def delta50():
    return make_delta_corpus(50, seed_base=30_000)


@pytest.fixture(scope="session")
def small_trees(corpus500):
    """Corpus trees with at most 4 components (deduplicated)."""
    seen = set()
    out = []
    for tree in corpus500:
        if len(tree.ids) <= 4 and tree not in seen:
            seen.add(tree)
            out.append(tree)
    return out
