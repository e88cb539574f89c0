import pytest

from ternarydraw.tree import TernaryTree, complete_tree, random_ternary_tree


def path_tree(n: int) -> TernaryTree:
    return TernaryTree(tuple((i + 1,) if i + 1 < n else () for i in range(n)))


def caterpillar_tree(spine: int) -> TernaryTree:
    """Spine of `spine` nodes, each with two extra leaf children."""
    total = 3 * spine
    children: list[list[int]] = [[] for _ in range(total)]
    leaf = spine
    for i in range(spine):
        if i + 1 < spine:
            children[i].append(i + 1)
        children[i].extend((leaf, leaf + 1))
        leaf += 2
    return TernaryTree(tuple(tuple(c) for c in children))


@pytest.fixture(scope="session")
def corpus():
    """Shared tree corpus: 500 random trees (seeds split across three sizes),
    complete trees up to h=9, paths, and caterpillars."""
    trees = []
    for seed in range(0, 167):
        trees.append(random_ternary_tree(100, seed))
    for seed in range(167, 333):
        trees.append(random_ternary_tree(1000, seed))
    for seed in range(333, 500):
        trees.append(random_ternary_tree(10000, seed))
    for h in range(1, 10):
        trees.append(complete_tree(h))
    for n in (1, 2, 3, 10, 100, 1000):
        trees.append(path_tree(n))
    for spine in (1, 5, 50, 300):
        trees.append(caterpillar_tree(spine))
    return trees
