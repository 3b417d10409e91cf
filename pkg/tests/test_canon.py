import random
from itertools import combinations

import pytest

from ecpoly.canon import canonical_code, canonical_form, is_isomorphic_bruteforce
from ecpoly.census import classes_by_permutation
from ecpoly.errors import OrderTooLarge
from ecpoly.graph import complete_graph, cycle_graph, disjoint_union, empty_graph, from_edge_list, petersen


def test_relabel_invariance_c4():
    a = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    b = from_edge_list(4, [(0, 2), (2, 1), (1, 3), (0, 3)])
    assert canonical_code(a) == canonical_code(b)


def test_distinguishes_c4_from_triangle_plus_vertex():
    assert canonical_code(cycle_graph(4)) != canonical_code(disjoint_union(complete_graph(3), empty_graph(1)))


def test_petersen_stable_under_relabeling():
    rng = random.Random(7)
    p = petersen()
    code = canonical_code(p)
    for _ in range(100):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_code(p.relabel(perm)) == code


def test_canonical_form_is_isomorphic_and_idempotent():
    g = from_edge_list(7, [(0, 3), (3, 5), (5, 1), (1, 6), (6, 0), (2, 4), (4, 0)])
    c = canonical_form(g)
    assert is_isomorphic_bruteforce(g, c)
    assert canonical_form(c) == c


@pytest.mark.parametrize("n", [0, 1, 16])
def test_highly_symmetric(n):
    assert canonical_code(empty_graph(n)) == canonical_code(empty_graph(n).relabel(list(reversed(range(n)))))
    assert canonical_code(complete_graph(n)) == canonical_code(complete_graph(n).relabel(list(reversed(range(n)))))


def test_order_limit():
    with pytest.raises(OrderTooLarge):
        canonical_code(empty_graph(17))


def test_bruteforce_isomorphism():
    a = cycle_graph(5)
    b = from_edge_list(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert is_isomorphic_bruteforce(a, b)
    assert not is_isomorphic_bruteforce(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)))


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_agrees_with_permutation_classes(n):
    """For every labeled graph on n <= 6 vertices, equal canonical codes
    coincide exactly with membership in one permutation orbit."""
    pairs = list(combinations(range(n), 2))
    labeled = [
        from_edge_list(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1]) for mask in range(1 << len(pairs))
    ]
    orbits = classes_by_permutation(labeled)
    codes_per_orbit = [{canonical_code(g) for g in orbit} for orbit in orbits]
    assert all(len(c) == 1 for c in codes_per_orbit)
    assert len(set().union(*codes_per_orbit)) == len(orbits)
    assert len(orbits) == [1, 2, 4, 11, 34, 156][n - 1]
