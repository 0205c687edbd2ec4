import random
from itertools import combinations

import pytest

from sidonkit.encoder import encode
from sidonkit.extract import extract_Bk, partition_edges, verify_no_ascending_path
from sidonkit.ordgraph import ThetaSpec, make_theta
from sidonkit.repset import FiniteSet, rho_profile


def test_partition_four_cycle():
    enc = encode(make_theta(ThetaSpec(2, 2)), 2)
    edges = [tuple(enc.values[v] for v in e) for e in enc.source.sorted_edges()]
    witness = partition_edges(edges, 2)
    assert witness.same_class_edges == []
    assert len(witness.cross_edges) == 4
    assert len(witness.up_edges) == 2 and len(witness.down_edges) == 2
    assert witness.chosen_side == "up"


def test_partition_single_edge():
    witness = partition_edges([(1, 2)], 2)
    assert len(witness.cross_edges) == 1
    assert len(witness.chosen_edges) == 1


def test_partition_ascending_path_three_classes():
    witness = partition_edges([(1, 2), (2, 3), (3, 4)], 3)
    assert len(witness.same_class_edges) <= 1
    assert len(witness.cross_edges) >= 2
    assert len(witness.chosen_edges) >= 1


def test_partition_guarantees_on_random_graphs():
    rng = random.Random(2718)
    for _ in range(100):
        n = rng.randint(2, 14)
        labels = rng.sample(range(1, 300), n)
        possible = list(combinations(sorted(labels), 2))
        edges = rng.sample(possible, rng.randint(1, len(possible)))
        k = rng.randint(2, 4)
        witness = partition_edges(edges, k)
        # derandomized bound: same-class edges never exceed |E'|/k
        assert len(witness.same_class_edges) * k <= len(edges)
        assert len(witness.cross_edges) * k >= (k - 1) * len(edges)
        assert 2 * k * len(witness.chosen_edges) >= (k - 1) * len(edges)
        # chosen side never contains an ascending path of k edges
        ok, path = verify_no_ascending_path(witness.chosen_edges, k)
        assert ok and path is None


def test_partition_determinism():
    edges = [(3, 9), (9, 27), (3, 27), (27, 81), (9, 81)]
    a = partition_edges(edges, 2)
    b = partition_edges(edges, 2)
    assert a.classes == b.classes and a.chosen_edges == b.chosen_edges


def test_partition_random_mode_seeded():
    edges = [(1, 2), (2, 3), (1, 3)]
    a = partition_edges(edges, 2, mode="random", seed=11)
    b = partition_edges(edges, 2, mode="random", seed=11)
    assert a.classes == b.classes
    with pytest.raises(ValueError):
        partition_edges(edges, 2, mode="montecarlo")


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        partition_edges([(1, 1)], 2)
    with pytest.raises(ValueError):
        partition_edges([(1, 2), (2, 1)], 2)
    with pytest.raises(ValueError):
        partition_edges([(1, 2)], 1)


def test_no_ascending_path_detection():
    bad, path = verify_no_ascending_path([(1, 2), (2, 3), (3, 4)], 3)
    assert not bad
    assert path == (1, 2, 3, 4)
    ok, _ = verify_no_ascending_path([(1, 2), (2, 3), (3, 4)], 4)
    assert ok
    ok, _ = verify_no_ascending_path([], 1)
    assert ok
    # edges are unordered; the walk 1 < 5 < 9 ascends through them
    bad, path = verify_no_ascending_path([(5, 1), (9, 5)], 2)
    assert not bad and path == (1, 5, 9)
    # a star from the minimum has no two-edge ascending walk
    ok, _ = verify_no_ascending_path([(1, 5), (1, 9)], 2)
    assert ok


def test_extract_full_worked_set():
    enc = encode(make_theta(ThetaSpec(2, 2)), 2)
    result = extract_Bk(enc.elements, enc, 2)
    assert result.certificate.passed
    assert 2 * 2 * 2 * len(result.subset) >= len(enc.elements)  # ratio >= 1/4
    assert rho_profile(result.subset, 2).max_value <= 1


def test_extract_singleton():
    enc = encode(make_theta(ThetaSpec(2, 2)), 2)
    result = extract_Bk(FiniteSet([20]), enc, 2)
    assert list(result.subset) == [20]
    assert result.certificate.passed


def test_extract_empty_subset():
    enc = encode(make_theta(ThetaSpec(2, 2)), 2)
    result = extract_Bk(FiniteSet([]), enc, 2)
    assert len(result.subset) == 0
    assert result.certificate.passed


def test_extract_rejects_foreign_elements():
    enc = encode(make_theta(ThetaSpec(2, 2)), 2)
    with pytest.raises(ValueError):
        extract_Bk(FiniteSet([21]), enc, 2)


def test_extract_all_subsets_of_both_desk_instances():
    for k, ell in ((2, 2), (3, 2)):
        enc = encode(make_theta(ThetaSpec(k, ell)), k)
        elems = list(enc.elements)
        for size in range(len(elems) + 1):
            for chosen in combinations(elems, size):
                result = extract_Bk(FiniteSet(sorted(chosen)), enc, k)
                assert result.certificate.passed
                assert 2 * k * len(result.subset) >= (k - 1) * len(chosen)
                assert rho_profile(result.subset, k).max_value <= 1


def test_subsets_of_extracted_sets_stay_bk():
    enc = encode(make_theta(ThetaSpec(3, 2)), 3)
    subset = extract_Bk(enc.elements, enc, 3).subset
    for size in range(len(subset) + 1):
        for chosen in combinations(subset, size):
            assert rho_profile(FiniteSet(sorted(chosen)), 3).max_value <= 1
