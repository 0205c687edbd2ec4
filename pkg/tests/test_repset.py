import random

import pytest

from oracles import count_table_dp, tuple_list
from sidonkit.repset import (
    ALL_CLAUSES,
    FiniteSet,
    classify,
    read_set_file,
    rho_count,
    rho_profile,
    tuple_space_size,
    verify_theorem_properties,
    write_set_file,
)

X22 = FiniteSet([20, 120, 500, 600])  # encoded four-cycle, the worked small instance


def test_finite_set_validation():
    with pytest.raises(ValueError):
        FiniteSet([2, 1])
    with pytest.raises(ValueError):
        FiniteSet([1, 1])
    with pytest.raises(ValueError):
        FiniteSet([0, 1])
    assert len(FiniteSet([])) == 0
    assert FiniteSet.from_values([3, 1, 3, 2]).elements == (1, 2, 3)


def test_rho_count_empty_set():
    count, reps = rho_count(FiniteSet([]), 2, 10)
    assert count == 0 and reps == []


def test_rho_count_worked_instance():
    count, reps = rho_count(X22, 2, 620)
    assert count == 2
    assert reps == [(20, 600), (120, 500)]
    count, reps = rho_count(X22, 2, 40)
    assert count == 1 and reps == [(20, 20)]


def test_rho_count_matches_itertools_enumeration():
    for target in range(30, 1300, 7):
        expected = [t for t in tuple_list(X22.elements, 2) if sum(t) == target]
        count, reps = rho_count(X22, 2, target)
        assert count == len(expected)
        assert reps == expected


def test_rho_profile_worked_instance():
    profile = rho_profile(X22, 2)
    assert profile.max_value == 2
    assert profile.histogram == {1: 8, 2: 1}
    assert profile.witnesses[2].target == 620


def test_rho_profile_sidon_triple():
    profile = rho_profile(FiniteSet([1, 2, 4]), 2)
    assert profile.max_value == 1
    assert profile.histogram == {1: 6}


def test_rho_profile_singleton():
    profile = rho_profile(FiniteSet([1]), 3)
    assert profile.max_value == 1
    assert profile.witnesses[1].target == 3


def test_profile_against_dp_oracle_random_sets():
    rng = random.Random(20240811)
    for _ in range(60):
        size = rng.randint(0, 12)
        elems = sorted(rng.sample(range(1, 200), size))
        k = rng.randint(1, 4)
        X = FiniteSet(elems)
        expected = count_table_dp(elems, k)
        profile = rho_profile(X, k)
        histogram = {}
        for c in expected.values():
            histogram[c] = histogram.get(c, 0) + 1
        assert profile.histogram == histogram
        for target, count in list(expected.items())[:10]:
            assert rho_count(X, k, target)[0] == count


def test_monotonicity_under_subsets():
    rng = random.Random(7)
    for _ in range(40):
        big = sorted(rng.sample(range(1, 100), rng.randint(2, 10)))
        small = sorted(rng.sample(big, rng.randint(1, len(big))))
        k = rng.randint(1, 3)
        big_counts = count_table_dp(big, k)
        for target, count in count_table_dp(small, k).items():
            assert count <= big_counts[target]
            assert rho_count(FiniteSet(small), k, target)[0] <= rho_count(
                FiniteSet(big), k, target
            )[0]


def test_counting_identity():
    rng = random.Random(99)
    for _ in range(25):
        elems = sorted(rng.sample(range(1, 500), rng.randint(1, 9)))
        k = rng.randint(1, 4)
        profile = rho_profile(FiniteSet(elems), k)
        total = sum(c * n for c, n in profile.histogram.items())
        assert total == tuple_space_size(FiniteSet(elems), k)


def test_witness_counts_recompute():
    profile = rho_profile(X22, 2)
    for c, witness in profile.witnesses.items():
        assert rho_count(X22, 2, witness.target)[0] == c
        assert len(witness.representations) == c


def test_classify():
    assert classify(X22, 2) == type(classify(X22, 2))(is_bkl=True, ell=2)
    assert classify(FiniteSet([1, 2, 4]), 2).ell == 1
    empty = classify(FiniteSet([]), 2)
    assert not empty.is_bkl and empty.ell == 0
    with pytest.raises(ValueError):
        classify(X22, 1)


def test_properties_pass_on_worked_instance():
    cert = verify_theorem_properties(X22, 2, 2)
    assert cert.passed
    assert set(cert.details["clauses"]) == set(ALL_CLAUSES)


def test_properties_subset_selection_and_validation():
    cert = verify_theorem_properties(X22, 2, 2, which=["count-levels", "disjoint-terms"])
    assert set(cert.details["clauses"]) == {"count-levels", "disjoint-terms"}
    with pytest.raises(ValueError):
        verify_theorem_properties(X22, 1, 2)
    with pytest.raises(ValueError):
        verify_theorem_properties(X22, 2, 1)
    with pytest.raises(ValueError):
        verify_theorem_properties(X22, 2, 2, which=["nope"])


def test_disjoint_terms_branch_with_internal_repeat():
    # 4 = 1+3 = 2+2: distinct representations sharing no term, accepted even
    # though the second tuple repeats a term internally.
    cert = verify_theorem_properties(FiniteSet([1, 2, 3]), 2, 2, which=["disjoint-terms"])
    assert cert.passed


def test_disjoint_terms_failure_witness():
    # Shared terms need k >= 3 (x+y = x+z forces y = z); 1+1+3 = 1+2+2 = 5 shares the 1.
    cert = verify_theorem_properties(FiniteSet([1, 2, 3, 4]), 3, 2, which=["disjoint-terms"])
    assert not cert.passed
    witness = cert.details["clauses"]["disjoint-terms"]["witness"]
    reps = [tuple(t) for t in witness["representations"]]
    assert set(reps[0]) & set(reps[1])
    assert sum(reps[0]) == sum(reps[1]) == witness["target"]


def test_count_levels_examples():
    assert verify_theorem_properties(FiniteSet([1, 2, 3, 4]), 2, 2, which=["count-levels"]).passed
    cert = verify_theorem_properties(FiniteSet([1, 2, 3, 4, 5]), 2, 3, which=["count-levels"])
    assert not cert.passed
    witness = cert.details["clauses"]["count-levels"]["witness"]
    assert witness["count"] == 2  # neither 0, 1, nor ell = 3


def test_cross_sizes_failure():
    # 2 is an element and 2 = 1+1 is a 2-term sum: sizes (1, 2) coexist.
    cert = verify_theorem_properties(FiniteSet([1, 2, 3]), 2, 2, which=["cross-sizes"])
    assert not cert.passed
    witness = cert.details["clauses"]["cross-sizes"]["witness"]
    assert witness["sizes"] == [1, 2] and witness["target"] == 2


def test_lower_orders():
    # k=4 requires orders 2 and 3 to have all sums distinct.
    cert = verify_theorem_properties(FiniteSet([1, 2, 3, 4]), 4, 2, which=["lower-orders"])
    assert not cert.passed
    assert cert.details["clauses"]["lower-orders"]["witness"]["order"] == 2
    cert = verify_theorem_properties(FiniteSet([1, 2, 4, 8]), 3, 2, which=["lower-orders"])
    assert cert.passed


def test_set_file_roundtrip(tmp_path):
    path = tmp_path / "set.txt"
    write_set_file(path, X22)
    assert read_set_file(path) == X22
    path.write_text("# comment\n20\n\n20\n7\n")
    with pytest.warns(UserWarning):
        loaded = read_set_file(path)
    assert loaded.elements == (7, 20)


def test_set_file_rejects_bad_values(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("12\nx\n")
    from sidonkit.errors import FormatError

    with pytest.raises(FormatError):
        read_set_file(path)
    path.write_text("0\n")
    with pytest.raises(FormatError):
        read_set_file(path)
