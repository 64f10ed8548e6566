import itertools
import math

import pytest

from salient import classes
from salient.errors import DomainError, GuardExceeded, OrbitOverflowError
from salient.classes import (class_of, class_partition, class_size,
                             count_classes_brute, count_singletons,
                             f_inclusion_exclusion, f_j_count, f_series,
                             multiset_class_partition, salient_representative,
                             segment_decomposition, singleton_series)
from salient.words import MultisetSpec, fibonacci, identity, is_salient, reverse

F_SEQ = [1, 1, 1, 2, 8, 42, 258, 1824, 14664]


def test_class_of_examples():
    assert class_of((1, 2, 3)).members == ((1, 2, 3), (1, 3, 2), (2, 1, 3))
    assert class_of((3, 2, 1)).members == ((2, 3, 1), (3, 1, 2), (3, 2, 1))
    assert class_of((3, 2, 1, 6, 5, 4)).size == 9 == fibonacci(4) ** 2


def test_s3_partition():
    # the two orbits on three letters, written out in full
    partition = class_partition(3)
    assert [set(c.members) for c in partition] == [
        {(1, 2, 3), (2, 1, 3), (1, 3, 2)},
        {(3, 2, 1), (2, 3, 1), (3, 1, 2)},
    ]


def test_class_of_empty_and_singleton():
    assert class_of(()).members == ((),)
    assert class_of((1,)).size == 1


def test_relation_validation():
    with pytest.raises(DomainError):
        class_of((1, 2), "geq:1")
    with pytest.raises(DomainError):
        class_of((1, 1, 2), "geq:2")
    with pytest.raises(DomainError):
        class_of((1, 2), "frobnicate")


def test_orbit_cap():
    with pytest.raises(OrbitOverflowError):
        class_of(identity(30), max_members=100)


def test_env_memory_cap(monkeypatch):
    monkeypatch.setenv("SALIENT_LIMIT_MB", "0")
    with pytest.raises(OrbitOverflowError):
        class_of((1, 2))
    monkeypatch.setenv("SALIENT_LIMIT_MB", "sixteen")
    with pytest.raises(DomainError):
        class_of((1, 2))


def test_salient_representative_examples():
    assert salient_representative((2, 1, 3)) == (1, 2, 3)
    assert salient_representative((4, 1, 2, 3)) == (4, 1, 2, 3)
    assert salient_representative((4, 3, 2, 1)) == (3, 4, 1, 2)
    assert class_of((4, 3, 2, 1)).members == (
        (3, 4, 1, 2), (3, 4, 2, 1), (4, 2, 3, 1), (4, 3, 1, 2), (4, 3, 2, 1))


def test_segment_decomposition_examples():
    assert segment_decomposition(identity(5)).segments == ((1, 2, 3, 4, 5),)
    assert segment_decomposition((3, 2, 1, 6, 5, 4)).segments == (
        (3, 2, 1), (6, 5, 4))
    assert segment_decomposition((2, 1, 4, 3)).segments == ((1, 2, 3, 4),)
    # length-two runs are normalized to increasing order
    assert segment_decomposition((2, 1)).segments == ((1, 2),)


def test_segments_are_maximal_against_bfs():
    # the product over segments must reproduce the breadth-first size,
    # which fails if any segment stopped short of maximal
    for n in range(7):
        for w in itertools.permutations(range(1, n + 1)):
            assert class_size(w) == class_of(w).size


def test_class_size_examples():
    assert class_size(identity(5)) == 8 == fibonacci(6)
    assert class_size((3, 2, 1, 6, 5, 4)) == 9
    assert class_size(identity(1)) == 1
    assert class_size(()) == 1


def test_reversal_symmetry():
    for n in range(8):
        size_of = {}
        for cls in class_partition(n):
            for w in cls.members:
                size_of[w] = cls.size
        for w, size in size_of.items():
            assert size_of[reverse(w)] == size


def test_partition_covers_all_permutations():
    for n in range(8):
        partition = class_partition(n)
        assert sum(c.size for c in partition) == math.factorial(n)
        reps = [c.representative for c in partition]
        assert reps == sorted(reps)
        assert all(is_salient(r) for r in reps)


def test_count_classes_brute():
    assert count_classes_brute(4) == 8
    assert count_classes_brute(0) == 1
    assert count_classes_brute(7) == 1824
    with pytest.raises(GuardExceeded):
        count_classes_brute(9)
    # the guard is configuration, not a constant
    assert count_classes_brute(8, max_n=8) == f_inclusion_exclusion(8)


def test_f_inclusion_exclusion():
    assert f_inclusion_exclusion(4) == 24 - 18 + 2 == 8
    assert f_inclusion_exclusion(5) == 42
    assert f_inclusion_exclusion(1) == 1
    assert [f_inclusion_exclusion(n) for n in range(9)] == F_SEQ


def test_f_series():
    assert f_series(8) == F_SEQ
    assert f_series(0) == [1]
    assert f_series(3) == [1, 1, 1, 2]


def test_count_singletons():
    assert count_singletons(4) == 2
    assert count_singletons(2) == 0
    assert count_singletons(6) == 90
    with pytest.raises(GuardExceeded):
        count_singletons(10)


def test_singleton_series():
    assert singleton_series(8) == [1, 1, 0, 0, 2, 14, 90, 646, 5242]
    assert singleton_series(1) == [1, 1]
    assert singleton_series(4) == [count_singletons(n) for n in range(5)]


def test_f_j_count():
    assert f_j_count(3, 2, "brute") == 4
    assert f_j_count(2, 3) == 2
    assert f_j_count(5, 3) == 54
    for n in range(7):
        for j in (2, 3):
            assert f_j_count(n, j, "formula") == f_j_count(n, j, "brute")
    with pytest.raises(DomainError):
        f_j_count(3, 1)
    with pytest.raises(DomainError):
        f_j_count(3, 2, "telepathy")


def test_geq_orbits_have_unique_reduced_word():
    # each orbit of the differ-by-at-least-j relation contains exactly one
    # word with no adjacent drop of j or more
    for n in range(7):
        for j in (2, 3):
            for cls in class_partition(n, f"geq:{j}"):
                reduced = [w for w in cls.members
                           if all(w[i] < w[i + 1] + j
                                  for i in range(len(w) - 1))]
                assert len(reduced) == 1


def test_multiset_partition_examples():
    spec = MultisetSpec.parse("1:2,2:1,3:2")
    partition = multiset_class_partition(spec)
    assert len(partition) == 6
    assert all(c.size == 5 for c in partition)
    assert sum(c.size for c in partition) == 30

    assert len(multiset_class_partition(MultisetSpec.parse("1:3"))) == 1
    ordinary = MultisetSpec.parse("1:1,2:1,3:1,4:1")
    assert len(multiset_class_partition(ordinary)) == 8
    with pytest.raises(GuardExceeded):
        multiset_class_partition(MultisetSpec.parse("1:6,2:6"))
