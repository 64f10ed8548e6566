import doctest
import itertools

import pytest

from salient import words
from salient.errors import DomainError
from salient.words import (MultisetSpec, consecutive_moves, descent_set,
                           fibonacci, format_word, geq_j_moves, identity,
                           is_permutation, is_salient, parse_word, reverse,
                           sparse_subsets)


def test_module_doctests():
    assert doctest.testmod(words).failed == 0


def test_descent_set_examples():
    assert descent_set((1, 2, 3, 4, 5)) == frozenset()
    assert descent_set((3, 2, 1)) == {1, 2}
    assert descent_set((2, 1, 3, 5, 4)) == {1, 4}
    assert descent_set(()) == frozenset()


def test_descent_reversal_complement():
    # the descent set of the reversed word is the reversed complement
    for n in range(9):
        universe = frozenset(range(1, n))
        for w in itertools.permutations(range(1, n + 1)):
            d = descent_set(w)
            assert len(d) <= max(n - 1, 0)
            mirrored = frozenset(n - i for i in d)
            assert descent_set(reverse(w)) == universe - mirrored


def test_salient_examples():
    assert is_salient((1, 2, 3, 4))
    assert not is_salient((2, 1, 3, 4))
    assert not is_salient((3, 1, 2))
    with pytest.raises(DomainError):
        is_salient((1, 1, 2))


def test_salient_s4_list():
    got = [format_word(p) for p in itertools.permutations(range(1, 5))
           if is_salient(p)]
    assert got == ["1234", "1342", "2314", "2341",
                   "2413", "3142", "3412", "4123"]


def test_consecutive_moves_examples():
    assert consecutive_moves((1, 2, 3)) == {(2, 1, 3), (1, 3, 2)}
    assert consecutive_moves((1,)) == set()
    # only the pairs (3,2) and (5,4) differ by one
    assert consecutive_moves((1, 3, 2, 5, 4)) == {
        (1, 2, 3, 5, 4), (1, 3, 2, 4, 5)}
    assert {w for u in consecutive_moves((1, 3, 2, 5, 4))
            for w in consecutive_moves(u)} >= {(1, 3, 2, 5, 4)}


def test_consecutive_moves_symmetric():
    for n in range(8):
        moves = {w: consecutive_moves(w)
                 for w in itertools.permutations(range(1, n + 1))}
        for w, nbrs in moves.items():
            for u in nbrs:
                assert w in moves[u]


def test_geq_moves_examples():
    assert geq_j_moves((1, 3, 2), 2) == {(3, 1, 2)}
    assert geq_j_moves((1, 2, 3), 2) == set()
    assert geq_j_moves((1, 4, 3, 2), 3) == {(4, 1, 3, 2)}
    with pytest.raises(DomainError):
        geq_j_moves((1, 2, 3), 1)
    with pytest.raises(DomainError):
        geq_j_moves((1, 1, 2), 2)


def test_sparse_subsets():
    assert sparse_subsets(3) == [frozenset(), {1}, {2}]
    assert sparse_subsets(1) == [frozenset()]
    assert len(sparse_subsets(5)) == 8
    for s in sparse_subsets(8):
        assert words.is_sparse(s)


def test_sparse_counts_follow_fibonacci():
    counts = [len(sparse_subsets(n)) for n in range(1, 26)]
    assert counts[0] == 1 and counts[1] == 2
    for n in range(2, 25):
        assert counts[n] == counts[n - 1] + counts[n - 2]
        assert counts[n] == fibonacci(n + 2)


def test_fibonacci_convention():
    assert fibonacci(1) == fibonacci(2) == 1
    assert [fibonacci(k) for k in range(3, 10)] == [2, 3, 5, 8, 13, 21, 34]


def test_word_serialization_round_trip():
    for w in [(), (1,), (1, 3, 2, 5, 4), (10, 2, 1), (9, 10, 11)]:
        assert parse_word(format_word(w)) == w
    assert format_word((1, 3, 2, 5, 4)) == "13254"
    assert format_word((10, 2, 1)) == "10,2,1"
    with pytest.raises(DomainError):
        parse_word("102x")
    with pytest.raises(DomainError):
        parse_word("0")


def test_permutation_check():
    assert is_permutation(())
    assert is_permutation((2, 1, 3))
    assert not is_permutation((2, 2))
    assert not is_permutation((2, 3))
    assert identity(4) == (1, 2, 3, 4)


def test_multiset_spec():
    spec = MultisetSpec.parse("1:2,2:1,3:2")
    assert spec.total == 5
    assert spec.max_value == 3
    assert spec.caps_vector() == (2, 1, 2)
    assert spec.multiplicity(2) == 1 and spec.multiplicity(7) == 0
    assert MultisetSpec.parse(spec.format()) == spec
    assert spec.is_word_of((1, 3, 2, 1, 3))
    assert not spec.is_word_of((1, 2, 3))
    with pytest.raises(DomainError):
        MultisetSpec.parse("1:x")
    gapped = MultisetSpec.parse("1:2,4:1")
    assert gapped.caps_vector() == (2, 0, 0, 1)


def test_multiset_words_are_sorted_and_complete():
    spec = MultisetSpec.parse("1:2,2:2")
    arrangements = list(spec.words())
    assert arrangements == sorted(arrangements)
    assert len(arrangements) == 6
    assert len(set(arrangements)) == 6
    assert all(spec.is_word_of(w) for w in arrangements)
