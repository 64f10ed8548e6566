import pytest

from salient.errors import DomainError, GuardExceeded
from salient.mfenum import (count_distributive_mf, distributive_blocks,
                            distributive_count_series, distributive_mf_family,
                            g_blocks, generate_mf_posets, mf_counts_by_elements,
                            mf_counts_by_rank, mf_rank_element_table,
                            u_bivariate)
from salient.posets import (GradedPoset, are_isomorphic, gamma_words,
                            q_from_commuting_word)


def test_g_blocks():
    assert [g_blocks(n) for n in range(1, 8)] == [1, 1, 1, 2, 4, 8, 16]
    for n in range(1, 8):
        assert g_blocks(n) == len(gamma_words(n)) == len(distributive_blocks(n))
    with pytest.raises(DomainError):
        g_blocks(0)


def test_distributive_family_counts():
    assert [count_distributive_mf(n) for n in range(1, 7)] == [
        1, 2, 4, 9, 21, 50]
    assert distributive_count_series(8) == [1, 1, 2, 4, 9, 21, 50, 120, 289]


def test_distributive_family_members_qualify():
    for n in range(1, 6):
        family = distributive_mf_family(n)
        keys = set()
        for q in family:
            _, beta = q.jq_flag_vectors()
            assert all(-1 <= b <= 1 for b in beta)
            assert all(c <= 2 for c in q.ideal_size_profile())
            assert q.is_two_plus_two_free() and q.is_width_le_two()
            keys.add(q.canonical_key())
        assert len(keys) == len(family)
    with pytest.raises(GuardExceeded):
        distributive_mf_family(11)


def test_rank_two_family():
    posets = [p for p in generate_mf_posets("rank", 2) if p.rank == 2]
    assert len(posets) == 2
    diamond = GradedPoset.boolean_lattice(2)
    assert sum(are_isomorphic(p, diamond) for p in posets) == 1
    assert sum(are_isomorphic(p, GradedPoset.chain(2)) for p in posets) == 1


def test_mf_counts_small():
    assert mf_counts_by_rank(5) == [1, 2, 6, 21, 78]
    assert mf_counts_by_elements(8) == [1, 1, 2, 3, 7, 12, 28]
    for poset in generate_mf_posets("rank", 5):
        assert poset.is_multiplicity_free()
        assert poset.has_at_most_two_per_rank()
        assert poset.is_bounded_graded()
    with pytest.raises(DomainError):
        list(generate_mf_posets("volume", 3))
    with pytest.raises(GuardExceeded):
        list(generate_mf_posets("rank", 99))


def test_six_element_count():
    assert mf_counts_by_elements(6)[-1] == 7


def test_u_bivariate_matches_table():
    table = mf_rank_element_table(5)
    series = u_bivariate(5, 12)
    for n in range(1, 6):
        for k in range(2, 13):
            assert series.coefficient((n, k)) == table.get((n, k), 0)
    wrong = u_bivariate(5, 12, numerator_y_power=3)
    assert any(wrong.coefficient((n, k)) != table.get((n, k), 0)
               for n in range(1, 6) for k in range(2, 13))


def test_alternating_member_realizes_maximum():
    for n in range(2, 7):
        family = distributive_mf_family(n)
        counts = [q.extension_count() for q in family]
        best = max(counts)
        winner = family[counts.index(best)]
        assert are_isomorphic(winner, q_from_commuting_word(n))
