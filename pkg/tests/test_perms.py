import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckperm.perms import (
    AlternatingPermutation,
    assemble,
    avoids_123_word,
    avoids_1234,
    contains_1234_naive,
    descent_set,
    enumerate_updown_avoiders,
    is_up_down,
    lis_length,
    membership_criteria,
    parse_perm_text,
    perm_text,
    schutzenberger,
    schutzenberger_word,
    shifted_concat,
    standardize,
)

from .oracles import brute_updown_avoiders, contains_123_triple, naive_lis

perms_up_to_6 = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


class TestDescentsAndShape:
    def test_descents_of_364512(self):
        assert descent_set((3, 6, 4, 5, 1, 2)) == {2, 4}

    def test_identity_has_no_descent(self):
        assert descent_set((1, 2, 3, 4, 5, 6)) == set()

    def test_single_descent(self):
        assert descent_set((2, 1)) == {1}

    def test_up_down_examples(self):
        assert is_up_down((1, 4, 3, 6, 2, 5))
        assert is_up_down((1, 2))
        assert not is_up_down((2, 1))
        assert not is_up_down((1, 2, 3))  # odd size
        assert is_up_down(())


class TestIncreasingSubsequences:
    def test_examples(self):
        assert avoids_1234((5, 6, 2, 4, 1, 3))
        assert not avoids_1234((1, 2, 3, 4, 5, 6))
        assert lis_length((1, 2, 3, 4, 5, 6)) == 6
        assert avoids_1234((1, 4, 3, 6, 2, 5))

    def test_avoids_1234_agrees_with_quadruple_scan(self):
        for size in range(1, 9):
            for p in itertools.permutations(range(1, size + 1)):
                assert avoids_1234(p) == (not contains_1234_naive(p))

    @given(perms_up_to_6)
    def test_lis_matches_quadratic_dp(self, p):
        assert lis_length(p) == naive_lis(p)

    def test_avoids_123_word_examples(self):
        assert avoids_123_word((8, 6, 11, 7, 2, 4, 1))
        assert not avoids_123_word((1, 2, 3))
        assert avoids_123_word(())

    @given(st.lists(st.integers(min_value=1, max_value=50), unique=True, max_size=8))
    def test_avoids_123_matches_triple_scan(self, w):
        assert avoids_123_word(w) == (not contains_123_triple(w))


class TestSchutzenberger:
    def test_printed_example(self):
        assert schutzenberger((4, 8, 2, 7, 1, 6, 3, 5)) == (4, 6, 3, 8, 2, 7, 1, 5)

    def test_size_two(self):
        assert schutzenberger((1, 2)) == (1, 2)

    def test_empty(self):
        assert schutzenberger(()) == ()

    @given(perms_up_to_6)
    def test_involution(self, p):
        assert schutzenberger(schutzenberger(tuple(p))) == tuple(p)

    def test_stabilizes_the_family(self, perm_pools):
        for n in range(5):
            family = set(perm_pools[n])
            assert {schutzenberger(p) for p in family} == family

    def test_word_variant_example(self):
        assert schutzenberger_word((1, 6, 4), 8) == (5, 3, 8)

    def test_word_variant_small(self):
        assert schutzenberger_word((1,), 2) == (2,)

    def test_word_variant_involution(self):
        w = (13, 12, 14, 10, 9, 5, 3)
        assert schutzenberger_word(schutzenberger_word(w, 14), 14) == w

    def test_word_variant_range_check(self):
        with pytest.raises(ValueError, match="outside"):
            schutzenberger_word((9,), 8)


class TestShiftedConcat:
    def test_printed_example(self):
        assert shifted_concat((1, 2), (1, 4, 2, 3)) == (5, 6, 1, 4, 2, 3)

    def test_identity(self):
        assert shifted_concat((), (2, 4, 1, 3)) == (2, 4, 1, 3)
        assert shifted_concat((2, 4, 1, 3), ()) == (2, 4, 1, 3)

    def test_two_rises(self):
        assert shifted_concat((1, 2), (1, 2)) == (3, 4, 1, 2)

    def test_closure_of_the_family(self, perm_pools):
        for a in range(4):
            for b in range(4 - a + 1):
                if a + b > 4:
                    continue
                family = set(perm_pools[a + b])
                for s in perm_pools[a]:
                    for t in perm_pools[b]:
                        assert shifted_concat(s, t) in family

    def test_alphabet_reversal_is_an_antimorphism(self, perm_pools):
        for a in range(4):
            for b in range(4 - a + 1):
                if a + b > 4:
                    continue
                for s in perm_pools[a]:
                    for t in perm_pools[b]:
                        lhs = schutzenberger(shifted_concat(s, t))
                        rhs = shifted_concat(schutzenberger(t), schutzenberger(s))
                        assert lhs == rhs


class TestStandardize:
    def test_bottom_word_of_the_example(self):
        assert standardize((8, 6, 11, 7, 2, 4, 1)) == (6, 4, 7, 5, 2, 3, 1)

    def test_rank_map(self):
        assert standardize((1, 6, 4)) == (1, 3, 2)

    def test_already_standard(self):
        assert standardize((2, 3, 1)) == (2, 3, 1)

    def test_rejects_repeats(self):
        with pytest.raises(ValueError, match="distinct"):
            standardize((1, 1))


class TestAssemble:
    def test_small_figure(self):
        assert assemble((3, 4, 1), (6, 5, 2)).perm == (3, 6, 4, 5, 1, 2)

    def test_worked_example(self):
        sigma = assemble((8, 6, 11, 7, 2, 4, 1), (13, 12, 14, 10, 9, 5, 3))
        assert sigma.perm == (8, 13, 6, 12, 11, 14, 7, 10, 2, 9, 4, 5, 1, 3)
        assert sigma.bot == (8, 6, 11, 7, 2, 4, 1)
        assert sigma.top == (13, 12, 14, 10, 9, 5, 3)

    def test_minimal(self):
        assert assemble((1,), (2,)).perm == (1, 2)

    def test_not_a_partition(self):
        with pytest.raises(ValueError, match="partition"):
            assemble((1,), (3,))

    def test_not_up_down(self):
        with pytest.raises(ValueError, match="up-down"):
            assemble((2,), (1,))

    def test_alternating_type_validates(self):
        with pytest.raises(ValueError):
            AlternatingPermutation((2, 1))
        with pytest.raises(ValueError):
            AlternatingPermutation((1, 3))


class TestEnumeration:
    def test_n0_and_n1(self):
        assert list(enumerate_updown_avoiders(0)) == [()]
        assert list(enumerate_updown_avoiders(1)) == [(1, 2)]

    def test_n2_exact(self):
        got = list(enumerate_updown_avoiders(2))
        assert got == [(1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)]

    def test_matches_brute_force(self):
        for n in range(4):
            assert set(enumerate_updown_avoiders(n)) == brute_updown_avoiders(n)

    def test_n3_order_and_count(self):
        got = list(enumerate_updown_avoiders(3))
        assert len(got) == 42
        assert got[0] == (1, 4, 3, 6, 2, 5)
        assert got[1] == (1, 5, 3, 6, 2, 4)
        assert got[-1] == (5, 6, 3, 4, 1, 2)
        assert got == sorted(got)

    def test_negative(self):
        with pytest.raises(ValueError):
            list(enumerate_updown_avoiders(-1))


class TestCriteria:
    def test_member_passes_all_four(self):
        c = membership_criteria((1, 4, 3, 6, 2, 5))
        assert (c.c1, c.c2, c.c3, c.c4) == (True, True, True, True)
        assert c.verdict

    def test_identity_fails_top_condition(self):
        c = membership_criteria((1, 2, 3, 4, 5, 6))
        assert not c.c1  # top letters 2,4,6 contain an increasing triple
        assert not c.verdict

    def test_another_member(self):
        assert membership_criteria((5, 6, 2, 4, 1, 3)).verdict

    def test_descent_at_odd_position_is_caught(self):
        # up-down fails only through the column condition here
        c = membership_criteria((3, 4, 2, 1))
        assert not c.c3
        assert not c.verdict

    def test_odd_size_rejected(self):
        with pytest.raises(ValueError, match="even"):
            membership_criteria((1, 2, 3))

    def test_equivalence_exhaustive_size_6(self):
        for p in itertools.permutations(range(1, 7)):
            expected = is_up_down(p) and avoids_1234(p)
            assert membership_criteria(p).verdict == expected


class TestTextForms:
    def test_roundtrip(self):
        assert parse_perm_text("8,13,6,12,11,14,7,10,2,9,4,5,1,3") == (
            8, 13, 6, 12, 11, 14, 7, 10, 2, 9, 4, 5, 1, 3)
        assert perm_text((1, 4, 3, 6, 2, 5)) == "1,4,3,6,2,5"
        assert parse_perm_text("") == ()

    def test_malformed(self):
        with pytest.raises(ValueError, match="malformed"):
            parse_perm_text("1,x")
