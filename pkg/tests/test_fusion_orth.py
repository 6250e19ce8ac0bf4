import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freeqg import (
    catalan,
    char_moment_orth,
    dim_check_fusion,
    dim_orth,
    fuse_orth,
    fuse_orth_many,
)

labels = st.integers(min_value=0, max_value=12)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def tensor_expand(seq, rng):
    """Independent oracle: expand a tensor word summand-by-summand in a
    random association order, never touching the multiset shortcut."""
    seq = list(seq)
    if not seq:
        return {0: 1}
    while len(seq) > 1:
        i = rng.randrange(len(seq) - 1)
        a, b = seq[i], seq[i + 1]
        # replace the pair by its decomposition, distributing over summands
        rest = seq[:i] + seq[i + 2 :]
        total = {}
        for label in fuse_orth(a, b):
            sub = tensor_expand(rest[:i] + [label] + rest[i:], rng) if rest else {label: 1}
            for key, mult in sub.items():
                total[key] = total.get(key, 0) + mult
        return total
    return {seq[0]: 1}


class TestFuseOrth:
    def test_fundamental_square(self):
        assert fuse_orth(1, 1) == {0: 1, 2: 1}

    def test_unit_acts_trivially(self):
        for s in range(8):
            assert fuse_orth(0, s) == {s: 1}
            assert fuse_orth(s, 0) == {s: 1}

    def test_two_three(self):
        assert fuse_orth(2, 3) == {1: 1, 3: 1, 5: 1}

    @given(labels, labels)
    def test_multiplicity_free_and_commutative(self, r, s):
        terms = fuse_orth(r, s)
        assert set(terms.values()) == {1}
        assert len(terms) == min(r, s) + 1
        assert terms == fuse_orth(s, r)

    def test_character_recursion_shadow(self):
        for n in range(1, 20):
            assert fuse_orth(1, n) == {n - 1: 1, n + 1: 1}


class TestFuseOrthMany:
    def test_examples(self):
        assert fuse_orth_many([1, 1]) == {0: 1, 2: 1}
        assert fuse_orth_many([1, 1, 1]) == {1: 2, 3: 1}
        assert fuse_orth_many([1, 1, 1, 1]) == {0: 2, 2: 3, 4: 1}

    def test_empty_product_is_unit(self):
        assert fuse_orth_many([]) == {0: 1}

    def test_matches_random_association_oracle(self):
        rng = random.Random(20240817)
        for _ in range(40):
            seq = [rng.randint(0, 4) for _ in range(rng.randint(1, 6))]
            expected = dict(sorted(tensor_expand(seq, rng).items()))
            assert fuse_orth_many(seq) == expected

    @given(labels, labels, labels)
    def test_associativity(self, a, b, c):
        left = fuse_orth_many([a, b, c])
        right = {}
        for x, mult in fuse_orth(b, c).items():
            for y in fuse_orth(a, x):
                right[y] = right.get(y, 0) + mult
        assert left == dict(sorted(right.items()))


class TestCharMoments:
    def test_trivial_and_odd(self):
        assert char_moment_orth(0) == 1
        assert char_moment_orth(3) == 0
        assert all(char_moment_orth(2 * m + 1) == 0 for m in range(8))

    def test_even_moments_are_catalan(self):
        for m in range(9):
            assert char_moment_orth(2 * m) == CATALAN[m]
            assert char_moment_orth(2 * m) == catalan(m)


class TestCatalan:
    def test_reference_values(self):
        assert [catalan(m) for m in range(9)] == CATALAN
        assert catalan(8) == 1430

    def test_segner_recurrence(self):
        # independent route: C_{m+1} = sum C_i C_{m-i}
        for m in range(12):
            assert catalan(m + 1) == sum(catalan(i) * catalan(m - i) for i in range(m + 1))


class TestDimensionConsistency:
    def test_examples(self):
        assert dim_check_fusion(1, 1, 3)
        assert dim_orth(2, 4) * dim_orth(3, 4) == 15 * 56 == 4 + 56 + 780
        assert dim_check_fusion(2, 3, 4)

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_exhaustive_small(self, N):
        for r in range(9):
            for s in range(9):
                assert dim_check_fusion(r, s, N)
