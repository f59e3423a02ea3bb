import itertools
import math

import pytest

from mahonian import permstats as ps
from mahonian.permstats import HOLE, LaguerreWord
from mahonian.polyring import q_binomial, var
from mahonian.verify import closed_form_thm21

b, q = var("b"), var("q")
EXAMPLE = LaguerreWord.parse("3 2 5 * 1 8 6 *")


def test_parse_and_render():
    assert EXAMPLE.letters == (3, 2, 5, HOLE, 1, 8, 6, HOLE)
    assert str(EXAMPLE) == "3 2 5 * 1 8 6 *"
    assert LaguerreWord.parse("3 2 ◇ 1") == LaguerreWord.parse("3 2 * 1")
    assert EXAMPLE.n == 8 and EXAMPLE.k == 2
    with pytest.raises(ValueError):
        LaguerreWord.parse("1 1")
    with pytest.raises(ValueError):
        LaguerreWord.parse("1 3")


def test_worked_example():
    s = ps.full_stats(EXAMPLE)
    assert sorted(s.des_set) == [1, 4, 6]
    assert (s.inv, s.maj) == (12, 15)
    assert sorted(s.image_set) == [1, 2, 3, 5, 6, 8]
    assert sorted(s.rlmin_set) == [1]
    M = ps.word_to_matrix(EXAMPLE)
    assert ps.matrix_survivor_inv(M) == 12
    assert ps.matrix_survivor_maj(M) == 15
    assert ps.matrix_to_word(M) == EXAMPLE


@pytest.mark.parametrize("n", range(6))
def test_enumeration_counts_and_uniqueness(n):
    for k in range(n + 1):
        words = list(ps.enumerate_words(n, k))
        assert len(words) == len(set(words)) == ps.word_count(n, k)
        assert ps.word_count(n, k) == math.comb(n, k) ** 2 * math.factorial(n - k)
        assert all(w.k == k for w in words)


def test_enumeration_order_is_stable():
    first = [str(w) for w in ps.enumerate_words(3, 1)][:3]
    assert first == [str(w) for w in ps.enumerate_words(3, 1)][:3]
    assert ps.hole_sets(3, 2) == [(1, 2), (1, 3), (2, 3)]


def _naive_inv_maj(w):
    # hole ranks above every numeral; holes tie with each other
    r = [x if x else len(w) + 1 for x in w]
    inv = sum(1 for i, j in itertools.combinations(range(len(r)), 2) if r[i] > r[j])
    maj = sum(i + 1 for i in range(len(r) - 1) if r[i] > r[i + 1])
    image = {x for x in w if x}
    holes_img = set(range(1, len(w) + 1)) - image
    between = sum(1 for a in image for c in holes_img if a > c)
    return inv + between, maj + between


@pytest.mark.parametrize("n", range(1, 6))
def test_inv_maj_against_naive(n):
    for k in range(n + 1):
        for w in ps.enumerate_words(n, k):
            s = ps.full_stats(w)
            assert (s.inv, s.maj) == _naive_inv_maj(w.letters)


@pytest.mark.parametrize("n", range(1, 6))
def test_matrix_and_splitting(n):
    for k in range(n + 1):
        for w in ps.enumerate_words(n, k):
            s = ps.full_stats(w)
            M = ps.word_to_matrix(w)
            assert ps.matrix_survivor_inv(M) == s.inv
            assert ps.matrix_survivor_maj(M) == s.maj
            assert s.inv == s.tilde_inv_filled + s.inv_holes


def test_rlmin_presence_condition():
    for w in ps.enumerate_words(5, 2):
        s = ps.full_stats(w)
        if 1 in s.image_set:
            assert 1 in s.rlmin_set
        assert s.rlmin_set <= s.image_set
    # 2 * 3 has no 1 in front of 2, so nothing qualifies
    assert ps.full_stats(LaguerreWord.parse("2 * 3")).rlmin_set == frozenset()
    assert ps.full_stats(LaguerreWord.parse("1 * 2")).rlmin_set == {1, 2}


@pytest.mark.parametrize("n", range(6))
def test_distribution_product_formula(n):
    for k in range(n + 1):
        target = closed_form_thm21(n, k)
        assert ps.distribution(n, k, "maj") == target
        assert ps.distribution(n, k, "inv") == target


def test_distribution_specializations():
    # dropping b gives the q-count, and q = 1 gives the number of words
    for n in range(5):
        for k in range(n + 1):
            p = ps.distribution(n, k, "maj", rlmin=False)
            assert p.subs({"q": 1}) == ps.word_count(n, k)


def test_relabeling_invariance():
    # relabel the filled image order-preservingly: inv/maj of the filled
    # subword only depend on relative order
    for n in range(1, 6):
        for w in ps.enumerate_words(n, 1):
            s = ps.full_stats(w)
            assert s.inv0 == ps.inversions(w.ranked())


def test_holes_restriction_and_between():
    assert ps.between_inversions({3, 5}, {1, 4}) == 3
    p = ps.distribution(3, 1, "tilde_inv_filled", holes=(2,))
    assert p == (b + q) * (b + q + q ** 2)
    total = sum((ps.distribution(4, 2, "maj", holes=I) for I in ps.hole_sets(4, 2)), 0 * b)
    assert total == ps.distribution(4, 2, "maj")


def test_unknown_stat():
    with pytest.raises(ValueError):
        ps.distribution(2, 0, "des")


def test_hrw_small_case():
    lhs, rhs = ps.hrw_sides(3, 0)
    z = var("z")
    expected = 1 + 2 * q + 2 * z + 2 * q ** 2 + 3 * q * z + z ** 2 + q ** 3 + q ** 2 * z
    assert lhs == rhs == expected


@pytest.mark.parametrize("n", range(5))
def test_hrw_z0_is_plain_distribution(n):
    for k in range(n + 1):
        lhs, rhs = ps.hrw_sides(n, k)
        assert lhs == rhs
        assert lhs.subs({"z": 0}) == ps.distribution(n, k, "inv", rlmin=False)


def test_parallel_matches_serial():
    assert ps.distribution(5, 2, "maj", jobs=3) == ps.distribution(5, 2, "maj", jobs=1)
    assert ps.hrw_sides(4, 1, jobs=2) == ps.hrw_sides(4, 1)
