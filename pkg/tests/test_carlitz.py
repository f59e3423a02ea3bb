import pytest

from mahonian import carlitz as cz
from mahonian.permstats import inversions, major_index
from mahonian.polyring import var

q, z = var("q"), var("z")
RUNNING = (2, 1, 2, 6, 5, 4, 4, 3)


def test_enumerate_multiset():
    assert len(list(cz.enumerate_multiset((1, 1, 1)))) == 6
    assert list(cz.enumerate_multiset((2, 1))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(cz.enumerate_multiset((0, 0))) == [()]


@pytest.mark.parametrize("alphabet", [(2, 2, 1), (1, 3), (3, 1, 2), (1, 1, 1, 1)])
def test_multiset_count(alphabet):
    words = list(cz.enumerate_multiset(alphabet))
    assert len(words) == len(set(words)) == cz.multiset_count(alphabet)


def test_running_example():
    assert cz.b_code(RUNNING) == (0, 1, 0, 0, 1, 1, 3, 4)
    assert sum(cz.b_code(RUNNING)) == inversions(RUNNING) == 10
    trace = []
    assert cz.carlitz_psi(RUNNING, trace) == (2, 6, 5, 4, 4, 1, 2, 3)
    assert trace[4] == (2, 4, 1, 2, 3)
    assert cz.carlitz_psi_inverse((2, 6, 5, 4, 4, 1, 2, 3)) == RUNNING
    assert cz.rlmin_multiset(RUNNING) == {1, 3}
    assert cz.rlmin_multiset((2, 6, 5, 4, 4, 1, 2, 3)) == {1, 3}


def test_sorted_word_is_fixed():
    w = (1, 1, 2, 3, 3)
    assert cz.b_code(w) == (0,) * 5
    assert cz.carlitz_psi(w) == w == cz.carlitz_psi_inverse(w)
    assert cz.rlmin_multiset(w) == {1, 2, 3}


def test_repeated_maximum_not_rightmost():
    # the second 3 is inserted at the front, left of the first
    assert cz.carlitz_psi((3, 3, 1, 2)) == (3, 1, 3, 2)
    assert cz.carlitz_psi_inverse((3, 1, 3, 2)) == (3, 3, 1, 2)


def test_b_code_round_trip():
    for w in cz.enumerate_multiset((2, 2, 1)):
        assert cz.word_from_b_code((2, 2, 1), cz.b_code(w)) == w


@pytest.mark.parametrize("alphabet", [(2, 2, 1), (1, 2, 1, 1), (3, 2), (2, 1, 1, 2)])
def test_psi_bijection_and_statistics(alphabet):
    words = list(cz.enumerate_multiset(alphabet))
    images = {cz.carlitz_psi(w) for w in words}
    assert images == set(words)
    for w in words:
        p = cz.carlitz_psi(w)
        assert major_index(p) == inversions(w)
        assert cz.rlmin_multiset(p) == cz.rlmin_multiset(w)
        assert cz.carlitz_psi_inverse(p) == w


def test_slot_labels():
    # 2 4 1 2 3: one descent slot (before the 1), labelled 1
    assert cz.slot_labels((2, 4, 1, 2, 3)) == [2, 3, 1, 4, 5, 0]
    assert cz.slot_labels(()) == [0]


def test_wilson_sides_small():
    assert cz.wilson_sides((1, 1)) == (1 + q + z, 1 + q + z)
    assert cz.wilson_sides((2,)) == (1, 1)
    expected = 1 + 2 * q + 2 * q ** 2 + q ** 3 + z * (2 + 3 * q + q ** 2) + z ** 2
    lhs, rhs = cz.wilson_sides((1, 1, 1))
    assert lhs == rhs == expected


def test_compositions_and_parse():
    assert sorted(cz.compositions(3, 2)) == [(1, 2), (2, 1), (3,)]
    assert list(cz.compositions(0, 4)) == [()]
    assert cz.parse_alphabet("2, 1,3") == (2, 1, 3)
    with pytest.raises(ValueError):
        cz.parse_alphabet("2,-1")
