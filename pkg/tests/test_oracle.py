import math

import pytest

from stacksort import (
    SizeLimitExceededError,
    fertility_brute,
    fertility_histogram,
    preimages,
)
from conftest import all_perms, image_counts


def test_preimages_of_12():
    assert preimages((1, 2)) == {(1, 2), (2, 1)}


def test_preimages_of_21_empty():
    assert preimages((2, 1)) == set()


def test_preimages_of_identity_3():
    assert preimages((1, 2, 3)) == {
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2), (3, 2, 1)}


def test_preimages_keep_the_original_alphabet():
    assert preimages((2, 13)) == {(2, 13), (13, 2)}


def test_fertility_brute_examples():
    assert fertility_brute((3, 1, 4, 2, 5, 6, 7)) == 27
    assert fertility_brute((1,)) == 1
    assert fertility_brute((2, 1, 3)) == 1


def test_size_limit():
    with pytest.raises(SizeLimitExceededError):
        preimages(tuple(range(1, 12)))
    with pytest.raises(SizeLimitExceededError):
        fertility_histogram(10)
    with pytest.raises(SizeLimitExceededError):
        fertility_brute((1, 2, 3, 4), limit=3)
    # the identity is hit exactly by the stack-sortable words, Catalan-many
    assert fertility_brute((1, 2, 3, 4), limit=4) == 14


def test_histogram_small():
    assert fertility_histogram(1) == {1: 1}
    assert fertility_histogram(2) == {0: 1, 2: 1}
    assert fertility_histogram(3) == {0: 4, 1: 1, 5: 1}


def test_histogram_mass_and_population():
    for n in range(1, 7):
        hist = fertility_histogram(n)
        assert sum(v * c for v, c in hist.items()) == math.factorial(n)
        assert sum(hist.values()) == math.factorial(n)


def test_histogram_matches_image_tally():
    for n in range(1, 7):
        hist = fertility_histogram(n)
        images = image_counts(n)
        positive = {}
        for w in all_perms(n):
            f = images.get(w, 0)
            if f:
                positive[f] = positive.get(f, 0) + 1
        assert {v: c for v, c in hist.items() if v} == positive


def test_no_small_3_mod_4_values():
    for n in range(1, 8):
        assert not set(fertility_histogram(n)) & {3, 7, 11, 15, 19, 23}
