import random

import pytest
from hypothesis import given, strategies as st

from tbraid.freegroup import (
    FreeWord,
    fw_apply,
    fw_identity_images,
    fw_inv,
    fw_mul,
    fw_reduce,
)

letters = st.lists(st.sampled_from([k for k in range(-4, 5) if k]), max_size=24)


def test_reduce_examples():
    assert fw_reduce([1, -1], 4).letters == ()
    assert fw_reduce([1, 2, -2, 1], 4).letters == (1, 1)
    assert fw_reduce([2, 1, -1, -2, 3], 4).letters == (3,)


def test_reduce_rejects_out_of_range():
    with pytest.raises(ValueError):
        fw_reduce([5], 4)
    with pytest.raises(ValueError):
        fw_reduce([0], 4)


@given(letters)
def test_reduce_idempotent(raw):
    once = fw_reduce(raw, 4)
    assert fw_reduce(once.letters, 4) == once


@given(letters)
def test_reduce_confluent(raw):
    # Cancelling adjacent inverse pairs in any order reaches the same word.
    rng = random.Random(12345)
    word = list(raw)
    while True:
        hits = [k for k in range(len(word) - 1) if word[k] == -word[k + 1]]
        if not hits:
            break
        k = rng.choice(hits)
        del word[k:k + 2]
    assert tuple(word) == fw_reduce(raw, 4).letters


def test_mul_examples():
    assert fw_mul(FreeWord(4, (1,)), FreeWord(4, (-1,))).letters == ()
    assert fw_mul(FreeWord(4, (1, 2)), FreeWord(4, (-2, 3))).letters == (1, 3)
    w = FreeWord(4, (2, -3, 1))
    assert fw_mul(FreeWord(4, ()), w) == w


def test_mul_rejects_mismatched_rank():
    with pytest.raises(ValueError):
        fw_mul(FreeWord(3, (1,)), FreeWord(4, (1,)))


@given(letters, letters, letters)
def test_mul_associative(a, b, c):
    wa, wb, wc = (fw_reduce(x, 4) for x in (a, b, c))
    assert fw_mul(fw_mul(wa, wb), wc) == fw_mul(wa, fw_mul(wb, wc))


@given(letters)
def test_mul_inverse_cancels(a):
    w = fw_reduce(a, 4)
    assert fw_mul(w, fw_inv(w)).letters == ()
    assert fw_mul(fw_inv(w), w).letters == ()


def test_inv_examples():
    assert fw_inv(FreeWord(4, (1, 2))).letters == (-2, -1)
    assert fw_inv(FreeWord(4, ())).letters == ()
    w = FreeWord(4, (1, -2, 3))
    assert fw_inv(fw_inv(w)) == w


def test_apply_identity_and_substitution():
    assert fw_apply(fw_identity_images(3), FreeWord(3, (1, 2))).letters == (1, 2)
    images = [FreeWord(3, (2,)), FreeWord(3, (2, 1, -2)), FreeWord(3, (3,))]
    assert fw_apply(images, FreeWord(3, (1,))).letters == (2,)
    assert fw_apply(images, FreeWord(3, (-1,))).letters == (-2,)


def test_apply_rejects_bad_image_count():
    with pytest.raises(ValueError):
        fw_apply([FreeWord(3, (1,))], FreeWord(3, (1,)))


@given(letters, letters)
def test_apply_multiplicative(a, b):
    images = [FreeWord(4, (2,)), FreeWord(4, (2, 1, -2)),
              FreeWord(4, (4, 3)), FreeWord(4, (-1,))]
    wa, wb = fw_reduce(a, 4), fw_reduce(b, 4)
    assert fw_apply(images, fw_mul(wa, wb)) == fw_mul(
        fw_apply(images, wa), fw_apply(images, wb))
