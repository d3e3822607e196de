"""
Reduced words in a finitely generated free group.

A word over the free group F_n is a sequence of nonzero integer "letters" in
{-n, ..., -1, 1, ..., n}: the letter k > 0 is the k-th generator, -k its
inverse.  Words are stored freely reduced (no letter adjacent to its own
inverse) and reduction happens eagerly on construction, so equality of group
elements is plain equality of letter tuples.

The only nontrivial operation is fw_apply, the substitution homomorphism: it
sends each generator to a prescribed word and extends multiplicatively.  The
braid module uses it to realise braid groups as automorphisms of F_n.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence with a stack; O(length)."""
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A freely reduced word over the alphabet {±1, ..., ±n}.

    The constructor reduces its input, so any two FreeWords representing the
    same group element compare equal.

    >>> FreeWord(3, (1, 2, -2, 1)).letters
    (1, 1)
    >>> FreeWord(3, (2, 1, -1, -2, 3)).letters
    (3,)
    """

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"free group rank must be >= 1, got {self.n}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.n:
                raise ValueError(f"letter {letter} out of range for rank {self.n}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)


def fw_identity(n: int) -> FreeWord:
    return FreeWord(n, ())


def fw_gen(n: int, k: int) -> FreeWord:
    """The k-th generator x_k (or its inverse for k < 0) as a word."""
    return FreeWord(n, (k,))


def fw_reduce(raw: Sequence[int], n: int) -> FreeWord:
    """Freely reduce a raw letter sequence over the rank-n alphabet.

    Idempotent: reducing an already reduced word returns it unchanged.

    >>> fw_reduce([1, -1], 2).letters
    ()
    """
    return FreeWord(n, tuple(raw))


def fw_mul(a: FreeWord, b: FreeWord) -> FreeWord:
    """Product in the free group (concatenate, then reduce)."""
    if a.n != b.n:
        raise ValueError(f"mismatched ranks {a.n} and {b.n}")
    return FreeWord(a.n, a.letters + b.letters)


def fw_inv(a: FreeWord) -> FreeWord:
    """Inverse: reverse the word and flip every sign.

    The inverse of a reduced word is reduced, so this never re-reduces.
    """
    return FreeWord(a.n, tuple(-letter for letter in reversed(a.letters)))


def fw_apply(images: Sequence[FreeWord], w: FreeWord) -> FreeWord:
    """Apply the substitution homomorphism x_k -> images[k-1] to w.

    Negative letters map to the inverse of the corresponding image, so the
    extension is multiplicative: fw_apply(im, a*b) == fw_apply(im, a) *
    fw_apply(im, b).

    >>> im = [FreeWord(2, (2,)), FreeWord(2, (2, 1, -2))]
    >>> fw_apply(im, FreeWord(2, (1,))).letters
    (2,)
    """
    if len(images) != w.n:
        raise ValueError(f"need {w.n} generator images, got {len(images)}")
    m = images[0].n
    if any(img.n != m for img in images):
        raise ValueError("generator images must share one alphabet")
    out: list[int] = []
    for letter in w.letters:
        img = images[abs(letter) - 1].letters
        seq = img if letter > 0 else tuple(-x for x in reversed(img))
        for x in seq:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return FreeWord(m, tuple(out))


def fw_identity_images(n: int) -> list[FreeWord]:
    """Generator images of the identity endomorphism of F_n."""
    return [fw_gen(n, k) for k in range(1, n + 1)]
