"""
Normal forms and decision procedures for the quotient of B_n by commutators
of transversal half-twists (written TB_n here).

TB_n splits over the symmetric group after fixing the positive section
p |-> tits_lift(p): every element factors uniquely as (section of its
permutation) . (pure part), and the image of the pure part in the coordinate
group G(n) is a complete invariant.  The pair (permutation, GnElement) is
therefore a normal form: two words are equal in TB_n iff their normal forms
agree componentwise.

The scan below computes the normal form in one left-to-right pass.  It
maintains the invariant "processed prefix = tits_lift(perm) . Lambda^-1(g)"
where Lambda is the coordinate map on pure elements, fixed by

    Lambda(X_i^2) = s_{i, i+1},
    Lambda(p_b)   = act_word(Lambda(p), b).

For the letter X_i^e the pure part is conjugated through the letter (the
generator action on g), and whenever the letter folds into the section
(a positive letter at a descent, or an inverse letter at an ascent) the
squared-generator coordinate s_{i,i+1}^{+-1} is absorbed into g on the left.

Completeness of the invariant rests on the coordinate map being an
isomorphism from the pure part of TB_n onto G(n); the verification suites
exercise the load-bearing consequences (homomorphism and equivariance of
Lambda, section independence, kernel detection) rather than assuming them.
"""

from __future__ import annotations

import dataclasses
import random
from functools import lru_cache

from .braid import (
    BraidWord,
    Perm,
    concat,
    inv_word,
    inversions,
    power_word,
    psi,
    tits_lift,
    z_ij,
)
from .gn import (
    GnElement,
    act_generator,
    gn_identity,
    gn_inv,
    gn_mul,
    s_ij,
)


@dataclasses.dataclass(frozen=True)
class TbnNormalForm:
    """The complete invariant of a TB_n element: the permutation and the
    G(n)-coordinate of the pure part relative to the positive section."""

    perm: Perm
    g: GnElement

    @property
    def n(self) -> int:
        return self.perm.n

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "perm": list(self.perm.images),
            "bit": self.g.bit,
            "vec": list(self.g.vec),
        }


def _require_quotient_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"the transversal quotient needs n >= 4, got {n}")


@lru_cache(maxsize=None)
def s2_table(n: int) -> tuple[GnElement, ...]:
    """Coordinates of the squared frame generators: entry i-1 is
    Lambda(X_i^2) = s_{i, i+1}."""
    _require_quotient_n(n)
    return tuple(s_ij(n, i, i + 1) for i in range(1, n))


def c_word(n: int) -> BraidWord:
    """The word [X_1^2, X_2^2], whose normal form is (identity, nu).  It
    generates the (central, order-2) commutator subgroup of the pure part."""
    _require_quotient_n(n)
    return BraidWord(n, (1, 1, 2, 2, -1, -1, -2, -2))


def normal_form(w: BraidWord) -> TbnNormalForm:
    """Scan w once, maintaining (perm, g) with the loop invariant above.

    >>> nf = normal_form(BraidWord(4, (1, 1)))
    >>> nf.perm.is_identity(), nf.g.bit, nf.g.vec
    (True, 0, (1, 0, 0, 0))
    """
    n = w.n
    _require_quotient_n(n)
    table = s2_table(n)
    a = list(range(1, n + 1))      # one-line images of the running permutation
    pos = list(range(n + 1))       # pos[v] = 1-based position of value v
    g = gn_identity(n)
    for letter in w.letters:
        i = abs(letter)
        sign = 1 if letter > 0 else -1
        g = act_generator(g, i, sign)
        ascending = pos[i] < pos[i + 1]
        pi, pj = pos[i], pos[i + 1]
        a[pi - 1], a[pj - 1] = a[pj - 1], a[pi - 1]
        pos[i], pos[i + 1] = pj, pi
        # A letter that does not extend the positive section leaves a squared
        # generator behind; absorb its coordinate into the pure part.
        if sign > 0 and not ascending:
            g = gn_mul(table[i - 1], g)
        elif sign < 0 and ascending:
            g = gn_mul(gn_inv(table[i - 1]), g)
    return TbnNormalForm(Perm(n, tuple(a)), g)


def tbn_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality in the quotient: equality of normal forms."""
    if w1.n != w2.n:
        raise ValueError(f"mismatched strand counts {w1.n} and {w2.n}")
    return normal_form(w1) == normal_form(w2)


def in_kernel(w: BraidWord) -> bool:
    """Whether w lies in the kernel of B_n -> TB_n (trivial normal form)."""
    nf = normal_form(w)
    return nf.perm.is_identity() and nf.g == gn_identity(w.n)


def lift(g: GnElement) -> BraidWord:
    """A pure word whose normal form is (identity, g).

    The degree coordinate is realised by X_1^2, the coordinate V_1 by
    Z_23^2 Z_13^-2 and each V_j (j >= 2) by Z_{1,j+1}^2 Z_{1,j}^-2; a final
    central correction word fixes the bit.  The result is one canonical
    representative, not a shortest one.
    """
    n = g.n
    _require_quotient_n(n)
    parts = [power_word(BraidWord(n, (1, 1)), g.vec[0])]
    v1_factor = concat(power_word(z_ij(n, 2, 3), 2), power_word(z_ij(n, 1, 3), -2))
    parts.append(power_word(v1_factor, g.vec[1]))
    for j in range(2, n):
        factor = concat(
            power_word(z_ij(n, 1, j + 1), 2),
            power_word(z_ij(n, 1, j), -2),
        )
        parts.append(power_word(factor, g.vec[j]))
    word = concat(*parts)
    nf = normal_form(word)
    assert nf.perm.is_identity() and nf.g.vec == g.vec, "lift missed its target"
    if nf.g.bit != g.bit:
        word = concat(word, c_word(n))
    return word


def word_of(nf: TbnNormalForm) -> BraidWord:
    """One word representing the normal form: section word, then pure lift."""
    return concat(tits_lift(nf.perm), lift(nf.g))


def tbn_mul(a: TbnNormalForm, b: TbnNormalForm) -> TbnNormalForm:
    if a.n != b.n:
        raise ValueError(f"mismatched sizes {a.n} and {b.n}")
    return normal_form(concat(word_of(a), word_of(b)))


def tbn_inv(a: TbnNormalForm) -> TbnNormalForm:
    return normal_form(inv_word(word_of(a)))


def degree_decomposition(w: BraidWord) -> tuple[int, int, tuple[int, ...], int]:
    """Coordinates of w along the filtration of the quotient: the Coxeter
    length of its permutation, the degree coordinate, the remaining free
    abelian coordinates and the central bit.  Satisfies

        exponent_sum(w) = length + 2 * degree.
    """
    nf = normal_form(w)
    return (inversions(psi(w)), nf.g.vec[0], nf.g.vec[1:], nf.g.bit)


def rescan_through_section(nf: TbnNormalForm, rng: random.Random) -> TbnNormalForm:
    """Rebuild a representative word through a randomized reduced word for
    the section and rescan it.  Section independence says this must return
    nf itself, whatever reduced-word convention the randomization picks."""
    section = tits_lift(nf.perm, rng)
    return normal_form(concat(section, lift(nf.g)))
