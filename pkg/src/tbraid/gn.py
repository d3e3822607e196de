"""
Exact arithmetic in the coordinate group G(n), a central extension of Z^n by
Z/2.

Let A(n) be the free abelian group on S_1, V_1, ..., V_{n-1}, carrying the
symmetric Z/2-valued pairing Q with

    Q(S_1, V_2) = 1,   Q(V_i, V_{i+1}) = 1   (all other pairs 0).

G(n) is generated by s_1, u_1, ..., u_{n-1} (abelianizing to S_1, V_1, ...),
together with a central involution nu, subject to: generators with Q = 0
commute, and each pair with Q = 1 has commutator nu.  Every element is then
uniquely

    nu^bit . s_1^{v0} . u_1^{v1} . ... . u_{n-1}^{v_{n-1}}

in this fixed generator order, which is the canonical form stored here.
Multiplication reorders the concatenation back into canonical form; each swap
of a pair with Q = 1 contributes nu, giving the 2-cocycle

    beta(x, y) = sum over k > j of x[k] y[j] Q[k][j]  (mod 2).

The group carries an action of the braid quotient: the generator action
tables below define automorphisms satisfying the braid relations, under which
the quadrangle relator acts trivially.  The table is read as the right action
g |-> g_{X_i}; inverse actions are derived generically by inverting the
abelianized matrix and fixing the central bits.

Elements also serve as the pure-braid coordinates of the quotient's normal
form: s_ij below is the image of the squared half-twist with endpoints
{i, j}, and slot 0 of the vector is the degree coordinate.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .braid import BraidWord


@dataclasses.dataclass(frozen=True)
class GnElement:
    """Canonical form nu^bit . s_1^{vec[0]} . u_1^{vec[1]} ... of an element
    of G(n).  vec has length n; bit is 0 or 1."""

    n: int
    bit: int
    vec: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"G(n) needs n >= 3, got {self.n}")
        if len(self.vec) != self.n:
            raise ValueError(f"vector length {len(self.vec)} != n = {self.n}")
        object.__setattr__(self, "bit", self.bit % 2)
        object.__setattr__(self, "vec", tuple(self.vec))


@lru_cache(maxsize=None)
def q_form(n: int) -> tuple[tuple[int, ...], ...]:
    """The pairing Q as a symmetric 0/1 matrix on indices 0..n-1, where index
    0 is S_1 and index i >= 1 is V_i."""
    q = [[0] * n for _ in range(n)]
    q[0][2] = q[2][0] = 1
    for i in range(1, n - 1):
        q[i][i + 1] = q[i + 1][i] = 1
    return tuple(tuple(row) for row in q)


@lru_cache(maxsize=None)
def _q_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (k, j) with k > j and Q[k][j] = 1."""
    return ((2, 0),) + tuple((i + 1, i) for i in range(1, n - 1))


def beta(x: Sequence[int], y: Sequence[int], n: int) -> int:
    """The reordering cocycle: swaps of x-generators past y-generators."""
    return sum(x[k] * y[j] for k, j in _q_pairs(n)) % 2


def q_value(x: Sequence[int], y: Sequence[int], n: int) -> int:
    """The full pairing Q(x, y) = beta(x, y) + beta(y, x) mod 2."""
    return (beta(x, y, n) + beta(y, x, n)) % 2


def gn_identity(n: int) -> GnElement:
    return GnElement(n, 0, (0,) * n)


def gn_nu(n: int) -> GnElement:
    """The central involution nu = [u_1, u_2]."""
    return GnElement(n, 1, (0,) * n)


def gn_generator(n: int, k: int) -> GnElement:
    """Canonical generator number k: s_1 for k = 0, u_k for 1 <= k <= n-1."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for n = {n}")
    vec = [0] * n
    vec[k] = 1
    return GnElement(n, 0, tuple(vec))


def gn_s1(n: int) -> GnElement:
    return gn_generator(n, 0)


def gn_u(n: int, i: int) -> GnElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"u-index {i} out of range for n = {n}")
    return gn_generator(n, i)


def gn_mul(a: GnElement, b: GnElement) -> GnElement:
    if a.n != b.n:
        raise ValueError(f"mismatched sizes {a.n} and {b.n}")
    bit = (a.bit + b.bit + beta(a.vec, b.vec, a.n)) % 2
    return GnElement(a.n, bit, tuple(x + y for x, y in zip(a.vec, b.vec)))


def gn_inv(a: GnElement) -> GnElement:
    bit = (a.bit + beta(a.vec, a.vec, a.n)) % 2
    return GnElement(a.n, bit, tuple(-x for x in a.vec))


def gn_pow(g: GnElement, m: int) -> GnElement:
    bit = (m * g.bit + (m * (m - 1) // 2) * beta(g.vec, g.vec, g.n)) % 2
    return GnElement(g.n, bit, tuple(m * x for x in g.vec))


def gn_commutator(a: GnElement, b: GnElement) -> GnElement:
    """[a, b] = a b a^-1 b^-1; always central, equal to nu^Q(ab(a), ab(b))."""
    return gn_mul(gn_mul(a, b), gn_mul(gn_inv(a), gn_inv(b)))


def ab_vector(g: GnElement) -> tuple[int, ...]:
    """Coordinates of g in the abelianization A(n)."""
    return g.vec


def gn_product(factors: Iterable[GnElement], n: int) -> GnElement:
    out = gn_identity(n)
    for f in factors:
        out = gn_mul(out, f)
    return out


def s_ij(n: int, i: int, j: int) -> GnElement:
    """The distinguished element s_ij, the coordinate of the squared
    half-twist with endpoints {i, j}:

        s_12 = s_1
        s_1j = u_{j-1} ... u_2 . s_1                       (j >= 3)
        s_2j = nu . u_{j-1} ... u_1 . s_1                  (j >= 3)
        s_ij = nu . u_{j-1} ... u_1 . u_{i-1} ... u_2 . s_1  (i >= 3)
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    if (i, j) == (1, 2):
        return gn_s1(n)
    factors: list[GnElement] = []
    if i >= 2:
        factors.append(gn_nu(n))
        factors.extend(gn_u(n, m) for m in range(j - 1, 0, -1))
        factors.extend(gn_u(n, m) for m in range(i - 1, 1, -1))
    else:
        factors.extend(gn_u(n, m) for m in range(j - 1, 1, -1))
    factors.append(gn_s1(n))
    return gn_product(factors, n)


def embed(g: GnElement, m: int) -> GnElement:
    """The natural embedding G(n) -> G(m) for m >= n (zero-padding)."""
    if m < g.n:
        raise ValueError(f"cannot embed G({g.n}) into smaller G({m})")
    return GnElement(m, g.bit, g.vec + (0,) * (m - g.n))


# ---------------------------------------------------------------------------
# the generator action


@lru_cache(maxsize=None)
def action_images(n: int, i: int) -> tuple[GnElement, ...]:
    """Images of the canonical generators under the action of X_i.

    Per-generator rules (everything not listed is fixed):

        X_1:        u_1 -> u_1^-1 nu,  u_2 -> u_1 u_2
        X_2:        s_1 -> u_2 s_1,  u_1 -> u_2 u_1,  u_2 -> u_2^-1 nu,
                    u_3 -> u_2 u_3
        X_k, k>=3:  u_{k-1} -> u_k u_{k-1},  u_k -> u_k^-1 nu,
                    u_{k+1} -> u_k u_{k+1}
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n = {n}")
    images = [gn_generator(n, k) for k in range(n)]

    def mul_into(k: int, left: GnElement) -> None:
        images[k] = gn_mul(left, images[k])

    def invert_nu(k: int) -> None:
        images[k] = gn_mul(gn_nu(n), gn_inv(images[k]))

    if i == 1:
        invert_nu(1)
        mul_into(2, gn_u(n, 1))
    elif i == 2:
        mul_into(0, gn_u(n, 2))
        mul_into(1, gn_u(n, 2))
        invert_nu(2)
        if n >= 4:
            mul_into(3, gn_u(n, 2))
    else:
        mul_into(i - 1, gn_u(n, i))
        invert_nu(i)
        if i + 1 <= n - 1:
            mul_into(i + 1, gn_u(n, i))
    return tuple(images)


def _invert_unimodular(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of an integer matrix with determinant +-1."""
    m = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)]
         for i, row in enumerate(rows)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [[a[i][m + j] for j in range(m)] for i in range(m)]
    assert all(x.denominator == 1 for row in inv for x in row), "matrix not unimodular"
    return [[int(x) for x in row] for row in inv]


def _apply_images(images: Sequence[GnElement], g: GnElement) -> GnElement:
    """Apply the endomorphism with the given generator images to g, using the
    canonical decomposition of g."""
    out = GnElement(g.n, g.bit, (0,) * g.n)
    for k, e in enumerate(g.vec):
        if e:
            out = gn_mul(out, gn_pow(images[k], e))
    return out


@lru_cache(maxsize=None)
def action_inverse_images(n: int, i: int) -> tuple[GnElement, ...]:
    """Images of the canonical generators under the inverse of the X_i
    action, computed generically: invert the abelianized (unimodular) matrix
    for the vectors, then fix each central bit by composing with the forward
    map."""
    fwd = action_images(n, i)
    matrix = [list(img.vec) for img in fwd]
    inv_matrix = _invert_unimodular(matrix)
    images = []
    for k in range(n):
        candidate = GnElement(n, 0, tuple(inv_matrix[k]))
        round_trip = _apply_images(fwd, candidate)
        assert round_trip.vec == gn_generator(n, k).vec, "bad abelian inverse"
        images.append(GnElement(n, round_trip.bit, candidate.vec))
    return tuple(images)


def act_generator(g: GnElement, i: int, sign: int) -> GnElement:
    """The automorphism of G(n) attached to the braid letter X_i^sign."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +-1, got {sign}")
    images = action_images(g.n, i) if sign > 0 else action_inverse_images(g.n, i)
    return _apply_images(images, g)


def act_word(g: GnElement, w: BraidWord) -> GnElement:
    """Right action of a braid word, folded letter by letter."""
    if g.n != w.n:
        raise ValueError(f"mismatched sizes {g.n} and {w.n}")
    for letter in w.letters:
        g = act_generator(g, abs(letter), 1 if letter > 0 else -1)
    return g


# ---------------------------------------------------------------------------
# text format


def parse_element(text: str, n: int) -> GnElement:
    """Parse the shared element format "bit;v0,v1,...,v{n-1}"."""
    head, sep, tail = text.partition(";")
    if not sep:
        raise ValueError(f"bad element {text!r}: missing ';'")
    if head.strip() not in ("0", "1"):
        raise ValueError(f"bad element bit {head!r}: must be 0 or 1")
    parts = tail.split(",")
    if len(parts) != n:
        raise ValueError(f"bad element {text!r}: expected {n} coordinates")
    vec = []
    for token in parts:
        try:
            vec.append(int(token))
        except ValueError:
            raise ValueError(f"bad element coordinate {token.strip()!r}") from None
    return GnElement(n, int(head), tuple(vec))


def format_element(g: GnElement) -> str:
    return f"{g.bit};{','.join(str(x) for x in g.vec)}"
