"""Type C_n root and weight combinatorics.

Weights are integer tuples in an orthonormal basis e_1..e_n of the rank-n
weight lattice (so the standard dot product computes all pairings). The
Weyl group is the hyperoctahedral group of signed permutations.

Half-integral quantities, i.e. anything shifted by theta = (1/2,...,1/2),
are handled in doubled integer coordinates: the doubled form of a weight w
is 2w, and of w + theta is 2w + 1 componentwise. Entries of a doubled
vector share one parity, which is checked wherever such vectors are built,
so no floating point or rational rounding ever enters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .linalg import nonneg_combination

Weight = tuple  # tuple[int, ...]


def check_weight(lam) -> Weight:
    lam = tuple(lam)
    if not all(isinstance(c, int) for c in lam):
        raise DomainError(f"weight coordinates must be integers: {lam!r}")
    return lam


def doubled(lam) -> Weight:
    """Doubled coordinates of an integral weight."""
    return tuple(2 * c for c in lam)


def doubled_theta_shift(lam) -> Weight:
    """Doubled coordinates of lam + theta, always an odd integer vector."""
    return tuple(2 * c + 1 for c in lam)


def check_doubled(vec) -> Weight:
    vec = tuple(vec)
    if len({c % 2 for c in vec}) > 1:
        raise DomainError(f"mixed parity in doubled coordinates: {vec!r}")
    return vec


@dataclass(frozen=True)
class SignedPermutation:
    """Hyperoctahedral group element: entry i goes to slot perm[i], scaled
    by signs[i]. Slots and entries are 0-indexed."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise DomainError(f"not a permutation of 0..{n - 1}: {self.perm}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise DomainError(f"signs must be +-1: {self.signs}")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple(range(n)), (1,) * n)

    def act(self, coords):
        """Apply to a coordinate vector (plain or doubled)."""
        out = [0] * len(coords)
        for i, c in enumerate(coords):
            out[self.perm[i]] = self.signs[i] * c
        return tuple(out)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (self * other).act(x) == self.act(other.act(x))."""
        perm = tuple(self.perm[other.perm[i]] for i in range(self.rank))
        signs = tuple(
            other.signs[i] * self.signs[other.perm[i]] for i in range(self.rank)
        )
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.rank
        signs = [1] * self.rank
        for i in range(self.rank):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))

    def sign(self) -> int:
        """Determinant of the signed permutation matrix."""
        inv = 0
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.perm[i] > self.perm[j]:
                    inv += 1
        s = -1 if inv % 2 else 1
        for x in self.signs:
            s *= x
        return s


def signed_permutations(n: int):
    """All 2^n n! group elements."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(perm, signs)


@dataclass(frozen=True)
class RootDataC:
    """Rank-n type C root data plus the weight multisets used elsewhere.

    ``exotic_weights`` is the positive-root multiset with every long root
    2e_i replaced by e_i; it is the torus-weight multiset of the bundle
    whose sections are counted in :mod:`exoticcone.sections`.
    ``canonical_weight`` is (-1,...,-1), the twist by which the canonical
    bundle of the resolution differs from the structure sheaf.
    """

    rank: int
    positive_roots: tuple
    exotic_weights: tuple
    rho_doubled: tuple
    theta_doubled: tuple
    canonical_weight: tuple

    @property
    def u_weights(self) -> tuple:
        return self.positive_roots

    @property
    def rho(self) -> Weight:
        return tuple(c // 2 for c in self.rho_doubled)


def _unit(n: int, i: int, value: int = 1) -> Weight:
    return tuple(value if k == i else 0 for k in range(n))


@lru_cache(maxsize=None)
def root_data(n: int) -> RootDataC:
    if n < 0:
        raise DomainError("rank must be nonnegative")
    short = []
    for i in range(n):
        for j in range(i + 1, n):
            short.append(tuple((k == i) - (k == j) for k in range(n)))
    for i in range(n):
        for j in range(i + 1, n):
            short.append(tuple((k == i) + (k == j) for k in range(n)))
    positive = tuple(short + [_unit(n, i, 2) for i in range(n)])
    exotic = tuple(short + [_unit(n, i, 1) for i in range(n)])
    assert len(positive) == n * n and len(exotic) == n * n
    return RootDataC(
        rank=n,
        positive_roots=positive,
        exotic_weights=exotic,
        rho_doubled=tuple(2 * (n - i) for i in range(n)),
        theta_doubled=(1,) * n,
        canonical_weight=(-1,) * n,
    )


def rho(n: int) -> Weight:
    return root_data(n).rho


def is_dominant(lam) -> bool:
    lam = check_weight(lam)
    return all(a >= b for a, b in zip(lam, lam[1:])) and (
        not lam or lam[-1] >= 0
    )


def require_dominant(lam, name: str = "weight") -> Weight:
    lam = check_weight(lam)
    if not is_dominant(lam):
        raise DomainError(f"{name} must be dominant: {lam}")
    return lam


def dominant_rep(lam):
    """Dominant representative of the W-orbit and a witness w(lam) = rep.

    The representative is the descending sort of absolute values. The
    witness is deterministic: ties are assigned stably (earlier source
    entries land in earlier slots) and zero entries keep sign +1.
    """
    lam = tuple(lam)
    n = len(lam)
    order = sorted(range(n), key=lambda i: (-abs(lam[i]), i))
    perm = [0] * n
    signs = [1] * n
    for slot, src in enumerate(order):
        perm[src] = slot
        if lam[src] < 0:
            signs[src] = -1
    rep = tuple(abs(lam[i]) for i in order)
    return rep, SignedPermutation(tuple(perm), tuple(signs))


def act(w: SignedPermutation, coords):
    return w.act(coords)


def twisted_act(w: SignedPermutation, lam) -> Weight:
    """The theta-shifted action w(lam + theta) - theta, always integral."""
    lam = check_weight(lam)
    img = check_doubled(w.act(doubled_theta_shift(lam)))
    return tuple((c - 1) // 2 for c in img)


def twisted_w0(lam) -> Weight:
    """Image of lam under the twisted action of the longest element."""
    lam = check_weight(lam)
    return tuple(-c - 1 for c in lam)


def bwb(lam):
    """Regularize lam + rho into the strictly dominant chamber.

    Returns None when lam + rho is singular (a zero entry or a repeated
    absolute value), else (sign, mu) where the unique w with w(lam + rho)
    strictly dominant has the given sign and mu = w(lam + rho) - rho.
    """
    lam = check_weight(lam)
    r = rho(len(lam))
    shifted = tuple(a + b for a, b in zip(lam, r))
    magnitudes = [abs(c) for c in shifted]
    if 0 in magnitudes or len(set(magnitudes)) < len(lam):
        return None
    rep, w = dominant_rep(shifted)
    return w.sign(), tuple(a - b for a, b in zip(rep, r))


def weyl_orbit(mu) -> set:
    """The set {w(mu)}; closure of mu under the simple reflections."""
    mu = tuple(mu)
    n = len(mu)
    seen = {mu}
    frontier = [mu]
    while frontier:
        fresh = []
        for v in frontier:
            images = []
            for i in range(n - 1):
                u = list(v)
                u[i], u[i + 1] = u[i + 1], u[i]
                images.append(tuple(u))
            if n:
                u = list(v)
                u[-1] = -u[-1]
                images.append(tuple(u))
            for u in images:
                if u not in seen:
                    seen.add(u)
                    fresh.append(u)
        frontier = fresh
    return seen


def coroot_pairing(lam, alpha) -> Fraction:
    """<lam, alpha-check> = 2 (lam, alpha) / (alpha, alpha)."""
    alpha = tuple(alpha)
    norm = sum(c * c for c in alpha)
    if norm == 0:
        raise DomainError("pairing against the zero vector")
    num = sum(a * b for a, b in zip(lam, alpha))
    return Fraction(2 * num, norm)


def _cone_feasible(target, n: int) -> bool:
    """Is target a nonnegative rational combination of the positive roots?"""
    cols = [list(r) for r in root_data(n).positive_roots]
    return nonneg_combination(cols, list(target)) is not None


def in_conv(lam, mu) -> bool:
    """Does lam lie in the convex hull of the W-orbit of dominant mu?"""
    mu = require_dominant(mu, "mu")
    lam = check_weight(lam)
    if len(lam) != len(mu):
        raise DomainError("rank mismatch")
    rep, _ = dominant_rep(lam)
    return _cone_feasible([a - b for a, b in zip(mu, rep)], len(mu))


def in_conv0(lam, mu) -> bool:
    mu = require_dominant(mu, "mu")
    rep, _ = dominant_rep(lam)
    return rep != tuple(mu) and in_conv(lam, mu)


def _tconv_reps(lam, mu):
    a, _ = dominant_rep(doubled_theta_shift(check_weight(lam)))
    b, _ = dominant_rep(doubled_theta_shift(check_weight(mu)))
    return a, b


def in_tconv(lam, mu) -> bool:
    """Hull membership for the twisted action: lam + theta against the
    orbit of mu + theta, decided on doubled coordinates."""
    a, b = _tconv_reps(lam, mu)
    if len(a) != len(b):
        raise DomainError("rank mismatch")
    return _cone_feasible([x - y for x, y in zip(b, a)], len(a))


def in_tconv0(lam, mu) -> bool:
    a, b = _tconv_reps(lam, mu)
    return a != b and in_tconv(lam, mu)


def quasi_order(weights) -> list:
    """Total order on dominant weights compatible with twisted-hull
    membership: lam in the twisted hull of mu (lam != mu) sorts lam first.

    Key: |2 lam + 1|^2 ascending (four times |lam + theta|^2), ties broken
    lexicographically on coordinates.
    """
    items = [require_dominant(w) for w in weights]

    def key(lam):
        d = doubled_theta_shift(lam)
        return (sum(c * c for c in d), lam)

    return sorted(items, key=key)
