"""Exact arithmetic for the fixed root datum with roots of type B_n and
coweights of type C_n.

All coweight coordinates are half-integers, stored as integers scaled by 2.
Roots are plain integer vectors in the epsilon coordinates.  Everything here
is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

Root = tuple[int, ...]


@dataclass(frozen=True)
class Coweight:
    """A point of the half-integer lattice, coordinates scaled by 2."""

    doubled: tuple[int, ...]

    @staticmethod
    def zero(n: int) -> "Coweight":
        return Coweight((0,) * n)

    @staticmethod
    def integral(coords) -> "Coweight":
        """Build from whole-number coordinates."""
        return Coweight(tuple(2 * c for c in coords))

    @property
    def rank(self) -> int:
        return len(self.doubled)

    def halves(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    def __add__(self, other: "Coweight") -> "Coweight":
        _check_rank(self, other)
        return Coweight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        _check_rank(self, other)
        return Coweight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-a for a in self.doubled))

    def __str__(self) -> str:
        return "(" + ", ".join(str(h) for h in self.halves()) + ")"

    def to_json_obj(self) -> list[int]:
        return list(self.doubled)

    @staticmethod
    def from_json_obj(obj, n: int) -> "Coweight":
        if not isinstance(obj, list) or len(obj) != n or not all(isinstance(x, int) for x in obj):
            raise ValueError(f"expected a list of {n} doubled integer coordinates, got {obj!r}")
        return Coweight(tuple(obj))


class AffineRoot(NamedTuple):
    """A positive root together with an integer hyperplane level."""

    root: Root
    level: int


@dataclass(frozen=True)
class RootSystem:
    rank: int
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    rho: Coweight


def _check_rank(a: Coweight, b: Coweight) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def _unit(n: int, i: int, sign: int = 1) -> Root:
    v = [0] * n
    v[i] = sign
    return tuple(v)


@lru_cache(maxsize=None)
def root_system(n: int) -> RootSystem:
    """The rank-n root system {eps_i} | {eps_i - eps_j} | {eps_i + eps_j} (i < j)."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    positive: list[Root] = [_unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            positive.append(tuple((1 if k == i else 0) + (-1 if k == j else 0) for k in range(n)))
    for i in range(n):
        for j in range(i + 1, n):
            positive.append(tuple((1 if k == i else 0) + (1 if k == j else 0) for k in range(n)))
    simple = tuple(
        tuple((1 if k == i else 0) + (-1 if k == i + 1 else 0) for k in range(n))
        if i < n - 1
        else _unit(n, n - 1)
        for i in range(n)
    )
    # rho = half the sum of positive roots; coordinate k is n - k - 1/2 (0-based).
    rho = Coweight(tuple(2 * (n - k) - 1 for k in range(n)))
    return RootSystem(n, tuple(positive), simple, rho)


def simple_root(i: int, n: int) -> Root:
    """The i-th simple root, 1-based: eps_i - eps_{i+1} for i < n, eps_n for i = n."""
    if not 1 <= i <= n:
        raise ValueError(f"simple root index {i} out of range 1..{n}")
    return root_system(n).simple_roots[i - 1]


def is_root(alpha: Root, n: int) -> bool:
    rs = root_system(n)
    return alpha in rs.positive_roots or tuple(-a for a in alpha) in rs.positive_roots


def pairing2(alpha: Root, v: Coweight) -> int:
    """Twice the pairing <alpha, v>, an exact integer."""
    if len(alpha) != v.rank:
        raise ValueError(f"dimension mismatch: root has {len(alpha)}, vector has {v.rank}")
    return sum(a * d for a, d in zip(alpha, v.doubled))


def pairing(alpha: Root, v: Coweight) -> Fraction:
    """The pairing <alpha, v> as an exact half-integer."""
    return Fraction(pairing2(alpha, v), 2)


def coroot_vec(alpha: Root, n: int) -> Root:
    """The coroot 2*alpha/<alpha,alpha> as an integer vector."""
    if not is_root(alpha, n):
        raise ValueError(f"{alpha} is not a root of rank {n}")
    norm2 = sum(a * a for a in alpha)
    if norm2 == 1:
        return tuple(2 * a for a in alpha)
    return alpha


def coroot(alpha: Root, n: int) -> Coweight:
    """The coroot of alpha as a coweight."""
    return Coweight.integral(coroot_vec(alpha, n))


def reflect(v: Coweight, wall: AffineRoot) -> Coweight:
    """Affine reflection of v across the hyperplane <root, x> = level."""
    n = v.rank
    co = coroot_vec(wall.root, n)
    # s(x) = x - (<a,x> - m) a^vee; the factor below is twice (<a,x> - m).
    factor = pairing2(wall.root, v) - 2 * wall.level
    return Coweight(tuple(d - factor * c for d, c in zip(v.doubled, co)))


def is_dominant(v: Coweight) -> bool:
    """Membership in the closed dominant chamber x1 >= ... >= xn >= 0."""
    d = v.doubled
    return all(d[k] >= d[k + 1] for k in range(len(d) - 1)) and d[-1] >= 0


def fundamental_coweight(l: int, n: int) -> Coweight:
    """omega_l = eps_1 + ... + eps_l."""
    if not 1 <= l <= n:
        raise ValueError(f"fundamental coweight index {l} out of range 1..{n}")
    return Coweight.integral(tuple(1 if k < l else 0 for k in range(n)))


def simple_coroot_coefficients(v: Coweight) -> tuple[int, ...]:
    """Write v as an integer combination of simple coroots, or raise.

    The simple coroots are eps_i - eps_{i+1} for i < n and 2*eps_n.
    """
    if not v.is_integral():
        raise ValueError(f"{v} is not an integral vector")
    coords = [d // 2 for d in v.doubled]
    n = len(coords)
    coeffs = []
    partial = 0
    for k in range(n - 1):
        partial += coords[k]
        coeffs.append(partial)
    total = partial + coords[-1]
    if total % 2 != 0:
        raise ValueError(f"{v} is not in the coroot lattice")
    coeffs.append(total // 2)
    return tuple(coeffs)


def mv_dimension(lam: Coweight, mu: Coweight) -> int:
    """<rho, lam + mu>, the dimension of the cycles attached to (lam, mu).

    Requires lam dominant and lam + mu a nonnegative integer combination of
    positive coroots.
    """
    _check_rank(lam, mu)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    total = lam + mu
    coeffs = simple_coroot_coefficients(total)
    if any(c < 0 for c in coeffs):
        raise ValueError(f"{total} is not a nonnegative combination of positive coroots")
    # <rho, sum n_i alpha_i^vee> = sum n_i.
    return sum(coeffs)


def alpha_coefficients(alpha: Root, n: int) -> tuple[int, ...]:
    """Coefficients of a root in the simple-root basis (display helper)."""
    if len(alpha) != n:
        raise ValueError("dimension mismatch")
    coeffs = []
    partial = 0
    for k in range(n):
        partial += alpha[k]
        coeffs.append(partial)
    return tuple(coeffs)
