"""Torus knot parameters (m, n) for the group <x, y | x^n = y^m>."""

from __future__ import annotations

from math import gcd

__all__ = ["KnotParams", "UnknotError", "NotCoprimeError", "coprime_pairs"]


class UnknotError(ValueError):
    """m or n equals 1: the presentation degenerates (unknot)."""


class NotCoprimeError(ValueError):
    pass


class KnotParams:
    """Validated coprime pair (m, n), both >= 2.

    By default the pair is normalized so that ``n`` is odd (at most one of m, n
    can be even); ``swapped`` records whether the inputs were exchanged.  Pass
    ``normalize=False`` to keep the given orientation, which matters only for
    eigenvalue labels (A carries x with x^n, B carries y with y^m).
    """

    __slots__ = ("m", "n", "swapped")

    def __init__(self, m: int, n: int, normalize: bool = True):
        if not (isinstance(m, int) and isinstance(n, int)):
            raise TypeError("m and n must be integers")
        if m == 1 or n == 1:
            raise UnknotError(f"({m},{n}) is the unknot; need m, n >= 2")
        if m < 2 or n < 2:
            raise ValueError(f"need m, n >= 2, got ({m},{n})")
        if gcd(m, n) != 1:
            raise NotCoprimeError(f"({m},{n}) is not a coprime pair")
        swapped = normalize and n % 2 == 0
        if swapped:
            m, n = n, m
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "swapped", swapped)

    def __setattr__(self, name, value):
        raise AttributeError("KnotParams is immutable")

    def __eq__(self, other):
        if not isinstance(other, KnotParams):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return f"KnotParams(m={self.m}, n={self.n}, swapped={self.swapped})"

    def flipped(self) -> "KnotParams":
        """The same knot with the roles of m and n exchanged (no normalization)."""
        return KnotParams(self.n, self.m, normalize=False)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def sorted_pair(self) -> tuple[int, int]:
        return (min(self.m, self.n), max(self.m, self.n))

    @property
    def even(self) -> int | None:
        """The even member of the pair, if any."""
        if self.m % 2 == 0:
            return self.m
        if self.n % 2 == 0:
            return self.n
        return None

    @property
    def odd(self) -> int:
        """The partner of ``even`` (or ``n`` when both are odd)."""
        if self.m % 2 == 0:
            return self.n
        return self.m if self.n % 2 == 0 else self.n

    @property
    def mult3(self) -> int | None:
        """The member divisible by 3, if any."""
        if self.m % 3 == 0:
            return self.m
        if self.n % 3 == 0:
            return self.n
        return None

    @property
    def not_mult3(self) -> int:
        if self.m % 3 == 0:
            return self.n
        return self.m if self.n % 3 == 0 else self.n


def coprime_pairs(max_mn: int, min_mn: int = 2):
    """All coprime (m, n) with min_mn <= m < n <= max_mn, sorted."""
    for m in range(min_mn, max_mn + 1):
        for n in range(m + 1, max_mn + 1):
            if gcd(m, n) == 1:
                yield m, n
