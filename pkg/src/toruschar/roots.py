"""Exact roots of unity as exponents, and eigenvalue labels of irreducible strata."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import gcd, pi

from .knot import KnotParams

__all__ = ["RootExp", "EigenLabel", "InvalidLabel"]


class InvalidLabel(ValueError):
    pass


@dataclass(frozen=True)
class RootExp:
    """The root of unity exp(2 pi i k / order), with k reduced mod order."""

    k: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        object.__setattr__(self, "k", self.k % self.order)

    def at_order(self, order: int) -> "RootExp":
        if order % self.order:
            raise ValueError(f"{order} is not a multiple of {self.order}")
        return RootExp(self.k * (order // self.order), order)

    def reduced(self) -> "RootExp":
        """Same root at its exact multiplicative order."""
        g = gcd(self.k, self.order)
        return RootExp(self.k // g, self.order // g)

    def __mul__(self, other: "RootExp") -> "RootExp":
        N = self.order * other.order // gcd(self.order, other.order)
        return RootExp(self.at_order(N).k + other.at_order(N).k, N)

    def __pow__(self, e: int) -> "RootExp":
        return RootExp(self.k * e, self.order)

    def inverse(self) -> "RootExp":
        return RootExp(-self.k, self.order)

    def __eq__(self, other):
        if not isinstance(other, RootExp):
            return NotImplemented
        a, b = self.reduced(), other.reduced()
        return a.k == b.k and a.order == b.order

    def __hash__(self):
        r = self.reduced()
        return hash((r.k, r.order))

    def is_one(self) -> bool:
        return self.k == 0

    def to_complex(self) -> complex:
        return cmath.exp(2j * pi * self.k / self.order)


@dataclass(frozen=True)
class EigenLabel:
    """Eigenvalue data [(ε_1..ε_r), (ϵ_1..ϵ_r)] of an irreducible stratum.

    ``a_exps`` are exponents of the eigenvalues of A (image of x), ``b_exps``
    of B (image of y), all at the common ``order``.  Both tuples are sorted,
    which is the canonical representative modulo S_r x S_r.
    """

    a_exps: tuple[int, ...]
    b_exps: tuple[int, ...]
    order: int

    def __post_init__(self):
        a = tuple(sorted(int(x) % self.order for x in self.a_exps))
        b = tuple(sorted(int(x) % self.order for x in self.b_exps))
        object.__setattr__(self, "a_exps", a)
        object.__setattr__(self, "b_exps", b)

    @classmethod
    def make(cls, a_exps, b_exps, order) -> "EigenLabel":
        return cls(tuple(a_exps), tuple(b_exps), order)

    @property
    def rank(self) -> int:
        return len(self.a_exps)

    @property
    def a_eigs(self) -> tuple[RootExp, ...]:
        return tuple(RootExp(k, self.order) for k in self.a_exps)

    @property
    def b_eigs(self) -> tuple[RootExp, ...]:
        return tuple(RootExp(k, self.order) for k in self.b_exps)

    def a_values(self) -> list[complex]:
        return [r.to_complex() for r in self.a_eigs]

    def b_values(self) -> list[complex]:
        return [r.to_complex() for r in self.b_eigs]

    def shifted(self, a_shift: int, b_shift: int) -> "EigenLabel":
        """Multiply all A-eigenvalues by exp(2πi a_shift/order), B likewise."""
        return EigenLabel(
            tuple(x + a_shift for x in self.a_exps),
            tuple(x + b_shift for x in self.b_exps),
            self.order,
        )

    def swapped(self) -> "EigenLabel":
        return EigenLabel(self.b_exps, self.a_exps, self.order)

    def varpi(self, p: KnotParams) -> int:
        """Exponent (at ``order``) of the common value ε_i^n = ϵ_j^m."""
        return (p.n * self.a_exps[0]) % self.order

    def validate(self, p: KnotParams, special: bool = True) -> None:
        """Raise InvalidLabel unless the label is admissible for ``p``.

        Checks: equal lengths >= 2, order = r*m*n, ε_i^n all equal one ϖ,
        ϵ_j^m equal the same ϖ, ϖ^r = 1, and ∏ε_i = ∏ϵ_j = ω with ω^r = 1
        (ω = 1 when ``special``, i.e. for SL).
        """
        r = self.rank
        N = self.order
        if r < 2 or len(self.b_exps) != r:
            raise InvalidLabel("label sides must have equal length >= 2")
        if N != r * p.m * p.n:
            raise InvalidLabel(f"order {N} != r*m*n = {r * p.m * p.n}")
        wa = {(p.n * x) % N for x in self.a_exps}
        wb = {(p.m * x) % N for x in self.b_exps}
        if len(wa) != 1 or len(wb) != 1:
            raise InvalidLabel("eigenvalue powers do not share a common value")
        if wa != wb:
            raise InvalidLabel("ε^n and ϵ^m disagree")
        (w,) = wa
        if (r * w) % N:
            raise InvalidLabel("ϖ is not an r-th root of unity")
        pa, pb = sum(self.a_exps) % N, sum(self.b_exps) % N
        if pa != pb or (r * pa) % N:
            raise InvalidLabel("eigenvalue products differ or are not r-th roots of unity")
        if special and pa:
            raise InvalidLabel("determinant is not 1")

    def is_valid(self, p: KnotParams, special: bool = True) -> bool:
        try:
            self.validate(p, special)
        except InvalidLabel:
            return False
        return True

    def to_json(self) -> dict:
        return {"order": self.order, "a_exps": list(self.a_exps), "b_exps": list(self.b_exps)}

    @classmethod
    def from_json(cls, data: dict) -> "EigenLabel":
        return cls.make(data["a_exps"], data["b_exps"], data["order"])
