"""Alexander polynomials, twisted Alexander roots and boundary curves of torus knots."""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass

from .knot import KnotParams
from .kring import IntPolyBase
from .oracle import DEFAULT_BUDGET, enumerate_F, enumerate_G, mu_action_on_labels
from .roots import EigenLabel, RootExp

__all__ = [
    "IntPoly",
    "T",
    "alexander",
    "RootCount",
    "NegativeMultiplicity",
    "twisted_root_count",
    "LineCount",
    "line_count_identity",
    "CurveSpec",
    "InvalidK",
    "boundary_curve",
    "curve_poly",
    "curve_residual",
    "parametrize_curve",
    "delta_for",
]


class IntPoly(IntPolyBase):
    """Integer polynomial in t."""

    __slots__ = ()
    var = "t"

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division by a divisor with leading coefficient ±1."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient ±1")
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


T = IntPoly([0, 1])


def alexander(p: KnotParams) -> IntPoly:
    """Δ_{m,n} = (t^{mn}-1)(t-1) / ((t^m-1)(t^n-1))."""
    m, n = p.m, p.n
    num = (T ** (m * n) - 1) * (T - 1)
    den = (T**m - 1) * (T**n - 1)
    return num // den


class NegativeMultiplicity(ValueError):
    """A denominator root was not cancelled: the label is not a valid SL(2) label."""


@dataclass(frozen=True)
class RootCount:
    """Roots of Δ_{ε,ϵ}(z^3) as exponents at ``order`` = 6mn, with multiplicities."""

    order: int
    multiplicities: tuple[tuple[int, int], ...]

    @property
    def roots(self) -> list[tuple[RootExp, int]]:
        return [(RootExp(j, self.order), mult) for j, mult in self.multiplicities]

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.multiplicities)

    def count_with(self, mult: int) -> int:
        return sum(1 for _, m in self.multiplicities if m == mult)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "roots": [{"k": j, "multiplicity": mult} for j, mult in self.multiplicities],
            "total": self.total,
        }


def twisted_root_count(label: EigenLabel, p: KnotParams) -> RootCount:
    """Net root multiplicities of Δ_{ε,ϵ}(z^3) for an SL(2) label ({ε,1/ε},{ϵ,1/ϵ}).

    Δ_{ε,ϵ}(t) = (t^{mn} - ε^n)^2 / ((t^m - ε)(t^m - 1/ε)(t^n - ϵ)(t^n - 1/ϵ)).
    All roots are roots of unity, so everything is exponent arithmetic mod 6mn.
    """
    if label.rank != 2:
        raise ValueError("twisted roots are defined for SL(2) labels")
    m, n = p.m, p.n
    N = 6 * m * n
    if N % label.order:
        raise ValueError(f"label order {label.order} does not divide {N}")
    s = N // label.order
    a, b = label.a_exps[0] * s, label.b_exps[0] * s
    if (label.a_exps[1] * s + a) % N or (label.b_exps[1] * s + b) % N:
        raise NegativeMultiplicity("label sides are not of the form {ε, 1/ε}")
    mult: Counter[int] = Counter()
    for j in range(N):
        if (3 * m * n * j - n * a) % N == 0:
            mult[j] += 2
    for power, e in ((3 * m, a), (3 * m, -a), (3 * n, b), (3 * n, -b)):
        for j in range(N):
            if (power * j - e) % N == 0:
                mult[j] -= 1
    if any(v < 0 for v in mult.values()):
        raise NegativeMultiplicity(f"label {label.to_json()} leaves a pole")
    kept = tuple(sorted((j, v) for j, v in mult.items() if v > 0))
    return RootCount(N, kept)


@dataclass(frozen=True)
class LineCount:
    lhs: int
    rhs: int
    by_roots: int
    double_lines: int
    simple_lines: int
    dim4: int
    dim2: int

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs == self.by_roots

    def to_json(self) -> dict:
        return dict(self.__dict__, agree=self.agree)


def line_count_identity(p: KnotParams, budget: int | None = DEFAULT_BUDGET) -> LineCount:
    """Count the lines in the closure of the irreducible SL(3) locus three ways.

    ``lhs`` = 18 (dim-4 strata) + 3 (dim-2 strata) from enumeration,
    ``rhs`` = (3/2)(n-1)(m-1)(mn-m-n), and ``by_roots`` sums the roots of
    Δ_{ε,ϵ}(z^3) over the irreducible GL(2) components (double roots counted
    twice).  A component is a μ2-orbit of SL(2) labels: free orbits count in
    full, μ2-fixed labels are weighted 1/2 since their component is half of
    the orbit sum.
    """
    m, n = p.m, p.n
    dim4 = len(enumerate_F(3, p, budget))
    dim2 = len(enumerate_G(p, budget))
    lhs = 18 * dim4 + 3 * dim2
    rhs_num = 3 * (n - 1) * (m - 1) * (m * n - m - n)
    if rhs_num % 2:
        raise ArithmeticError("line count is not integral")
    rhs = rhs_num // 2

    orbits = mu_action_on_labels(enumerate_F(2, p, budget))
    doubled_double = doubled_simple = 0  # twice the weighted counts
    for lab in orbits.representatives:
        rc = twisted_root_count(lab, p)
        w = 1 if lab in orbits.fixed else 2
        doubled_double += w * 2 * rc.count_with(2)
        doubled_simple += w * rc.count_with(1)
    if doubled_double % 2 or doubled_simple % 2:
        raise ArithmeticError("half-weighted root count is not integral")
    double_lines, simple_lines = doubled_double // 2, doubled_simple // 2
    return LineCount(
        lhs=lhs,
        rhs=rhs,
        by_roots=double_lines + simple_lines,
        double_lines=double_lines,
        simple_lines=simple_lines,
        dim4=dim4,
        dim2=dim2,
    )


class InvalidK(ValueError):
    pass


@dataclass(frozen=True)
class CurveSpec:
    """Boundary curve x²y² - (c+2)(x³+y³) + (c²+5c+4)xy - (c+1)³ = 0 for c = c_k."""

    m: int
    n: int
    k: int
    c: float
    component_key: tuple[int, int]
    type2: bool

    @property
    def coeffs(self) -> dict[str, float]:
        c = self.c
        return {
            "x2y2": 1.0,
            "x3": -(c + 2),
            "y3": -(c + 2),
            "xy": c * c + 5 * c + 4,
            "1": -((c + 1) ** 3),
        }

    def __call__(self, x: complex, y: complex) -> complex:
        return curve_poly(self.c, x, y)

    def residual(self, x: complex, y: complex) -> float:
        return curve_residual(self.c, x, y)

    def delta(self) -> complex:
        return delta_for(self.m * self.n, self.k)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "c": self.c,
            "coeffs": self.coeffs,
            "component_key": list(self.component_key),
            "type2": self.type2,
        }


def _fold(k: int, q: int) -> int:
    return min(k % q, (-k) % q)


def boundary_curve(p: KnotParams, k: int) -> CurveSpec:
    """The curve with c_k = 2cos(2πk/mn), k not a multiple of m or n.

    ``component_key`` identifies k up to k' ≡ ±k mod m and mod n, which is
    the grouping of the curves into components.  ``type2`` flags the k whose
    curve bounds a type-2 partially reducible stratum (k ≡ e/2 mod e for the
    even member e).
    """
    m, n = p.m, p.n
    if k % m == 0 or k % n == 0:
        raise InvalidK(f"k={k} is a multiple of m={m} or n={n}")
    c = 2 * math.cos(2 * math.pi * k / (m * n))
    e = p.even
    type2 = e is not None and k % e == e // 2
    return CurveSpec(m, n, k, c, (_fold(k, m), _fold(k, n)), type2)


def curve_poly(c: complex, x: complex, y: complex) -> complex:
    return x * x * y * y - (c + 2) * (x**3 + y**3) + (c * c + 5 * c + 4) * x * y - (c + 1) ** 3


def curve_residual(c: complex, x: complex, y: complex) -> float:
    """|f(x, y)| divided by the largest monomial magnitude at (x, y)."""
    terms = (
        abs(x * x * y * y),
        abs((c + 2) * x**3),
        abs((c + 2) * y**3),
        abs((c * c + 5 * c + 4) * x * y),
        abs((c + 1) ** 3),
    )
    scale = max(max(terms), 1e-300)
    return abs(curve_poly(c, x, y)) / scale


def delta_for(mn: int, k: int) -> complex:
    """δ = exp(πik/mn), so that δ² + δ⁻² = c_k."""
    return cmath.exp(1j * math.pi * k / mn)


def parametrize_curve(delta: complex, t: complex) -> tuple[complex, complex]:
    """x = (δ+δ⁻¹)t + t⁻², y = (δ+δ⁻¹)t⁻¹ + t², a point on the curve with c = δ²+δ⁻²."""
    if delta == 0 or t == 0:
        raise ZeroDivisionError("δ and t must be nonzero")
    s = delta + 1 / delta
    return s * t + t**-2, s / t + t**2
