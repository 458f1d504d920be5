"""Closed-form classes in K(Var_C) of the torus knot character varieties."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .knot import KnotParams
from .kring import L, P0, P1, P2, P3, P4, P5, P6, ZERO, KClass

__all__ = [
    "NamedClassTable",
    "NAMED",
    "kclass_sl",
    "kclass_pgl",
    "kclass_gl",
    "kclass",
    "pgl3_case",
    "class_M_quotient",
    "class_M_quotient_mu3",
    "class_M_stratified",
    "class_M_mu3_stratified",
    "stratum_sum",
    "recover_mn",
    "RecoveryError",
    "NonIntegralSolution",
    "NoValidFactorization",
    "kclass_report",
]


@dataclass(frozen=True)
class NamedClassTable:
    P0: KClass = P0
    P1: KClass = P1
    P2: KClass = P2
    P3: KClass = P3
    P4: KClass = P4
    P5: KClass = P5
    P6: KClass = P6


NAMED = NamedClassTable()


def _q(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"coefficient {num}/{den} is not integral")
    return q


def _check_rank(r: int) -> None:
    if r not in (2, 3):
        raise ValueError(f"closed-form classes only for r in (2, 3), got {r}")


def kclass_sl(r: int, p: KnotParams) -> KClass:
    _check_rank(r)
    m, n = p.m, p.n
    if r == 2:
        return L + _q((n - 1) * (m - 1), 2) * (L - 2)
    c = (
        _q((n - 1) * (n - 2) * (m - 1) * (m - 2), 12) * P1
        + L**2
        + _q((n - 1) * (m - 1) * (n + m - 4), 2) * P3
    )
    if p.even is None:
        return c + _q((n - 1) * (m - 1), 4) * P5
    e, o = p.even, p.odd
    return c + _q((e - 2) * (o - 1), 4) * P5 + _q(o - 1, 2) * P6


def pgl3_case(p: KnotParams) -> tuple[int, int, int]:
    """Which of the five mod-6 cases applies, with the oriented pair.

    Returns ``(case, m, n)`` where (m, n) is oriented so that n is the even
    member if there is one, else the multiple of 3 if there is one.
    """
    if p.even is not None:
        n, m = p.even, p.odd
    elif p.mult3 is not None:
        n, m = p.mult3, p.not_mult3
    else:
        m, n = p.m, p.n
    a, b = n % 6, m % 6
    hits = [
        case
        for case, ok in (
            (1, a in (1, 5) and b in (1, 5)),
            (2, a in (2, 4) and b in (1, 5)),
            (3, a == 3 and b in (1, 5)),
            (4, a == 0 and b in (1, 5)),
            (5, a in (2, 4) and b == 3),
        )
        if ok
    ]
    if len(hits) != 1:
        raise AssertionError(f"mod-6 case analysis matched {hits} for ({m},{n})")
    return hits[0], m, n


def kclass_pgl(r: int, p: KnotParams) -> KClass:
    _check_rank(r)
    if r == 2:
        if p.even is None:
            return L + _q((p.n - 1) * (p.m - 1), 4) * (L - 2)
        e, o = p.even, p.odd
        return L + _q((e - 2) * (o - 1), 4) * (L - 2) + _q(o - 1, 2) * (L - 1)

    case, m, n = pgl3_case(p)
    if case in (1, 2):
        c = (
            P0
            + _q((m - 1) * (m - 2) * (n - 1) * (n - 2), 36) * P1
            + _q((n - 1) * (m - 1) * (n + m - 4), 6) * P3
        )
    elif case in (3, 4):
        c = (
            P0
            + _q((m - 1) * (m - 2) * n * (n - 3), 36) * P1
            + _q((m - 1) * (m - 2), 6) * P2
            + _q((m - 1) * (m * n + n * n - 5 * n - m + 2), 6) * P3
            + (m - 1) * P4
        )
    else:
        c = (
            P0
            + _q(m * (m - 3) * (n - 1) * (n - 2), 36) * P1
            + _q((n - 1) * (n - 2), 6) * P2
            + _q((n - 1) * (m * n + m * m - n - 5 * m + 2), 6) * P3
            + (n - 1) * P4
        )
    if case in (1, 3):
        return c + _q((n - 1) * (m - 1), 4) * P5
    return c + _q((n - 2) * (m - 1), 4) * P5 + _q(m - 1, 2) * P6


def kclass_gl(r: int, p: KnotParams) -> KClass:
    return (L - 1) * kclass_pgl(r, p)


def kclass(group: str, r: int, p: KnotParams) -> KClass:
    fn = {"SL": kclass_sl, "PGL": kclass_pgl, "GL": kclass_gl}[str(getattr(group, "value", group)).upper()]
    return fn(r, p)


def class_M_quotient() -> KClass:
    """[M/(T x_D T)], the class of each dimension-4 SL(3) stratum."""
    return P1


def class_M_quotient_mu3() -> KClass:
    """[M/(T x_D T ⋊ μ3)], the μ3-fixed dimension-4 PGL(3) strata."""
    return P2


def class_M_stratified() -> KClass:
    """[M] for M ⊂ GL(3) the stable points, from the first-column stratification.

    Equals (L-1)^5 * class_M_quotient(); checked by multiplication only.
    """
    all_nonzero = (L - 1) ** 3 * ((L**3 - L) * (L**3 - L**2) - 3 * (L**2 - 1) * (L**2 - L))
    one_zero = 3 * (L - 1) ** 4 * (L**4 - L**3 - 4 * (L**2 - L) + 4 * (L - 1))
    return all_nonzero + one_zero


def class_M_mu3_stratified() -> KClass:
    """(L-1)^2 * [M/(T x_D T ⋊ μ3)] from the two-case count of point triples."""
    off_line = L**6 - (
        L**2
        + (L**2 + L) * (L**3 - L)
        + (L**2 - 1) * (L**2 - L)
        + 2 * (L - 1) * (L - 2) * (L**2 - L)
    )
    on_line = (L - 1) * (L**4 - (L**2 + L * (L**2 - L) + 2 * (L**2 - L) + 2 * (L - 1) * (L - 2)))
    return off_line + on_line


def stratum_sum(descriptors) -> KClass:
    total = ZERO
    for d in descriptors:
        total = total + d.kclass
    return total


class RecoveryError(ValueError):
    pass


class NonIntegralSolution(RecoveryError):
    pass


class NoValidFactorization(RecoveryError):
    pass


def recover_mn(c: KClass) -> tuple[int, int]:
    """Recover the torus knot (m, n), m < n, from the class of its SL(3) variety.

    Uses the L^4 coefficient for (n-1)(n-2)(m-1)(m-2), then the values at
    L = 0 and L = 1 of the remainder to get (n-1)(m-1); from these m + n and
    mn follow.  When min(m, n) = 2 the L^4 coefficient is 0 and the same
    equations still determine the pair.
    """
    if c.degree > 4:
        raise NoValidFactorization(f"degree {c.degree} > 4")
    a = 12 * c.coeff(4)  # (n-1)(n-2)(m-1)(m-2)
    rest = c - c.coeff(4) * P1
    p0, q1 = rest(0), rest(1)
    A = 2 * p0 - 6 * q1 + 6  # (n-1)(m-1)
    if A <= 0:
        raise NoValidFactorization(f"(n-1)(m-1) would be {A}")
    if a == 0:
        B = 0  # min(m, n) = 2
    else:
        B, r = divmod(a, A)
        if r:
            raise NonIntegralSolution(f"(n-2)(m-2) = {a}/{A} is not an integer")
    s = A - B + 3  # m + n
    prod = A + s - 1  # mn
    disc = s * s - 4 * prod
    if disc < 0 or isqrt(disc) ** 2 != disc:
        raise NonIntegralSolution(f"m + n = {s}, mn = {prod} have no integer roots")
    root = isqrt(disc)
    if (s - root) % 2:
        raise NonIntegralSolution(f"m + n = {s}, mn = {prod} have no integer roots")
    m, n = (s - root) // 2, (s + root) // 2
    if m < 2 or gcd(m, n) != 1 or m == n:
        raise NoValidFactorization(f"({m},{n}) is not a coprime pair with m, n >= 2")
    if kclass_sl(3, KnotParams(m, n)) != c:
        raise NoValidFactorization(f"({m},{n}) does not reproduce the given class")
    return m, n


def kclass_report(group: str, r: int, p: KnotParams) -> dict:
    c = kclass(group, r, p)
    return {
        "group": str(group).upper(),
        "rank": r,
        "m": p.m,
        "n": p.n,
        "kclass": c.to_json(),
        "kclass_pretty": str(c),
    }
