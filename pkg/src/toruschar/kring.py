"""Exact arithmetic in the subring Z[L] of the Grothendieck ring of varieties.

``L`` is the Lefschetz class [C].  Classes are immutable integer polynomials
in ``L``; coefficients are Python ints, so nothing ever overflows.  Division is
deliberately absent: relations such as [GL] = (L-1)[PGL] are checked by
multiplying out.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "IntPolyBase",
    "KClass",
    "L",
    "ONE",
    "ZERO",
    "kadd",
    "ksub",
    "kmul",
    "kscale",
    "keval",
    "kcoeff",
    "format_poly",
    "P0",
    "P1",
    "P2",
    "P3",
    "P4",
    "P5",
    "P6",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_poly(coeffs: Sequence[int], var: str) -> str:
    """Render ``coeffs`` (ascending) as ``"L^4+4L^3-3L^2-15L+12"``.

    Descending powers, explicit signs, unit coefficients suppressed.
    """
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    s = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        s += sign + body
    return s


class IntPolyBase:
    """Integer-coefficient univariate polynomial in canonical (trimmed) form.

    Subclasses fix the display variable.  Arithmetic between two different
    subclasses is refused, so a class in L never gets mixed with a knot
    polynomial in t by accident.
    """

    __slots__ = ("_coeffs",)
    var = "x"

    def __init__(self, coeffs: Iterable[int] = ()):
        self._coeffs = _trim(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1):
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int):
        return cls([c])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> float | int:
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> int:
        if i < 0:
            raise ValueError("negative power")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)([other])
        if type(other) is type(self):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return type(self)(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(c * other for c in self._coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return type(self)()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._coeffs == _trim([other])
        if type(other) is type(self):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs))

    def __repr__(self):
        return f"{type(self).__name__}({list(self._coeffs)!r})"

    def __str__(self):
        return format_poly(self._coeffs, self.var)

    def to_json(self) -> dict:
        return {"coeffs": list(self._coeffs)}

    @classmethod
    def from_json(cls, data: dict):
        coeffs = data["coeffs"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise TypeError("coefficients must be integers")
        return cls(coeffs)


class KClass(IntPolyBase):
    """A class in Z[L] (subring of K(Var_C) generated by the Lefschetz class)."""

    __slots__ = ()
    var = "L"


L = KClass([0, 1])
ONE = KClass([1])
ZERO = KClass()


def kadd(a: KClass, b: KClass) -> KClass:
    return a + b


def ksub(a: KClass, b: KClass) -> KClass:
    return a - b


def kmul(a: KClass, b: KClass) -> KClass:
    return a * b


def kscale(a: KClass, c: int) -> KClass:
    if not isinstance(c, int):
        raise TypeError("scale factor must be an integer")
    return a * c


def keval(a: KClass, x: int) -> int:
    return a(x)


def kcoeff(a: KClass, i: int) -> int:
    return a.coeff(i)


# Named classes appearing in the PGL(3) class table.
P0 = L**2
P1 = KClass([12, -15, -3, 4, 1])  # [M/(T x_D T)]
P2 = KClass([4, -1, -3, 2, 1])  # [M/(T x_D T ⋊ μ3)]
P3 = L**2 - 3 * L + 3  # (C*)^2 - {x+y=1}
P4 = L**2 - L + 1
P5 = L**2 - 3 * L + 2  # (C-{0,1}) x C*
P6 = L**2 - 2 * L + 1
