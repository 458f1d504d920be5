"""Quotients of (C*)^k by a cyclic group acting diagonally, via integer lattices.

μ_r acts on (C*)^k by ξ·(t_1..t_k) = (ξ^{a_1} t_1, .., ξ^{a_k} t_k).  A
unimodular integer matrix M gives new coordinates u_j = Π_i t_i^{M_ji}; when
the first k-1 rows pair to 0 mod r with the weights and the last row to 1, the
action becomes (u_1..u_{k-1}, ξ u_k) and the quotient is (C*)^k again with
coordinates (u_1..u_{k-1}, u_k^r).  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

__all__ = [
    "IntMatrix",
    "det_bareiss",
    "smith_normal_form",
    "is_smith_form",
    "QuotientBasis",
    "NotEffective",
    "RepairFailed",
    "quotient_basis",
    "verify_quotient_basis",
    "effective_action",
    "monomial_map",
]


class IntMatrix:
    """Immutable integer matrix."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged rows")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows))
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self._rows)))

    def det(self) -> int:
        return det_bareiss(self)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.to_list()!r})"


def _as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix(M)


def det_bareiss(M) -> int:
    """Determinant by fraction-free Gaussian elimination."""
    M = _as_matrix(M)
    n, c = M.shape
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    a = M.to_list()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(U, D, V) with U·M·V = D, U and V unimodular, D diagonal, d_i ≥ 0, d_i | d_{i+1}."""
    M = _as_matrix(M)
    rows, cols = M.shape
    A = M.to_list()
    U = IntMatrix.identity(rows).to_list()
    V = IntMatrix.identity(cols).to_list()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row dst += f * row src
        for R in (A, U):
            R[dst] = [x + f * y for x, y in zip(R[dst], R[src])]

    def add_col(src, dst, f):
        for R in (A, V):
            for row in R:
                row[dst] += f * row[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            piv = A[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = A[i][t] // piv
                if q:
                    add_row(t, i, -q)
                clean &= A[i][t] == 0
            for j in range(t + 1, cols):
                q = A[t][j] // piv
                if q:
                    add_col(t, j, -q)
                clean &= A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            U[t] = [-x for x in U[t]]
            A[t] = [-x for x in A[t]]
    return IntMatrix(U), IntMatrix(A), IntMatrix(V)


def is_smith_form(D) -> bool:
    D = _as_matrix(D)
    rows, cols = D.shape
    for i in range(rows):
        for j in range(cols):
            if i != j and D[i, j]:
                return False
    diag = [D[i, i] for i in range(min(rows, cols))]
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a and b % a):
            return False
    return True


class NotEffective(ValueError):
    """The action is trivial after passing to its effective quotient."""


class RepairFailed(RuntimeError):
    """The determinant repair loop did not finish (should not happen)."""


def effective_action(weights: Sequence[int], r: int) -> tuple[tuple[int, ...], int, int]:
    """Replace μ_r by the quotient acting effectively.

    With g = gcd(r, a_1..a_k) the action factors through μ_{r/g}, whose
    generator ξ^g acts with weights a_i/g.  Returns (weights', r', g).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if not weights:
        raise ValueError("need at least one weight")
    g = r
    for a in weights:
        g = gcd(g, a)
    r2 = r // g
    return tuple((a // g) % r2 for a in weights), r2, g


@dataclass(frozen=True)
class QuotientBasis:
    matrix: IntMatrix
    weights: tuple[int, ...]
    r: int
    effective_weights: tuple[int, ...]
    effective_r: int
    trivial: bool = False
    generator_power: int = 1
    repairs: int = 0
    notes: list[str] = field(default_factory=list, compare=False)

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "r": self.r,
            "effective_weights": list(self.effective_weights),
            "effective_r": self.effective_r,
            "trivial": self.trivial,
            "generator_power": self.generator_power,
            "matrix": self.matrix.to_list(),
            "verified": verify_quotient_basis(self.matrix, self.weights, self.r),
        }


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g = gcd(a, b) ≥ 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _column_reduce(a: Sequence[int]) -> tuple[int, list[list[int]]]:
    """Unimodular V (det 1) with aᵀV = (d, 0, .., 0), d = gcd(a) ≥ 0."""
    k = len(a)
    V = IntMatrix.identity(k).to_list()
    row = list(a)
    for j in range(1, k):
        p, q = row[0], row[j]
        if q == 0:
            continue
        g, x, y = _ext_gcd(p, q)
        # columns (c0, cj) -> (x c0 + y cj, -(q/g) c0 + (p/g) cj), a det-1 change
        for R in V:
            c0, cj = R[0], R[j]
            R[0], R[j] = x * c0 + y * cj, -(q // g) * c0 + (p // g) * cj
        row[0], row[j] = g, 0
    if row[0] < 0:  # flip two columns' signs keeps det 1
        for R in V:
            R[0] = -R[0]
            R[1] = -R[1]
        row[0] = -row[0]
    return row[0], V


def _embed(k: int, i: int, j: int, B: list[list[int]]) -> IntMatrix:
    E = IntMatrix.identity(k).to_list()
    E[i][i], E[i][j], E[j][i], E[j][j] = B[0][0], B[0][1], B[1][0], B[1][1]
    return IntMatrix(E)


def _inv2(B: list[list[int]]) -> list[list[int]]:
    (a, b), (c, d) = B
    return [[d, -b], [-c, a]]


def quotient_basis(weights: Sequence[int], r: int, strict: bool = False) -> QuotientBasis:
    """Unimodular M (det +1) diagonalizing the μ_r action to (u_1..u_{k-1}, ξ u_k).

    Start from any integer M whose rows satisfy the congruences and whose
    determinant is ≡ 1 mod r (rows may be changed by multiples of r freely).
    Write M = P D Q in Smith form with P, Q ∈ SL_k(Z).  While two diagonal
    entries e_j, e_l are not ≡ 1 mod r, move e_j by a multiple of r until it
    is coprime to e_l and replace diag(e_j, e_l) by diag(1, e_j e_l) through
    SL_2(Z) factors absorbed into P and Q.  At the end D ≡ I mod r, so P·Q
    has the same rows mod r and determinant 1.
    """
    weights = tuple(int(a) for a in weights)
    k = len(weights)
    eff, r2, _ = effective_action(weights, r)
    if r2 == 1:
        if strict:
            raise NotEffective(f"μ_{r} acts trivially with weights {weights}")
        return QuotientBasis(IntMatrix.identity(k), weights, r, eff, 1, trivial=True, generator_power=0)

    if k == 1:
        # ξ^{a} is itself a generator of μ_r', so u = t already works
        return QuotientBasis(
            IntMatrix([[1]]), weights, r, eff, r2, generator_power=eff[0],
            notes=[f"generator changed to ξ^{eff[0]}"],
        )

    d, V = _column_reduce(eff)
    d_inv = pow(d, -1, r2)
    cols = list(zip(*V))
    rows0 = [list(c) for c in cols[1:]] + [[d_inv * x for x in cols[0]]]
    det0 = det_bareiss(rows0)
    rows0[0] = [x * pow(det0 % r2, -1, r2) for x in rows0[0]]
    M0 = IntMatrix(rows0)

    U, D, Vs = smith_normal_form(M0)
    e = [D[i, i] for i in range(k)]
    if det_bareiss(U) == -1:  # make both factors special by moving signs into D
        U = IntMatrix([[-x for x in U.rows[0]]] + [list(row) for row in U.rows[1:]])
        e[0] = -e[0]
    if det_bareiss(Vs) == -1:
        Vs = IntMatrix([[-row[0]] + list(row[1:]) for row in Vs.rows])
        e[0] = -e[0]
    P, Q = _unimodular_inverse(U), _unimodular_inverse(Vs)

    repairs = 0
    for _ in range(4 * k):
        bad = [i for i in range(k) if (e[i] - 1) % r2]
        if not bad:
            break
        if len(bad) == 1:
            raise RepairFailed(f"diagonal {e} has product ≢ 1 mod {r2}")
        j, l = bad[0], bad[1]
        s = 0
        while gcd(e[j] + r2 * s, e[l]) != 1:
            s += 1
            if s > abs(e[l]) + r2:
                raise RepairFailed(f"no shift of {e[j]} by {r2} is coprime to {e[l]}")
        p, q = e[j] + r2 * s, e[l]
        _, x, y = _ext_gcd(p, q)
        Lm = [[x, y], [-q, p]]
        Rm = [[1, -y * q], [1, x * p]]
        P = P @ _embed(k, j, l, _inv2(Lm))
        Q = _embed(k, j, l, _inv2(Rm)) @ Q
        e[j], e[l] = 1, p * q
        repairs += 1
    else:
        if any((x - 1) % r2 for x in e):
            raise RepairFailed(f"repair loop exceeded {4 * k} steps")

    M = P @ Q
    if not verify_quotient_basis(M, weights, r):
        raise RepairFailed("constructed matrix does not satisfy the congruences")
    return QuotientBasis(M, weights, r, eff, r2, repairs=repairs)


def _unimodular_inverse(U: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix via the adjugate (exact)."""
    n = U.shape[0]
    det = det_bareiss(U)
    if det not in (1, -1):
        raise ValueError("matrix is not unimodular")
    if n == 1:
        return IntMatrix([[det]])
    rows = U.rows
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for ii, row in enumerate(rows) if ii != i]
            adj[j][i] = (-1) ** (i + j) * det_bareiss(minor)
    return IntMatrix([[det * x for x in row] for row in adj])


def verify_quotient_basis(M, weights: Sequence[int], r: int) -> bool:
    """det M = 1, rows 1..k-1 pair to 0 mod r', row k to 1 mod r'.

    (weights, r) are first replaced by the effective action.  For k = 1 the
    last row may pair to any generator of Z/r', since μ_r' may be
    re-generated.
    """
    M = _as_matrix(M)
    k = len(weights)
    if M.shape != (k, k) or det_bareiss(M) != 1:
        return False
    eff, r2, _ = effective_action(weights, r)
    pair = [sum(c * a for c, a in zip(row, eff)) % r2 for row in M.rows]
    if any(pair[:-1]):
        return False
    if k == 1:
        return gcd(pair[-1], r2) == 1
    return pair[-1] == 1 % r2


def monomial_map(M, var: str = "t", new: str = "u") -> list[str]:
    """Lines ``u_j = t_1^a t_2^b ...`` for the coordinate change given by M."""
    M = _as_matrix(M)
    out = []
    for j, row in enumerate(M.rows, 1):
        factors = [
            f"{var}{i}" if e == 1 else f"{var}{i}^{e}" for i, e in enumerate(row, 1) if e
        ]
        out.append(f"{new}{j} = " + (" ".join(factors) if factors else "1"))
    return out
