"""Brute-force ground truth over roots of unity.

Everything here is exact integer arithmetic on exponents at the common order
N = r*m*n.  The closed-form counts elsewhere in the package are checked
against these enumerations, never the other way round.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial

from .knot import KnotParams
from .roots import EigenLabel

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "LabelSet",
    "OrbitReport",
    "enumerate_F",
    "enumerate_G",
    "n_side",
    "n_table",
    "mu_action_on_labels",
    "partial_counts",
    "falling_factorial",
]

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


def falling_factorial(n: int, r: int) -> int:
    """n!/(n-r)!, and 0 when r > n."""
    return factorial(n) // factorial(n - r) if r <= n else 0


def _check_budget(r: int, p: KnotParams, budget: int | None) -> None:
    if budget is None:
        return
    cost = r * (comb(p.n, r) + p.n) * (comb(p.m, r) + p.m)
    if cost > budget:
        raise BudgetExceeded(
            f"enumeration for r={r}, (m,n)=({p.m},{p.n}) needs ~{cost} steps, budget is {budget}"
        )


@dataclass(frozen=True)
class LabelSet:
    labels: frozenset[EigenLabel]
    r: int
    m: int
    n: int

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(sorted(self.labels, key=_label_key))

    def __contains__(self, label):
        return label in self.labels

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "n": self.n,
            "count": len(self.labels),
            "labels": [lab.to_json() for lab in self],
        }


def _label_key(lab: EigenLabel):
    return (lab.a_exps, lab.b_exps)


def _roots_of(power: int, target: int, N: int) -> list[int]:
    # exponents e (mod N) with power*e ≡ target
    return [e for e in range(N) if (power * e - target) % N == 0]


def _distinct_subsets(cands: list[int], r: int, N: int, total: int = 0):
    return [c for c in combinations(cands, r) if sum(c) % N == total % N]


def _repeated_triples(cands: list[int], N: int):
    cset = set(cands)
    out = []
    for e in cands:
        f = (-2 * e) % N
        if f != e and f in cset:
            out.append((e, e, f))
    return out


def enumerate_F(r: int, p: KnotParams, budget: int | None = DEFAULT_BUDGET) -> LabelSet:
    """Labels τ of the maximal-dimensional SL(r) strata.

    Pairs of r distinct eigenvalues for A and for B with ε_i^n = ϵ_j^m = ϖ,
    ϖ^r = 1 and both products 1, modulo reordering each side.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    _check_budget(r, p, budget)
    N = r * p.m * p.n
    labels = set()
    for w in range(r):
        target = w * (N // r)
        A = _roots_of(p.n, target, N)
        B = _roots_of(p.m, target, N)
        a_sets = _distinct_subsets(A, r, N)
        if not a_sets:
            continue
        b_sets = _distinct_subsets(B, r, N)
        for a in a_sets:
            for b in b_sets:
                labels.add(EigenLabel(a, b, N))
    return LabelSet(frozenset(labels), r, p.m, p.n)


def enumerate_G(p: KnotParams, budget: int | None = DEFAULT_BUDGET) -> LabelSet:
    """Labels κ of the 2-dimensional irreducible SL(3) strata.

    One side has an eigenvalue of multiplicity exactly two, the other side
    three distinct eigenvalues.
    """
    r = 3
    _check_budget(r, p, budget)
    N = r * p.m * p.n
    labels = set()
    for w in range(r):
        target = w * (N // r)
        A = _roots_of(p.n, target, N)
        B = _roots_of(p.m, target, N)
        a_rep, b_rep = _repeated_triples(A, N), _repeated_triples(B, N)
        a_dist, b_dist = _distinct_subsets(A, r, N), _distinct_subsets(B, r, N)
        for a in a_rep:
            for b in b_dist:
                labels.add(EigenLabel(a, b, N))
        for a in a_dist:
            for b in b_rep:
                labels.add(EigenLabel(a, b, N))
    return LabelSet(frozenset(labels), r, p.m, p.n)


def n_side(r: int, n: int, k: int) -> int:
    """Ordered distinct r-tuples with ε_i^n = exp(2πik/r) and ∏ε_i = 1.

    Exponents are taken at order r*n.
    """
    N = r * n
    cands = _roots_of(n, (k % r) * n, N)
    return factorial(r) * len(_distinct_subsets(cands, r, N))


def n_table(r: int, p: KnotParams, k1: int, k2: int, budget: int | None = DEFAULT_BUDGET) -> int:
    """N(k1, k2) = N_n(k1) * N_m(k2)."""
    _check_budget(r, p, budget)
    return n_side(r, p.n, k1) * n_side(r, p.m, k2)


@dataclass
class OrbitReport:
    orbits: int
    fixed_labels: int
    stabilizer_sizes: Counter = field(default_factory=Counter)
    representatives: list[EigenLabel] = field(default_factory=list)
    fixed: list[EigenLabel] = field(default_factory=list)
    free: list[EigenLabel] = field(default_factory=list)
    fixed_point_counts: list[int] = field(default_factory=list)

    def burnside_ok(self, r: int) -> bool:
        return sum(self.fixed_point_counts) == r * self.orbits

    def to_json(self) -> dict:
        return {
            "orbits": self.orbits,
            "fixed_labels": self.fixed_labels,
            "stabilizer_sizes": dict(sorted(self.stabilizer_sizes.items())),
            "fixed_point_counts": self.fixed_point_counts,
        }


def _act(label: EigenLabel, j: int, m: int, n: int, r: int) -> EigenLabel:
    # t = exp(2πi j/r) acts on SL(r) characters by (A, B) -> (t^m A, t^n B)
    step = label.order // r
    return label.shifted(j * m * step, j * n * step)


def mu_action_on_labels(ls: LabelSet, r: int | None = None) -> OrbitReport:
    """Orbits of μ_r on a label set.

    The element t of μ_r maps a representation (A, B) to (t^m A, t^n B), so
    it multiplies the A-eigenvalues by t^m and the B-eigenvalues by t^n.
    Representatives are the smallest label in each orbit.
    """
    r = ls.r if r is None else r
    seen: set[EigenLabel] = set()
    report = OrbitReport(orbits=0, fixed_labels=0)
    report.fixed_point_counts = [0] * r
    for lab in ls:
        for j in range(r):
            if _act(lab, j, ls.m, ls.n, r) == lab:
                report.fixed_point_counts[j] += 1
        if lab in seen:
            continue
        orbit = {_act(lab, j, ls.m, ls.n, r) for j in range(r)}
        if not orbit <= ls.labels:
            raise ValueError("label set is not closed under the μ_r action")
        seen |= orbit
        stab = r // len(orbit)
        report.orbits += 1
        report.stabilizer_sizes[stab] += 1
        rep = min(orbit, key=_label_key)
        report.representatives.append(rep)
        if len(orbit) == 1:
            report.fixed_labels += 1
            report.fixed.append(rep)
        elif stab == 1:
            report.free.append(rep)
    return report


def partial_counts(p: KnotParams, budget: int | None = DEFAULT_BUDGET) -> tuple[int, int]:
    """(type-1, type-2) partially reducible SL(3) strata.

    These are the components of the irreducible GL(2) locus: free μ2-orbits of
    SL(2) labels give type 1, μ2-fixed labels give type 2.
    """
    rep = mu_action_on_labels(enumerate_F(2, p, budget))
    return len(rep.free), len(rep.fixed)
