"""Explicit representations of torus knot groups in floating point.

A stratum label fixes the eigenvalues of A = ρ(x) and B = ρ(y).  Working in
an eigenbasis of A, a representation is A = diag(ε) and B = M diag(ϵ) M⁻¹,
where the columns of M are eigenvectors of B.  The relation A^n = B^m then
holds automatically, so M is a free parameter, and this module checks the
relation, irreducibility and the local dimension of the character map.
"""

from __future__ import annotations

import re
import statistics
import warnings
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .knot import KnotParams
from .roots import EigenLabel

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_WORDS",
    "RepPair",
    "SingularM",
    "DegenerateSample",
    "BorderlineIrreducibility",
    "build_representation",
    "random_M",
    "irreducibility_margin",
    "is_irreducible",
    "parse_word",
    "word_matrix",
    "character_vector",
    "component_dimension_estimate",
    "label_report",
]

DEFAULT_SEED = 0x5EED
# words of length <= 4 whose traces are used as coordinates of the character map
DEFAULT_WORDS = (
    "x", "y", "xy", "xY", "x^2y", "xy^2", "x^2y^2", "xyxy", "xYxY", "x^2Y",
    "xY^2", "xyXY", "x^2yY", "xyxY",
)
_BORDERLINE = 1e3


class SingularM(ValueError):
    pass


class DegenerateSample(RuntimeError):
    """Every sample hit the non-generic locus."""


class BorderlineIrreducibility(UserWarning):
    pass


@dataclass
class RepPair:
    A: np.ndarray
    B: np.ndarray
    M: np.ndarray
    label: EigenLabel
    relation_residual: float
    power_residual: float

    def to_json(self) -> dict:
        return {
            "label": self.label.to_json(),
            "relation_residual": self.relation_residual,
            "power_residual": self.power_residual,
        }


def build_representation(label: EigenLabel, M, p: KnotParams) -> RepPair:
    """A = diag(a_eigs), B = M diag(b_eigs) M⁻¹; residuals of A^n = B^m = ϖ I."""
    M = np.asarray(M, dtype=complex)
    r = label.rank
    if M.shape != (r, r):
        raise ValueError(f"M must be {r}x{r}")
    label.validate(p)
    scale = np.linalg.norm(M, 2) ** r
    if abs(np.linalg.det(M)) <= 1e-8 * scale:
        raise SingularM("M is numerically singular")
    A = np.diag(np.array(label.a_values()))
    B = M @ np.diag(np.array(label.b_values())) @ np.linalg.inv(M)
    n, m = p.n, p.m
    An, Bm = np.linalg.matrix_power(A, n), np.linalg.matrix_power(B, m)
    rel = np.linalg.norm(An - Bm) / (np.linalg.norm(A) ** n + np.linalg.norm(B) ** m)
    varpi = An[0, 0]
    pw = np.linalg.norm(An - varpi * np.eye(r)) / max(np.linalg.norm(An), 1e-300)
    return RepPair(A, B, M, label, float(rel), float(pw))


def random_M(r: int, rng: np.random.Generator) -> np.ndarray:
    """Entries uniform on the annulus 0.5 <= |z| <= 2."""
    radius = np.sqrt(rng.uniform(0.25, 4.0, size=(r, r)))
    angle = rng.uniform(0, 2 * np.pi, size=(r, r))
    return radius * np.exp(1j * angle)


def irreducibility_margin(M) -> float:
    """Smallest scale-invariant size of a block whose vanishing makes ρ reducible.

    ρ is reducible iff some block rows a × columns (not b), |a| = |b| = p,
    0 < p < r, vanishes.  Rescaling rows and columns multiplies every
    permutation product Π|M_iσ(i)| by the same factor, so the block is
    measured by the largest product of a permutation meeting it, divided by
    the largest product overall.
    """
    M = np.abs(np.asarray(M, dtype=complex))
    r = M.shape[0]
    if M.shape != (r, r):
        raise ValueError("M must be square")
    perms = [(s, float(np.prod(M[np.arange(r), s]))) for s in permutations(range(r))]
    top = max(v for _, v in perms)
    if top == 0:
        return 0.0
    margin = np.inf
    idx = range(r)
    for q in range(1, r):
        for rows in combinations(idx, q):
            for cols_b in combinations(idx, q):
                cols = [j for j in idx if j not in cols_b]
                block = {(i, j) for i in rows for j in cols}
                hit = max(
                    (v for s, v in perms if any((i, s[i]) in block for i in rows)),
                    default=0.0,
                )
                margin = min(margin, hit / top)
    return float(margin)


def is_irreducible(M, tol: float = 1e-9) -> bool:
    """False iff a complementary sub-block of M vanishes within ``tol``.

    Margins within a factor 1000 above ``tol`` raise a warning, since
    the float test cannot tell such matrices apart reliably.
    """
    margin = irreducibility_margin(M)
    if tol < margin <= tol * _BORDERLINE:
        warnings.warn(
            f"irreducibility margin {margin:.3g} is close to tolerance {tol:.3g}",
            BorderlineIrreducibility,
            stacklevel=2,
        )
    return margin > tol


_TOKEN = re.compile(r"([xyXY])(?:\^(-?\d+))?")


def parse_word(word: str) -> list[tuple[str, int]]:
    """'x^2Y' -> [('x', 2), ('y', -1)]; capitals are inverses."""
    word = word.replace(" ", "").replace("⁻¹", "^-1")
    out = []
    pos = 0
    for mt in _TOKEN.finditer(word):
        if mt.start() != pos:
            raise ValueError(f"cannot parse word {word!r} at position {pos}")
        letter, exp = mt.group(1), int(mt.group(2) or 1)
        if letter.isupper():
            letter, exp = letter.lower(), -exp
        out.append((letter, exp))
        pos = mt.end()
    if pos != len(word):
        raise ValueError(f"cannot parse word {word!r} at position {pos}")
    return out


def word_matrix(A: np.ndarray, B: np.ndarray, word: str) -> np.ndarray:
    mats = {"x": A, "y": B}
    invs = {}
    out = np.eye(A.shape[0], dtype=complex)
    for letter, e in parse_word(word):
        base = mats[letter]
        if e < 0:
            if letter not in invs:
                invs[letter] = np.linalg.inv(base)
            base, e = invs[letter], -e
        out = out @ np.linalg.matrix_power(base, e)
    return out


def character_vector(rep_or_AB, words: Sequence[str] = DEFAULT_WORDS) -> np.ndarray:
    """Traces tr ρ(w) for each word."""
    if isinstance(rep_or_AB, RepPair):
        A, B = rep_or_AB.A, rep_or_AB.B
    else:
        A, B = rep_or_AB
    return np.array([np.trace(word_matrix(A, B, w)) for w in words])


def _jacobian_rank(label: EigenLabel, M: np.ndarray, words, step: float, rank_tol: float) -> int:
    r = label.rank
    a = np.diag(np.array(label.a_values()))
    b = np.array(label.b_values())

    def f(theta):
        Mt = (theta[: r * r] + 1j * theta[r * r :]).reshape(r, r)
        B = Mt @ np.diag(b) @ np.linalg.inv(Mt)
        v = character_vector((a, B), words)
        return np.concatenate([v.real, v.imag])

    theta = np.concatenate([M.real.ravel(), M.imag.ravel()])
    cols = []
    for i in range(theta.size):
        e = np.zeros_like(theta)
        e[i] = step
        cols.append((f(theta + e) - f(theta - e)) / (2 * step))
    J = np.array(cols).T
    s = np.linalg.svd(J, compute_uv=False)
    if s[0] == 0:
        return 0
    real_rank = int(np.sum(s > rank_tol * s[0]))
    return real_rank // 2


def component_dimension_estimate(
    label: EigenLabel,
    samples: int = 5,
    seed: int = DEFAULT_SEED,
    words: Sequence[str] = DEFAULT_WORDS,
    step: float = 1e-5,
    rank_tol: float = 1e-6,
    retries: int = 20,
) -> int:
    """Complex rank of the character map at random points of the stratum.

    The free parameters are the r² entries of M; directions of the
    T ×_D T rescaling (and of the centralizer of a repeated eigenvalue) lie
    in the kernel automatically.  Sample i uses the generator seeded by
    (seed, i); samples that are reducible or near-singular are redrawn.
    """
    ranks = []
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        for _ in range(retries):
            M = random_M(label.rank, rng)
            if abs(np.linalg.det(M)) > 1e-3 and irreducibility_margin(M) > 1e-6:
                ranks.append(_jacobian_rank(label, M, words, step, rank_tol))
                break
    if not ranks:
        raise DegenerateSample(f"no generic sample in {samples} x {retries} draws")
    return int(statistics.median_low(ranks))


def label_report(
    label: EigenLabel,
    p: KnotParams,
    samples: int = 5,
    seed: int = DEFAULT_SEED,
    irreducible_tol: float = 1e-9,
    rank_tol: float = 1e-6,
    step: float = 1e-5,
) -> dict:
    rng = np.random.default_rng([seed, 2**31])
    M = random_M(label.rank, rng)
    rep = build_representation(label, M, p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BorderlineIrreducibility)
        irred = is_irreducible(M, irreducible_tol)
    dim = component_dimension_estimate(label, samples, seed, step=step, rank_tol=rank_tol)
    return {
        "label": label.to_json(),
        "residuals": {"relation": rep.relation_residual, "power": rep.power_residual},
        "irreducible": irred,
        "dim_estimate": dim,
        "samples": samples,
    }
