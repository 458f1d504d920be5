"""Stratification of the SL/GL/PGL character varieties of torus knot groups.

Counts come from closed formulas; eigenvalue labels for the irreducible strata
are attached from the enumerations in :mod:`toruschar.oracle`, and the two are
required to agree (a disagreement is an internal error, not a result).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from math import comb

from . import oracle
from .knot import KnotParams
from .kring import L, P1, P2, P3, P4, P5, P6, KClass
from .roots import EigenLabel

__all__ = [
    "Group",
    "StratumTag",
    "Variant",
    "StratumKind",
    "ComponentDescriptor",
    "CensusMismatch",
    "StratumCounts",
    "max_dim_component_count",
    "sl_counts",
    "pgl_counts",
    "census_sl",
    "census_pgl",
    "census_gl",
    "census",
    "descriptors_to_json",
    "IncidenceGraph",
    "boundary_incidence_type1",
]


class Group(str, Enum):
    SL = "SL"
    GL = "GL"
    PGL = "PGL"


class StratumTag(str, Enum):
    TOTALLY_REDUCIBLE = "TotallyReducible"
    PARTIAL_TYPE1 = "PartialType1"
    PARTIAL_TYPE2 = "PartialType2"
    # τ-labelled strata of maximal dimension (r-1)^2: 4 in rank 3, 1 in rank 2
    IRREDUCIBLE_DIM4 = "IrreducibleDim4"
    IRREDUCIBLE_DIM2 = "IrreducibleDim2"


class Variant(str, Enum):
    PLAIN = "Plain"
    MU3_FIXED_SURFACE = "Mu3FixedSurface"
    MU3_FIXED_MAX_DIM = "Mu3FixedMaxDim"
    MU2_FIXED = "Mu2Fixed"


_LEGAL_VARIANTS = {
    (Group.PGL, 2): {Variant.PLAIN, Variant.MU2_FIXED},
    (Group.GL, 2): {Variant.PLAIN, Variant.MU2_FIXED},
    (Group.PGL, 3): {Variant.PLAIN, Variant.MU3_FIXED_SURFACE, Variant.MU3_FIXED_MAX_DIM},
    (Group.GL, 3): {Variant.PLAIN, Variant.MU3_FIXED_SURFACE, Variant.MU3_FIXED_MAX_DIM},
}


@dataclass(frozen=True)
class StratumKind:
    tag: StratumTag
    variant: Variant | None = None

    def __str__(self):
        return self.tag.value if self.variant is None else f"{self.tag.value}/{self.variant.value}"


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: StratumKind
    group: Group
    rank: int
    dimension: int
    kclass: KClass
    chart: str
    eigen_label: EigenLabel | None = None
    note: str = ""

    def __post_init__(self):
        cap = (self.rank - 1) ** 2 + (1 if self.group is Group.GL else 0)
        if self.dimension > cap:
            raise ValueError(f"dimension {self.dimension} exceeds bound {cap}")
        if self.kind.variant is None:
            if self.group is not Group.SL:
                raise ValueError("PGL/GL strata carry a variant")
        elif self.group is Group.SL or self.kind.variant not in _LEGAL_VARIANTS[(self.group, self.rank)]:
            raise ValueError(f"variant {self.kind.variant} not legal for {self.group.value}({self.rank})")

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.tag.value,
            "variant": None if self.kind.variant is None else self.kind.variant.value,
            "group": self.group.value,
            "rank": self.rank,
            "dimension": self.dimension,
            "eigen_label": None if self.eigen_label is None else self.eigen_label.to_json(),
            "kclass": self.kclass.to_json(),
            "kclass_pretty": str(self.kclass),
            "chart": self.chart,
        }
        if self.note:
            out["note"] = self.note
        return out


class CensusMismatch(AssertionError):
    """Closed-form count and enumerated labels disagree (formula bug)."""


def _exact(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num}/{den} is not integral")
    return q


def max_dim_component_count(r: int, p: KnotParams) -> int:
    """Number of (r-1)^2-dimensional components: C(n-1,r-1) C(m-1,r-1) / r."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if p.n < r or p.m < r:
        return 0
    return _exact(comb(p.n - 1, r - 1) * comb(p.m - 1, r - 1), r)


@dataclass(frozen=True)
class StratumCounts:
    """Number of strata of each kind; zero where a kind does not occur."""

    totally_reducible: int = 1
    partial_type1: int = 0
    partial_type2: int = 0
    dim4: int = 0
    dim2: int = 0
    mu3_fixed_surface: int = 0
    mu3_fixed_max_dim: int = 0
    irreducible_rank2: int = 0
    mu2_fixed: int = 0

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.__dict__.values())


def _pr_counts(p: KnotParams) -> tuple[int, int]:
    pr1 = ((p.m - 1) // 2) * ((p.n - 1) // 2)
    pr2 = _exact(p.odd - 1, 2) if p.even is not None else 0
    return pr1, pr2


def sl_counts(r: int, p: KnotParams) -> StratumCounts:
    m, n = p.m, p.n
    if r == 2:
        return StratumCounts(irreducible_rank2=_exact((n - 1) * (m - 1), 2))
    if r == 3:
        pr1, pr2 = _pr_counts(p)
        return StratumCounts(
            partial_type1=pr1,
            partial_type2=pr2,
            dim4=_exact((n - 1) * (n - 2) * (m - 1) * (m - 2), 12),
            dim2=_exact((n - 1) * (m - 1) * (n + m - 4), 2),
        )
    raise ValueError(f"closed-form census only for r in (2, 3), got {r}")


def pgl_counts(r: int, p: KnotParams) -> StratumCounts:
    """Counts for PGL(r); GL(r) has the same combinatorics."""
    m, n = p.m, p.n
    if r == 2:
        free, fixed = _pr_counts(p)
        return StratumCounts(irreducible_rank2=free, mu2_fixed=fixed)
    if r == 3:
        pr1, pr2 = _pr_counts(p)
        d = p.mult3
        if d is None:
            return StratumCounts(
                partial_type1=pr1,
                partial_type2=pr2,
                dim2=_exact((n - 1) * (m - 1) * (n + m - 4), 6),
                dim4=_exact((m - 1) * (m - 2) * (n - 1) * (n - 2), 36),
            )
        c = p.not_mult3
        return StratumCounts(
            partial_type1=pr1,
            partial_type2=pr2,
            dim2=_exact((c - 1) * (c * d + d * d - 5 * d - c + 2), 6),
            mu3_fixed_surface=c - 1,
            dim4=_exact((c - 1) * (c - 2) * d * (d - 3), 36),
            mu3_fixed_max_dim=_exact((c - 1) * (c - 2), 6),
        )
    raise ValueError(f"closed-form census only for r in (2, 3), got {r}")


def _check_rank(r: int) -> None:
    if r not in (2, 3):
        raise ValueError(f"closed-form census only for r in (2, 3), got {r}")


def _attach(labels: list[EigenLabel] | None, count: int, what: str) -> list[EigenLabel | None]:
    if labels is None:
        return [None] * count
    if len(labels) != count:
        raise CensusMismatch(f"{what}: formula gives {count}, enumeration gives {len(labels)}")
    return list(labels)


# (class, dimension, chart) per stratum kind
_SL3 = {
    "tr": (L**2, 2, "ℂ² with coordinates (σ₁, σ₂) of (t₁,t₂,t₃), σ₃ = 1"),
    "pr1": (P5, 2, "(ℂ−{0,1}) × ℂ*"),
    "pr2": (P6, 2, "{(u,v) ∈ ℂ² | v ≠ 0, v ≠ u²}"),
    "dim4": (P1, 4, "M/(T ×_D T), M ⊂ GL(3,ℂ) the stable points"),
    "dim2": (P3, 2, "(ℂ*)² − {x+y=1}"),
}

_PGL3 = {
    "tr": (L**2, 2, "ℂ²/μ₃ ≅ {(x,y,z) ∈ ℂ³ | xy = z³}"),
    "pr1": (P5, 2, "(ℂ−{0,1}) × ℂ*"),
    "pr2": (P6, 2, "{(u,v) ∈ ℂ² | v ≠ 0, v ≠ u²}"),
    "dim2": (P3, 2, "(ℂ*)² − {x+y=1}"),
    "fixed_surface": (P4, 2, "{(x,y,z) ∈ ℂ³ | xy = z³, x+y+3z ≠ 1}"),
    "dim4": (P1, 4, "M/(T ×_D T)"),
    "fixed_max": (P2, 4, "M/(T ×_D T ⋊ μ₃), μ₃ cyclically permuting columns of M"),
}

_GL3_CHARTS = {
    "tr": "ℂ² × ℂ*",
    "pr1": "(ℂ−{0,1}) × (ℂ*)²",
    "pr2": "{(x,y,z) ∈ ℂ³ | y,z ≠ 0, y ≠ z²}",
    "dim2": "((ℂ*)² − {x+y=1}) × ℂ*",
    "fixed_surface": "{(u,v,w) ∈ ℂ³ | u³+v³+3uv−w ≠ 0, w ≠ 0}",
    "dim4": "M/(T ×_D T) × ℂ*",
    "fixed_max": "(M/(T ×_D T) × ℂ*)/μ₃",
}

_GL_NOTE = "class is (L−1)·[PGL stratum], the stratum being (PGL stratum × ℂ*) up to μ₃"


def census_sl(r: int, p: KnotParams, labels: bool = True, budget: int | None = oracle.DEFAULT_BUDGET):
    """Strata of the SL(r) character variety, r in {2, 3}."""
    _check_rank(r)
    cnt = sl_counts(r, p)
    T = StratumTag
    out: list[ComponentDescriptor] = []

    def add(tag, cls, dim, chart, label=None):
        out.append(ComponentDescriptor(StratumKind(tag), Group.SL, r, dim, cls, chart, label))

    if r == 2:
        add(T.TOTALLY_REDUCIBLE, L, 1, "ℂ")
        labs = list(oracle.enumerate_F(2, p, budget)) if labels else None
        for lab in _attach(labs, cnt.irreducible_rank2, "SL(2) irreducible"):
            add(T.IRREDUCIBLE_DIM4, L - 2, 1, "ℂ−{0,1}", lab)
        return out

    cls, dim, chart = _SL3["tr"]
    add(T.TOTALLY_REDUCIBLE, cls, dim, chart)
    for key, tag, n in (("pr1", T.PARTIAL_TYPE1, cnt.partial_type1), ("pr2", T.PARTIAL_TYPE2, cnt.partial_type2)):
        cls, dim, chart = _SL3[key]
        for _ in range(n):
            add(tag, cls, dim, chart)
    f_labs = list(oracle.enumerate_F(3, p, budget)) if labels else None
    cls, dim, chart = _SL3["dim4"]
    for lab in _attach(f_labs, cnt.dim4, "SL(3) dim-4"):
        add(T.IRREDUCIBLE_DIM4, cls, dim, chart, lab)
    g_labs = list(oracle.enumerate_G(p, budget)) if labels else None
    cls, dim, chart = _SL3["dim2"]
    for lab in _attach(g_labs, cnt.dim2, "SL(3) dim-2"):
        add(T.IRREDUCIBLE_DIM2, cls, dim, chart, lab)
    return out


def _projective_census(group: Group, r: int, p: KnotParams, labels: bool, budget):
    _check_rank(r)
    cnt = pgl_counts(r, p)
    gl = group is Group.GL
    extra = 1 if gl else 0
    T, V = StratumTag, Variant
    out: list[ComponentDescriptor] = []

    def add(tag, variant, cls, dim, chart, label=None, note=""):
        if gl:
            cls = (L - 1) * cls
        out.append(
            ComponentDescriptor(StratumKind(tag, variant), group, r, dim + extra, cls, chart, label, note)
        )

    if r == 2:
        if labels:
            rep = oracle.mu_action_on_labels(oracle.enumerate_F(2, p, budget))
            free, fixed = rep.free, rep.fixed
        else:
            free = fixed = None
        add(T.TOTALLY_REDUCIBLE, V.PLAIN, L, 1, "ℂ × ℂ*" if gl else "ℂ")
        for lab in _attach(free, cnt.irreducible_rank2, "rank-2 free orbits"):
            add(T.IRREDUCIBLE_DIM4, V.PLAIN, L - 2, 1, "(ℂ−{0,1}) × ℂ*" if gl else "ℂ−{0,1}", lab)
        for lab in _attach(fixed, cnt.mu2_fixed, "rank-2 μ2-fixed labels"):
            chart = "{(u,v) ∈ ℂ² | v ≠ 0, v ≠ u²}" if gl else "ℂ*"
            add(T.IRREDUCIBLE_DIM4, V.MU2_FIXED, L - 1, 1, chart, lab)
        return out

    def chart_of(key):
        return _GL3_CHARTS[key] if gl else _PGL3[key][2]

    def emit(key, tag, variant, labs, count, what):
        cls, dim, _ = _PGL3[key]
        note = _GL_NOTE if gl and key in ("pr2", "fixed_surface") else ""
        for lab in _attach(labs, count, what):
            add(tag, variant, cls, dim, chart_of(key), lab, note)

    emit("tr", T.TOTALLY_REDUCIBLE, V.PLAIN, None, 1, "TR")
    emit("pr1", T.PARTIAL_TYPE1, V.PLAIN, None, cnt.partial_type1, "PR1")
    emit("pr2", T.PARTIAL_TYPE2, V.PLAIN, None, cnt.partial_type2, "PR2")
    if labels:
        g = oracle.mu_action_on_labels(oracle.enumerate_G(p, budget))
        f = oracle.mu_action_on_labels(oracle.enumerate_F(3, p, budget))
        g_free, g_fixed, f_free, f_fixed = g.free, g.fixed, f.free, f.fixed
    else:
        g_free = g_fixed = f_free = f_fixed = None
    emit("dim2", T.IRREDUCIBLE_DIM2, V.PLAIN, g_free, cnt.dim2, "dim-2 free orbits")
    emit("fixed_surface", T.IRREDUCIBLE_DIM2, V.MU3_FIXED_SURFACE, g_fixed, cnt.mu3_fixed_surface, "dim-2 μ3-fixed")
    emit("dim4", T.IRREDUCIBLE_DIM4, V.PLAIN, f_free, cnt.dim4, "dim-4 free orbits")
    emit("fixed_max", T.IRREDUCIBLE_DIM4, V.MU3_FIXED_MAX_DIM, f_fixed, cnt.mu3_fixed_max_dim, "dim-4 μ3-fixed")
    return out


def census_pgl(r: int, p: KnotParams, labels: bool = True, budget: int | None = oracle.DEFAULT_BUDGET):
    """Strata of the PGL(r) character variety, r in {2, 3}.

    PGL strata are μ_r-orbits of SL strata; irreducible ones carry the
    smallest label of their orbit.
    """
    return _projective_census(Group.PGL, r, p, labels, budget)


def census_gl(r: int, p: KnotParams, labels: bool = True, budget: int | None = oracle.DEFAULT_BUDGET):
    """Strata of the GL(r) character variety: each PGL stratum with an extra ℂ*."""
    return _projective_census(Group.GL, r, p, labels, budget)


def census(group: Group | str, r: int, p: KnotParams, labels: bool = True, budget=oracle.DEFAULT_BUDGET):
    group = Group(group.upper()) if isinstance(group, str) else group
    fn = {Group.SL: census_sl, Group.PGL: census_pgl, Group.GL: census_gl}[group]
    return fn(r, p, labels=labels, budget=budget)


def descriptors_to_json(descs, indent: int | None = None) -> str:
    return json.dumps([d.to_json() for d in descs], indent=indent, ensure_ascii=False)


@dataclass(frozen=True)
class IncidenceGraph:
    """Boundary pattern of a dimension-4 stratum closure.

    Points are the six permutation supports (totally reducible boundary
    points), lines the nine matrix entries (partially reducible boundary
    lines); a point lies on a line when the entry is in the support.
    """

    points: tuple[tuple[int, ...], ...]
    lines: tuple[tuple[int, int], ...]
    incidences: frozenset[tuple[int, int]] = field(repr=False)

    def points_on(self, line: tuple[int, int]) -> list[tuple[int, ...]]:
        li = self.lines.index(line)
        return [self.points[pi] for pi, lj in sorted(self.incidences) if lj == li]

    def lines_through(self, point: tuple[int, ...]) -> list[tuple[int, int]]:
        pi = self.points.index(point)
        return [self.lines[lj] for pj, lj in sorted(self.incidences) if pj == pi]

    def point_graph(self) -> dict[int, set[int]]:
        """Points joined when they share a line."""
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.points))}
        for li in range(len(self.lines)):
            on = [pi for pi, lj in self.incidences if lj == li]
            for a in on:
                adj[a].update(b for b in on if b != a)
        return adj

    def bipartition(self) -> tuple[set[int], set[int]] | None:
        adj = self.point_graph()
        colour = {0: 0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return None
        if len(colour) != len(adj):
            return None
        left = {v for v, c in colour.items() if c == 0}
        return left, set(adj) - left

    def is_k33(self) -> bool:
        parts = self.bipartition()
        if parts is None:
            return False
        left, right = parts
        adj = self.point_graph()
        return (
            len(left) == len(right) == 3
            and all(adj[v] == right for v in left)
            and all(adj[v] == left for v in right)
        )


def boundary_incidence_type1() -> IncidenceGraph:
    points = tuple(permutations(range(3)))  # σ, support {(i, σ(i))}
    lines = tuple((i, j) for i in range(3) for j in range(3))
    inc = frozenset(
        (pi, li) for pi, s in enumerate(points) for li, (i, j) in enumerate(lines) if s[i] == j
    )
    g = IncidenceGraph(points, lines, inc)
    for li in range(len(lines)):
        assert sum(1 for _, lj in inc if lj == li) == 2
    for pi in range(len(points)):
        assert sum(1 for pj, _ in inc if pj == pi) == 3
    assert g.is_k33()
    return g
