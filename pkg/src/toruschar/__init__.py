"""Character varieties of torus knots in rank 2 and 3: strata, motives and checks."""

from __future__ import annotations

from .census import ComponentDescriptor, Group, StratumKind, StratumTag, Variant
from .kclass import kclass_gl, kclass_pgl, kclass_sl, recover_mn
from .knot import KnotParams, NotCoprimeError, UnknotError, coprime_pairs
from .kring import L, KClass
from .roots import EigenLabel, RootExp

__version__ = "0.1.0"

__all__ = [
    "ComponentDescriptor",
    "EigenLabel",
    "Group",
    "KClass",
    "KnotParams",
    "L",
    "NotCoprimeError",
    "RootExp",
    "StratumKind",
    "StratumTag",
    "UnknotError",
    "Variant",
    "coprime_pairs",
    "kclass_gl",
    "kclass_pgl",
    "kclass_sl",
    "recover_mn",
]
