"""Bond-incident-degree indices: builtins, DSL-defined indices and HA."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from .graph import GraphFormatError, SimpleGraph, edge_partition, is_tree
from .mean_dsl import (
    ExactnessClass,
    PhiExpr,
    Scalar,
    classify,
    eval_phi,
    parse_phi,
)

SQRT2 = "sqrt2"

Scale = Union[Fraction, str]


@dataclass(frozen=True)
class IndexSpec:
    """A named index: the per-edge function and a scale applied to the sum.

    ``scale`` is a Fraction or the marker ``"sqrt2"``.
    """

    name: str
    phi: PhiExpr
    scale: Scale = Fraction(1)

    @classmethod
    def from_phi(cls, source: str, name: str | None = None) -> "IndexSpec":
        return cls(name or source, parse_phi(source))

    @property
    def exactness(self) -> ExactnessClass:
        if self.scale == SQRT2:
            return ExactnessClass.NUMERIC
        return classify(self.phi)


_BUILTIN_SOURCES = {
    "HA": ("H/A", Fraction(1)),
    "GA": ("G/A", Fraction(1)),
    "AG": ("A/G", Fraction(1)),
    "SDD": ("4*(A/H) - 2", Fraction(1)),
    "ISI": ("H/2", Fraction(1)),
    "M1half": ("A", Fraction(1)),
    "reciprocalRandic": ("G", Fraction(1)),
    "Sombor": ("Q", SQRT2),
    "SO3": ("C", SQRT2),
    "modifiedSDD": ("Q/G", Fraction(1)),
}

BUILTINS: Dict[str, IndexSpec] = {
    name: IndexSpec(name, parse_phi(src), scale) for name, (src, scale) in _BUILTIN_SOURCES.items()
}


def get_index(name: str) -> IndexSpec:
    try:
        return BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown index {name!r}; choose from {', '.join(BUILTINS)}") from None


def evaluate_index(g: SimpleGraph, spec: IndexSpec) -> Scalar:
    """Sum ``phi(d_u, d_v)`` over the edges of ``g`` and apply the scale.

    The result is a Fraction when both the expression and the scale are
    rational, otherwise a float. A graph without edges gives 0.
    """
    if g.n >= 2 and 0 in g.degrees:
        raise GraphFormatError("isolated vertex in a graph of order >= 2")
    exact = spec.exactness is ExactnessClass.EXACT_RATIONAL
    total: Scalar = Fraction(0) if exact else 0.0
    for (s, t), m in edge_partition(g).counts.items():
        total += m * eval_phi(spec.phi, s, t)
    if spec.scale == SQRT2:
        return float(total) * math.sqrt(2)
    if exact:
        return total * spec.scale
    return total * float(spec.scale)


@lru_cache(maxsize=None)
def phi_ha(a: int, b: int) -> Fraction:
    """HA edge weight ``4ab / (a + b)^2``."""
    if a < 1 or b < 1:
        raise ValueError("degrees must be positive")
    return Fraction(4 * a * b, (a + b) ** 2)


def ha_index(g: SimpleGraph) -> Fraction:
    total = Fraction(0)
    for (s, t), m in edge_partition(g).counts.items():
        total += m * phi_ha(s, t)
    return total


GAMMA_COEFFICIENTS: Dict[Tuple[int, int], Fraction] = {
    (1, 2): Fraction(83, 225),
    (1, 3): Fraction(3, 20),
    (2, 2): Fraction(6, 25),
    (2, 3): Fraction(3, 25),
    (2, 4): Fraction(2, 225),
    (3, 3): Fraction(2, 25),
    (3, 4): Fraction(24, 1225),
}


def _check_molecular_tree(t: SimpleGraph) -> None:
    if t.n < 2 or not is_tree(t) or t.max_degree() > 4:
        raise GraphFormatError("expected a molecular tree of order >= 2")


def gamma_ha(t: SimpleGraph) -> Fraction:
    """Non-constant part of HA for a molecular tree, from its edge partition."""
    _check_molecular_tree(t)
    part = edge_partition(t)
    return sum((c * part[k] for k, c in GAMMA_COEFFICIENTS.items()), Fraction(0))


def ha_via_reduction(t: SimpleGraph) -> Fraction:
    """``(19n - 31)/25 + gamma_ha(t)``.

    Matches :func:`ha_index` for every molecular tree with n >= 3. The single
    edge K_2 is off by 18/25: its (1,1) edge has no term in the reduction.
    """
    return Fraction(19 * t.n - 31, 25) + gamma_ha(t)

