"""Hochschild homology bookkeeping for semiorthogonal decompositions.

``HH_*`` is additive: for ``D = <A_1, ..., A_r>`` it is the direct sum of the
``HH_*(A_i)``, and an exceptional object contributes ``k`` in degree 0.
Hochschild cohomology is *not* additive, so everything here is tagged with
its kind and cohomology is refused.
"""

from __future__ import annotations

from dataclasses import dataclass

from hhcalc.errors import InvalidSpec, NotAdditive
from hhcalc.gradedvec import GradedDims, direct_sum, subtract

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"

EXCEPTIONAL = GradedDims.point(0)


@dataclass(frozen=True)
class Component:
    label: str
    dims: GradedDims
    kind: str = HOMOLOGY


@dataclass(frozen=True)
class SodSpec:
    total: GradedDims
    components: tuple[Component, ...] = ()
    exceptional_count: int = 0
    kind: str = HOMOLOGY

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if self.exceptional_count < 0:
            raise InvalidSpec("exceptional_count must be nonnegative")
        labels = [c.label for c in self.components]
        if len(set(labels)) != len(labels):
            raise InvalidSpec(f"component labels must be unique, got {labels}")


def _require_homology(spec: SodSpec) -> None:
    for what, kind in [("total", spec.kind)] + [(c.label, c.kind) for c in spec.components]:
        if kind != HOMOLOGY:
            raise NotAdditive(
                f"{what!r} is tagged {kind!r}; only Hochschild homology is additive "
                "under semiorthogonal decompositions"
            )


def known_part(spec: SodSpec) -> GradedDims:
    _require_homology(spec)
    return direct_sum(*(c.dims for c in spec.components), spec.exceptional_count * EXCEPTIONAL)


def residual(spec: SodSpec) -> GradedDims:
    """``HH_*`` of the remaining component once the listed pieces are split off.

    Raises :class:`~hhcalc.errors.NegativeDimension` when the claimed pieces do
    not fit inside the total.
    """
    return subtract(spec.total, known_part(spec))
