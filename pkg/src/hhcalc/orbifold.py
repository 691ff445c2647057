"""Orbifold HKR: Hochschild cohomology of ``[X/G]`` from fixed-locus data.

    HH^n([X/G]) = ( sum_g sum_{p+q=n} H^{q-c_g}(X^g, wedge^p T_{X^g} (x) det N_{X^g/X}) )^G

The fixed-locus cohomology tables are inputs (computing them is a geometry
problem of its own), and ``X^g`` is assumed smooth.  As in
:mod:`hhcalc.equivariant`, invariants are carried as per-element intervals,
and for nonabelian ``G`` the caller groups conjugacy classes.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from hhcalc.errors import MalformedDatum
from hhcalc.gradedvec import GradedDims, GradedInterval, interval_sum


@dataclass(frozen=True)
class FixedLocusDatum:
    """Data for one group element ``g``.

    ``table[(p, j)] = dim H^j(X^g, wedge^p T_{X^g} (x) det N)`` and ``codim`` is
    ``c_g``.  ``invariant`` bounds the ``G``-invariant part of the assembled
    contribution and defaults to ``[0, contribution]``.
    """

    label: str
    codim: int
    table: Mapping[tuple[int, int], int] = field(default_factory=dict)
    invariant: GradedInterval | None = None

    def __post_init__(self) -> None:
        if self.codim < 0:
            raise MalformedDatum(f"{self.label!r}: codimension must be nonnegative")
        clean = {}
        for (p, j), x in self.table.items():
            if p < 0 or j < 0:
                raise MalformedDatum(f"{self.label!r}: negative index ({p}, {j})")
            if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                raise MalformedDatum(f"{self.label!r}: entry ({p}, {j}) must be a nonnegative int")
            if x:
                clean[(p, j)] = x
        object.__setattr__(self, "table", dict(sorted(clean.items())))
        contribution = element_contribution(self)
        if self.invariant is None:
            object.__setattr__(self, "invariant", GradedInterval.upto(contribution))
        elif not self.invariant.hi <= contribution:
            raise MalformedDatum(
                f"{self.label!r}: invariant upper bound {self.invariant.hi} "
                f"exceeds contribution {contribution}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FixedLocusDatum):
            return NotImplemented
        return (self.label, self.codim, dict(self.table), self.invariant) == (
            other.label,
            other.codim,
            dict(other.table),
            other.invariant,
        )

    def __hash__(self) -> int:
        return hash((self.label, self.codim, tuple(self.table.items()), self.invariant))


def element_contribution(datum: FixedLocusDatum) -> GradedDims:
    """Summand of ``g`` before invariants; ``table[(p, j)]`` lands in degree ``p + j + c_g``."""
    out: dict[int, int] = {}
    for (p, j), x in datum.table.items():
        n = p + j + datum.codim
        out[n] = out.get(n, 0) + x
    return GradedDims(out)


def orbifold_hh(data: Iterable[FixedLocusDatum]) -> GradedInterval:
    """Bounds on ``HH^*([X/G])``; exact when every invariant interval is."""
    data = list(data)
    labels = [d.label for d in data]
    if len(set(labels)) != len(labels):
        raise MalformedDatum(f"duplicate group element labels: {labels}")
    return interval_sum(d.invariant for d in data)
