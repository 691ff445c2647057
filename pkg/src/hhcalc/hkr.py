"""Hochschild homology and cohomology dimensions of smooth proper varieties.

Homology comes from Hodge numbers, ``HH_n = sum_{p-q=n} h^{p,q}``.  Cohomology
comes from polyvector fields, ``HH^n = sum_{p+q=n} dim H^q(wedge^p T)``, which the
Hodge diamond does not determine in general; callers pass a
:class:`PolyvectorTable`.  The only shortcut offered is the trivial-canonical
case, where ``wedge^p T = Omega^(N-p)``.

Both statements need ``char(k) = 0`` or ``char(k) >= dim X``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from hhcalc.errors import InvalidSpec
from hhcalc.gradedvec import GradedDims, shift
from hhcalc.hodge import HodgeDiamond


@dataclass(frozen=True)
class PolyvectorTable:
    """``a[(p, q)] = dim H^q(X, wedge^p T_X)`` for ``0 <= p, q <= dim``."""

    dim: int
    a: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise InvalidSpec("dimension must be nonnegative")
        clean = {}
        for (p, q), x in self.a.items():
            if not (0 <= p <= self.dim and 0 <= q <= self.dim):
                raise InvalidSpec(f"entry ({p}, {q}) outside the {self.dim + 1}-square")
            if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                raise InvalidSpec(f"entry ({p}, {q}) must be a nonnegative integer, got {x!r}")
            if x:
                clean[(p, q)] = x
        object.__setattr__(self, "a", dict(sorted(clean.items())))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.a.get(pq, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyvectorTable):
            return NotImplemented
        return self.dim == other.dim and dict(self.a) == dict(other.a)

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.a.items())))


def hh_homology(diamond: HodgeDiamond) -> GradedDims:
    """``HH_n(X)``, stored at degree ``-n``."""
    out: dict[int, int] = {}
    for p, row in enumerate(diamond.h):
        for q, x in enumerate(row):
            out[q - p] = out.get(q - p, 0) + x
    return GradedDims(out)


def hh_cohomology_from_polyvectors(table: PolyvectorTable) -> GradedDims:
    out: dict[int, int] = {}
    for (p, q), x in table.a.items():
        out[p + q] = out.get(p + q, 0) + x
    return GradedDims(out)


def polyvectors_trivial_canonical(diamond: HodgeDiamond) -> PolyvectorTable:
    """Polyvector table of a variety with ``omega_X = O_X``: ``a(p, q) = h^{N-p,q}``.

    Trivial canonical bundle is the caller's claim; nothing here can check it.
    """
    n = diamond.dim
    return PolyvectorTable(
        n, {(p, q): diamond.h[n - p][q] for p in range(n + 1) for q in range(n + 1)}
    )


def cy_shift(hh_hom: GradedDims, n: int) -> GradedDims:
    """``HH^*(C) = HH_*(C)[-n]`` for a Calabi-Yau category with Serre functor ``[n]``."""
    return shift(hh_hom, -n)


# Enriques surface (char != 2): omega is 2-torsion, so the polyvector table is
# not the reflected Hodge diamond.  Kept as fixed data rather than computed.
ENRIQUES_DIAMOND = HodgeDiamond.from_matrix([[1, 0, 0], [0, 10, 0], [0, 0, 1]])
ENRIQUES_POLYVECTORS = PolyvectorTable(2, {(0, 0): 1, (1, 1): 10, (2, 2): 1})
