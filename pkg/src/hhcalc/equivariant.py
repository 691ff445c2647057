"""Hochschild cohomology of categories of invariants, at the level of dimensions.

For a finite group ``G`` acting on ``C``,

    HH^*(C^G) = ( sum_{g in G} HH^*(C, phi_g) )^G,

where ``phi_g`` is the autoequivalence of ``g``.  The ``G``-action on each
summand is not known numerically, so every summand carries an interval for
the dimension of its invariant part, and the assembly adds intervals.

The Serre functor acts trivially on Hochschild cohomology.  For a cyclic
action with ``S_C = sigma o [n]`` this pins the identity summand completely,
and for ``Z/2`` the theorem becomes

    HH^*(C^{Z/2}) = HH^*(C) + HH_*(C)^{Z/2}[-n],

which :func:`solve_z2_split` inverts degree by degree.

The per-element interval model is exact for abelian groups.  For nonabelian
``G`` the action permutes summands of conjugate elements, and the caller has
to group conjugacy classes before assembling.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from hhcalc.errors import Inconsistent, InvalidSpec, MalformedSummand, NotApplicable
from hhcalc.gradedvec import GradedDims, GradedInterval, interval_sum, shift

IDENTITY_LABELS = frozenset({"1", "e", "id", "identity"})


@dataclass(frozen=True)
class SerreDescriptor:
    """``S_C = sigma o [shift_n]`` with ``sigma`` generating a ``Z/twist_order_q`` action."""

    shift_n: int
    twist_order_q: int = 1

    def __post_init__(self) -> None:
        if self.twist_order_q < 1:
            raise InvalidSpec(f"twist order must be >= 1, got {self.twist_order_q}")

    @property
    def is_calabi_yau(self) -> bool:
        return self.twist_order_q == 1


@dataclass(frozen=True)
class EquivariantSummand:
    """The summand ``HH^*(C, phi_g)`` with bounds on its ``G``-invariant part."""

    label: str
    total: GradedDims
    invariant: GradedInterval | None = None

    def __post_init__(self) -> None:
        if self.invariant is None:
            object.__setattr__(self, "invariant", GradedInterval.upto(self.total))
        if not self.invariant.hi <= self.total:
            bad = next(i for i in self.invariant.hi if self.invariant.hi[i] > self.total[i])
            raise MalformedSummand(
                f"summand {self.label!r}: invariant bound {self.invariant.hi[bad]} "
                f"exceeds total {self.total[bad]} in degree {bad}"
            )

    @property
    def is_identity(self) -> bool:
        return self.label in IDENTITY_LABELS


def assemble_invariants(summands: Iterable[EquivariantSummand]) -> GradedInterval:
    """Bounds on ``dim HH^i(C^G)`` from the per-element invariant bounds."""
    return interval_sum(s.invariant for s in summands)


def pin_serre_trivial(summand: EquivariantSummand, serre: SerreDescriptor) -> EquivariantSummand:
    """Collapse the identity summand's invariant interval to its full total.

    ``S_C`` acts trivially on ``HH^*(C)`` and so does any shift, hence so does
    ``sigma = S_C o [-n]`` and with it the whole cyclic group it generates.
    Any ``serre`` of the form ``sigma o [n]`` qualifies; it is taken as the
    caller's claim about ``C``.
    """
    if not summand.is_identity:
        raise NotApplicable(
            f"summand {summand.label!r} is not the identity element "
            f"(expected one of {sorted(IDENTITY_LABELS)})"
        )
    return EquivariantSummand(summand.label, summand.total, GradedInterval.exact(summand.total))


def invariant_serre(serre: SerreDescriptor) -> SerreDescriptor:
    """Serre functor of ``C^{Z/q}``: the twist becomes trivial, leaving ``[n]``."""
    return SerreDescriptor(serre.shift_n, 1)


def fractional_cy_relation(serre: SerreDescriptor) -> tuple[int, int]:
    """``(p, q)`` with ``S_C^q = [p]``; ``sigma^q = id`` gives ``p = n q``."""
    return serre.shift_n * serre.twist_order_q, serre.twist_order_q


@dataclass(frozen=True)
class Z2Split:
    hh_coh: GradedInterval
    """Bounds on ``HH^*(C)``."""
    invariant_hom: GradedInterval
    """Bounds on ``HH_*(C)^{Z/2}``, in homological grading (``HH_m`` at degree ``-m``)."""


def solve_z2_split(
    known_cg: GradedDims,
    hh_hom_c: GradedDims,
    n: int,
    coh_bounds: GradedInterval | None = None,
) -> Z2Split:
    """Invert ``HH^*(C^{Z/2}) = HH^*(C) + HH_*(C)^{Z/2}[-n]`` degree by degree.

    ``known_cg`` is ``HH^*(C^{Z/2})`` and ``hh_hom_c`` is ``HH_*(C)``.  In each
    cohomological degree ``i`` the invariant part ``x`` satisfies
    ``0 <= x <= HH_{n-i}(C)`` and ``HH^i(C) = known_cg(i) - x >= 0``; optional
    ``coh_bounds`` add prior bounds on ``HH^i(C)``.  Degrees do not interact,
    so one pass per degree gives the tightest intervals.
    """
    available = shift(hh_hom_c, -n)
    lo_coh, hi_coh, lo_inv, hi_inv = {}, {}, {}, {}
    degrees = set(known_cg.support) | set(available.support)
    if coh_bounds is not None:
        degrees |= set(coh_bounds.degrees)
    for i in sorted(degrees):
        k, h = known_cg[i], available[i]
        a, b = coh_bounds.at(i) if coh_bounds is not None else (0, k)
        x_lo = max(0, k - b)
        x_hi = min(h, k - a)
        if x_lo > x_hi:
            raise Inconsistent(
                i,
                f"HH^*(C^Z/2) has {k}, invariant part must lie in [0, {h}], "
                f"HH^*(C) must lie in [{a}, {b}]",
            )
        lo_coh[i], hi_coh[i] = k - x_hi, k - x_lo
        lo_inv[i - n], hi_inv[i - n] = x_lo, x_hi
    return Z2Split(
        GradedInterval(GradedDims(lo_coh), GradedDims(hi_coh)),
        GradedInterval(GradedDims(lo_inv), GradedDims(hi_inv)),
    )


def z2_summands(
    hh_coh_c: GradedInterval, hh_hom_c: GradedDims, serre: SerreDescriptor
) -> list[EquivariantSummand]:
    """The two summands of ``HH^*(C^{Z/2})`` for ``S_C = sigma o [n]``, ``sigma^2 = id``.

    The identity summand is pinned by the Serre rule.  ``HH^*(C, sigma) =
    HH_*(C)[-n]`` gets the unconstrained interval.  ``hh_coh_c`` may be
    inexact; its upper bound is used as the total.
    """
    if serre.twist_order_q != 2:
        raise NotApplicable(f"expected a Z/2 twist, got order {serre.twist_order_q}")
    ident = EquivariantSummand("1", hh_coh_c.hi, GradedInterval(hh_coh_c.lo, hh_coh_c.hi))
    twisted = EquivariantSummand("sigma", shift(hh_hom_c, -serre.shift_n))
    return [ident, twisted]

