"""Hodge diamonds of smooth hypersurfaces in (weighted) projective space.

The primitive middle cohomology of a quasi-smooth hypersurface of degree ``d``
in ``P(w_0, ..., w_n)`` is read off the Jacobian ring (Griffiths, extended to
the weighted case by Steenbrink): with ``N = n - 1`` the dimension,

    h^{N-q,q}_prim = dim R_{(q+1)d - sum(w)},

and the Jacobian ring has Poincare series ``prod (1 - t^(d-w_i)) / (1 - t^(w_i))``.
Away from the middle row the diamond agrees with that of ``P^N``.

The weighted formula assumes the hypersurface is a quasi-smooth general member
avoiding the singular locus of the ambient space.  Only a necessary
monomial condition is checked here; full verification would need the
defining polynomial.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from hhcalc import poly
from hhcalc.errors import InvalidSpec, NotApplicable

#: Recorded in CLI output: the Hodge/HKR dimension formulas need this, and no
#: computation here can check it.
CHARACTERISTIC_ASSUMPTION = "char(k) = 0 or char(k) >= dim X"


@dataclass(frozen=True)
class VarietySpec:
    """Hypersurface of the given degree in ``P(weights)``."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) < 2:
            raise InvalidSpec("need at least two ambient coordinates")
        if any(isinstance(w, bool) or not isinstance(w, int) or w < 1 for w in self.weights):
            raise InvalidSpec(f"weights must be positive integers, got {self.weights}")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise InvalidSpec(f"degree must be a positive integer, got {self.degree}")

    @property
    def dim(self) -> int:
        return len(self.weights) - 2

    @property
    def is_projective(self) -> bool:
        """True when the ambient space is ordinary projective space."""
        return all(w == 1 for w in self.weights)


def hypersurface(degree: int, dim: int) -> VarietySpec:
    """Degree-``degree`` hypersurface of dimension ``dim`` in ``P^(dim+1)``."""
    return VarietySpec((1,) * (dim + 2), degree)


def double_cover(n: int, branch_degree: int) -> VarietySpec:
    """Double cover of ``P^n`` branched along a smooth hypersurface of even degree ``2k``.

    Modelled as ``y^2 = f(x)``, a degree-``2k`` hypersurface in ``P(1^(n+1), k)``.
    """
    if n < 1:
        raise InvalidSpec("the base projective space must have positive dimension")
    if branch_degree < 2 or branch_degree % 2:
        raise InvalidSpec(f"branch degree must be even and >= 2, got {branch_degree}")
    return VarietySpec((1,) * (n + 1) + (branch_degree // 2,), branch_degree)


@dataclass(frozen=True)
class HodgeDiamond:
    """``h[p][q] = dim H^q(X, Omega^p)`` for a smooth proper ``X`` of dimension ``dim``."""

    dim: int
    h: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        h = tuple(tuple(row) for row in self.h)
        object.__setattr__(self, "h", h)
        if self.dim < 0:
            raise InvalidSpec("dimension must be nonnegative")
        size = self.dim + 1
        if len(h) != size or any(len(row) != size for row in h):
            raise InvalidSpec(f"a diamond of dimension {self.dim} needs a {size}x{size} matrix")
        for row in h:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                    raise InvalidSpec(f"Hodge numbers must be nonnegative integers, got {x!r}")

    @classmethod
    def from_matrix(cls, h: Sequence[Sequence[int]]) -> HodgeDiamond:
        return cls(len(h) - 1, tuple(tuple(row) for row in h))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if 0 <= p <= self.dim and 0 <= q <= self.dim:
            return self.h[p][q]
        return 0

    def is_hodge_symmetric(self) -> bool:
        n = self.dim
        return all(self.h[p][q] == self.h[q][p] for p in range(n + 1) for q in range(n + 1))

    def is_serre_symmetric(self) -> bool:
        n = self.dim
        return all(
            self.h[p][q] == self.h[n - p][n - q] for p in range(n + 1) for q in range(n + 1)
        )

    def euler(self) -> int:
        """Topological Euler characteristic ``sum (-1)^(p+q) h^{p,q}``."""
        return sum(
            (-1) ** (p + q) * x for p, row in enumerate(self.h) for q, x in enumerate(row)
        )

    def total(self) -> int:
        return sum(map(sum, self.h))

    def middle_row(self) -> tuple[int, ...]:
        """``(h^{N,0}, h^{N-1,1}, ..., h^{0,N})``."""
        n = self.dim
        return tuple(self.h[n - q][q] for q in range(n + 1))

    def pretty(self) -> str:
        """Staggered diamond, ``h^{N,N}`` on top, ``h^{N,0}`` at the left of the middle row."""
        n = self.dim
        width = max(len(str(x)) for row in self.h for x in row) + 2
        lines = []
        for s in range(2 * n, -1, -1):
            cells = [" " * width] * (2 * n + 1)
            for p in range(min(s, n), max(0, s - n) - 1, -1):
                q = s - p
                cells[q - p + n] = str(self.h[p][q]).center(width)
            lines.append("".join(cells).rstrip())
        indent = min(len(line) - len(line.lstrip()) for line in lines)
        return "\n".join(line[indent:] for line in lines)

    def __str__(self) -> str:
        return self.pretty()


def jacobian_poincare(spec: VarietySpec) -> poly.Poly:
    """Poincare polynomial of the Jacobian ring of a general member of ``spec``.

    >>> poly.to_str(jacobian_poincare(hypersurface(3, 1)))
    '1 + 3t + 3t^2 + t^3'
    """
    d = spec.degree
    bad = [w for w in spec.weights if d <= w]
    if bad:
        raise InvalidSpec(f"degree {d} must exceed every weight; offending weights {bad}")
    num = poly.product(poly.binomial_term(d - w) for w in spec.weights)
    den = poly.product(poly.binomial_term(w) for w in spec.weights)
    quot, rem = poly.divmod_exact(num, den)
    if rem:
        raise InvalidSpec(
            f"Jacobian ring series for weights {spec.weights}, degree {d} is not a polynomial"
        )
    return quot


def _check_quasi_smooth_monomials(spec: VarietySpec) -> None:
    # Necessary condition: for every variable x_i the general member contains
    # x_i^a or x_i^a x_j, i.e. w_i divides d - w_j for some j (j = i allowed).
    d = spec.degree
    for i, wi in enumerate(spec.weights):
        if not any((d - wj) % wi == 0 for wj in spec.weights):
            raise NotApplicable(
                f"no monomial of degree {d} of the form x_{i}^a or x_{i}^a x_j; "
                "a general member is not quasi-smooth"
            )


def hodge_projective_space(n: int) -> HodgeDiamond:
    if n < 0:
        raise InvalidSpec("dimension must be nonnegative")
    return HodgeDiamond(n, tuple(tuple(int(p == q) for q in range(n + 1)) for p in range(n + 1)))


def hodge_hypersurface(spec: VarietySpec) -> HodgeDiamond:
    """Hodge diamond of a general (quasi-)smooth member of ``spec``.

    A hyperplane (degree 1 in ordinary projective space) is handled as the
    degenerate case it is, a projective space of one dimension less.
    """
    n = spec.dim
    if spec.degree == 1 and spec.is_projective:
        return hodge_projective_space(n)
    if spec.degree <= max(spec.weights):
        jacobian_poincare(spec)  # raises InvalidSpec
    if not spec.is_projective:
        _check_quasi_smooth_monomials(spec)
    try:
        series = jacobian_poincare(spec)
    except InvalidSpec:
        if not spec.is_projective:
            raise NotApplicable(
                f"weights {spec.weights}, degree {spec.degree}: Jacobian series is not "
                "a polynomial, so the general member is not quasi-smooth"
            ) from None
        raise
    shift = sum(spec.weights)
    # Diagonal classes come from the ambient space (including the hyperplane
    # class in the middle when N is even); the primitive part sits on the middle row.
    h = [[int(p == q) for q in range(n + 1)] for p in range(n + 1)]
    for q in range(n + 1):
        h[n - q][q] += poly.coeff(series, (q + 1) * spec.degree - shift)
    return HodgeDiamond(n, tuple(map(tuple, h)))


def deformation_dim(spec: VarietySpec) -> int:
    """``dim H^1(X, T_X)`` for a smooth hypersurface of dimension at least 3.

    For ``N >= 3`` all first-order deformations are embedded, and they are
    counted by the degree-``d`` piece of the Jacobian ring.
    """
    if not spec.is_projective:
        raise NotApplicable("deformation count is only implemented for ordinary projective space")
    if spec.dim < 3:
        raise NotApplicable(f"needs dimension >= 3, got {spec.dim}")
    return poly.coeff(jacobian_poincare(spec), spec.degree)

