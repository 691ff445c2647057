"""Integer-graded vector spaces up to isomorphism, i.e. dimension vectors.

Grading is cohomological throughout.  An entry ``m`` at degree ``i`` stands for
``k^m`` sitting in degree ``i``.  Hochschild *homology* ``HH_n`` is stored at
degree ``-n``, so ``k^m[s]`` (dimension ``m`` in degree ``-s``) reads the same for
homology and cohomology, and the Calabi-Yau relation between the two is a plain
:func:`shift`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import reduce

from hhcalc.errors import Inconsistent, NegativeDimension


class GradedDims:
    """Finitely supported map ``degree -> dimension``; absent degrees are zero."""

    __slots__ = ("_dims", "_hash")

    def __init__(self, dims: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        items = dims.items() if isinstance(dims, Mapping) else dims
        clean: dict[int, int] = {}
        for degree, dim in items:
            if isinstance(degree, bool) or not isinstance(degree, int):
                raise TypeError(f"degree must be an int, got {degree!r}")
            if isinstance(dim, bool) or not isinstance(dim, int):
                raise TypeError(f"dimension must be an int, got {dim!r}")
            if dim < 0:
                raise NegativeDimension(degree)
            if dim:
                clean[degree] = clean.get(degree, 0) + dim
        self._dims = dict(sorted(clean.items()))
        self._hash: int | None = None

    @classmethod
    def point(cls, degree: int = 0, dim: int = 1) -> GradedDims:
        """``k^dim`` concentrated in a single degree."""
        return cls({degree: dim})

    def __getitem__(self, degree: int) -> int:
        return self._dims.get(degree, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._dims)

    def __len__(self) -> int:
        return len(self._dims)

    def __contains__(self, degree: object) -> bool:
        return degree in self._dims

    def __bool__(self) -> bool:
        return bool(self._dims)

    def items(self):
        return self._dims.items()

    def as_dict(self) -> dict[int, int]:
        return dict(self._dims)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._dims)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._dims.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"GradedDims({self._dims!r})"

    def __str__(self) -> str:
        if not self._dims:
            return "0"
        terms = []
        for degree, dim in self._dims.items():
            term = "k" if dim == 1 else f"k^{dim}"
            if degree:
                term += f"[{-degree}]"
            terms.append(term)
        return " ⊕ ".join(terms)

    def __add__(self, other: GradedDims) -> GradedDims:
        return direct_sum(self, other)

    def __sub__(self, other: GradedDims) -> GradedDims:
        return subtract(self, other)

    def __mul__(self, n: int) -> GradedDims:
        if n < 0:
            raise NegativeDimension(0, "cannot scale by a negative multiplicity")
        return GradedDims({i: n * m for i, m in self._dims.items()})

    __rmul__ = __mul__

    def __le__(self, other: GradedDims) -> bool:
        """Pointwise domination."""
        return all(m <= other[i] for i, m in self._dims.items())


ZERO = GradedDims()


def shift(v: GradedDims, m: int) -> GradedDims:
    """``V -> V[m]`` with ``V[m]^i = V^(i+m)``; the support moves by ``-m``."""
    return GradedDims({i - m: dim for i, dim in v.items()})


def direct_sum(*vs: GradedDims) -> GradedDims:
    out: dict[int, int] = {}
    for v in vs:
        for i, dim in v.items():
            out[i] = out.get(i, 0) + dim
    return GradedDims(out)


def subtract(a: GradedDims, b: GradedDims) -> GradedDims:
    """Pointwise ``a - b``; raises :class:`NegativeDimension` unless ``b <= a``."""
    out = a.as_dict()
    for i, dim in b.items():
        left = out.get(i, 0) - dim
        if left < 0:
            raise NegativeDimension(i, f"{a[i]} - {dim}")
        out[i] = left
    return GradedDims(out)


def dual(v: GradedDims) -> GradedDims:
    return GradedDims({-i: dim for i, dim in v.items()})


def total_dim(v: GradedDims) -> int:
    return sum(dim for _, dim in v.items())


def is_palindromic(v: GradedDims) -> bool:
    return dual(v) == v


@dataclass(frozen=True)
class GradedInterval:
    """Per-degree bounds ``lo(i) <= x(i) <= hi(i)`` on an unknown graded space."""

    lo: GradedDims
    hi: GradedDims

    def __post_init__(self) -> None:
        for i, dim in self.lo.items():
            if dim > self.hi[i]:
                raise Inconsistent(i, f"lower bound {dim} exceeds upper bound {self.hi[i]}")

    @classmethod
    def exact(cls, v: GradedDims) -> GradedInterval:
        return cls(v, v)

    @classmethod
    def upto(cls, v: GradedDims) -> GradedInterval:
        """The interval ``[0, v]``."""
        return cls(ZERO, v)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.lo.support) | set(self.hi.support)))

    def at(self, degree: int) -> tuple[int, int]:
        return self.lo[degree], self.hi[degree]

    def contains(self, v: GradedDims) -> bool:
        return self.lo <= v and v <= self.hi

    def __add__(self, other: GradedInterval) -> GradedInterval:
        return GradedInterval(self.lo + other.lo, self.hi + other.hi)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        parts = []
        for i in self.degrees:
            lo, hi = self.at(i)
            parts.append(f"{i}: {lo}" if lo == hi else f"{i}: [{lo}, {hi}]")
        return "{" + ", ".join(parts) + "}"


def interval_sum(intervals: Iterable[GradedInterval]) -> GradedInterval:
    return reduce(GradedInterval.__add__, intervals, GradedInterval.exact(ZERO))
