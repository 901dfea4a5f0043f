"""Dimensions of linear systems on the blow-up via plane interpolation.

``h0(a*L - sum(m_i E_i))`` is the dimension of the space of degree-``a``
forms in ``x, y, z`` vanishing to order at least ``m_i`` at ``P_i``.

Ordering conventions (fixed, so matrices are reproducible):

* columns are the monomials ``x^i y^j z^k`` with ``i + j + k = a`` in
  descending lexicographic order of ``(i, j, k)``;
* rows run over the points in label order, and for each point over the
  partial derivatives ``d^|alpha| / dx^alpha_x dy^alpha_y dz^alpha_z`` of order
  ``min(m - 1, a)`` in the same descending lexicographic order of ``alpha``.

Over a field of characteristic zero, Euler's relation makes vanishing of
all order-``(m-1)`` partials at a point equivalent to multiplicity ``>= m``
there, so the row count per point is ``m(m+1)/2``.  When ``m > a + 1`` the
order is capped at ``a``: those partials are constants and force the form
to be zero, matching the fact that no nonzero form of degree ``a`` has a
point of multiplicity ``> a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

from . import linalg
from .picard import DivisorClass, canonical_class, intersect
from .quadrilateral import Point, PointConfiguration, standard_points


def exponents(degree: int) -> list[tuple[int, int, int]]:
    """Exponent triples of total degree ``degree``, descending lex order."""
    return [(i, j, degree - i - j) for i in range(degree, -1, -1) for j in range(degree - i, -1, -1)]


def _falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k) if k <= n else 0


@dataclass(frozen=True)
class InterpolationProblem:
    degree: int
    conditions: tuple[tuple[Point, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        for _, mult in self.conditions:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")

    @property
    def n_columns(self) -> int:
        return (self.degree + 1) * (self.degree + 2) // 2

    def derivative_order(self, mult: int) -> int | None:
        if mult <= 0:
            return None
        return min(mult - 1, self.degree)

    @property
    def n_rows(self) -> int:
        total = 0
        for _, mult in self.conditions:
            r = self.derivative_order(mult)
            if r is not None:
                total += (r + 1) * (r + 2) // 2
        return total


def _integral(point: Point) -> tuple[int, int, int]:
    # rescaling the point scales each derivative row by a nonzero constant
    fr = [Fraction(c) for c in point]
    den = lcm(*(c.denominator for c in fr))
    return tuple(int(c * den) for c in fr)


def interpolation_matrix(problem: InterpolationProblem) -> list[list[int]]:
    """Rows ``d^alpha(x^e)`` at each point, one per ``|alpha| = order``.

    Points are scaled to integer coordinates first, so entries are integers.
    """
    cols = exponents(problem.degree)
    rows: list[list[int]] = []
    for point, mult in problem.conditions:
        order = problem.derivative_order(mult)
        if order is None:
            continue
        p = _integral(point)
        powers = [[c ** k for k in range(problem.degree + 1)] for c in p]
        for alpha in exponents(order):
            row = []
            for e in cols:
                value = 1
                for k in range(3):
                    if e[k] < alpha[k]:
                        value = 0
                        break
                    value *= _falling(e[k], alpha[k]) * powers[k][e[k] - alpha[k]]
                row.append(value)
            rows.append(row)
    return rows


def problem_for(d: DivisorClass, cfg: PointConfiguration) -> InterpolationProblem:
    # negative multiplicity: the exceptional curve splits off as a fixed component
    return InterpolationProblem(d.a, tuple((p, max(m, 0)) for p, m in zip(cfg.points, d.m)))


def h0(d: DivisorClass, cfg: PointConfiguration | None = None) -> int:
    """Exact ``h^0`` of the class ``d`` on the blow-up of ``cfg``."""
    if d.a < 0:
        return 0
    return _dimension(problem_for(d, cfg or standard_points()))


@lru_cache(maxsize=4096)
def _dimension(problem: InterpolationProblem) -> int:
    return linalg.nullity(interpolation_matrix(problem), problem.n_columns)


def chi_riemann_roch(d: DivisorClass) -> int:
    """Riemann-Roch on a rational surface: ``1 + (d^2 - d.K)/2``."""
    twice = intersect(d, d) - intersect(d, canonical_class(d.n_points))
    if twice % 2:
        raise ValueError(f"d^2 - d.K is odd for {d}")
    return 1 + twice // 2
