"""Picard lattice of the plane blown up in six points.

A class is written ``a*L - sum(m_i * E_i)``: ``L`` is the pullback of a
line and ``E_i`` the exceptional curve over the i-th point.  The vector
``m`` stores the *subtracted* multiplicities, so ``L - E_1 - E_3`` is
``DivisorClass(1, (1, 0, 1, 0, 0, 0))`` and the canonical class
``-3L + sum(E_i)`` is ``DivisorClass(-3, (-1,) * 6)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

N_POINTS = 6


@dataclass(frozen=True)
class DivisorClass:
    a: int
    m: tuple[int, ...] = (0,) * N_POINTS

    def __post_init__(self):
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))

    @classmethod
    def from_vector(cls, vec: Iterable[int]) -> "DivisorClass":
        a, *m = vec
        return cls(a, tuple(m))

    @property
    def vector(self) -> tuple[int, ...]:
        return (self.a, *self.m)

    @property
    def n_points(self) -> int:
        return len(self.m)

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if len(other.m) != len(self.m):
            raise ValueError("classes live on blow-ups at different numbers of points")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.a + other.a, tuple(x + y for x, y in zip(self.m, other.m)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.a - other.a, tuple(x - y for x, y in zip(self.m, other.m)))

    def __neg__(self):
        return DivisorClass(-self.a, tuple(-x for x in self.m))

    def __mul__(self, s: int):
        if not isinstance(s, int):
            return NotImplemented
        return DivisorClass(s * self.a, tuple(s * x for x in self.m))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a == 0 and not any(self.m)

    def __str__(self):
        return f"({self.a};{','.join(str(x) for x in self.m)})"


def zero(n: int = N_POINTS) -> DivisorClass:
    return DivisorClass(0, (0,) * n)


def line_class(n: int = N_POINTS) -> DivisorClass:
    return DivisorClass(1, (0,) * n)


def exceptional(i: int, n: int = N_POINTS) -> DivisorClass:
    """The class ``E_i`` (1-based), i.e. ``(0; 0..,-1,..0)`` in stored form."""
    if not 1 <= i <= n:
        raise ValueError(f"exceptional index {i} out of range 1..{n}")
    m = [0] * n
    m[i - 1] = -1
    return DivisorClass(0, tuple(m))


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number ``a*a' - sum(m_i*m_i')``; the form is diag(1,-1,...,-1)."""
    if len(d1.m) != len(d2.m):
        raise ValueError("classes live on blow-ups at different numbers of points")
    return d1.a * d2.a - sum(x * y for x, y in zip(d1.m, d2.m))


def canonical_class(n: int = N_POINTS) -> DivisorClass:
    return DivisorClass(-3, (-1,) * n)


def anticanonical_class(n: int = N_POINTS) -> DivisorClass:
    return -canonical_class(n)


def gram_matrix(n: int = N_POINTS) -> list[list[int]]:
    basis = [line_class(n)] + [exceptional(i, n) for i in range(1, n + 1)]
    return [[intersect(x, y) for y in basis] for x in basis]


def arithmetic_genus(d: DivisorClass) -> int:
    """Adjunction: ``1 + (d.d + d.K)/2``."""
    twice = intersect(d, d) + intersect(d, canonical_class(d.n_points))
    if twice % 2:
        raise ValueError(f"d^2 + d.K is odd for {d}; not a lattice class")
    return 1 + twice // 2


def parse_class(text: str) -> DivisorClass:
    """Parse ``"a,m1,...,m6"`` (whitespace tolerated) into a class."""
    tokens = [t.strip() for t in text.split(",")]
    if len(tokens) != N_POINTS + 1:
        raise ValueError(f"expected {N_POINTS + 1} comma-separated integers, got {len(tokens)}")
    values = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"entry {pos} is not an integer: {tok!r}") from None
    return DivisorClass.from_vector(values)
