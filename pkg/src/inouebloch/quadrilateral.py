"""Coordinate model of the complete quadrilateral and its named curve classes.

The vertices are labelled so that P5 = P1P2 ∩ P3P4 and P6 = P1P4 ∩ P2P3.
The four sides are P1P2, P2P3, P3P4, P4P1 and the diagonals are P1P3,
P2P4, P5P6.  Multiplicities of the strict transforms are read off from
coordinate incidence rather than written in by hand, so the coordinate
model and the lattice model check each other.

Smoothness of the chosen members of the pencils ``|f_i|`` matters for some
disjointness statements about actual curves; at the level of classes the
intersection numbers below hold unconditionally.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ConfigError, DomainError
from .picard import DivisorClass, N_POINTS, anticanonical_class, canonical_class, exceptional, intersect, line_class

Point = tuple[Fraction, Fraction, Fraction]

SIDES = {"S1": (1, 2), "S2": (2, 3), "S3": (3, 4), "S4": (4, 1)}
DIAGONALS = {"Delta1": (1, 3), "Delta2": (2, 4), "Delta3": (5, 6)}
# base points of the conic pencils |f_i|
CONIC_PENCILS = {"f1": (2, 4, 5, 6), "f2": (1, 3, 5, 6), "f3": (1, 2, 3, 4)}


def _point(p: Sequence) -> Point:
    if len(p) != 3:
        raise DomainError(f"a projective point needs 3 coordinates, got {len(p)}")
    q = tuple(Fraction(x) for x in p)
    if not any(q):
        raise DomainError("(0:0:0) is not a projective point")
    return q  # type: ignore[return-value]


def cross(p: Sequence, q: Sequence) -> Point:
    """Cross product: the line through two points, or the meet of two lines."""
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def det3(p: Sequence, q: Sequence, r: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(cross(p, q), r)), Fraction(0))


def collinear(p: Sequence, q: Sequence, r: Sequence) -> bool:
    return det3(_point(p), _point(q), _point(r)) == 0


def same_point(p: Sequence, q: Sequence) -> bool:
    return not any(cross(_point(p), _point(q)))


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) != N_POINTS:
            raise DomainError(f"expected {N_POINTS} points, got {len(self.points)}")
        object.__setattr__(self, "points", tuple(_point(p) for p in self.points))

    def __getitem__(self, label: int) -> Point:
        """1-based access: ``cfg[5]`` is P5."""
        return self.points[label - 1]

    def line(self, i: int, j: int) -> Point:
        return cross(self[i], self[j])

    def on_line(self, k: int, i: int, j: int) -> bool:
        return det3(self[i], self[j], self[k]) == 0

    def violations(self) -> list[str]:
        """Names of violated invariants; empty when the configuration is valid."""
        bad = []
        for a, b, c in combinations(range(1, 5), 3):
            if self.on_line(c, a, b):
                bad.append(f"P{a},P{b},P{c} are collinear (P1..P4 must be in general position)")
        if not bad:
            if not self.on_line(5, 1, 2):
                bad.append("P5 does not lie on line P1P2")
            if not self.on_line(5, 3, 4):
                bad.append("P5 does not lie on line P3P4")
            if not self.on_line(6, 1, 4):
                bad.append("P6 does not lie on line P1P4")
            if not self.on_line(6, 2, 3):
                bad.append("P6 does not lie on line P2P3")
        return bad

    def validate(self) -> "PointConfiguration":
        bad = self.violations()
        if bad:
            raise DomainError("invalid quadrilateral configuration: " + "; ".join(bad))
        return self

    def transform(self, matrix: Sequence[Sequence]) -> "PointConfiguration":
        """Image under a 3x3 change of coordinates (acting on column vectors)."""
        m = [[Fraction(x) for x in row] for row in matrix]
        return PointConfiguration(tuple(
            tuple(sum((m[r][c] * p[c] for c in range(3)), Fraction(0)) for r in range(3))
            for p in self.points
        ))


def standard_points() -> PointConfiguration:
    """P1..P4 at the standard projective frame; P5, P6 as line intersections."""
    p1, p2, p3, p4 = [tuple(Fraction(x) for x in v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))]
    p5 = _normalize(cross(cross(p1, p2), cross(p3, p4)))
    p6 = _normalize(cross(cross(p1, p4), cross(p2, p3)))
    return PointConfiguration((p1, p2, p3, p4, p5, p6)).validate()


def _normalize(p: Sequence[Fraction]) -> Point:
    """Scale so the first nonzero coordinate is 1."""
    lead = next(x for x in p if x != 0)
    return tuple(x / lead for x in p)  # type: ignore[return-value]


def strict_transform_of_line(cfg: PointConfiguration, i: int, j: int) -> DivisorClass:
    """Class of the strict transform of line P_iP_j: L minus every vertex on it."""
    m = tuple(1 if cfg.on_line(k, i, j) else 0 for k in range(1, N_POINTS + 1))
    return DivisorClass(1, m)


def conic_pencil_class(base: Sequence[int]) -> DivisorClass:
    return DivisorClass(2, tuple(1 if k in base else 0 for k in range(1, N_POINTS + 1)))


def named_classes(cfg: PointConfiguration | None = None) -> dict[str, DivisorClass]:
    """Classes E1..E6, S1..S4, Delta1..Delta3, f1..f3, K, -K.

    ``f_i`` is defined as ``-K - Delta_i``; the conic-pencil description is
    checked against it by :func:`configuration_checks`.
    """
    cfg = (cfg or standard_points()).validate()
    table: dict[str, DivisorClass] = {}
    for i in range(1, N_POINTS + 1):
        table[f"E{i}"] = exceptional(i)
    for name, (i, j) in SIDES.items():
        table[name] = strict_transform_of_line(cfg, i, j)
    for name, (i, j) in DIAGONALS.items():
        table[name] = strict_transform_of_line(cfg, i, j)
    for i in (1, 2, 3):
        table[f"f{i}"] = anticanonical_class() - table[f"Delta{i}"]
    table["K"] = canonical_class()
    table["-K"] = anticanonical_class()
    return table


REPORT_ORDER = ["S1", "S2", "S3", "S4", "Delta1", "Delta2", "Delta3", "f1", "f2", "f3",
                "E1", "E2", "E3", "E4", "E5", "E6"]


def configuration_report(cfg: PointConfiguration | None = None) -> dict[str, dict[str, int]]:
    """Symmetric table of pairwise intersection numbers among S, Delta, f, E."""
    t = named_classes(cfg)
    return {x: {y: intersect(t[x], t[y]) for y in REPORT_ORDER} for x in REPORT_ORDER}


def expected_relations() -> list[tuple[str, str, int]]:
    """The displayed relations among S_h, Delta_i, f_i as (name, name, value)."""
    rel = []
    sides = list(SIDES)
    for h, sh in enumerate(sides):
        rel.append((sh, sh, -2))
        for sj in sides[h + 1:]:
            rel.append((sh, sj, 0))
        for i in (1, 2, 3):
            rel.append((sh, f"Delta{i}", 0))
            rel.append((sh, f"f{i}", 0))
    for i in (1, 2, 3):
        rel.append((f"f{i}", f"f{i}", 0))
        for j in (1, 2, 3):
            rel.append((f"Delta{i}", f"f{j}", 2 if i == j else 0))
            if j > i:
                rel.append((f"f{i}", f"f{j}", 2))
    return rel


def configuration_checks(cfg: PointConfiguration | None = None) -> list[tuple[str, bool]]:
    """Every incidence and intersection fact, as (description, holds)."""
    cfg = cfg or standard_points()
    t = named_classes(cfg)
    K = canonical_class()
    checks = []
    for a, b, want in expected_relations():
        got = intersect(t[a], t[b])
        checks.append((f"{a}.{b} = {want} (got {got})", got == want))
    for i in (1, 2, 3):
        s = t[f"Delta{i}"] + t[f"f{i}"] + K
        checks.append((f"Delta{i} + f{i} + K = 0", s.is_zero()))
        pencil = conic_pencil_class(CONIC_PENCILS[f"f{i}"])
        checks.append((f"f{i} is the conic pencil through P{CONIC_PENCILS[f'f{i}']}", pencil == t[f"f{i}"]))
    # each side carries three vertices, each diagonal two
    for name in SIDES:
        checks.append((f"{name} passes through 3 vertices", sum(t[name].m) == 3))
    for name in DIAGONALS:
        checks.append((f"{name} passes through 2 vertices", sum(t[name].m) == 2))
    return checks


_TOKEN = re.compile(r"[^\s,]+")


def parse_points(text: str, source: str | None = None) -> PointConfiguration:
    """Parse six lines of three rationals (``1``, ``-2``, ``3/4``; comma or space separated).

    Blank lines and ``#`` comments are ignored.  Any violated configuration
    invariant is reported by name.
    """
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        coords = []
        for match in _TOKEN.finditer(body):
            try:
                coords.append(Fraction(match.group()))
            except (ValueError, ZeroDivisionError):
                raise ConfigError(f"not a rational number: {match.group()!r}", lineno, match.start() + 1, source)
        if len(coords) != 3:
            raise ConfigError(f"expected 3 coordinates, got {len(coords)}", lineno, 1, source)
        if not any(coords):
            raise ConfigError("(0:0:0) is not a projective point", lineno, 1, source)
        points.append(tuple(coords))
    if len(points) != N_POINTS:
        raise ConfigError(f"expected {N_POINTS} points, got {len(points)}", None, None, source)
    cfg = PointConfiguration(tuple(points))
    bad = cfg.violations()
    if bad:
        raise ConfigError("; ".join(bad), None, None, source)
    return cfg
