"""Invariants of bidouble covers of the blown-up plane.

A bidouble ((Z/2)^2) cover is given by branch classes ``D1, D2, D3`` and
character classes ``L1, L2, L3`` with ``D_j + D_k = 2 L_i`` whenever
``{i, j, k} = {1, 2, 3}``.  The formulas used here are the standard ones
for abelian covers (Pardini; Mendes Lopes-Pardini), with ``M = 2K + sum D``:

* ``chi(O_X) = 4 chi(O_Y) + 1/2 sum L_i (L_i + K)``
* ``K_X^2 = (K + D/2)^2 * 4 = M^2``
* ``p_g(X) = p_g(Y) + sum h0(K + L_i)``
* ``h0(2K_X)`` splits as ``h0(M)`` (invariant part) plus ``h0(M - L_i)``
  for the three nontrivial characters.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ConfigError, DomainError
from .linear_systems import h0
from .picard import DivisorClass, canonical_class, exceptional, intersect, line_class, parse_class, zero
from .quadrilateral import PointConfiguration, named_classes, standard_points

INDEX_TRIPLES = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


@dataclass(frozen=True)
class BranchData:
    D: tuple[DivisorClass, DivisorClass, DivisorClass]
    Lchar: tuple[DivisorClass, DivisorClass, DivisorClass]
    # named irreducible pieces of each D_i, when known
    components: tuple[tuple[str, ...], ...] | None = None
    n_minus2: int = 0

    @property
    def total_branch(self) -> DivisorClass:
        return self.D[0] + self.D[1] + self.D[2]

    def bicanonical_class(self) -> DivisorClass:
        """``M = 2K + D1 + D2 + D3``."""
        return 2 * canonical_class() + self.total_branch

    def relation_holds(self, i: int) -> bool:
        _, j, k = next(t for t in INDEX_TRIPLES if t[0] == i)
        return self.D[j - 1] + self.D[k - 1] == 2 * self.Lchar[i - 1]

    def is_degenerate(self) -> bool:
        return all(d.is_zero() for d in self.D)


def inoue_branch_data() -> BranchData:
    t = named_classes()
    K, E = canonical_class(), exceptional
    D1 = t["Delta1"] + t["f2"] + t["S1"] + t["S2"]
    D2 = t["Delta2"] + t["f3"]
    D3 = t["Delta3"] + 2 * t["f1"] + t["S3"] + t["S4"]
    L1 = -K + t["f1"] - E(4)
    L2 = -2 * K - E(5) - E(6)
    L3 = -K + line_class() - E(1) - E(2) - E(3)
    return BranchData(
        (D1, D2, D3), (L1, L2, L3),
        components=(("Delta1", "f2", "S1", "S2"), ("Delta2", "f3"), ("Delta3", "f1", "f1'", "S3", "S4")),
        n_minus2=4,
    )


def zero_branch_data() -> BranchData:
    z = zero()
    return BranchData((z, z, z), (z, z, z))


@dataclass
class ValidationReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)
    degenerate: bool = False

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def failures(self) -> list[str]:
        return [name for name, passed in self.checks if not passed]


def _component_class(name: str, table: dict[str, DivisorClass]) -> DivisorClass:
    return table[name.rstrip("'")]


def validate_branch_data(b: BranchData) -> ValidationReport:
    report = ValidationReport(degenerate=b.is_degenerate())
    for i, j, k in INDEX_TRIPLES:
        report.checks.append((f"D{j} + D{k} = 2 L{i}", b.relation_holds(i)))
    if b.components is not None:
        table = {**named_classes(), "L": line_class()}
        pieces = [(n, _component_class(n, table)) for comp in b.components for n in comp]
        for (n1, c1), (n2, c2) in combinations(pieces, 2):
            if n1.startswith("S") or n2.startswith("S"):
                report.checks.append((f"{n1}.{n2} = 0", intersect(c1, c2) == 0))
        for idx, comp in enumerate(b.components, start=1):
            total = zero()
            for n in comp:
                total = total + _component_class(n, table)
            report.checks.append((f"D{idx} = {' + '.join(comp)}", total == b.D[idx - 1]))
    return report


def _require_relations(b: BranchData):
    bad = [i for i in (1, 2, 3) if not b.relation_holds(i)]
    if bad:
        raise DomainError("cover relations fail for " + ", ".join(f"2L{i}" for i in bad))


def cover_chi(b: BranchData) -> int:
    _require_relations(b)
    K = canonical_class()
    twice = sum(intersect(L, L + K) for L in b.Lchar)
    if twice % 2:
        raise DomainError("sum of L_i(L_i + K) is odd; inconsistent branch data")
    return 4 * 1 + twice // 2


def cover_K2(b: BranchData) -> int:
    _require_relations(b)
    M = b.bicanonical_class()
    return intersect(M, M)


def minimal_K2(b: BranchData, n_minus2: int | None = None) -> int:
    """K^2 after contracting the two (-1)-curves over each branch (-2)-curve."""
    n = b.n_minus2 if n_minus2 is None else n_minus2
    if n < 0:
        raise DomainError("number of (-2)-curves must be nonnegative")
    return cover_K2(b) + 2 * n


def bicanonical_character_dims(b: BranchData, cfg: PointConfiguration | None = None) -> tuple[int, int, int, int]:
    """(invariant, chi_1, chi_2, chi_3) dimensions of H^0(2K) of the cover."""
    _require_relations(b)
    cfg = cfg or standard_points()
    M = b.bicanonical_class()
    return (h0(M, cfg),) + tuple(h0(M - L, cfg) for L in b.Lchar)  # type: ignore[return-value]


def anti_invariant_dims(dims: tuple[int, int, int, int]) -> tuple[int, int, int]:
    """Anti-invariant part for gamma_i: the two characters nontrivial on gamma_i."""
    _, c1, c2, c3 = dims
    return (c2 + c3, c1 + c3, c1 + c2)


def geometric_genus_and_irregularity(b: BranchData, cfg: PointConfiguration | None = None) -> tuple[int, int]:
    cfg = cfg or standard_points()
    K = canonical_class()
    pg = h0(K, cfg) + sum(h0(K + L, cfg) for L in b.Lchar)
    q = 1 + pg - cover_chi(b)
    if q < 0:
        raise DomainError(f"irregularity would be {q} < 0; inconsistent branch data")
    return pg, q


@dataclass(frozen=True)
class CoverInvariants:
    K2_cover: int
    chi_cover: int
    p_g: int
    q: int
    K2_minimal: int
    bicanonical_dims: tuple[int, int, int, int]


def cover_invariants(b: BranchData, cfg: PointConfiguration | None = None) -> CoverInvariants:
    pg, q = geometric_genus_and_irregularity(b, cfg)
    return CoverInvariants(
        K2_cover=cover_K2(b),
        chi_cover=cover_chi(b),
        p_g=pg,
        q=q,
        K2_minimal=minimal_K2(b),
        bicanonical_dims=bicanonical_character_dims(b, cfg),
    )


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?([A-Za-z][A-Za-z0-9']*)\s*")


def parse_class_expression(text: str, table: dict[str, DivisorClass] | None = None) -> tuple[DivisorClass, tuple[str, ...] | None]:
    """Parse ``Delta1 + f2 + S1`` or ``2*f1 - E4`` or ``-K + L - E1``.

    ``L`` is the line class.  Returns the class and the component names of
    terms (multiplicity expanded, repeats primed); the component tuple is
    ``None`` when some term is subtracted.
    """
    table = dict(table or named_classes())
    table["L"] = line_class()
    total = zero()
    comps: list[str] = []
    subtracted = False
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty class expression")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse term at column {pos + 1}")
        sign, coeff, name = m.groups()
        if pos > 0 and sign is None:
            raise ValueError(f"missing operator at column {pos + 1}")
        if name not in table:
            raise ValueError(f"unknown class name {name!r} at column {m.start(3) + 1}")
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        total = total + c * table[name]
        subtracted = subtracted or c < 0
        for r in range(max(c, 0)):
            comps.append(name + "'" * r)
        pos = m.end()
    return total, None if subtracted else tuple(comps)


_VECTOR = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
_KEYS = ("D1", "D2", "D3", "L1", "L2", "L3")


def parse_branch_file(text: str, source: str | None = None) -> BranchData:
    """Parse branch data written as ``key: value`` lines.

    Keys are ``D1 D2 D3 L1 L2 L3`` (required) and ``n2`` (optional count of
    branch (-2)-curves, default 0).  A value is either seven comma-separated
    integers ``a,m1,...,m6`` or an expression in the named classes such as
    ``Delta1 + f2 + S1 + S2`` or ``-2*K - E5 - E6``.  Blank lines and ``#``
    comments are ignored.
    """
    values: dict[str, DivisorClass] = {}
    comps: dict[str, tuple[str, ...] | None] = {}
    n2 = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            raise ConfigError("expected 'key: value'", lineno, 1, source)
        key, value = body.split(":", 1)
        key = key.strip()
        vcol = body.index(":") + 2
        if key == "n2":
            try:
                n2 = int(value)
            except ValueError:
                raise ConfigError(f"n2 must be an integer, got {value.strip()!r}", lineno, vcol, source)
            continue
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno, 1, source)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno, 1, source)
        if _VECTOR.match(value):
            try:
                values[key] = parse_class(value)
            except ValueError as exc:
                raise ConfigError(str(exc), lineno, vcol, source)
            comps[key] = None
        else:
            try:
                values[key], comps[key] = parse_class_expression(value)
            except ValueError as exc:
                raise ConfigError(str(exc), lineno, vcol, source)
    missing = [k for k in _KEYS if k not in values]
    if missing:
        raise ConfigError("missing keys: " + ", ".join(missing), None, None, source)
    d_comps = [comps[k] for k in ("D1", "D2", "D3")]
    components = tuple(d_comps) if all(c is not None for c in d_comps) else None  # type: ignore[arg-type]
    return BranchData(
        tuple(values[k] for k in ("D1", "D2", "D3")),  # type: ignore[arg-type]
        tuple(values[k] for k in ("L1", "L2", "L3")),  # type: ignore[arg-type]
        components=components,
        n_minus2=n2,
    )
