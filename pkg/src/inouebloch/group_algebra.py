"""Rational group algebras of finite groups and the subgroup-sum ideal test.

For a subgroup ``H`` write ``z(H)`` for the sum of its elements in ``QG``.
The criterion checked here asks whether ``z(H)`` lies in the two-sided
ideal generated by ``z(H_1), ..., z(H_r)``.  Coefficients are rational: the
ideal is the span of ``a * g * b`` for group elements ``a, b``, so the
question is a linear system with rational data, and such a system is
solvable over C exactly when it is solvable over Q.

The second hypothesis of the criterion, ``T(S/H_i) = 0`` for every
``i = 1..r``, is not computable here and enters only as caller-supplied
flags.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import linalg
from .errors import ConfigError, DomainError

MAX_ORDER = 256
FULL_ASSOCIATIVITY_CHECK = 64


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by its multiplication table; element 0 is the identity."""

    table: tuple[tuple[int, ...], ...]
    name: str = "G"
    inv: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise DomainError("a group has at least one element")
        if n > MAX_ORDER:
            raise DomainError(f"group order {n} exceeds the supported limit {MAX_ORDER}")
        for row in table:
            if len(row) != n:
                raise DomainError("multiplication table is not square")
            if sorted(row) != list(range(n)):
                raise DomainError("a row of the multiplication table is not a permutation")
        for c in range(n):
            if sorted(table[r][c] for r in range(n)) != list(range(n)):
                raise DomainError("a column of the multiplication table is not a permutation")
        if any(table[0][g] != g or table[g][0] != g for g in range(n)):
            raise DomainError("element 0 is not the identity")
        inv = []
        for g in range(n):
            h = table[g].index(0)
            if table[h][g] != 0:
                raise DomainError(f"element {g} has no two-sided inverse")
            inv.append(h)
        object.__setattr__(self, "inv", tuple(inv))
        self._check_associative()

    def _check_associative(self):
        n = self.order
        if n <= FULL_ASSOCIATIVITY_CHECK:
            triples: Iterable = product(range(n), repeat=3)
        else:
            rng = random.Random(n)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(20000)]
        t = self.table
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise DomainError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens``."""
        elems = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elems)

    def subgroups(self) -> list[frozenset[int]]:
        """All subgroups, sorted by (order, members)."""
        found = {frozenset({0})}
        frontier = list(found)
        while frontier:
            nxt = []
            for h in frontier:
                for g in range(self.order):
                    if g in h:
                        continue
                    k = self.closure(set(h) | {g})
                    if k not in found:
                        found.add(k)
                        nxt.append(k)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), name=f"Z/{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element ``(x, y)`` gets index ``x * |h| + y``."""
    m = h.order
    n = g.order * m
    table = []
    for a in range(n):
        x1, y1 = divmod(a, m)
        table.append(tuple(g.mul(x1, b // m) * m + h.mul(y1, b % m) for b in range(n)))
    return FiniteGroup(tuple(table), name=f"{g.name} x {h.name}")


def elementary_abelian_2(k: int) -> FiniteGroup:
    """(Z/2)^k with elements as bitmasks; multiplication is XOR."""
    n = 2 ** k
    return FiniteGroup(tuple(tuple(a ^ b for b in range(n)) for a in range(n)), name=f"(Z/2)^{k}")


def klein_four() -> FiniteGroup:
    """(Z/2)^2 with 1 = gamma_1, 2 = gamma_2, 3 = gamma_3 = gamma_1 gamma_2."""
    return elementary_abelian_2(2)


def group_from_permutations(perms: Sequence[Sequence[int]], name: str = "G") -> FiniteGroup:
    """Group generated by permutations (tuples of images), identity first."""
    degree = len(perms[0])
    ident = tuple(range(degree))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        x = elems[i]
        for p in perms:
            y = tuple(p[x[k]] for k in range(degree))
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    index = {e: j for j, e in enumerate(elems)}
    # (x*y)(k) = x(y(k))
    table = tuple(tuple(index[tuple(x[y[k]] for k in range(degree))] for y in elems) for x in elems)
    return FiniteGroup(table, name=name)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rot = tuple((k + 1) % n for k in range(n))
    ref = tuple((-k) % n for k in range(n))
    return group_from_permutations([rot, ref], name=f"D{n}")


def symmetric_group(n: int) -> FiniteGroup:
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return group_from_permutations(gens, name=f"S{n}")


def alternating_group_4() -> FiniteGroup:
    return group_from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)], name="A4")


def quaternion_group() -> FiniteGroup:
    # i and j acting on the 8 units by left multiplication; units are 1,i,j,k,-1,-i,-j,-k
    i_perm = (1, 4, 3, 6, 5, 0, 7, 2)
    j_perm = (2, 7, 4, 1, 6, 3, 0, 5)
    return group_from_permutations([i_perm, j_perm], name="Q8")


class GroupAlgebraElement:
    """Element of QG as a coefficient vector indexed by group elements."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs: Sequence):
        if len(coeffs) != group.order:
            raise ValueError("coefficient vector length differs from group order")
        self.group = group
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def basis(cls, group: FiniteGroup, g: int) -> "GroupAlgebraElement":
        c = [0] * group.order
        c[g] = 1
        return cls(group, c)

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        return cls.basis(group, 0)

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        return cls(group, [0] * group.order)

    def __add__(self, other):
        return GroupAlgebraElement(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return GroupAlgebraElement(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GroupAlgebraElement(self.group, [-a for a in self.coeffs])

    def scale(self, s) -> "GroupAlgebraElement":
        s = Fraction(s)
        return GroupAlgebraElement(self.group, [s * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            out = [Fraction(0)] * self.group.order
            t = self.group.table
            for a, x in enumerate(self.coeffs):
                if not x:
                    continue
                row = t[a]
                for b, y in enumerate(other.coeffs):
                    if y:
                        out[row[b]] += x * y
            return GroupAlgebraElement(self.group, out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*g{g}" for g, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def check_subgroup(members: Iterable[int], G: FiniteGroup) -> frozenset[int]:
    h = frozenset(int(x) for x in members)
    if not h:
        raise DomainError("a subgroup is nonempty")
    if any(x < 0 or x >= G.order for x in h):
        raise DomainError("subgroup member outside the group")
    if 0 not in h:
        raise DomainError("subgroup does not contain the identity")
    for a in h:
        if G.inv[a] not in h:
            raise DomainError(f"subgroup not closed under inverses (element {a})")
        for b in h:
            if G.mul(a, b) not in h:
                raise DomainError(f"subgroup not closed under multiplication ({a}*{b})")
    return h


def z_of(H: Iterable[int], G: FiniteGroup) -> GroupAlgebraElement:
    h = check_subgroup(H, G)
    return GroupAlgebraElement(G, [1 if g in h else 0 for g in range(G.order)])


def _translates(gens: Sequence[GroupAlgebraElement], G: FiniteGroup, left_only: bool = False) -> list[tuple[Fraction, ...]]:
    n = G.order
    t = G.table
    rows = []
    for x in gens:
        support = [(g, c) for g, c in enumerate(x.coeffs) if c]
        for a in range(n):
            for b in ([0] if left_only else range(n)):
                row = [Fraction(0)] * n
                for g, c in support:
                    row[t[t[a][g]][b]] += c
                rows.append(tuple(row))
    return rows


def two_sided_ideal_basis(gens: Sequence[GroupAlgebraElement], G: FiniteGroup) -> list[GroupAlgebraElement]:
    """Basis (in reduced echelon form) of the span of all ``a*x*b``."""
    if not gens:
        return []
    basis, _ = linalg.rref(_translates(gens, G))
    return [GroupAlgebraElement(G, row) for row in basis]


def left_ideal_basis(gens: Sequence[GroupAlgebraElement], G: FiniteGroup) -> list[GroupAlgebraElement]:
    if not gens:
        return []
    basis, _ = linalg.rref(_translates(gens, G, left_only=True))
    return [GroupAlgebraElement(G, row) for row in basis]


def ideal_contains(x: GroupAlgebraElement, gens: Sequence[GroupAlgebraElement], G: FiniteGroup) -> bool:
    if x.is_zero():
        return True
    if not gens:
        return False
    basis, pivots = linalg.rref(_translates(gens, G))
    return linalg.in_row_span(x.coeffs, basis, pivots)


@dataclass(frozen=True)
class CriterionVerdict:
    membership: bool
    flags: tuple[bool, ...]
    ideal_dimension: int

    @property
    def satisfied(self) -> bool:
        return self.membership and all(self.flags)

    @property
    def summary(self) -> str:
        if self.satisfied:
            return "criterion satisfied"
        if not self.membership:
            return "condition (1) fails"
        return "condition (1) holds; not all quotient hypotheses supplied"


def enough_automorphisms_check(
    G: FiniteGroup,
    H: Iterable[int],
    Hs: Sequence[Iterable[int]],
    flags: Sequence[bool] | None = None,
) -> CriterionVerdict:
    """Condition (1): ``z(H)`` in the ideal of the ``z(H_i)``; (2) as flags.

    ``flags[i]`` records the external hypothesis ``T(S/H_i) = 0``.
    Missing flags count as not established.
    """
    target = z_of(H, G)
    gens = [z_of(h, G) for h in Hs]
    flags = tuple(bool(f) for f in (flags if flags is not None else [False] * len(gens)))
    if len(flags) != len(gens):
        raise DomainError("one flag per subgroup H_i is required")
    dim = len(two_sided_ideal_basis(gens, G))
    return CriterionVerdict(ideal_contains(target, gens, G), flags, dim)


def parse_group_file(text: str, source: str | None = None) -> tuple[FiniteGroup, dict[str, frozenset[int]]]:
    """Parse a group file.

    Format (blank lines and ``#`` comments ignored)::

        4                  # order n
        0 1 2 3            # n rows of the multiplication table
        1 0 3 2
        2 3 0 1
        3 2 1 0
        subgroup H1: 0 1   # any number of named subgroups
        subgroup H2: 0 2

    Row ``a`` column ``b`` holds the index of ``a*b``; element 0 must be the
    identity.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ConfigError("empty group file", None, None, source)

    def ints(lineno: int, body: str, offset: int = 0) -> list[int]:
        out = []
        col = offset
        for tok in body[offset:].replace(",", " ").split(" "):
            if tok:
                col = body.index(tok, col)
                try:
                    out.append(int(tok))
                except ValueError:
                    raise ConfigError(f"not an integer: {tok!r}", lineno, col + 1, source)
                col += len(tok)
        return out

    lineno, body = lines[0]
    header = ints(lineno, body)
    if len(header) != 1 or header[0] < 1:
        raise ConfigError("first line must be the group order", lineno, 1, source)
    n = header[0]
    if len(lines) < n + 1:
        raise ConfigError(f"expected {n} table rows, got {len(lines) - 1}", None, None, source)
    table = []
    for lineno, body in lines[1:n + 1]:
        row = ints(lineno, body)
        if len(row) != n:
            raise ConfigError(f"table row has {len(row)} entries, expected {n}", lineno, 1, source)
        for x in row:
            if not 0 <= x < n:
                raise ConfigError(f"element index {x} out of range 0..{n - 1}", lineno, body.index(str(x)) + 1, source)
        table.append(tuple(row))
    try:
        G = FiniteGroup(tuple(table))
    except DomainError as exc:
        raise ConfigError(str(exc), None, None, source)
    subgroups: dict[str, frozenset[int]] = {}
    for lineno, body in lines[n + 1:]:
        stripped = body.strip()
        if not stripped.startswith("subgroup ") or ":" not in stripped:
            raise ConfigError("expected 'subgroup NAME: i j ...'", lineno, 1, source)
        name = stripped[len("subgroup "):stripped.index(":")].strip()
        if not name:
            raise ConfigError("subgroup name is empty", lineno, 1, source)
        members = ints(lineno, body, body.index(":") + 1)
        try:
            subgroups[name] = check_subgroup(members, G)
        except DomainError as exc:
            raise ConfigError(f"subgroup {name}: {exc}", lineno, 1, source)
    return G, subgroups


def format_group_file(G: FiniteGroup, subgroups: dict[str, Iterable[int]] | None = None) -> str:
    width = len(str(G.order - 1))
    out = [f"# {G.name}", str(G.order)]
    out += [" ".join(str(x).rjust(width) for x in row) for row in G.table]
    for name, members in (subgroups or {}).items():
        out.append(f"subgroup {name}: " + " ".join(str(x) for x in sorted(members)))
    return "\n".join(out) + "\n"
