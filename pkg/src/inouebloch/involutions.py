"""Numerology of involutions on minimal surfaces of general type with p_g = q = 0.

Notation, for an involution ``sigma`` on ``S``: ``k`` isolated fixed points,
``R`` the divisorial fixed curve, ``t`` the trace on ``H^2``, ``T^`` the
resolved quotient.  The identities used are

* ``k = K2_S + 6 chi(T^) - 2 chi(S) - 2 h0_anti``  (fixed-point formula)
* ``k = K.R + 4``, ``t = 2 - R^2``, ``rho(S) + t = 2 rho(T^) - 2k``

and, because ``p_g = q = 0`` on both ``S`` and ``T^``,
``e = rho + 2`` and ``K^2 = 12 chi - e = 10 - rho``.

Kodaira dimension is never computed.  The case scan assumes the quotient
has ``kappa = 2`` and lists the ``k`` compatible with that; a ``k`` outside
the list therefore forces ``kappa <= 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt

from .errors import DomainError
from .group_algebra import enough_automorphisms_check, klein_four

M_CAP = 50


def fixed_point_count(K2: int, chi_That: int, chi_S: int, h0_anti: int) -> int:
    k = K2 + 6 * chi_That - 2 * chi_S - 2 * h0_anti
    if k < 0:
        raise DomainError(f"fixed-point count k = {k} is negative; infeasible input")
    return k


@dataclass(frozen=True)
class InvolutionProfile:
    K2_S: int
    chi_S: int
    R_sq: int
    KR: int
    t: int
    k: int
    rho_S: int
    rho_That: int
    chi_That: int = 1
    # inverted from the fixed-point formula; None when no nonnegative integer fits
    h0_anti: int | None = None

    def identities_hold(self) -> bool:
        return (
            self.t == 2 - self.R_sq
            and self.k == self.KR + 4
            and self.rho_S + self.t == 2 * self.rho_That - 2 * self.k
        )


def profile_from_R(K2: int, chi_S: int, R_sq: int, KR: int, rho_S: int, chi_That: int = 1) -> InvolutionProfile:
    t = 2 - R_sq
    k = KR + 4
    twice = rho_S + t + 2 * k
    if twice % 2:
        raise DomainError(f"rho(S) + t = {rho_S + t} is odd, so rho(T^) is not an integer")
    num = K2 + 6 * chi_That - 2 * chi_S - k
    h0_anti = num // 2 if num >= 0 and num % 2 == 0 else None
    return InvolutionProfile(K2, chi_S, R_sq, KR, t, k, rho_S, twice // 2, chi_That, h0_anti)


class MinimalityRule(str, enum.Enum):
    FORCED_MINIMAL = "forced-minimal"   # rho(T^) = k + 2: T^ minimal, K^2 >= 1
    DROP_AT_MOST_2 = "drop-at-most-2"   # rho(T^) = k + 3: K^2 >= -1
    EXCLUDED = "excluded"               # trace value impossible
    UNBOUNDED = "unbounded"             # rho(T^) >= k + 4: no bound available

    def __str__(self):
        return self.value


K2_LOWER_BOUND = {MinimalityRule.FORCED_MINIMAL: 1, MinimalityRule.DROP_AT_MOST_2: -1}


@dataclass(frozen=True)
class CaseRecord:
    t: int
    m: int
    k: int
    rho_That: int
    K2_That: int
    minimality_rule: MinimalityRule
    admissible: bool

    @property
    def e_That(self) -> int:
        return self.rho_That + 2


@dataclass
class TraceBranch:
    t: int
    R_sq: int
    rho_gap: int  # rho(T^) - k, independent of m
    rule: MinimalityRule
    reason: str
    cases: list[CaseRecord] = field(default_factory=list)


@dataclass
class ScanResult:
    K2_S: int
    rho_S: int
    branches: list[TraceBranch]

    @property
    def admissible(self) -> frozenset[int]:
        return frozenset(c.k for b in self.branches for c in b.cases if c.admissible)

    @property
    def undetermined_traces(self) -> list[int]:
        return [b.t for b in self.branches if b.rule is MinimalityRule.UNBOUNDED]

    @property
    def complete(self) -> bool:
        return not self.undetermined_traces

    def excluded(self) -> list[TraceBranch]:
        return [b for b in self.branches if b.rule is MinimalityRule.EXCLUDED]


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def admissible_isolated_counts(K2_S: int) -> ScanResult:
    """All ``k`` compatible with a quotient of Kodaira dimension 2.

    ``S`` is minimal of general type with ``p_g = q = 0``, so ``rho(S) = 10 - K2_S``.
    ``K`` is invariant, so ``t`` runs over ``2 - rho(S), 4 - rho(S), ..., rho(S)``.
    For each ``t``, ``K.R`` has the parity of ``R^2`` and is ``>= 0`` (``K`` is nef),
    giving ``K.R = R^2 mod 2 + 2m``.
    """
    if not 1 <= K2_S <= 9:
        raise DomainError(f"K^2 = {K2_S} outside 1..9 for a minimal surface of general type with p_g = q = 0")
    rho_S = 10 - K2_S
    branches = []
    for t in range(2 - rho_S, rho_S + 1, 2):
        R_sq = 2 - t
        gap = (rho_S + t) // 2
        if t == 2 - rho_S and not _is_square(K2_S * R_sq):
            reason = (
                f"invariant part of H^2 is spanned by K, so R = rK numerically; "
                f"then (K.R)^2 = K^2 R^2 = {K2_S}*{R_sq} = {K2_S * R_sq}, not a square "
                f"(R^2 = 2 - t = {R_sq})"
            )
            branches.append(TraceBranch(t, R_sq, gap, MinimalityRule.EXCLUDED, reason))
            continue
        if gap < 2:
            reason = f"rho(T^) = k + {gap} violates k <= rho(T^) - 2 for disjoint nodal curves"
            branches.append(TraceBranch(t, R_sq, gap, MinimalityRule.EXCLUDED, reason))
            continue
        if gap == 2:
            rule = MinimalityRule.FORCED_MINIMAL
            reason = "rho(T^) = k + 2: T^ is minimal, so K^2(T^) >= 1"
        elif gap == 3:
            rule = MinimalityRule.DROP_AT_MOST_2
            reason = "rho(T^) = k + 3: T^ is its minimal model blown up at most twice, so K^2(T^) >= -1"
        else:
            branches.append(TraceBranch(
                t, R_sq, gap, MinimalityRule.UNBOUNDED,
                f"rho(T^) = k + {gap}: no bound on K^2(T^) is available, scan not performed",
            ))
            continue
        branch = TraceBranch(t, R_sq, gap, rule, reason)
        bound = K2_LOWER_BOUND[rule]
        for m in range(M_CAP + 1):
            k = R_sq % 2 + 2 * m + 4
            rho_That = gap + k
            K2_That = 10 - rho_That
            ok = K2_That >= bound
            branch.cases.append(CaseRecord(t, m, k, rho_That, K2_That, rule, ok))
            if not ok:
                break
        else:
            raise DomainError(f"scan for t = {t} reached the cap m = {M_CAP} without terminating")
        branches.append(branch)
    return ScanResult(K2_S, rho_S, branches)


@dataclass
class VerdictStep:
    name: str
    detail: str
    ok: bool


@dataclass
class BlochVerdict:
    established: bool
    k_values: tuple[int, ...]
    admissible: frozenset[int]
    steps: list[VerdictStep]

    @property
    def status(self) -> str:
        return "established" if self.established else "not established"

    @property
    def failing_step(self) -> VerdictStep | None:
        return next((s for s in self.steps if not s.ok), None)


def inoue_bloch_verdict(
    anti_dims: tuple[int, int, int] = (0, 1, 1),
    K2_S: int = 7,
    chi_S: int = 1,
    chi_That: int = 1,
    low_kappa_quotients_ok: bool = True,
) -> BlochVerdict:
    """Assemble ``T(S) = 0`` for an Inoue surface from the numerical steps.

    ``anti_dims[i]`` is the dimension of the anti-invariant part of
    ``H^0(2K_S)`` under ``gamma_{i+1}``.  ``low_kappa_quotients_ok`` is the
    imported fact that surfaces with ``p_g = 0`` and ``kappa <= 1`` satisfy
    Bloch's conjecture.
    """
    steps: list[VerdictStep] = []
    G = klein_four()
    order_two = [[0, 1], [0, 2], [0, 3]]
    membership = enough_automorphisms_check(G, [0], order_two).membership
    steps.append(VerdictStep(
        "subgroup-sum ideal",
        f"1 = z({{e}}) in ideal(z<g1>, z<g2>, z<g3>) of Q[(Z/2)^2]: {membership}",
        membership,
    ))

    k_values: list[int] = []
    for i, h in enumerate(anti_dims, start=1):
        try:
            k = fixed_point_count(K2_S, chi_That, chi_S, h)
        except DomainError as exc:
            steps.append(VerdictStep(f"fixed points of g{i}", str(exc), False))
            return BlochVerdict(False, tuple(k_values), frozenset(), steps)
        k_values.append(k)
        steps.append(VerdictStep(
            f"fixed points of g{i}",
            f"k{i} = {K2_S} + 6*{chi_That} - 2*{chi_S} - 2*{h} = {k}",
            True,
        ))

    scan = admissible_isolated_counts(K2_S)
    admissible = scan.admissible
    steps.append(VerdictStep(
        "quotient case scan",
        f"kappa(S/sigma) = 2 forces k in {sorted(admissible)}"
        + ("" if scan.complete else f"; traces {scan.undetermined_traces} undetermined"),
        scan.complete,
    ))
    if not scan.complete:
        return BlochVerdict(False, tuple(k_values), admissible, steps)

    low_kappa = []
    for i, k in enumerate(k_values, start=1):
        ok = k not in admissible
        low_kappa.append(ok)
        steps.append(VerdictStep(
            f"kappa(S/g{i}) <= 1",
            f"k{i} = {k} {'not in' if ok else 'in'} {sorted(admissible)}",
            ok,
        ))

    flags = [ok and low_kappa_quotients_ok for ok in low_kappa]
    steps.append(VerdictStep(
        "quotients satisfy Bloch",
        "kappa <= 1 and p_g = 0 give T(S/g_i) = 0 for i = 1, 2, 3"
        if all(flags) else "T(S/g_i) = 0 not available for every i",
        all(flags),
    ))

    verdict = enough_automorphisms_check(G, [0], order_two, flags)
    steps.append(VerdictStep(
        "T(S) = 0",
        verdict.summary,
        verdict.satisfied,
    ))
    return BlochVerdict(all(s.ok for s in steps), tuple(k_values), admissible, steps)
