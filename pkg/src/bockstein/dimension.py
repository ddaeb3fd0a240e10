"""Dimension profiles over the Bockstein coefficient groups.

A :class:`DimensionProfile` records, for one space, the cohomological
dimension with respect to Q and to each of the three prime families
(Z/p, Z/p^inf, Z_(p)), each family as a default value plus finitely many
per-prime overrides.  Values are natural numbers or infinity.

The profile must satisfy the dimension axioms R0..R4 (see RULES); a valid
profile can then be evaluated on any abelian group by taking the supremum
of the recorded dimensions over the group's Bockstein basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Union

from .abelian import AbelianGroup, BocksteinBasis, basis_of_abelian
from .nilpotent import GroupDesc, basis_of
from .primes import PrimeSet, check_prime

INF = math.inf

ExtNat = Union[int, float]  # a nonnegative int, or math.inf

RULES = {
    "R0": "dimension zero is all-or-nothing: either every value is 0 or every value is >= 1",
    "R1": "D(Z/p^inf) <= D(Z/p) <= D(Z/p^inf) + 1",
    "R2": "max(D(Q), D(Z/p)) <= D(Z_(p))",
    "R3": "D(Z_(p)) <= max(D(Q), D(Z/p^inf) + 1)",
    "R4": "if D(Z/p^inf) > D(Q) then D(Z_(p)) = D(Z/p^inf) + 1",
}


def check_extnat(v: ExtNat) -> ExtNat:
    if v == INF:
        return v
    if isinstance(v, int) and not isinstance(v, bool) and v >= 0:
        return v
    raise ValueError(f"dimension must be a nonnegative integer or infinity, got {v!r}")


def fmt_extnat(v: ExtNat) -> str:
    return "inf" if v == INF else str(v)


@dataclass(frozen=True)
class PrimeFamily:
    """A per-prime dimension family: one default plus finite overrides."""

    default: ExtNat
    overrides: tuple[tuple[int, ExtNat], ...] = ()

    def __post_init__(self):
        check_extnat(self.default)
        seen = {}
        for p, v in self.overrides:
            check_prime(p)
            check_extnat(v)
            if p in seen:
                raise ValueError(f"duplicate override for p={p}")
            seen[p] = v
        object.__setattr__(self, "overrides", tuple(sorted(seen.items())))

    @classmethod
    def of(cls, default: ExtNat, overrides: Mapping[int, ExtNat] | None = None) -> "PrimeFamily":
        return cls(default, tuple((overrides or {}).items()))

    def value_at(self, p: int) -> ExtNat:
        for q, v in self.overrides:
            if q == p:
                return v
        return self.default

    def values(self) -> list[ExtNat]:
        return [self.default] + [v for _, v in self.overrides]

    def sup_over(self, primes: PrimeSet) -> ExtNat | None:
        """Supremum of the family over a prime set; None for the empty set.

        A cofinite set contains all but finitely many primes, so it always
        meets the default; a finite set is enumerated directly.
        """
        if primes.is_empty:
            return None
        if primes.is_finite:
            return max(self.value_at(p) for p in sorted(primes.primes))
        vals = [self.default] + [v for p, v in self.overrides if p in primes]
        return max(vals)


@dataclass(frozen=True)
class DimensionProfile:
    q: ExtNat
    zp: PrimeFamily
    zpinf: PrimeFamily
    loc: PrimeFamily

    def __post_init__(self):
        check_extnat(self.q)

    @classmethod
    def constant(cls, value: ExtNat) -> "DimensionProfile":
        fam = PrimeFamily.of(value)
        return cls(q=value, zp=fam, zpinf=fam, loc=fam)


@dataclass(frozen=True)
class RuleViolation:
    rule: str
    prime: int | None  # None: the default (generic prime) case
    message: str

    def __str__(self):
        return self.message


def _place(p: int | None) -> str:
    return "defaults" if p is None else f"p={p}"


def validate_profile(profile: DimensionProfile) -> list[RuleViolation]:
    """All R0..R4 violations, in rule order then prime order.

    The per-prime rules are checked at every override prime and once at
    the defaults (standing in for the cofinitely many primes with no
    override).  An empty list means the profile is valid.
    """
    out: list[RuleViolation] = []
    values = [profile.q] + profile.zp.values() + profile.zpinf.values() + profile.loc.values()
    zero = [v == 0 for v in values]
    if any(zero) and not all(zero):
        out.append(RuleViolation(
            "R0", None,
            "R0 at defaults: a zero dimension next to a nonzero one (zero is all-or-nothing)"))

    override_primes = sorted(
        {p for p, _ in profile.zp.overrides}
        | {p for p, _ in profile.zpinf.overrides}
        | {p for p, _ in profile.loc.overrides}
    )
    cases: list[int | None] = [None] + override_primes
    q = profile.q
    for p in cases:
        if p is None:
            zp, zpinf, loc = profile.zp.default, profile.zpinf.default, profile.loc.default
        else:
            zp, zpinf, loc = (profile.zp.value_at(p), profile.zpinf.value_at(p),
                              profile.loc.value_at(p))
        at = _place(p)
        if not (zpinf <= zp <= zpinf + 1):
            out.append(RuleViolation(
                "R1", p,
                f"R1 at {at}: expected D(Z/p^inf) <= D(Z/p) <= D(Z/p^inf)+1, "
                f"got D(Z/p)={fmt_extnat(zp)}, D(Z/p^inf)={fmt_extnat(zpinf)}"))
        if max(q, zp) > loc:
            out.append(RuleViolation(
                "R2", p,
                f"R2 at {at}: expected max(D(Q), D(Z/p)) <= D(Z_(p)), "
                f"got {fmt_extnat(max(q, zp))} > {fmt_extnat(loc)}"))
        if loc > max(q, zpinf + 1):
            out.append(RuleViolation(
                "R3", p,
                f"R3 at {at}: expected D(Z_(p)) <= max(D(Q), D(Z/p^inf)+1), "
                f"got {fmt_extnat(loc)} > {fmt_extnat(max(q, zpinf + 1))}"))
        if zpinf > q and loc != zpinf + 1:
            out.append(RuleViolation(
                "R4", p, f"R4 at {at}: expected loc={fmt_extnat(zpinf + 1)}"))
    order = {name: i for i, name in enumerate(RULES)}
    out.sort(key=lambda v: (order[v.rule], -1 if v.prime is None else v.prime))
    return out


# ---------------------------------------------------------------------------
# Evaluation


def sup_over_basis(profile: DimensionProfile, basis: BocksteinBasis) -> ExtNat:
    """Supremum of the profile over one Bockstein basis (0 when empty)."""
    vals: list[ExtNat] = []
    if basis.has_q:
        vals.append(profile.q)
    for family, primes in ((profile.loc, basis.loc), (profile.zp, basis.zp),
                           (profile.zpinf, basis.zpinf)):
        s = family.sup_over(primes)
        if s is not None:
            vals.append(s)
    return max(vals, default=0)


def dim_of_abelian(profile: DimensionProfile, group: AbelianGroup) -> ExtNat:
    """Dimension of a space with this profile relative to an abelian group:
    the sup of the recorded dimensions over the group's Bockstein basis."""
    return sup_over_basis(profile, basis_of_abelian(group))


def dim_at_most_one(profile: DimensionProfile, desc: GroupDesc | AbelianGroup) -> bool:
    """Whether the dimension relative to a nilpotent group is <= 1.

    For nilpotent (not necessarily abelian) coefficients only the <= 1
    question is answered, via the group's Bockstein basis.
    """
    return sup_over_basis(profile, basis_of(desc)) <= 1
