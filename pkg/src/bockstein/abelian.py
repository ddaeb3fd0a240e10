"""Abelian groups as direct sums over a closed atom vocabulary.

The atoms are the integers ``Z``, the rationals ``Q``, finite cyclic groups
of prime-power order ``Cyclic(p, k)``, quasicyclic groups ``Pruefer(p)``,
the integers localized at one prime ``Localized(p)``, subrings of the
rationals whose denominators avoid a set of primes ``LocalizedAt(l)``, and
products of p-adic integer rings ``Adic(l)``.  Torsion structure,
p-divisibility, tensor and Tor against the Bockstein coefficient groups,
and the Bockstein basis itself are all computed from small per-atom fact
tables, so every operation here is exact and total on this vocabulary.

>>> G = AbelianGroup.of(Z, Cyclic(2, 2))
>>> print(basis_of_abelian(G))
Q: yes | Z_(p): all primes | Z/p: all primes | Z/p^inf: all primes
>>> print(basis_of_abelian(AbelianGroup.of(Pruefer(3))))
Q: no | Z_(p): {} | Z/p: {} | Z/p^inf: {3}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .primes import PrimeSet, check_prime, prime_factors


# ---------------------------------------------------------------------------
# Atoms


@dataclass(frozen=True)
class ZAtom:
    """The infinite cyclic group."""

    def __repr__(self):
        return "Z"


@dataclass(frozen=True)
class QAtom:
    """The additive rationals."""

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class Cyclic:
    """Finite cyclic group of order ``p**k``."""

    p: int
    k: int = 1

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"cyclic exponent must be a positive integer, got {self.k!r}")

    def __repr__(self):
        return f"Z/{self.p ** self.k}"


@dataclass(frozen=True)
class Pruefer:
    """The quasicyclic group: all p-power-torsion of Q/Z."""

    p: int

    def __post_init__(self):
        check_prime(self.p)

    def __repr__(self):
        return f"Z/{self.p}^inf"


@dataclass(frozen=True)
class Localized:
    """Integers localized at ``p``: denominators coprime to ``p``."""

    p: int

    def __post_init__(self):
        check_prime(self.p)

    def __repr__(self):
        return f"Z_({self.p})"


@dataclass(frozen=True)
class LocalizedAt:
    """Subring of Q in which exactly the primes of ``support`` stay
    non-invertible (the localization of Z at that set of primes)."""

    support: PrimeSet

    def __repr__(self):
        return f"Z_loc{self.support}"


@dataclass(frozen=True)
class Adic:
    """Product of the rings of p-adic integers over ``support``."""

    support: PrimeSet

    def __post_init__(self):
        if self.support.is_empty:
            raise ValueError("adic atom needs a nonempty prime set")

    def __repr__(self):
        return f"Zhat{self.support}"


Atom = Union[ZAtom, QAtom, Cyclic, Pruefer, Localized, LocalizedAt, Adic]

Z = ZAtom()
Q = QAtom()

_RANK = {ZAtom: 0, QAtom: 1, Cyclic: 2, Pruefer: 3, Localized: 4, LocalizedAt: 5, Adic: 6}


def _atom_key(atom: Atom) -> tuple:
    if isinstance(atom, Cyclic):
        payload = (atom.p, atom.k)
    elif isinstance(atom, (Pruefer, Localized)):
        payload = (atom.p,)
    elif isinstance(atom, (LocalizedAt, Adic)):
        payload = atom.support.sort_key()
    else:
        payload = ()
    return (_RANK[type(atom)],) + tuple(payload)


def _normalize_atom(atom: Atom) -> Atom:
    """Collapse LocalizedAt onto its canonical representative."""
    if isinstance(atom, LocalizedAt):
        s = atom.support
        if s.is_empty:
            return Q
        if s.is_finite and len(s.primes) == 1:
            return Localized(next(iter(s.primes)))
    return atom


# ---------------------------------------------------------------------------
# Groups


@dataclass(frozen=True)
class AbelianGroup:
    """Formal direct sum of atoms with multiplicities, kept canonical.

    Construction normalizes atoms (``LocalizedAt({}) -> Q``,
    ``LocalizedAt({p}) -> Localized(p)``), merges equal atoms, drops zero
    multiplicities and sorts, so equal groups compare equal.

    >>> AbelianGroup([(Z, 1), (Z, 1)]) == AbelianGroup([(Z, 2)])
    True
    >>> AbelianGroup.of(LocalizedAt(PrimeSet.of(5))).atoms
    ((Z_(5), 1),)
    """

    atoms: tuple[tuple[Atom, int], ...] = ()

    def __post_init__(self):
        merged: dict[Atom, int] = {}
        for atom, mult in self.atoms:
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicity must be a nonnegative integer, got {mult!r}")
            atom = _normalize_atom(atom)
            if type(atom) not in _RANK:
                raise ValueError(f"unknown atom: {atom!r}")
            if mult:
                merged[atom] = merged.get(atom, 0) + mult
        canon = tuple(sorted(merged.items(), key=lambda it: _atom_key(it[0])))
        object.__setattr__(self, "atoms", canon)

    @classmethod
    def of(cls, *atoms: Atom) -> "AbelianGroup":
        """Direct sum of the given atoms, one copy each."""
        return cls(tuple((a, 1) for a in atoms))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls()

    @property
    def is_trivial(self) -> bool:
        return not self.atoms

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.atoms + other.atoms)

    def scaled(self, n: int) -> "AbelianGroup":
        """Direct sum of ``n`` copies of this group."""
        return AbelianGroup(tuple((a, m * n) for a, m in self.atoms))

    def __repr__(self):
        if not self.atoms:
            return "0"
        parts = []
        for atom, mult in self.atoms:
            parts.append(f"{atom!r}" + (f"^{mult}" if mult > 1 else ""))
        return " + ".join(parts)


def canonicalize(atoms: Iterable[tuple[Atom, int]]) -> AbelianGroup:
    """Build the canonical direct sum from raw (atom, multiplicity) pairs.

    Idempotent: feeding a group's own atoms back returns an equal group.
    """
    return AbelianGroup(tuple(atoms))


def finite_cyclic(n: int) -> AbelianGroup:
    """Z/n as a sum of its prime-power cyclic parts.

    >>> finite_cyclic(12)
    Z/4 + Z/3
    """
    return AbelianGroup.of(*(Cyclic(p, e) for p, e in prime_factors(n).items()))


def is_finitely_generated(group: AbelianGroup) -> bool:
    return all(isinstance(a, (ZAtom, Cyclic)) for a, _ in group.atoms)


# ---------------------------------------------------------------------------
# Per-atom fact tables

_ALL = PrimeSet.all_primes()
_NONE = PrimeSet.empty()


def _primary_prime(atom: Atom) -> int | None:
    """The prime of a torsion atom, None for torsion-free atoms."""
    if isinstance(atom, (Cyclic, Pruefer)):
        return atom.p
    return None


def _not_divisible(atom: Atom) -> PrimeSet:
    """Primes p for which multiplication by p on the atom is not onto."""
    if isinstance(atom, ZAtom):
        return _ALL
    if isinstance(atom, QAtom):
        return _NONE
    if isinstance(atom, Cyclic):
        return PrimeSet.of(atom.p)
    if isinstance(atom, Pruefer):
        return _NONE
    if isinstance(atom, Localized):
        return PrimeSet.of(atom.p)
    return atom.support


def _not_uniquely_divisible(atom: Atom) -> PrimeSet:
    """Primes p for which multiplication by p is not a bijection.

    Differs from :func:`_not_divisible` only on Pruefer atoms, where
    multiplication by the defining prime is onto but has kernel Z/p.
    """
    if isinstance(atom, Pruefer):
        return PrimeSet.of(atom.p)
    return _not_divisible(atom)


# ---------------------------------------------------------------------------
# Decomposition and divisibility


@dataclass(frozen=True)
class Decomposition:
    """Torsion/free data of a group: Tor(G), F(G) = G/Tor(G), and their
    one-prime slices."""

    group: AbelianGroup
    is_torsion: bool
    torsion: AbelianGroup
    free_part: AbelianGroup

    def p_torsion(self, p: int) -> AbelianGroup:
        """The p-primary torsion part."""
        return AbelianGroup(tuple((a, m) for a, m in self.torsion.atoms if _primary_prime(a) == p))

    def mod_p_torsion(self, p: int) -> AbelianGroup:
        """The quotient by the p-primary part (drop those atoms)."""
        return AbelianGroup(tuple((a, m) for a, m in self.group.atoms if _primary_prime(a) != p))


def decompose(group: AbelianGroup) -> Decomposition:
    """Split a group into torsion and torsion-free data, atom-wise.

    >>> d = decompose(AbelianGroup.of(Z, Cyclic(2, 2)))
    >>> d.torsion, d.free_part, d.is_torsion
    (Z/4, Z, False)
    >>> d.p_torsion(2), d.p_torsion(3), d.mod_p_torsion(2)
    (Z/4, 0, Z)
    """
    tor = []
    free = []
    for atom, mult in group.atoms:
        (tor if _primary_prime(atom) is not None else free).append((atom, mult))
    return Decomposition(
        group=group,
        is_torsion=not free,
        torsion=AbelianGroup(tuple(tor)),
        free_part=AbelianGroup(tuple(free)),
    )


@dataclass(frozen=True)
class Divisibility:
    p_divisible: bool
    uniquely_p_divisible: bool


def divisibility(group: AbelianGroup, p: int) -> Divisibility:
    """Whether multiplication by ``p`` is onto, and whether it is bijective.

    >>> divisibility(AbelianGroup.of(Pruefer(2)), 2)
    Divisibility(p_divisible=True, uniquely_p_divisible=False)
    >>> divisibility(AbelianGroup.of(Localized(3)), 2).uniquely_p_divisible
    True
    """
    check_prime(p)
    div = all(p not in _not_divisible(a) for a, _ in group.atoms)
    uniq = all(p not in _not_uniquely_divisible(a) for a, _ in group.atoms)
    return Divisibility(p_divisible=div, uniquely_p_divisible=uniq)


# ---------------------------------------------------------------------------
# Bockstein basis


@dataclass(frozen=True)
class BocksteinBasis:
    """Which Bockstein coefficient groups a group's basis contains.

    ``has_q`` records Q; the three prime families record, as PrimeSets,
    the primes p at which Z_(p), Z/p, Z/p^inf occur.  The families always
    satisfy the chain ``loc <= zp <= zpinf`` (maximal-basis convention);
    construction enforces it.
    """

    has_q: bool
    loc: PrimeSet
    zp: PrimeSet
    zpinf: PrimeSet

    def __post_init__(self):
        if not self.loc.issubset(self.zp) or not self.zp.issubset(self.zpinf):
            raise ValueError(f"family chain violated: loc={self.loc} zp={self.zp} zpinf={self.zpinf}")

    @classmethod
    def empty(cls) -> "BocksteinBasis":
        return cls(False, _NONE, _NONE, _NONE)

    def __or__(self, other: "BocksteinBasis") -> "BocksteinBasis":
        return BocksteinBasis(
            self.has_q or other.has_q,
            self.loc | other.loc,
            self.zp | other.zp,
            self.zpinf | other.zpinf,
        )

    def issubset(self, other: "BocksteinBasis") -> bool:
        return (
            (not self.has_q or other.has_q)
            and self.loc.issubset(other.loc)
            and self.zp.issubset(other.zp)
            and self.zpinf.issubset(other.zpinf)
        )

    @property
    def is_empty(self) -> bool:
        return not self.has_q and self.loc.is_empty and self.zp.is_empty and self.zpinf.is_empty

    def __str__(self):
        yn = "yes" if self.has_q else "no"
        return f"Q: {yn} | Z_(p): {self.loc} | Z/p: {self.zp} | Z/p^inf: {self.zpinf}"


def basis_of_abelian(group: AbelianGroup) -> BocksteinBasis:
    """Bockstein basis of an abelian group, clause by clause.

    Q enters iff the torsion-free quotient F(G) is nonzero.  Z_(p) enters
    iff F(G) is not p-divisible.  Z/p enters iff G/Tor_p(G) is not
    p-divisible, which over this vocabulary means cyclic p-torsion exists
    or F(G) fails p-divisibility.  Z/p^inf enters iff Tor_p(G) is nonzero
    or F(G) fails p-divisibility.

    >>> print(basis_of_abelian(AbelianGroup.of(Q)))
    Q: yes | Z_(p): {} | Z/p: {} | Z/p^inf: {}
    >>> print(basis_of_abelian(finite_cyclic(12)))
    Q: no | Z_(p): {} | Z/p: {2, 3} | Z/p^inf: {2, 3}
    """
    free_bad = _NONE
    torsion_primes = set()
    cyclic_primes = set()
    has_free = False
    for atom, _ in group.atoms:
        p = _primary_prime(atom)
        if p is None:
            has_free = True
            free_bad = free_bad | _not_divisible(atom)
        else:
            torsion_primes.add(p)
            if isinstance(atom, Cyclic):
                cyclic_primes.add(p)
    return BocksteinBasis(
        has_q=has_free,
        loc=free_bad,
        zp=PrimeSet.of(*cyclic_primes) | free_bad,
        zpinf=PrimeSet.of(*torsion_primes) | free_bad,
    )


# ---------------------------------------------------------------------------
# Tensor and Tor against Bockstein coefficient atoms


def _check_coefficient(coeff: Atom) -> None:
    if isinstance(coeff, Cyclic) and coeff.k == 1:
        return
    if isinstance(coeff, (QAtom, Pruefer, Localized)):
        return
    raise ValueError(f"coefficient must be one of Q, Z/q, Z/q^inf, Z_(q); got {coeff!r}")


def _tensor_atom(atom: Atom, coeff: Atom) -> Atom | None:
    """One row of the tensor table; None encodes the zero group."""
    if isinstance(atom, ZAtom):
        return coeff
    if isinstance(atom, QAtom):
        return Q if isinstance(coeff, (QAtom, Localized)) else None
    if isinstance(atom, Cyclic):
        if isinstance(coeff, Cyclic):
            return Cyclic(atom.p) if coeff.p == atom.p else None
        if isinstance(coeff, Localized):
            return atom if coeff.p == atom.p else None
        return None
    if isinstance(atom, Pruefer):
        # Divisible torsion dies under Q, Z/q and Z/q^inf; localization
        # keeps exactly the q-primary part.
        if isinstance(coeff, Localized):
            return atom if coeff.p == atom.p else None
        return None
    if isinstance(atom, Localized):
        if isinstance(coeff, QAtom):
            return Q
        if isinstance(coeff, Cyclic):
            return coeff if coeff.p == atom.p else None
        if isinstance(coeff, Pruefer):
            return coeff if coeff.p == atom.p else None
        return atom if coeff.p == atom.p else Q
    if isinstance(atom, LocalizedAt):
        if isinstance(coeff, QAtom):
            return Q
        if isinstance(coeff, (Cyclic, Pruefer)):
            return coeff if coeff.p in atom.support else None
        return Localized(coeff.p) if coeff.p in atom.support else Q
    raise ValueError(f"tensor against adic atoms is unsupported: {atom!r}")


def _tor_atom(atom: Atom, coeff: Atom) -> Atom | None:
    """One row of the Tor table; torsion-free atoms are flat."""
    if isinstance(atom, (ZAtom, QAtom, Localized, LocalizedAt)):
        return None
    if isinstance(atom, Cyclic):
        if isinstance(coeff, Cyclic):
            return Cyclic(atom.p) if coeff.p == atom.p else None
        if isinstance(coeff, Pruefer):
            return atom if coeff.p == atom.p else None
        return None
    if isinstance(atom, Pruefer):
        if isinstance(coeff, Cyclic):
            return Cyclic(atom.p) if coeff.p == atom.p else None
        if isinstance(coeff, Pruefer):
            return atom if coeff.p == atom.p else None
        return None
    raise ValueError(f"Tor against adic atoms is unsupported: {atom!r}")


def _apply_table(table, group: AbelianGroup, coeff: Atom) -> AbelianGroup:
    _check_coefficient(coeff)
    out = []
    for atom, mult in group.atoms:
        res = table(atom, coeff)
        if res is not None:
            out.append((res, mult))
    return AbelianGroup(tuple(out))


def tensor_with(group: AbelianGroup, coeff: Atom) -> AbelianGroup:
    """G tensor C for a Bockstein coefficient atom C.

    Supported for every atom of G except the adic ones (whose tensor with
    Q is an uncountable-rank rational vector space, out of scope here).

    >>> tensor_with(AbelianGroup.of(Z, Cyclic(2, 2)), Cyclic(2))
    Z/2^2
    >>> tensor_with(AbelianGroup.of(Cyclic(3)), Q)
    0
    """
    return _apply_table(_tensor_atom, group, coeff)


def tor_with(group: AbelianGroup, coeff: Atom) -> AbelianGroup:
    """Tor(G, C) for a Bockstein coefficient atom C.

    >>> tor_with(AbelianGroup.of(Cyclic(2, 2)), Pruefer(2))
    Z/4
    >>> tor_with(AbelianGroup.of(Z), Cyclic(5))
    0
    """
    return _apply_table(_tor_atom, group, coeff)
