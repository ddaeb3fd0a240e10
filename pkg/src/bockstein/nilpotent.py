"""Nilpotent groups: abelian values, central-extension towers, finite tables.

A nilpotent group enters the package in one of three shapes.  An
:class:`AbelianDesc` wraps an abelian value directly.  A :class:`TowerDesc`
presents a group of class c as c successive central extensions with
abelian kernels, stored deepest kernel first (``layers[0]`` is the last
nontrivial lower-central term, ``layers[-1]`` the top layer); each stage
may carry a witness flag asserting the extension is a nilpotent one (the
stage kernel is an epimorphic image of a tensor power of the
abelianization).  A :class:`FiniteDesc` wraps a multiplication table and
delegates to the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .abelian import (
    AbelianGroup,
    BocksteinBasis,
    basis_of_abelian,
    decompose,
    divisibility,
    _not_divisible,
    _not_uniquely_divisible,
)
from .errors import NotNilpotentError, UnwitnessedTowerError
from .primes import PrimeSet, check_prime
from . import oracle


@dataclass(frozen=True)
class AbelianDesc:
    group: AbelianGroup


@dataclass(frozen=True)
class TowerDesc:
    """Central-extension tower, deepest kernel first.

    ``ab`` is the declared abelianization (optional; operations that need
    it reject None).  ``witnessed[i]`` marks stage i as a nilpotent
    extension; the final stage is the group itself and is always
    witnessed.  Use :func:`tower` to build one with broadcasting.
    """

    layers: tuple[AbelianGroup, ...]
    ab: AbelianGroup | None
    witnessed: tuple[bool, ...]

    def __post_init__(self):
        if len(self.layers) < 2:
            raise ValueError("a tower needs at least two layers")
        if any(layer.is_trivial for layer in self.layers):
            raise ValueError("tower layers must be nontrivial")
        if len(self.witnessed) != len(self.layers):
            raise ValueError("witness flags must align with layers")
        if not self.witnessed[-1]:
            # The top stage is the group itself, witnessed by definition.
            object.__setattr__(self, "witnessed", self.witnessed[:-1] + (True,))

    @property
    def fully_witnessed(self) -> bool:
        return all(self.witnessed)


def tower(layers, ab: AbelianGroup | None = None, witnessed=True) -> TowerDesc:
    """Build a TowerDesc; a single bool for ``witnessed`` broadcasts to all
    stages (the top stage is witnessed regardless)."""
    layers = tuple(layers)
    if isinstance(witnessed, bool):
        flags = (witnessed,) * (len(layers) - 1) + (True,) if layers else ()
    else:
        flags = tuple(witnessed)
    return TowerDesc(layers, ab, flags)


@dataclass(frozen=True, eq=False)
class FiniteDesc:
    group: oracle.FiniteGroup


GroupDesc = Union[AbelianDesc, TowerDesc, FiniteDesc]


def describe(desc: GroupDesc) -> str:
    """Stable one-line descriptor used in reports and failure messages."""
    if isinstance(desc, AbelianDesc):
        return f"abelian({desc.group!r})"
    if isinstance(desc, TowerDesc):
        inner = ", ".join(repr(layer) for layer in desc.layers)
        return f"tower[{inner}]"
    g = desc.group
    return g.name or f"finite(order={g.order})"


# ---------------------------------------------------------------------------
# Class and divisibility predicates


def nilpotency_class(desc: GroupDesc) -> int:
    """0 for the trivial group, 1 for nontrivial abelian, tower height for
    towers, lower-central length for tables (NotNilpotentError if none)."""
    if isinstance(desc, AbelianDesc):
        return 0 if desc.group.is_trivial else 1
    if isinstance(desc, TowerDesc):
        return len(desc.layers)
    return oracle.lower_central_series(desc.group).nilpotency_class


@dataclass(frozen=True)
class GroupPredicates:
    """Torsion and p-divisibility verdicts; None means indeterminate
    (an unwitnessed tower where the layer evidence only pushes upward)."""

    torsion: bool
    p_divisible: bool | None
    uniquely_p_divisible: bool | None


def group_predicates(desc: GroupDesc, p: int) -> GroupPredicates:
    """Evaluate torsion / p-divisible / uniquely p-divisible.

    Towers use the layer rule: a central extension is (uniquely)
    p-divisible when all its layers are.  With every stage witnessed the
    rule is a biconditional; without witnesses only the upward direction
    is sound, so all-layers-divisible still answers True but any failing
    layer leaves the verdict indeterminate (None).  Torsion needs no
    witness in either direction.
    """
    check_prime(p)
    if isinstance(desc, AbelianDesc):
        d = divisibility(desc.group, p)
        return GroupPredicates(
            torsion=decompose(desc.group).is_torsion,
            p_divisible=d.p_divisible,
            uniquely_p_divisible=d.uniquely_p_divisible,
        )
    if isinstance(desc, TowerDesc):
        torsion = all(decompose(layer).is_torsion for layer in desc.layers)
        layer_div = [divisibility(layer, p) for layer in desc.layers]
        all_div = all(d.p_divisible for d in layer_div)
        all_uniq = all(d.uniquely_p_divisible for d in layer_div)
        if desc.fully_witnessed:
            return GroupPredicates(torsion, all_div, all_uniq)
        return GroupPredicates(
            torsion,
            True if all_div else None,
            True if all_uniq else None,
        )
    pm = oracle.power_map(desc.group, p)
    return GroupPredicates(torsion=True, p_divisible=pm.surjective,
                           uniquely_p_divisible=pm.injective)


# ---------------------------------------------------------------------------
# Bockstein basis


def basis_of(desc: GroupDesc | AbelianGroup) -> BocksteinBasis:
    """Bockstein basis of any supported description.

    Abelian input goes through the clause table; a fully witnessed tower
    is the union of its layers' bases; a finite table goes through the
    oracle.  An unwitnessed tower raises
    :class:`~bockstein.errors.UnwitnessedTowerError` and a non-nilpotent
    table :class:`~bockstein.errors.NotNilpotentError`.
    """
    if isinstance(desc, AbelianGroup):
        return basis_of_abelian(desc)
    if isinstance(desc, AbelianDesc):
        return basis_of_abelian(desc.group)
    if isinstance(desc, TowerDesc):
        if not desc.fully_witnessed:
            raise UnwitnessedTowerError(
                "tower basis needs every stage witnessed as a nilpotent extension")
        out = BocksteinBasis.empty()
        for layer in desc.layers:
            out = out | basis_of_abelian(layer)
        return out
    return oracle.basis_of_table(desc.group)


def basis_from_divisibility(group: AbelianGroup) -> BocksteinBasis:
    """Bockstein basis via whole-group divisibility predicates.

    Independent route kept for cross-checking :func:`basis_of_abelian`:
    Q enters iff the group is not torsion, Z/p^inf at p iff the group is
    not uniquely p-divisible, Z/p at p iff it is not p-divisible, Z_(p)
    at p iff its torsion-free quotient is not p-divisible.
    """
    dec = decompose(group)
    not_div = PrimeSet.empty()
    not_uniq = PrimeSet.empty()
    for atom, _ in group.atoms:
        not_div = not_div | _not_divisible(atom)
        not_uniq = not_uniq | _not_uniquely_divisible(atom)
    free_bad = PrimeSet.empty()
    for atom, _ in dec.free_part.atoms:
        free_bad = free_bad | _not_divisible(atom)
    return BocksteinBasis(
        has_q=not dec.is_torsion,
        loc=free_bad,
        zp=not_div,
        zpinf=not_uniq,
    )


# ---------------------------------------------------------------------------
# Torsion-divisible split


@dataclass(frozen=True)
class BasisSplit:
    """A basis split into its torsion-divisible part ``td`` (Z/p^inf
    members only) and the rest ``ntd`` (Q, Z_(p), Z/p; its zpinf family is
    clamped to zp to keep the chain valid)."""

    td: BocksteinBasis
    ntd: BocksteinBasis


def split_torsion_divisible(basis: BocksteinBasis) -> BasisSplit:
    """Split off the Z/p^inf family; the union of the parts restores the
    original basis.

    >>> from .abelian import AbelianGroup, Z
    >>> s = split_torsion_divisible(basis_of_abelian(AbelianGroup.of(Z)))
    >>> (s.td | s.ntd) == basis_of_abelian(AbelianGroup.of(Z))
    True
    """
    empty = PrimeSet.empty()
    td = BocksteinBasis(False, empty, empty, basis.zpinf)
    ntd = BocksteinBasis(basis.has_q, basis.loc, basis.zp, basis.zp)
    return BasisSplit(td=td, ntd=ntd)


def ntd_issubset(a: BocksteinBasis, b: BocksteinBasis) -> bool:
    """Containment of the non-torsion-divisible parts (Q, Z_(p), Z/p)."""
    return (
        (not a.has_q or b.has_q)
        and a.loc.issubset(b.loc)
        and a.zp.issubset(b.zp)
    )


def ntd_equal(a: BocksteinBasis, b: BocksteinBasis) -> bool:
    return ntd_issubset(a, b) and ntd_issubset(b, a)


# ---------------------------------------------------------------------------
# Tower surgery


def split_top(desc: TowerDesc) -> tuple[AbelianGroup, GroupDesc]:
    """Peel the deepest central kernel off a tower.

    Returns the kernel K = layers[0] and the remaining group (a tower one
    stage shorter, or an AbelianDesc when only one layer remains).  The
    remainder's abelianization is not derivable here, so it is dropped.
    """
    kernel = desc.layers[0]
    rest_layers = desc.layers[1:]
    if len(rest_layers) == 1:
        return kernel, AbelianDesc(rest_layers[0])
    return kernel, TowerDesc(rest_layers, None, desc.witnessed[1:])
