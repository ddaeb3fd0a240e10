"""First-homology reductions of basis membership.

For a nilpotent group, membership of Q and of Z/p in the Bockstein basis
is visible in first homology with those coefficients (which only needs
the abelianization), and for finite groups membership of Z/p^inf is
visible in the vanishing of p-torsion of the abelianization.  This module
evaluates both sides of each biconditional through routes that do not
share code: the basis side through the basis machinery, the homology side
through tensor/Tor on the abelianization or through the table oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    AbelianGroup,
    Atom,
    Cyclic,
    Q,
    tensor_with,
)
from .nilpotent import AbelianDesc, FiniteDesc, GroupDesc, TowerDesc, basis_of, describe
from .primes import check_prime
from . import oracle


def abelianization_of(desc: GroupDesc) -> AbelianGroup:
    """The declared or computed abelianization of a description."""
    if isinstance(desc, AbelianDesc):
        return desc.group
    if isinstance(desc, TowerDesc):
        if desc.ab is None:
            raise ValueError("tower carries no abelianization metadata")
        return desc.ab
    return oracle.abelianization(desc.group)[1]


def first_homology(desc: GroupDesc, coeff: Atom) -> AbelianGroup:
    """H_1 of the group with coefficients in a Bockstein atom.

    First homology with coefficients in a flat-enough coefficient group is
    the abelianization tensored with it; that identity is all this needs.
    """
    return tensor_with(abelianization_of(desc), coeff)


def pruefer_h12_vanishes(g: oracle.FiniteGroup, p: int) -> bool:
    """Whether H_1 and H_2 with Z/p^inf coefficients vanish for a finite
    group: equivalent to the abelianization having no p-torsion."""
    check_prime(p)
    ab = oracle.abelianization(g)[1]
    return all(not (isinstance(atom, Cyclic) and atom.p == p) for atom, _ in ab.atoms)


@dataclass(frozen=True)
class CorollaryReport:
    """Both sides of the three homology biconditionals at one prime.

    ``verdicts`` maps family -> True (both sides agree), False (they
    disagree: a real failure), or None (skipped, the reduction does not
    apply to this shape of input).
    """

    group: str
    prime: int
    has_q: bool
    in_loc: bool
    in_zp: bool
    in_zpinf: bool
    h1_q_zero: bool | None
    h1_zp_zero: bool | None
    zpinf_h12_zero: bool | None
    verdicts: dict


def corollary_report(desc: GroupDesc, p: int) -> CorollaryReport:
    """Check at prime p:

    - Q in basis  <=>  H_1(G; Q) != 0
    - Z/p in basis  <=>  H_1(G; Z/p) != 0
    - Z/p^inf in basis  <=>  H_1(G; Z/p^inf) or H_2(G; Z/p^inf) nonzero
      (finite tables only; for them this is p | |Ab(G)|)
    """
    check_prime(p)
    basis = basis_of(desc)
    membership = dict(
        has_q=basis.has_q, in_loc=p in basis.loc, in_zp=p in basis.zp,
        in_zpinf=p in basis.zpinf)

    h1_q_zero = h1_zp_zero = zpinf_h12_zero = None
    try:
        h1_q_zero = first_homology(desc, Q).is_trivial
        h1_zp_zero = first_homology(desc, Cyclic(p)).is_trivial
    except ValueError:
        pass  # no usable abelianization: those corollaries are skipped

    verdicts: dict = {"q": None, "zp": None, "zpinf": None}
    if h1_q_zero is not None:
        verdicts["q"] = membership["has_q"] == (not h1_q_zero)
    if h1_zp_zero is not None:
        verdicts["zp"] = membership["in_zp"] == (not h1_zp_zero)
    if isinstance(desc, FiniteDesc):
        zpinf_h12_zero = pruefer_h12_vanishes(desc.group, p)
        verdicts["zpinf"] = membership["in_zpinf"] == (not zpinf_h12_zero)

    return CorollaryReport(
        group=describe(desc), prime=p,
        h1_q_zero=h1_q_zero, h1_zp_zero=h1_zp_zero, zpinf_h12_zero=zpinf_h12_zero,
        verdicts=verdicts, **membership)
