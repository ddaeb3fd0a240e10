"""Brute-force ground truth for finite groups given as multiplication tables.

Everything here works directly on an n x n table of element indices, with
no structure theory assumed: associativity is scanned over all triples,
subgroups are grown by closure, the lower central series by iterated
commutators, and divisibility by inspecting the power maps x -> x**p.
Intended for orders up to a few hundred; the hot loops live in
:mod:`bockstein.kernels`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .abelian import AbelianGroup, BocksteinBasis, Cyclic
from .errors import InvalidTableError, NotNilpotentError
from .kernels import impl as _k
from .primes import PrimeSet, prime_factors


def _as_table(table) -> np.ndarray:
    arr = np.ascontiguousarray(np.asarray(table, dtype=np.intc))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"multiplication table must be square, got shape {arr.shape}")
    return arr


class FiniteGroup:
    """A finite group as a multiplication table over ``range(order)``.

    ``table[a, b]`` is the index of the product a*b.  Derived data
    (inverses, orders, center, lower central series, abelianization) is
    cached on the instance; treat instances as immutable.
    """

    def __init__(self, table, identity: int, name: str | None = None):
        self.table = _as_table(table)
        self.order = int(self.table.shape[0])
        self.identity = int(identity)
        self.name = name
        if not (0 <= self.identity < self.order):
            raise ValueError(f"identity index {identity} out of range")
        self._cache: dict = {}

    @classmethod
    def from_table(cls, table, identity: int | None = None, name: str | None = None,
                   validate: bool = False) -> "FiniteGroup":
        """Wrap a table, inferring the identity when not given.

        ``validate=True`` runs the full table validator; group-law
        failures (including a missing or ambiguous identity) raise
        :class:`~bockstein.errors.InvalidTableError`.
        """
        arr = _as_table(table)
        if identity is None:
            n = arr.shape[0]
            rng = np.arange(n)
            hits = [e for e in range(n) if (arr[e] == rng).all() and (arr[:, e] == rng).all()]
            if len(hits) != 1:
                raise InvalidTableError(f"table has {len(hits)} two-sided identities")
            identity = hits[0]
        g = cls(arr, identity, name)
        if validate:
            bad = validate_table(g)
            if bad is not None:
                raise InvalidTableError(
                    f"invalid multiplication table: {bad.message}", violation=bad)
        return g

    @property
    def inverses(self) -> np.ndarray:
        inv = self._cache.get("inv")
        if inv is None:
            rows, cols = np.nonzero(self.table == self.identity)
            inv = np.empty(self.order, dtype=np.intc)
            inv[rows] = cols.astype(np.intc)
            self._cache["inv"] = inv
        return inv

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverses[a])

    def __repr__(self):
        label = self.name or "group"
        return f"<{label}: order {self.order}>"


@dataclass(frozen=True)
class SubgroupSet:
    """A subset of a group's element indices, closed under the product."""

    parent: FiniteGroup = field(compare=False, repr=False)
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.elements == (self.parent.identity,)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)


@dataclass(frozen=True)
class TableViolation:
    kind: str
    where: tuple
    message: str


def validate_table(g: FiniteGroup) -> TableViolation | None:
    """Check Latin-square, identity, associativity and inverse laws.

    Returns None when the table is a group table, otherwise the first
    violation found (associativity reports the first violating triple in
    row-major order).
    """
    t = g.table
    n = g.order
    if n == 0:
        return TableViolation("shape", (), "empty table")
    if t.min() < 0 or t.max() >= n:
        bad = np.argwhere((t < 0) | (t >= n))[0]
        return TableViolation("range", tuple(int(x) for x in bad),
                              f"entry at {tuple(int(x) for x in bad)} out of range")
    rng = np.arange(n)
    for a in range(n):
        if not np.array_equal(np.sort(t[a]), rng):
            return TableViolation("latin_row", (a,), f"row {a} is not a permutation")
        if not np.array_equal(np.sort(t[:, a]), rng):
            return TableViolation("latin_col", (a,), f"column {a} is not a permutation")
    e = g.identity
    if not (np.array_equal(t[e], rng) and np.array_equal(t[:, e], rng)):
        return TableViolation("identity", (e,), f"element {e} is not a two-sided identity")
    bad = _k.assoc_violation(t)
    if bad is not None:
        a, b, c = bad
        return TableViolation(
            "associativity", (a, b, c),
            f"(a*b)*c != a*(b*c) at (a, b, c) = ({a}, {b}, {c})")
    # Latin + identity + associativity already force two-sided inverses;
    # scan anyway so the validator never relies on that argument.
    inv_ok = (t == e).any(axis=1)
    if not inv_ok.all():
        x = int(np.flatnonzero(~inv_ok)[0])
        return TableViolation("inverse", (x,), f"element {x} has no right inverse")
    return None


# ---------------------------------------------------------------------------
# Subgroups, series, quotients


def subgroup_closure(g: FiniteGroup, gens: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``gens`` (the trivial one for no gens)."""
    seed = list(gens) or [g.identity]
    return SubgroupSet(g, tuple(_k.closure(g.table, seed)))


def full_subgroup(g: FiniteGroup) -> SubgroupSet:
    return SubgroupSet(g, tuple(range(g.order)))


def commutator_subgroup(g: FiniteGroup, a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    """Subgroup generated by all commutators [x, y], x in a, y in b."""
    vals = _k.commutator_values(g.table, g.inverses, list(a.elements), list(b.elements))
    return subgroup_closure(g, vals)


def center(g: FiniteGroup) -> SubgroupSet:
    got = g._cache.get("center")
    if got is None:
        got = SubgroupSet(g, tuple(_k.center_elements(g.table)))
        g._cache["center"] = got
    return got


def is_normal(g: FiniteGroup, s: SubgroupSet) -> bool:
    conj = _k.conjugate_values(g.table, g.inverses, list(s.elements))
    return set(conj) <= set(s.elements)


def normal_closure(g: FiniteGroup, gens: Iterable[int]) -> SubgroupSet:
    """Smallest normal subgroup containing ``gens``."""
    cur = subgroup_closure(g, gens)
    while True:
        conj = _k.conjugate_values(g.table, g.inverses, list(cur.elements))
        if set(conj) <= set(cur.elements):
            return cur
        cur = subgroup_closure(g, sorted(set(cur.elements) | set(conj)))


@dataclass(frozen=True)
class CentralSeries:
    """Lower central series terms, ending at the trivial subgroup."""

    terms: tuple[SubgroupSet, ...]
    nilpotency_class: int


def lower_central_series(g: FiniteGroup) -> CentralSeries:
    """Iterate G(i+1) = [G(i), G] until trivial.

    Raises :class:`NotNilpotentError` (with the stabilized subgroup as
    evidence) when the series stops strictly above the identity.
    """
    got = g._cache.get("lcs")
    if got is not None:
        return got
    cur = full_subgroup(g)
    terms = [cur]
    whole = cur
    while cur.order > 1:
        nxt = commutator_subgroup(g, cur, whole)
        if nxt.elements == cur.elements:
            raise NotNilpotentError(
                f"lower central series stabilizes at order {cur.order}", evidence=cur)
        terms.append(nxt)
        cur = nxt
    got = CentralSeries(tuple(terms), len(terms) - 1)
    g._cache["lcs"] = got
    return got


@dataclass(frozen=True)
class Quotient:
    """A quotient group with the projection map (element -> coset index)."""

    group: FiniteGroup
    projection: np.ndarray


def quotient(g: FiniteGroup, n: SubgroupSet) -> Quotient:
    """G / n for a normal subgroup n.  Cosets are indexed by their least
    element, ascending, so the construction is deterministic."""
    if not is_normal(g, n):
        raise ValueError("cannot form the quotient: subgroup is not normal")
    nel = np.asarray(n.elements, dtype=np.intc)
    min_rep = g.table[:, nel].min(axis=1)
    reps = np.unique(min_rep)
    coset_index = np.full(g.order, -1, dtype=np.intc)
    coset_index[reps] = np.arange(len(reps), dtype=np.intc)
    proj = coset_index[min_rep]
    qtable = proj[g.table[np.ix_(reps, reps)]]
    qident = int(proj[g.identity])
    label = f"{g.name or 'G'}/N{n.order}"
    return Quotient(FiniteGroup.from_table(qtable, identity=qident, name=label), proj)


def subgroup_as_group(g: FiniteGroup, s: SubgroupSet) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Reindex a subgroup as a standalone group; also returns the map from
    local indices back to elements of ``g``."""
    elems = np.asarray(s.elements, dtype=np.intc)
    local = np.full(g.order, -1, dtype=np.intc)
    local[elems] = np.arange(len(elems), dtype=np.intc)
    sub = local[g.table[np.ix_(elems, elems)]]
    if (sub < 0).any():
        raise ValueError("subset is not closed under the product")
    ident = int(local[g.identity])
    if ident < 0:
        raise ValueError("subset does not contain the identity")
    name = f"{g.name or 'G'}|{len(elems)}"
    return FiniteGroup.from_table(sub, identity=ident, name=name), tuple(int(x) for x in elems)


# ---------------------------------------------------------------------------
# Orders, power maps, abelian structure


def element_orders(g: FiniteGroup) -> np.ndarray:
    got = g._cache.get("orders")
    if got is None:
        got = np.asarray(_k.element_orders(g.table, g.identity), dtype=np.int64)
        g._cache["orders"] = got
    return got


@dataclass(frozen=True)
class PowerMap:
    prime: int
    surjective: bool
    injective: bool


def power_map(g: FiniteGroup, p: int) -> PowerMap:
    """Whether x -> x**p is onto / one-to-one (equivalent on a finite set,
    but both are measured from the image independently)."""
    img = _k.power_map_image(g.table, p)
    distinct = len(set(img))
    covered = len(set(img) & set(range(g.order)))
    return PowerMap(p, surjective=covered == g.order, injective=distinct == len(img))


def basis_of_table(g: FiniteGroup) -> BocksteinBasis:
    """Bockstein basis of a finite nilpotent group from its power maps.

    A finite group is torsion with trivial torsion-free quotient, so only
    the Z/p and Z/p^inf families can be inhabited, and only at primes
    dividing the order (x -> x**q is bijective when q is coprime to |G|).
    Raises :class:`NotNilpotentError` for non-nilpotent tables.
    """
    lower_central_series(g)
    not_onto = []
    not_one_to_one = []
    for p in sorted(prime_factors(g.order)):
        pm = power_map(g, p)
        if not pm.surjective:
            not_onto.append(p)
        if not pm.injective:
            not_one_to_one.append(p)
    return BocksteinBasis(
        has_q=False,
        loc=PrimeSet.empty(),
        zp=PrimeSet.of(*not_onto),
        zpinf=PrimeSet.of(*not_one_to_one),
    )


def abelian_invariants(g: FiniteGroup) -> list[int]:
    """Cyclic invariants of a finite abelian table by greedy peeling.

    Repeatedly removes the cyclic subgroup generated by an element of
    maximal order (lowest index on ties, so the run is deterministic).
    Raises ``ValueError`` when the table is not commutative.
    """
    if not np.array_equal(g.table, g.table.T):
        raise ValueError("abelian_invariants requires a commutative table")
    out = []
    cur = g
    while cur.order > 1:
        ords = element_orders(cur)
        top = int(ords.max())
        x = int(np.flatnonzero(ords == top)[0])
        out.append(top)
        cur = quotient(cur, subgroup_closure(cur, [x])).group
    return out


def _invariants_to_group(invariants: Sequence[int]) -> AbelianGroup:
    atoms = []
    for d in invariants:
        for p, e in prime_factors(d).items():
            atoms.append((Cyclic(p, e), 1))
    return AbelianGroup(tuple(atoms))


def decompose_abelian_table(g: FiniteGroup) -> AbelianGroup:
    """Prime-power cyclic decomposition of a finite abelian table."""
    return _invariants_to_group(abelian_invariants(g))


def lower_central_layers(g: FiniteGroup) -> list[AbelianGroup]:
    """The abelian layers of the lower central series, deepest first:
    [G(c), G(c-1)/G(c), ..., G(1)/G(2)] for a group of class c >= 1."""
    series = lower_central_series(g)
    c = series.nilpotency_class
    layers = []
    for i in range(c - 1, -1, -1):
        upper, lower = series.terms[i], series.terms[i + 1]
        sub, elems = subgroup_as_group(g, upper)
        local = {e: j for j, e in enumerate(elems)}
        inner = SubgroupSet(sub, tuple(sorted(local[e] for e in lower.elements)))
        layers.append(decompose_abelian_table(quotient(sub, inner).group))
    return layers


def abelianization(g: FiniteGroup) -> tuple[FiniteGroup, AbelianGroup]:
    """G/[G, G] as a table plus its decomposition into prime-power cyclics."""
    got = g._cache.get("ab")
    if got is None:
        comm = commutator_subgroup(g, full_subgroup(g), full_subgroup(g))
        q = quotient(g, comm).group
        got = (q, _invariants_to_group(abelian_invariants(q)))
        g._cache["ab"] = got
    return got


def primary_decomposition(g: FiniteGroup) -> list[tuple[int, SubgroupSet]]:
    """Split a finite nilpotent group into its prime-power-order parts.

    For each prime q dividing |G| the q-power-order elements must form a
    subgroup whose orders multiply to |G|; any failure is evidence of
    non-nilpotency and raises :class:`NotNilpotentError`.
    """
    ords = element_orders(g)
    parts: list[tuple[int, SubgroupSet]] = []
    total = 1
    for q in sorted(prime_factors(g.order)):
        stripped = ords.copy()
        while True:
            div = stripped % q == 0
            if not div.any():
                break
            stripped[div] //= q
        elems = tuple(int(x) for x in np.flatnonzero(stripped == 1))
        block = g.table[np.ix_(elems, elems)]
        if not set(int(v) for v in block.ravel()) <= set(elems):
            raise NotNilpotentError(
                f"elements of {q}-power order are not closed under the product",
                evidence=q)
        parts.append((q, SubgroupSet(g, elems)))
        total *= len(elems)
    if total != g.order:
        raise NotNilpotentError(
            "primary parts do not fill the group", evidence=total)
    return parts


# ---------------------------------------------------------------------------
# Sampling and products


def central_subgroup_samples(g: FiniteGroup, seed: int, count: int) -> list[SubgroupSet]:
    """``count`` cyclic subgroups of the center drawn reproducibly from
    ``seed``, plus the deepest lower-central term."""
    rng = random.Random(f"central:{seed}")
    zs = sorted(center(g).elements)
    out = [subgroup_closure(g, [rng.choice(zs)]) for _ in range(count)]
    series = lower_central_series(g)
    if series.nilpotency_class >= 1:
        out.append(series.terms[-2])
    else:
        out.append(subgroup_closure(g, []))
    return out


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Componentwise product on pairs, encoded as i*|b| + j."""
    nb = b.order
    table = (a.table[:, None, :, None].astype(np.int64) * nb + b.table[None, :, None, :])
    table = table.reshape(a.order * nb, a.order * nb)
    ident = a.identity * nb + b.identity
    label = name or f"{a.name or 'G'}x{b.name or 'H'}"
    return FiniteGroup.from_table(table.astype(np.intc), identity=ident, name=label)
