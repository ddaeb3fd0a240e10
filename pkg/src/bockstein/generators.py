"""Reproducible random instances for the verification suites.

All randomness flows through string-seeded ``random.Random`` streams
(stable across processes and platforms), derived per instance as
``rng_for(suite, seed, index)`` so suites can be re-run or parallelized
without changing what each instance looks like.
"""

from __future__ import annotations

import random

from .abelian import (
    AbelianGroup,
    Adic,
    Atom,
    Cyclic,
    Localized,
    LocalizedAt,
    Pruefer,
    Q,
    Z,
)
from .catalog import quaternion8_table, dihedral8_table, ut3_table, cyclic_table
from .dimension import INF, DimensionProfile, PrimeFamily
from .nilpotent import TowerDesc, tower
from .oracle import FiniteGroup, direct_product
from .primes import PrimeSet

SMALL_PRIMES = (2, 3, 5, 7)
WIDE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
               73, 79, 83, 89, 97)


def rng_for(*parts) -> random.Random:
    """A fresh stream keyed by the joined parts (strings/ints)."""
    return random.Random(":".join(str(p) for p in parts))


def random_primeset(rng: random.Random, pool=SMALL_PRIMES, finite: bool | None = None,
                    nonempty: bool = False) -> PrimeSet:
    if finite is None:
        finite = rng.random() < 0.5
    k = rng.randint(1 if (nonempty and finite) else 0, min(3, len(pool)))
    chosen = rng.sample(pool, k)
    return PrimeSet.of(*chosen) if finite else PrimeSet.without(*chosen)


def random_atom(rng: random.Random, pool=SMALL_PRIMES, fg: bool = False) -> Atom:
    if fg:
        kind = rng.choice(("Z", "cyclic", "cyclic"))
    else:
        kind = rng.choice(("Z", "Q", "cyclic", "cyclic", "pruefer", "localized",
                           "localized_away", "adic"))
    if kind == "Z":
        return Z
    if kind == "Q":
        return Q
    if kind == "cyclic":
        return Cyclic(rng.choice(pool), rng.randint(1, 3))
    if kind == "pruefer":
        return Pruefer(rng.choice(pool))
    if kind == "localized":
        return Localized(rng.choice(pool))
    if kind == "localized_away":
        return LocalizedAt(random_primeset(rng, pool))
    return Adic(random_primeset(rng, pool, nonempty=True))


def random_abelian(rng: random.Random, pool=SMALL_PRIMES, max_atoms: int = 5,
                   fg: bool = False, nontrivial: bool = False) -> AbelianGroup:
    n = rng.randint(1 if nontrivial else 0, max_atoms)
    pairs = tuple((random_atom(rng, pool, fg), rng.randint(1, 3)) for _ in range(n))
    g = AbelianGroup(pairs)
    if nontrivial and g.is_trivial:
        return AbelianGroup.of(Cyclic(rng.choice(pool)))
    return g


def random_tower(rng: random.Random, pool=SMALL_PRIMES, fg: bool = False) -> TowerDesc:
    """A witnessed tower of 2..4 random nontrivial abelian layers.

    A direct sum of the layers realizes such a tower (each stage splits),
    so its abelianization metadata is the sum of all layers.
    """
    height = rng.randint(2, 4)
    layers = [random_abelian(rng, pool, max_atoms=3, fg=fg, nontrivial=True)
              for _ in range(height)]
    ab = AbelianGroup.trivial()
    for layer in layers:
        ab = ab + layer
    return tower(layers, ab=ab, witnessed=True)


_BLOCK_BUILDERS = (
    ("cyclic2", 2, lambda: cyclic_table(2)),
    ("cyclic3", 3, lambda: cyclic_table(3)),
    ("cyclic4", 4, lambda: cyclic_table(4)),
    ("cyclic5", 5, lambda: cyclic_table(5)),
    ("cyclic7", 7, lambda: cyclic_table(7)),
    ("cyclic8", 8, lambda: cyclic_table(8)),
    ("cyclic9", 9, lambda: cyclic_table(9)),
    ("quaternion8", 8, quaternion8_table),
    ("dihedral8", 8, dihedral8_table),
    ("ut3_mod(2,1)", 8, lambda: ut3_table(2, 1)),
    ("ut3_mod(3,1)", 27, lambda: ut3_table(3, 1)),
)


def random_finite_nilpotent(rng: random.Random, max_order: int = 512) -> FiniteGroup:
    """A direct product of 1..3 building blocks with order <= max_order.

    Blocks are validated tables, so the product is a group without a
    fresh associativity scan.
    """
    count = rng.randint(1, 3)
    g: FiniteGroup | None = None
    order = 1
    for _ in range(count):
        feasible = [(n, b) for n, sz, b in _BLOCK_BUILDERS if order * sz <= max_order]
        if not feasible:
            break
        name, builder = rng.choice(feasible)
        block = builder()
        g = block if g is None else direct_product(g, block)
        order = g.order
    assert g is not None
    return g


def random_nonabelian_nilpotent(rng: random.Random, max_order: int = 512) -> FiniteGroup:
    """Like :func:`random_finite_nilpotent` but guaranteed class >= 2."""
    core = rng.choice((quaternion8_table, dihedral8_table,
                       lambda: ut3_table(2, 1), lambda: ut3_table(3, 1),
                       lambda: ut3_table(2, 2)))()
    g = core
    if rng.random() < 0.6:
        feasible = [(n, b) for n, sz, b in _BLOCK_BUILDERS if g.order * sz <= max_order]
        if feasible:
            _, builder = rng.choice(feasible)
            g = direct_product(g, builder())
    return g


def random_valid_profile(rng: random.Random, pool=SMALL_PRIMES,
                         allow_inf: bool = False) -> DimensionProfile:
    """A profile satisfying R0..R4 by construction.

    Occasionally the all-zero profile; otherwise every value is >= 1,
    chosen so the chain rules and the forcing rule hold at the defaults
    and at every override prime.
    """
    if rng.random() < 0.1:
        return DimensionProfile.constant(0)

    def pick_q():
        vals = [1, 1, 2, 3]
        if allow_inf:
            vals.append(INF)
        return rng.choice(vals)

    q = pick_q()

    def one_case():
        zpinf = rng.choice([1, 1, 2, 3] + ([INF] if allow_inf else []))
        zp = zpinf if (zpinf == INF or rng.random() < 0.5) else zpinf + 1
        if zpinf > q:
            loc = zpinf + 1
        else:
            lo = max(q, zp)
            hi = max(q, zpinf + 1)
            if lo == INF or hi == INF:
                loc = INF if lo == INF else rng.choice([lo, hi])
            else:
                loc = rng.randint(lo, hi)
        return zp, zpinf, loc

    zp_d, zpinf_d, loc_d = one_case()
    zp_o, zpinf_o, loc_o = {}, {}, {}
    for p in rng.sample(pool, rng.randint(0, min(3, len(pool)))):
        zp_o[p], zpinf_o[p], loc_o[p] = one_case()
    return DimensionProfile(
        q=q,
        zp=PrimeFamily.of(zp_d, zp_o),
        zpinf=PrimeFamily.of(zpinf_d, zpinf_o),
        loc=PrimeFamily.of(loc_d, loc_o),
    )
