"""Named example groups: finite tables and symbolic towers.

Every entry carries hand-declared metadata (order, nilpotency class,
abelianization, sometimes the expected Bockstein basis) that the test
suites re-derive through the oracle.  Entries are built on demand and
cached; ``default_entries()`` is the fixed list the verification suites
sweep over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .abelian import (
    AbelianGroup,
    Atom,
    BocksteinBasis,
    Cyclic,
    Localized,
    Pruefer,
    Q,
    QAtom,
    Z,
    ZAtom,
    basis_of_abelian,
    finite_cyclic,
)
from .nilpotent import FiniteDesc, GroupDesc, TowerDesc, tower
from .oracle import (
    FiniteGroup,
    direct_product,
    lower_central_layers,
    lower_central_series,
)
from .primes import PrimeSet, check_prime, prime_factors

MAX_ORDER = 512


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    desc: GroupDesc
    order: int | None  # None: infinite
    nilpotency_class: int
    ab: AbelianGroup
    expected_basis: BocksteinBasis | None = None

    @property
    def is_finite(self) -> bool:
        return isinstance(self.desc, FiniteDesc)

    @property
    def group(self) -> FiniteGroup | None:
        return self.desc.group if isinstance(self.desc, FiniteDesc) else None


def _check_order(n: int) -> int:
    if n > MAX_ORDER:
        raise ValueError(f"table order {n} exceeds the supported bound {MAX_ORDER}")
    return n


def _finite_expected(order: int) -> BocksteinBasis:
    ps = PrimeSet.of(*prime_factors(order)) if order > 1 else PrimeSet.empty()
    return BocksteinBasis(False, PrimeSet.empty(), ps, ps)


# ---------------------------------------------------------------------------
# Tables


def cyclic_table(n: int, name: str | None = None) -> FiniteGroup:
    _check_order(n)
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup.from_table(table, identity=0, name=name or f"cyclic({n})")


def dihedral8_table() -> FiniteGroup:
    """Symmetries of the square: r^i s^j with s r s = r^-1, index i*2+j."""
    table = np.zeros((8, 8), dtype=np.intc)
    for i in range(4):
        for j in range(2):
            for k in range(4):
                for l in range(2):
                    ii = (i + (k if j == 0 else -k)) % 4
                    table[i * 2 + j, k * 2 + l] = ii * 2 + (j + l) % 2
    return FiniteGroup.from_table(table, identity=0, name="dihedral8")


_QUNITS = ("1", "i", "j", "k")
_QMUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8_table() -> FiniteGroup:
    """The unit quaternions {+-1, +-i, +-j, +-k}, index = axis*2 + (sign<0)."""
    def enc(sign, axis):
        return _QUNITS.index(axis) * 2 + (0 if sign > 0 else 1)

    table = np.zeros((8, 8), dtype=np.intc)
    for a in range(8):
        for b in range(8):
            sa, ua = (1 if a % 2 == 0 else -1), _QUNITS[a // 2]
            sb, ub = (1 if b % 2 == 0 else -1), _QUNITS[b // 2]
            s, u = _QMUL[(ua, ub)]
            table[a, b] = enc(sa * sb * s, u)
    return FiniteGroup.from_table(table, identity=0, name="quaternion8")


def ut3_table(p: int, k: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/p^k, encoded as (a, b, c)
    with product (a, b, c)(a', b', c') = (a+a', b+b', c+c'+a*b')."""
    check_prime(p)
    m = p ** k
    n = _check_order(m ** 3)
    idx = np.arange(n)
    a, b, c = idx // (m * m), (idx // m) % m, idx % m
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    a2, b2, c2 = a[None, :], b[None, :], c[None, :]
    table = ((a1 + a2) % m * m + (b1 + b2) % m) * m + (c1 + c2 + a1 * b2) % m
    return FiniteGroup.from_table(table.astype(np.intc), identity=0, name=f"ut3_mod({p},{k})")


def ut4_mod2_table() -> FiniteGroup:
    """Upper unitriangular 4x4 matrices over Z/2 (order 64, class 3)."""
    slots = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    mats = []
    for bits in range(64):
        m = np.eye(4, dtype=np.int64)
        for s, (r, c) in enumerate(slots):
            m[r, c] = (bits >> s) & 1
        mats.append(m)
    mats = np.array(mats)

    def key(m):
        return tuple(int(m[r, c]) for r, c in slots)

    index = {key(m): i for i, m in enumerate(mats)}
    table = np.zeros((64, 64), dtype=np.intc)
    for i in range(64):
        prods = (mats[i] @ mats) % 2
        for j in range(64):
            table[i, j] = index[key(prods[j])]
    return FiniteGroup.from_table(table, identity=index[key(np.eye(4, dtype=np.int64))],
                                  name="ut4_mod2")


# ---------------------------------------------------------------------------
# Towers


_RING_LABELS: dict[str, Atom] = {"Z": Z, "Q": Q}


def _parse_ring(label: str) -> Atom:
    label = label.strip()
    if label in _RING_LABELS:
        return _RING_LABELS[label]
    if label.startswith("Z_(") and label.endswith(")"):
        return Localized(int(label[3:-1]))
    if label.startswith("Z/"):
        rest = label[2:]
        if rest.endswith("^inf"):
            return Pruefer(int(rest[:-4]))
        n = int(rest)
        fac = prime_factors(n)
        if len(fac) != 1:
            raise ValueError(f"cyclic ring must have prime-power order, got {n}")
        ((p, k),) = fac.items()
        return Cyclic(p, k)
    raise ValueError(f"unknown ring label: {label!r}")


def _ring_label(atom: Atom) -> str:
    return repr(atom)


def heisenberg_tower(ring: Atom | str) -> CatalogEntry:
    """Upper unitriangular 3x3 matrices over a commutative ring R, as the
    witnessed tower with deepest layer R (the center) and top layer R^2.

    Supported rings: Z, Q, Z_(p), Z/p^k.
    """
    atom = _parse_ring(ring) if isinstance(ring, str) else ring
    if not isinstance(atom, (ZAtom, QAtom, Localized, Cyclic)):
        raise ValueError(f"unsupported heisenberg ring: {atom!r}")
    base = AbelianGroup.of(atom)
    ab = base.scaled(2)
    desc = tower([base, ab], ab=ab, witnessed=True)
    order = atom.p ** (3 * atom.k) if isinstance(atom, Cyclic) else None
    return CatalogEntry(
        name=f"heisenberg_ring({_ring_label(atom)})",
        desc=desc, order=order, nilpotency_class=2, ab=ab,
        expected_basis=basis_of_abelian(base))


def gamma_tower(entry: CatalogEntry) -> CatalogEntry:
    """The lower-central tower of a finite entry of class >= 2, layers
    Gamma_c, ..., Gamma_1/Gamma_2 (deepest first), all stages witnessed."""
    g = entry.group
    if g is None:
        raise ValueError("gamma_tower needs a finite entry")
    c = lower_central_series(g).nilpotency_class
    if c < 2:
        raise ValueError(f"gamma_tower needs class >= 2, got {c}")
    desc = tower(lower_central_layers(g), ab=entry.ab, witnessed=True)
    return CatalogEntry(
        name=f"gamma_tower({entry.name})",
        desc=desc, order=entry.order, nilpotency_class=c, ab=entry.ab,
        expected_basis=entry.expected_basis)


# ---------------------------------------------------------------------------
# Entry builders


def _finite_entry(name: str, g: FiniteGroup, cls: int, ab: AbelianGroup) -> CatalogEntry:
    return CatalogEntry(
        name=name, desc=FiniteDesc(g), order=g.order, nilpotency_class=cls, ab=ab,
        expected_basis=_finite_expected(g.order))


def build_cyclic(n: int) -> CatalogEntry:
    return _finite_entry(f"cyclic({n})", cyclic_table(n), 0 if n == 1 else 1,
                         finite_cyclic(n))


def build_abelian(*divisors: int) -> CatalogEntry:
    if not divisors:
        raise ValueError("abelian(...) needs at least one divisor")
    order = 1
    for d in divisors:
        order *= d
    _check_order(order)
    g = cyclic_table(divisors[0])
    for d in divisors[1:]:
        g = direct_product(g, cyclic_table(d))
    name = f"abelian({','.join(str(d) for d in divisors)})"
    g.name = name
    ab = AbelianGroup.trivial()
    for d in divisors:
        ab = ab + finite_cyclic(d)
    return _finite_entry(name, g, 0 if order == 1 else 1, ab)


def build_quaternion8() -> CatalogEntry:
    return _finite_entry("quaternion8", quaternion8_table(), 2,
                         AbelianGroup([(Cyclic(2), 2)]))


def build_dihedral8() -> CatalogEntry:
    return _finite_entry("dihedral8", dihedral8_table(), 2,
                         AbelianGroup([(Cyclic(2), 2)]))


def build_ut3_mod(p: int, k: int) -> CatalogEntry:
    return _finite_entry(f"ut3_mod({p},{k})", ut3_table(p, k), 2,
                         AbelianGroup([(Cyclic(p, k), 2)]))


def build_ut4_mod2() -> CatalogEntry:
    return _finite_entry("ut4_mod2", ut4_mod2_table(), 3, AbelianGroup([(Cyclic(2), 3)]))


def build_direct_product(a: CatalogEntry, b: CatalogEntry) -> CatalogEntry:
    if a.group is None or b.group is None:
        raise ValueError("direct_product needs finite entries")
    _check_order(a.group.order * b.group.order)
    name = f"direct_product({a.name},{b.name})"
    g = direct_product(a.group, b.group, name=name)
    return _finite_entry(name, g, max(a.nilpotency_class, b.nilpotency_class),
                         a.ab + b.ab)


# ---------------------------------------------------------------------------
# Name resolution


_ALIASES = {"q8": "quaternion8", "d8": "dihedral8", "d4": "dihedral8",
            "trivial": "cyclic(1)"}


def _split_args(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or parts:
        parts.append("".join(cur))
    return [p.strip() for p in parts]


@lru_cache(maxsize=None)
def resolve(text: str) -> CatalogEntry:
    """Build the entry named by a catalog expression.

    Accepts bare names (``quaternion8``, alias ``Q8``), parametrized
    templates (``cyclic(12)``, ``ut3_mod(3,1)``), nested products
    (``direct_product(quaternion8,cyclic(3))``), ring towers
    (``heisenberg_ring(Z/4)``) and ``gamma_tower(<finite name>)``.
    """
    text = text.strip()
    lowered = text.casefold()
    if lowered in _ALIASES:
        text = _ALIASES[lowered]
    if "(" not in text:
        head, args = text.casefold(), []
    else:
        if not text.endswith(")"):
            raise ValueError(f"malformed catalog name: {text!r}")
        head, _, rest = text.partition("(")
        head = head.strip().casefold()
        args = _split_args(rest[:-1])
    if head == "cyclic":
        return build_cyclic(*map(int, args))
    if head == "abelian":
        return build_abelian(*map(int, args))
    if head == "quaternion8":
        return build_quaternion8()
    if head == "dihedral8":
        return build_dihedral8()
    if head == "ut3_mod":
        return build_ut3_mod(*map(int, args))
    if head == "ut4_mod2":
        return build_ut4_mod2()
    if head == "direct_product":
        if len(args) != 2:
            raise ValueError("direct_product takes exactly two entries")
        return build_direct_product(resolve(args[0]), resolve(args[1]))
    if head == "heisenberg_ring":
        if len(args) != 1:
            raise ValueError("heisenberg_ring takes exactly one ring label")
        return heisenberg_tower(args[0])
    if head == "gamma_tower":
        if len(args) != 1:
            raise ValueError("gamma_tower takes exactly one entry name")
        return gamma_tower(resolve(args[0]))
    raise ValueError(f"unknown catalog name: {text!r}")


def build(name: str, *params) -> CatalogEntry:
    """Programmatic entry point: ``build('cyclic', 12)`` and friends."""
    if params:
        inner = ",".join(p.name if isinstance(p, CatalogEntry) else str(p) for p in params)
        return resolve(f"{name}({inner})")
    return resolve(name)


TEMPLATES = (
    "cyclic(n)",
    "abelian(d1,...,dk)",
    "quaternion8",
    "dihedral8",
    "ut3_mod(p,k)",
    "ut4_mod2",
    "direct_product(a,b)",
    "heisenberg_ring(R)   R in {Z, Q, Z_(p), Z/p^k}",
    "gamma_tower(finite entry)",
)

_DEFAULT_NAMES = (
    "cyclic(1)",
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(5)",
    "cyclic(6)",
    "cyclic(8)",
    "cyclic(9)",
    "cyclic(12)",
    "cyclic(30)",
    "cyclic(210)",
    "abelian(2,2)",
    "abelian(2,4)",
    "abelian(3,9)",
    "abelian(2,2,3)",
    "abelian(4,6)",
    "quaternion8",
    "dihedral8",
    "ut3_mod(2,1)",
    "ut3_mod(2,2)",
    "ut3_mod(2,3)",
    "ut3_mod(3,1)",
    "ut3_mod(5,1)",
    "ut3_mod(7,1)",
    "ut4_mod2",
    "direct_product(quaternion8,cyclic(3))",
    "direct_product(ut3_mod(3,1),cyclic(2))",
    "direct_product(dihedral8,cyclic(9))",
    "direct_product(quaternion8,dihedral8)",
    "direct_product(ut3_mod(2,1),ut3_mod(3,1))",
    "direct_product(ut3_mod(2,2),cyclic(7))",
    "heisenberg_ring(Z)",
    "heisenberg_ring(Q)",
    "heisenberg_ring(Z_(2))",
    "heisenberg_ring(Z/2)",
    "heisenberg_ring(Z/4)",
    "heisenberg_ring(Z/9)",
    "heisenberg_ring(Z/7)",
    "gamma_tower(quaternion8)",
    "gamma_tower(ut3_mod(2,2))",
    "gamma_tower(ut4_mod2)",
    "gamma_tower(direct_product(ut3_mod(2,1),ut3_mod(3,1)))",
)


@lru_cache(maxsize=1)
def default_entries() -> tuple[CatalogEntry, ...]:
    """The fixed entry list swept by the verification suites."""
    return tuple(resolve(name) for name in _DEFAULT_NAMES)
