"""Catalog entries: declared metadata re-derived through the table oracle,
name resolution, and the order cap."""

import pytest

from bockstein.abelian import AbelianGroup, Cyclic, Pruefer, Q, Z, basis_of_abelian
from bockstein.catalog import (
    MAX_ORDER,
    TEMPLATES,
    CatalogEntry,
    build,
    default_entries,
    gamma_tower,
    heisenberg_tower,
    resolve,
)
from bockstein.nilpotent import TowerDesc, basis_of
from bockstein.oracle import (
    abelianization,
    basis_of_table,
    lower_central_layers,
    lower_central_series,
    validate_table,
)
from bockstein.primes import PrimeSet, prime_factors


def test_default_entries_fixed_sweep():
    entries = default_entries()
    assert len(entries) == 42
    names = [e.name for e in entries]
    assert "quaternion8" in names
    assert "heisenberg_ring(Z)" in names
    assert "gamma_tower(ut4_mod2)" in names
    assert len(set(names)) == len(names)


def test_finite_defaults_match_oracle():
    for entry in default_entries():
        g = entry.group
        if g is None:
            continue
        assert validate_table(g) is None, entry.name
        assert g.order == entry.order, entry.name
        assert lower_central_series(g).nilpotency_class == entry.nilpotency_class, \
            entry.name
        assert abelianization(g)[1] == entry.ab, entry.name
        assert basis_of_table(g) == entry.expected_basis, entry.name


def test_finite_expected_basis_shape():
    for entry in default_entries():
        if not entry.is_finite:
            continue
        b = entry.expected_basis
        assert not b.has_q and b.loc.is_empty
        if entry.order == 1:
            assert b.zp.is_empty and b.zpinf.is_empty
        else:
            assert b.zp == b.zpinf == PrimeSet.of(*prime_factors(entry.order))


def test_tower_defaults_are_witnessed_with_matching_basis():
    for entry in default_entries():
        if entry.is_finite:
            continue
        assert isinstance(entry.desc, TowerDesc)
        assert entry.desc.fully_witnessed, entry.name
        assert entry.desc.ab == entry.ab, entry.name
        if entry.expected_basis is not None:
            assert basis_of(entry.desc) == entry.expected_basis, entry.name


def test_heisenberg_over_z():
    e = resolve("heisenberg_ring(Z)")
    assert e.order is None and e.nilpotency_class == 2
    assert e.desc.layers == (AbelianGroup.of(Z), AbelianGroup([(Z, 2)]))
    assert e.ab == AbelianGroup([(Z, 2)])
    assert e.expected_basis == basis_of_abelian(AbelianGroup.of(Z))


def test_heisenberg_over_z4_order():
    e = resolve("heisenberg_ring(Z/4)")
    assert e.order == 64
    assert e.desc.layers[0] == AbelianGroup.of(Cyclic(2, 2))


def test_heisenberg_rejects_unsupported_rings():
    with pytest.raises(ValueError, match="prime-power"):
        resolve("heisenberg_ring(Z/6)")
    with pytest.raises(ValueError, match="unsupported heisenberg ring"):
        heisenberg_tower(Pruefer(2))
    with pytest.raises(ValueError, match="unknown ring label"):
        resolve("heisenberg_ring(F4)")


def test_gamma_tower_of_quaternions():
    e = resolve("gamma_tower(quaternion8)")
    assert e.nilpotency_class == 2 and e.order == 8
    assert e.desc.layers == (AbelianGroup.of(Cyclic(2)), AbelianGroup([(Cyclic(2), 2)]))
    assert e.ab == AbelianGroup([(Cyclic(2), 2)])
    assert basis_of(e.desc) == resolve("quaternion8").expected_basis


def test_gamma_tower_needs_class_two():
    with pytest.raises(ValueError, match="class >= 2"):
        resolve("gamma_tower(cyclic(6))")
    with pytest.raises(ValueError, match="finite entry"):
        gamma_tower(resolve("heisenberg_ring(Z)"))


def test_ut3_is_central_extension_of_elementary_square():
    for p in (2, 3, 5):
        e = resolve(f"ut3_mod({p},1)")
        layers = lower_central_layers(e.group)
        assert layers == [AbelianGroup.of(Cyclic(p)), AbelianGroup([(Cyclic(p), 2)])]
        assert e.ab == AbelianGroup([(Cyclic(p), 2)])


def test_resolve_aliases_and_casefold():
    assert resolve("Q8").name == "quaternion8"
    assert resolve("q8").name == "quaternion8"
    assert resolve("D8").name == "dihedral8"
    assert resolve("d4").name == "dihedral8"
    assert resolve("trivial").name == "cyclic(1)"
    assert resolve("QUATERNION8").name == "quaternion8"
    assert resolve(" cyclic(6) ").name == "cyclic(6)"


def test_resolve_rejects_malformed_and_unknown():
    with pytest.raises(ValueError, match="malformed"):
        resolve("cyclic(12")
    with pytest.raises(ValueError, match="unknown catalog name"):
        resolve("nope")
    with pytest.raises(ValueError, match="exactly two"):
        resolve("direct_product(quaternion8)")
    with pytest.raises(ValueError, match="at least one divisor"):
        resolve("abelian()")


def test_direct_product_nested():
    e = resolve("direct_product(quaternion8,cyclic(3))")
    assert e.order == 24
    assert validate_table(e.group) is None
    assert basis_of_table(e.group) == e.expected_basis
    assert e.expected_basis.zp == PrimeSet.of(2, 3)
    deep = resolve("direct_product(direct_product(cyclic(2),cyclic(3)),cyclic(5))")
    assert deep.order == 30


def test_build_programmatic():
    e = build("cyclic", 12)
    assert e.name == "cyclic(12)" and e.order == 12
    prod = build("direct_product", resolve("q8"), build("cyclic", 3))
    assert prod.name == "direct_product(quaternion8,cyclic(3))"
    assert build("quaternion8").name == "quaternion8"


def test_order_cap():
    assert MAX_ORDER == 512
    with pytest.raises(ValueError):
        resolve("cyclic(513)")
    with pytest.raises(ValueError, match="exceeds"):
        resolve("abelian(8,8,8,2)")
    with pytest.raises(ValueError, match="exceeds"):
        resolve("direct_product(ut3_mod(2,3),cyclic(2))")


def test_templates_listed():
    assert len(TEMPLATES) == 9
    assert "cyclic(n)" in TEMPLATES
    assert any(t.startswith("heisenberg_ring") for t in TEMPLATES)
