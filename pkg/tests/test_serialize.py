"""JSON round-trips for prime sets, groups, towers, tables and profiles."""

import numpy as np
import pytest

from bockstein.abelian import (
    AbelianGroup,
    Adic,
    BocksteinBasis,
    Cyclic,
    Localized,
    LocalizedAt,
    Pruefer,
    Q,
    Z,
    basis_of_abelian,
)
from bockstein.catalog import quaternion8_table
from bockstein.dimension import INF, DimensionProfile, PrimeFamily
from bockstein.errors import InvalidTableError
from bockstein.generators import random_abelian, random_valid_profile, rng_for
from bockstein.nilpotent import AbelianDesc, FiniteDesc, TowerDesc, tower
from bockstein.primes import PrimeSet
from bockstein.serialize import (
    abelian_from_json,
    abelian_to_json,
    atom_from_json,
    atom_to_json,
    basis_text,
    extnat_text,
    group_from_json,
    group_to_json,
    primeset_from_json,
    primeset_to_json,
    profile_from_json,
    profile_to_json,
)


def test_primeset_roundtrip():
    for ps in (PrimeSet.empty(), PrimeSet.of(2, 3), PrimeSet.all_primes(),
               PrimeSet.without(5, 7)):
        assert primeset_from_json(primeset_to_json(ps)) == ps
    assert primeset_to_json(PrimeSet.of(3, 2)) == {"kind": "finite", "primes": [2, 3]}
    with pytest.raises(ValueError, match="kind"):
        primeset_from_json([2, 3])
    with pytest.raises(ValueError, match="unknown prime set kind"):
        primeset_from_json({"kind": "open"})


def test_atom_roundtrip_all_kinds():
    atoms = [
        (Z, 1), (Q, 2), (Cyclic(2, 3), 2), (Pruefer(3), 1), (Localized(5), 4),
        (LocalizedAt(PrimeSet.of(2, 3)), 1),
        (Adic(PrimeSet.without(7)), 3),
    ]
    for atom, mult in atoms:
        assert atom_from_json(atom_to_json(atom, mult)) == (atom, mult)


def test_atom_json_defaults():
    assert atom_to_json(Z, 1) == {"kind": "Z"}
    assert atom_from_json({"kind": "cyclic", "p": 2}) == (Cyclic(2, 1), 1)
    with pytest.raises(ValueError, match="unknown atom kind"):
        atom_from_json({"kind": "free"})
    with pytest.raises(ValueError, match="'kind'"):
        atom_from_json("Z")


def test_abelian_roundtrip_seeded():
    for i in range(40):
        g = random_abelian(rng_for("serialize", 0, i))
        assert abelian_from_json(abelian_to_json(g)) == g


def test_abelian_accepts_bare_atom_list():
    g = abelian_from_json([{"kind": "Z", "mult": 2}, {"kind": "pruefer", "p": 3}])
    assert g == AbelianGroup([(Z, 2), (Pruefer(3), 1)])
    with pytest.raises(ValueError, match="atom list"):
        abelian_from_json({"type": "abelian", "atoms": "Z"})


def test_group_roundtrip_abelian():
    desc = AbelianDesc(AbelianGroup.of(Z, Cyclic(2, 2)))
    assert group_from_json(group_to_json(desc)) == desc


def test_group_roundtrip_tower():
    t = tower(
        [AbelianGroup.of(Cyclic(2)), AbelianGroup.of(Z)],
        ab=AbelianGroup.of(Z),
    )
    again = group_from_json(group_to_json(t))
    assert again == t
    assert group_to_json(t)["witnessed"] is True


def test_group_roundtrip_tower_partial_witness():
    t = TowerDesc((AbelianGroup.of(Cyclic(2)),) * 3, None, (False, True, True))
    blob = group_to_json(t)
    assert blob["witnessed"] == [False, True, True]
    assert "ab" not in blob
    assert group_from_json(blob) == t


def test_group_from_json_finite_by_name():
    desc = group_from_json({"type": "finite", "name": "Q8"})
    assert isinstance(desc, FiniteDesc)
    assert desc.group.order == 8
    with pytest.raises(ValueError, match="not a finite table"):
        group_from_json({"type": "finite", "name": "heisenberg_ring(Z)"})


def test_group_from_json_inline_table_validated():
    table = quaternion8_table().table.tolist()
    desc = group_from_json({"type": "finite", "table": table, "comment": "q8 copy"})
    assert desc.group.order == 8 and desc.group.name == "q8 copy"
    bad = [[0, 1], [1, 1]]
    with pytest.raises(InvalidTableError):
        group_from_json({"type": "finite", "table": bad})
    with pytest.raises(ValueError, match="'name' or a 'table'"):
        group_from_json({"type": "finite"})


def test_group_roundtrip_finite_table():
    desc = FiniteDesc(quaternion8_table())
    blob = group_to_json(desc)
    assert blob["comment"] == "quaternion8"
    assert blob["identity"] == 0
    again = group_from_json(blob)
    assert np.array_equal(again.group.table, desc.group.table)


def test_group_from_json_rejects_untyped():
    with pytest.raises(ValueError, match="'type'"):
        group_from_json([[0]])
    with pytest.raises(ValueError, match="unknown group type"):
        group_from_json({"type": "loop"})


def test_profile_roundtrip_seeded():
    for i in range(30):
        profile = random_valid_profile(rng_for("profio", 0, i), allow_inf=True)
        assert profile_from_json(profile_to_json(profile)) == profile


def test_profile_json_inf_spelling():
    profile = DimensionProfile(
        q=INF, zp=PrimeFamily.of(1, {2: INF}), zpinf=PrimeFamily.of(1),
        loc=PrimeFamily.of(2))
    blob = profile_to_json(profile)
    assert blob["q"] == "inf"
    assert blob["zp"]["overrides"] == {"2": "inf"}
    assert profile_from_json(blob) == profile


def test_profile_json_missing_and_bad_values():
    with pytest.raises(ValueError, match=r"profile is missing \['loc', 'zpinf'\]"):
        profile_from_json({"q": 1, "zp": {"default": 1}})
    base = {"zp": {"default": 1}, "zpinf": {"default": 1}, "loc": {"default": 1}}
    with pytest.raises(ValueError, match="integer"):
        profile_from_json({"q": True, **base})
    with pytest.raises(ValueError, match="integer"):
        profile_from_json({"q": 1.5, **base})
    with pytest.raises(ValueError, match="'default'"):
        profile_from_json({"q": 1, "zp": {}, "zpinf": {"default": 1},
                           "loc": {"default": 1}})


def test_text_renderers():
    b = basis_of_abelian(AbelianGroup.of(Cyclic(2, 2)))
    assert basis_text(b) == "Q: no | Z_(p): {} | Z/p: {2} | Z/p^inf: {2}"
    assert extnat_text(INF) == "inf"
    assert extnat_text(0) == "0"
