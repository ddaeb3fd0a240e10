"""Dimension profiles: family validation, the R0..R4 axioms, and the
sup-over-basis evaluation.

Cofinite suprema are cross-checked by brute force over all primes up to
100, which covers every override the generators can produce plus a
default representative.
"""

import pytest

from bockstein.abelian import (
    AbelianGroup,
    Adic,
    Cyclic,
    LocalizedAt,
    Pruefer,
    Z,
    basis_of_abelian,
)
from bockstein.catalog import default_entries, resolve, ut3_table
from bockstein.dimension import (
    INF,
    DimensionProfile,
    PrimeFamily,
    RULES,
    dim_at_most_one,
    dim_of_abelian,
    fmt_extnat,
    sup_over_basis,
    validate_profile,
)
from bockstein.generators import (
    random_abelian,
    random_primeset,
    random_valid_profile,
    rng_for,
)
from bockstein.nilpotent import FiniteDesc, basis_of
from bockstein.primes import PrimeSet, primes_up_to

ONE = PrimeFamily.of(1)


# ---------------------------------------------------------------------------
# PrimeFamily


def test_family_rejects_bad_values():
    for bad in (-1, 1.5, 2.0, True, "3", None):
        with pytest.raises(ValueError):
            PrimeFamily.of(bad)
    with pytest.raises(ValueError):
        PrimeFamily.of(1, {2: -3})


def test_family_accepts_inf_and_zero():
    assert PrimeFamily.of(0).default == 0
    assert PrimeFamily.of(INF).value_at(2) == INF


def test_family_rejects_duplicate_and_composite_overrides():
    with pytest.raises(ValueError, match="duplicate"):
        PrimeFamily(1, ((2, 1), (2, 2)))
    with pytest.raises(ValueError):
        PrimeFamily.of(1, {4: 1})


def test_family_overrides_sorted_and_value_at():
    fam = PrimeFamily(1, ((5, 2), (3, 4)))
    assert fam.overrides == ((3, 4), (5, 2))
    assert fam.value_at(3) == 4
    assert fam.value_at(5) == 2
    assert fam.value_at(11) == 1
    assert fam.values() == [1, 4, 2]


def test_family_sup_over():
    fam = PrimeFamily.of(1, {2: 5, 3: 4})
    assert fam.sup_over(PrimeSet.empty()) is None
    assert fam.sup_over(PrimeSet.of(2)) == 5
    assert fam.sup_over(PrimeSet.of(5, 7)) == 1
    # a cofinite set must not see excluded overrides
    assert fam.sup_over(PrimeSet.without(2)) == 4
    assert fam.sup_over(PrimeSet.without(2, 3)) == 1
    assert fam.sup_over(PrimeSet.all_primes()) == 5
    # the default always participates for cofinite sets
    assert PrimeFamily.of(7, {2: 1}).sup_over(PrimeSet.without(7)) == 7


def test_profile_rejects_bad_q():
    with pytest.raises(ValueError):
        DimensionProfile(q=-1, zp=ONE, zpinf=ONE, loc=ONE)
    with pytest.raises(ValueError):
        DimensionProfile(q=True, zp=ONE, zpinf=ONE, loc=ONE)


def test_fmt_extnat():
    assert fmt_extnat(INF) == "inf"
    assert fmt_extnat(3) == "3"


# ---------------------------------------------------------------------------
# Validation


def test_validate_constants_valid():
    assert validate_profile(DimensionProfile.constant(0)) == []
    assert validate_profile(DimensionProfile.constant(1)) == []
    assert validate_profile(DimensionProfile.constant(INF)) == []


def test_validate_r4_single_violation():
    fam2 = PrimeFamily.of(1, {2: 2})
    profile = DimensionProfile(q=1, zp=fam2, zpinf=fam2, loc=fam2)
    got = validate_profile(profile)
    assert [str(v) for v in got] == ["R4 at p=2: expected loc=3"]
    assert got[0].rule == "R4" and got[0].prime == 2
    fixed = DimensionProfile(q=1, zp=fam2, zpinf=fam2, loc=PrimeFamily.of(1, {2: 3}))
    assert validate_profile(fixed) == []


def test_validate_r0_zero_mixed():
    profile = DimensionProfile(q=0, zp=ONE, zpinf=ONE, loc=ONE)
    got = validate_profile(profile)
    assert [v.rule for v in got] == ["R0", "R4"]
    assert "all-or-nothing" in got[0].message


def test_validate_r1_gap():
    profile = DimensionProfile(q=3, zp=PrimeFamily.of(3), zpinf=ONE,
                               loc=PrimeFamily.of(3))
    got = validate_profile(profile)
    assert [v.rule for v in got] == ["R1"]
    assert got[0].prime is None
    assert "defaults" in got[0].message


def test_validate_ordering_rule_then_prime():
    profile = DimensionProfile(
        q=1,
        zp=PrimeFamily.of(3, {5: 1}),
        zpinf=PrimeFamily.of(1, {3: 2}),
        loc=ONE,
    )
    got = validate_profile(profile)
    assert [(v.rule, v.prime) for v in got] == [
        ("R1", None), ("R2", None), ("R2", 3), ("R4", 3)]


def test_rules_table_names():
    assert list(RULES) == ["R0", "R1", "R2", "R3", "R4"]


def test_random_valid_profiles_pass():
    for i in range(80):
        profile = random_valid_profile(rng_for("profiles", 0, i), allow_inf=True)
        assert validate_profile(profile) == []


# ---------------------------------------------------------------------------
# Evaluation


def test_dim_of_pruefer_reads_zpinf_family():
    fam3 = PrimeFamily.of(1, {3: 2})
    profile = DimensionProfile(q=1, zp=fam3, zpinf=fam3, loc=PrimeFamily.of(1, {3: 3}))
    assert validate_profile(profile) == []
    assert dim_of_abelian(profile, AbelianGroup.of(Pruefer(3))) == 2
    assert dim_of_abelian(profile, AbelianGroup.of(Pruefer(5))) == 1


def test_dim_of_z_hits_loc_override():
    profile = DimensionProfile(
        q=1,
        zp=PrimeFamily.of(1, {2: 2}),
        zpinf=PrimeFamily.of(1, {2: 2}),
        loc=PrimeFamily.of(1, {2: 3}),
    )
    assert validate_profile(profile) == []
    assert dim_of_abelian(profile, AbelianGroup.of(Z)) == 3


def test_dim_of_trivial_is_zero():
    profile = DimensionProfile.constant(5)
    assert dim_of_abelian(profile, AbelianGroup.trivial()) == 0


def test_dim_of_finite_cyclic_maxes_torsion_families():
    profile = DimensionProfile(
        q=1,
        zp=PrimeFamily.of(1, {2: 2, 3: 1}),
        zpinf=PrimeFamily.of(1, {3: 1}),
        loc=PrimeFamily.of(1, {2: 2}),
    )
    assert validate_profile(profile) == []
    g = AbelianGroup.of(Cyclic(2, 2), Cyclic(3))
    want = max(max(profile.zp.value_at(p), profile.zpinf.value_at(p)) for p in (2, 3))
    assert dim_of_abelian(profile, g) == want == 2


def test_dim_inf_profile():
    assert dim_of_abelian(DimensionProfile.constant(INF), AbelianGroup.of(Z)) == INF


def test_sup_union_additivity():
    for i in range(50):
        rng = rng_for("supunion", 0, i)
        profile = random_valid_profile(rng)
        a = basis_of_abelian(random_abelian(rng))
        b = basis_of_abelian(random_abelian(rng))
        assert sup_over_basis(profile, a | b) == max(
            sup_over_basis(profile, a), sup_over_basis(profile, b))


def test_cofinite_sup_matches_bruteforce():
    basis = basis_of_abelian(AbelianGroup.of(Z))
    window = primes_up_to(100)
    for i in range(50):
        profile = random_valid_profile(rng_for("brute", 0, i), allow_inf=True)
        brute = profile.q
        for fam in (profile.loc, profile.zp, profile.zpinf):
            brute = max(brute, max(fam.value_at(p) for p in window))
        assert sup_over_basis(profile, basis) == brute


def test_dim_transport_localized_vs_adic():
    for i in range(30):
        rng = rng_for("transport", 0, i)
        support = random_primeset(rng, nonempty=True, finite=True)
        profile = random_valid_profile(rng)
        loc = AbelianGroup.of(LocalizedAt(support))
        adic = AbelianGroup.of(Adic(support))
        assert basis_of_abelian(loc) == basis_of_abelian(adic)
        assert dim_of_abelian(profile, loc) == dim_of_abelian(profile, adic)


# ---------------------------------------------------------------------------
# The <= 1 question for nilpotent coefficients


def test_le1_constant_one_on_heisenberg():
    assert dim_at_most_one(DimensionProfile.constant(1),
                           resolve("heisenberg_ring(Z)").desc)


def test_le1_false_on_finite_2group_with_tall_2_column():
    fam2 = PrimeFamily.of(1, {2: 2})
    profile = DimensionProfile(q=1, zp=fam2, zpinf=ONE, loc=fam2)
    assert validate_profile(profile) == []
    assert not dim_at_most_one(profile, FiniteDesc(ut3_table(2, 1)))


def test_le1_trivial_group():
    profile = DimensionProfile.constant(2)
    assert dim_at_most_one(profile, AbelianGroup.trivial())


def test_catalog_ab_dimension_never_exceeds_group():
    entries = [e for e in default_entries() if e.ab is not None]
    assert entries
    for i, entry in enumerate(entries):
        profile = random_valid_profile(rng_for("mono", 0, i), allow_inf=True)
        over_ab = sup_over_basis(profile, basis_of_abelian(entry.ab))
        over_g = sup_over_basis(profile, basis_of(entry.desc))
        assert over_ab <= over_g, entry.name
