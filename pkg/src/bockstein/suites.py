"""The named verification suites behind ``bock verify``.

Each suite runs a fixed number of instances: hand-picked catalog cases
fill the leading slots (where the statement has one), then seeded random
instances fill the rest, so ``--trials N`` always means exactly N
instances.  One instance bundles every check made on one object; its
first failing check is recorded.  For a given seed the whole report is
deterministic; only the elapsed time varies between runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .abelian import (
    AbelianGroup,
    Adic,
    LocalizedAt,
    Z,
    basis_of_abelian,
    decompose,
    divisibility,
)
from .catalog import CatalogEntry, default_entries, resolve
from .dimension import (
    DimensionProfile,
    PrimeFamily,
    dim_at_most_one,
    dim_of_abelian,
    sup_over_basis,
    validate_profile,
)
from .generators import (
    SMALL_PRIMES,
    random_abelian,
    random_nonabelian_nilpotent,
    random_primeset,
    random_tower,
    random_valid_profile,
    rng_for,
)
from .homology import corollary_report
from .nilpotent import (
    TowerDesc,
    basis_of,
    basis_from_divisibility,
    describe,
    group_predicates,
    ntd_equal,
    ntd_issubset,
    split_top,
    split_torsion_divisible,
    tower,
)
from .oracle import (
    FiniteGroup,
    abelianization,
    basis_of_table,
    central_subgroup_samples,
    lower_central_layers,
    lower_central_series,
    normal_closure,
    power_map,
    quotient,
    subgroup_as_group,
)
from .primes import primes_up_to


@dataclass(frozen=True)
class SuiteFailure:
    instance: str
    expected: str
    actual: str


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    instances: int
    failures: tuple[SuiteFailure, ...]
    seed: int
    elapsed: float

    @property
    def passed(self) -> int:
        return self.instances - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


class _Instance:
    """One checked object; remembers the first failing comparison."""

    __slots__ = ("descriptor", "failure")

    def __init__(self, descriptor: str):
        self.descriptor = descriptor
        self.failure: tuple[str, str] | None = None

    def check(self, expected, actual) -> None:
        if self.failure is None and expected != actual:
            self.failure = (repr(expected), repr(actual))

    def check_true(self, condition: bool, expected: str, actual: str) -> None:
        if self.failure is None and not condition:
            self.failure = (expected, actual)


def _finite_entries() -> list[CatalogEntry]:
    return [e for e in default_entries() if e.is_finite]


# ---------------------------------------------------------------------------
# def-consistency: the clause-table basis of an abelian group equals the
# basis recomputed from whole-group divisibility predicates.


def _def_consistency(trials: int, seed: int) -> Iterator[_Instance]:
    for i in range(trials):
        g = random_abelian(rng_for("def-consistency", seed, i))
        inst = _Instance(f"{i:04d} abelian {g!r}")
        inst.check(basis_of_abelian(g), basis_from_divisibility(g))
        yield inst


# ---------------------------------------------------------------------------
# sigma-union: the basis of a central extension is the union of the bases
# of the deepest kernel and the quotient.  Catalog towers and class >= 2
# catalog tables first, then seeded random towers.


def _check_tower_split(inst: _Instance, desc: TowerDesc) -> None:
    kernel, rest = split_top(desc)
    inst.check(basis_of(desc), basis_of_abelian(kernel) | basis_of(rest))


def _check_table_split(inst: _Instance, entry: CatalogEntry) -> None:
    g = entry.group
    series = lower_central_series(g)
    deepest = series.terms[-2]
    k_group, _ = subgroup_as_group(g, deepest)
    i_group = quotient(g, deepest).group
    inst.check(basis_of_table(g),
               basis_of_table(k_group) | basis_of_table(i_group))
    inst.check(basis_of_table(g),
               basis_of(tower(lower_central_layers(g), ab=entry.ab)))


def _sigma_union(trials: int, seed: int) -> Iterator[_Instance]:
    cases: list[tuple[str, Callable[[_Instance], None]]] = []
    for entry in default_entries():
        if isinstance(entry.desc, TowerDesc):
            cases.append((f"catalog {entry.name}: split at the deepest layer",
                          lambda inst, d=entry.desc: _check_tower_split(inst, d)))
        elif entry.is_finite and entry.nilpotency_class >= 2:
            cases.append((f"catalog {entry.name}: split at the deepest central term",
                          lambda inst, e=entry: _check_table_split(inst, e)))
    for i in range(trials):
        if i < len(cases):
            label, run = cases[i]
            inst = _Instance(f"{i:04d} {label}")
            run(inst)
        else:
            t = random_tower(rng_for("sigma-union", seed, i))
            inst = _Instance(f"{i:04d} {describe(t)}")
            _check_tower_split(inst, t)
        yield inst


# ---------------------------------------------------------------------------
# sigma-subset-central: for a central subgroup K of a catalog finite
# nilpotent G, basis(G) is contained in basis(K) | basis(G/K).


def _sigma_subset_central(trials: int, seed: int) -> Iterator[_Instance]:
    pool = _finite_entries()
    for i in range(trials):
        rng = rng_for("sigma-subset-central", seed, i)
        entry = rng.choice(pool)
        g = entry.group
        whole = basis_of_table(g)
        inst = _Instance(f"{i:04d} central subgroups of {entry.name}")
        for k_set in central_subgroup_samples(g, seed * 100003 + i, count=1):
            k_group, _ = subgroup_as_group(g, k_set)
            i_group = quotient(g, k_set).group
            merged = basis_of_table(k_group) | basis_of_table(i_group)
            inst.check_true(
                whole.issubset(merged),
                f"basis(G) within the union, K of order {k_set.order}",
                f"basis(G)={whole} not within {merged}")
        yield inst


# ---------------------------------------------------------------------------
# ntd-epi: quotients (epimorphic images) of catalog finite nilpotent
# groups keep their non-torsion-divisible basis inside the source's.


def _ntd_epi(trials: int, seed: int) -> Iterator[_Instance]:
    pool = _finite_entries()
    for i in range(trials):
        rng = rng_for("ntd-epi", seed, i)
        entry = rng.choice(pool)
        g = entry.group
        gens = sorted(rng.sample(range(g.order), rng.randint(1, min(2, g.order))))
        image = quotient(g, normal_closure(g, gens)).group
        a = split_torsion_divisible(basis_of_table(image)).ntd
        b = split_torsion_divisible(basis_of_table(g)).ntd
        inst = _Instance(f"{i:04d} {entry.name} mod the normal closure of {gens}")
        inst.check_true(
            ntd_issubset(a, b),
            "ntd part of the image within the source's",
            f"ntd(image)={a} not within ntd(G)={b}")
        yield inst


# ---------------------------------------------------------------------------
# ab-sigma: the abelianization determines the non-torsion-divisible part
# of the basis exactly, and its full basis sits inside the group's.
# Catalog entries first (oracle abelianization for tables, declared
# metadata for towers), then seeded random towers.


def _check_ab_sigma(inst: _Instance, desc, ab: AbelianGroup) -> None:
    whole = basis_of(desc)
    ab_basis = basis_of_abelian(ab)
    inst.check_true(
        ntd_equal(split_torsion_divisible(whole).ntd,
                  split_torsion_divisible(ab_basis).ntd),
        "equal ntd parts for the group and its abelianization",
        f"ntd(G)={split_torsion_divisible(whole).ntd} vs "
        f"ntd(Ab)={split_torsion_divisible(ab_basis).ntd}")
    inst.check_true(
        ab_basis.issubset(whole),
        "basis(Ab) within basis(G)",
        f"basis(Ab)={ab_basis} not within basis(G)={whole}")


def _ab_sigma(trials: int, seed: int) -> Iterator[_Instance]:
    cases: list[tuple[str, Callable[[_Instance], None]]] = []
    for entry in default_entries():
        if entry.is_finite:
            ab = abelianization(entry.group)[1]
        else:
            ab = entry.desc.ab
        cases.append((f"catalog {entry.name}",
                      lambda inst, d=entry.desc, a=ab: _check_ab_sigma(inst, d, a)))
    for i in range(trials):
        if i < len(cases):
            label, run = cases[i]
            inst = _Instance(f"{i:04d} {label}")
            run(inst)
        else:
            t = random_tower(rng_for("ab-sigma", seed, i))
            inst = _Instance(f"{i:04d} {describe(t)}")
            _check_ab_sigma(inst, t, t.ab)
        yield inst


# ---------------------------------------------------------------------------
# pdiv-extension: the layer rule for (unique) p-divisibility of a
# witnessed tower agrees with the definition-level predicate, measured on
# power maps of realizing tables (even instances) and on divisibility of
# realizing direct sums (odd instances).  Unwitnessed towers may answer
# only upward.


def _pdiv_oracle(inst: _Instance, g: FiniteGroup) -> None:
    t = tower(lower_central_layers(g), ab=None, witnessed=True)
    for p in SMALL_PRIMES:
        got = group_predicates(t, p)
        pm = power_map(g, p)
        inst.check((p, True, pm.surjective, pm.injective),
                   (p, got.torsion, got.p_divisible, got.uniquely_p_divisible))


def _pdiv_symbolic(inst: _Instance, t: TowerDesc) -> None:
    total = t.ab
    blind = tower(t.layers, ab=t.ab, witnessed=False)
    for p in SMALL_PRIMES:
        got = group_predicates(t, p)
        d = divisibility(total, p)
        inst.check((p, decompose(total).is_torsion, d.p_divisible, d.uniquely_p_divisible),
                   (p, got.torsion, got.p_divisible, got.uniquely_p_divisible))
        bg = group_predicates(blind, p)
        inst.check_true(
            bg.torsion == got.torsion
            and bg.p_divisible in (None, d.p_divisible)
            and bg.uniquely_p_divisible in (None, d.uniquely_p_divisible),
            f"unwitnessed verdicts at p={p} only upward",
            f"unwitnessed {bg} contradicts {d}")


def _pdiv_extension(trials: int, seed: int) -> Iterator[_Instance]:
    for i in range(trials):
        rng = rng_for("pdiv-extension", seed, i)
        if i % 2 == 0:
            g = random_nonabelian_nilpotent(rng)
            inst = _Instance(f"{i:04d} lower-central tower of {g.name}")
            _pdiv_oracle(inst, g)
        else:
            t = random_tower(rng)
            inst = _Instance(f"{i:04d} {describe(t)}")
            _pdiv_symbolic(inst, t)
        yield inst


# ---------------------------------------------------------------------------
# homology-corollaries: basis membership of Q, Z/p and Z/p^inf against
# first (and, for finite tables, second) homology over the whole catalog
# at p in {2, 3, 5, 7}.  Exhaustive; trials only caps the sweep.


def _homology_corollaries(trials: int | None, seed: int) -> Iterator[_Instance]:
    pairs = [(entry, p) for entry in default_entries() for p in SMALL_PRIMES]
    if trials is not None:
        pairs = pairs[:trials]
    for i, (entry, p) in enumerate(pairs):
        report = corollary_report(entry.desc, p)
        inst = _Instance(f"{i:04d} catalog {entry.name}, p={p}")
        for family in ("q", "zp", "zpinf"):
            verdict = report.verdicts[family]
            if verdict is None:
                continue  # reduction not applicable to this input shape
            inst.check_true(
                verdict,
                f"{family} membership matches the homology side",
                f"sides disagree: {report}")
        yield inst


# ---------------------------------------------------------------------------
# zl-zhat: the localization and the adic completion at the same prime set
# have equal bases (first half finite sets, second half cofinite), and
# equal dimension under seeded valid profiles on the first ten instances.


def _zl_zhat(trials: int, seed: int) -> Iterator[_Instance]:
    finite_budget = (trials + 1) // 2
    for i in range(trials):
        rng = rng_for("zl-zhat", seed, i)
        l = random_primeset(rng, finite=i < finite_budget, nonempty=True)
        loc = AbelianGroup.of(LocalizedAt(l))
        adic = AbelianGroup.of(Adic(l))
        inst = _Instance(f"{i:04d} l = {l}")
        inst.check(basis_of_abelian(loc), basis_of_abelian(adic))
        if i < 10:
            profile = random_valid_profile(rng_for("zl-zhat-dim", seed, i))
            inst.check(dim_of_abelian(profile, loc), dim_of_abelian(profile, adic))
        yield inst


# ---------------------------------------------------------------------------
# profile-rules: validator fixtures (the forced-equality example, three
# hand-checked <= 1 verdicts), then seeded profiles: constructed profiles
# validate, the cofinite sup matches a brute force over primes <= 100,
# the forcing rule is closed, dimension is additive over direct sums, and
# the dimension over basis(Ab) never exceeds the one over basis(G) on
# catalog entries.


def _fixture_forced_equality(inst: _Instance) -> None:
    broken = DimensionProfile(
        q=1,
        zp=PrimeFamily.of(1, {2: 2}),
        zpinf=PrimeFamily.of(1, {2: 2}),
        loc=PrimeFamily.of(1, {2: 2}),
    )
    inst.check(["R4 at p=2: expected loc=3"],
               [str(v) for v in validate_profile(broken)])
    fixed = DimensionProfile(
        q=1,
        zp=PrimeFamily.of(1, {2: 2}),
        zpinf=PrimeFamily.of(1, {2: 2}),
        loc=PrimeFamily.of(1, {2: 3}),
    )
    inst.check([], validate_profile(fixed))


def _le1_fixture_profile() -> DimensionProfile:
    return DimensionProfile(
        q=1,
        zp=PrimeFamily.of(1, {2: 2}),
        zpinf=PrimeFamily.of(1),
        loc=PrimeFamily.of(1, {2: 2}),
    )


def _profile_rules(trials: int, seed: int) -> Iterator[_Instance]:
    entries = default_entries()
    small = primes_up_to(100)
    z_basis = basis_of_abelian(AbelianGroup.of(Z))
    for i in range(trials):
        if i == 0:
            inst = _Instance("0000 fixture: forced equality flagged then accepted")
            _fixture_forced_equality(inst)
        elif i == 1:
            inst = _Instance("0001 fixture: heisenberg_ring(Z) under an all-ones profile")
            inst.check(True, dim_at_most_one(DimensionProfile.constant(1),
                                             resolve("heisenberg_ring(Z)").desc))
        elif i == 2:
            inst = _Instance("0002 fixture: ut3_mod(2,1) once D(Z/2)=2")
            inst.check(False, dim_at_most_one(_le1_fixture_profile(),
                                              resolve("ut3_mod(2,1)").desc))
        elif i == 3:
            inst = _Instance("0003 fixture: the trivial group under any valid profile")
            inst.check(True, dim_at_most_one(_le1_fixture_profile(),
                                             resolve("trivial").desc))
        else:
            rng = rng_for("profile-rules", seed, i)
            profile = random_valid_profile(rng)
            inst = _Instance(f"{i:04d} seeded profile")
            inst.check([], validate_profile(profile))
            brute = max(
                [profile.q]
                + [profile.zp.value_at(p) for p in small]
                + [profile.zpinf.value_at(p) for p in small]
                + [profile.loc.value_at(p) for p in small])
            inst.check(brute, sup_over_basis(profile, z_basis))
            for p in SMALL_PRIMES:
                if profile.zpinf.value_at(p) > profile.q:
                    inst.check((p, profile.zpinf.value_at(p) + 1),
                               (p, profile.loc.value_at(p)))
            a = random_abelian(rng)
            b = random_abelian(rng)
            inst.check(max(dim_of_abelian(profile, a), dim_of_abelian(profile, b)),
                       dim_of_abelian(profile, a + b))
            j = i - 4
            if j < len(entries):
                entry = entries[j]
                over_ab = sup_over_basis(profile, basis_of_abelian(entry.ab))
                over_g = sup_over_basis(profile, basis_of(entry.desc))
                inst.check_true(
                    over_ab <= over_g,
                    f"dim over basis(Ab) <= dim over basis(G) for {entry.name}",
                    f"{over_ab} > {over_g}")
        yield inst


# ---------------------------------------------------------------------------
# Registry and drivers


_SUITES: dict[str, tuple[Callable[..., Iterator[_Instance]], int | None]] = {
    "def-consistency": (_def_consistency, 200),
    "sigma-union": (_sigma_union, 50),
    "sigma-subset-central": (_sigma_subset_central, 100),
    "ntd-epi": (_ntd_epi, 100),
    "ab-sigma": (_ab_sigma, 50),
    "pdiv-extension": (_pdiv_extension, 100),
    "homology-corollaries": (_homology_corollaries, None),
    "zl-zhat": (_zl_zhat, 50),
    "profile-rules": (_profile_rules, 50),
}

SUITE_ORDER = tuple(_SUITES)


def default_trials(name: str) -> int | None:
    """Instances a suite runs by default; None marks an exhaustive sweep."""
    return _SUITES[name][1]


def run_suite(name: str, trials: int | None = None, seed: int = 0) -> SuiteResult:
    """Run one suite; ``trials`` overrides its default instance count."""
    if name not in _SUITES:
        raise KeyError(name)
    fn, default = _SUITES[name]
    if trials is None:
        trials = default
    started = time.perf_counter()
    count = 0
    failures = []
    for inst in fn(trials, seed):
        count += 1
        if inst.failure is not None:
            failures.append(SuiteFailure(inst.descriptor, *inst.failure))
    failures.sort(key=lambda f: f.instance)
    return SuiteResult(name, count, tuple(failures), seed,
                       time.perf_counter() - started)


def run_all(trials: int | None = None, seed: int = 0) -> list[SuiteResult]:
    """Every suite in order; ``trials`` (when given) applies to each."""
    return [run_suite(name, trials, seed) for name in SUITE_ORDER]
