"""JSON formats for groups, profiles and reports, plus text rendering.

Group files:
  {"type": "abelian", "atoms": [{"kind": "Z", "mult": 1},
                                {"kind": "cyclic", "p": 2, "k": 3, "mult": 2},
                                {"kind": "pruefer", "p": 3},
                                {"kind": "localized", "p": 5},
                                {"kind": "localized_away", "l": {"kind": "finite", "primes": [2, 3]}},
                                {"kind": "adic", "l": {"kind": "cofinite", "excluded": [7]}}]}
  {"type": "tower", "layers": [<abelian>...], "ab": <abelian>, "witnessed": true}
  {"type": "finite", "name": "Q8"}   or   {"type": "finite", "table": [[...]]}

Profile files:
  {"q": 1, "zp": {"default": 1, "overrides": {"2": 2}},
   "zpinf": {...}, "loc": {...}}        with "inf" for an infinite value.

``mult`` defaults to 1 and a tower's ``witnessed`` may be a single bool
or a per-stage list.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from .abelian import (
    AbelianGroup,
    Adic,
    Atom,
    BocksteinBasis,
    Cyclic,
    Localized,
    LocalizedAt,
    Pruefer,
    Q,
    Z,
)
from .dimension import INF, DimensionProfile, ExtNat, PrimeFamily, fmt_extnat
from .nilpotent import AbelianDesc, FiniteDesc, GroupDesc, TowerDesc, tower
from .oracle import FiniteGroup
from .primes import PrimeSet


# ---------------------------------------------------------------------------
# Prime sets


def primeset_from_json(obj: Any) -> PrimeSet:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"prime set must be an object with a 'kind', got {obj!r}")
    if obj["kind"] == "finite":
        return PrimeSet.of(*obj.get("primes", ()))
    if obj["kind"] == "cofinite":
        return PrimeSet.without(*obj.get("excluded", ()))
    raise ValueError(f"unknown prime set kind: {obj['kind']!r}")


def primeset_to_json(ps: PrimeSet) -> dict:
    if ps.is_finite:
        return {"kind": "finite", "primes": sorted(ps.primes)}
    return {"kind": "cofinite", "excluded": sorted(ps.primes)}


# ---------------------------------------------------------------------------
# Abelian groups


def atom_from_json(obj: Any) -> tuple[Atom, int]:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"atom must be an object with a 'kind', got {obj!r}")
    kind = obj["kind"]
    mult = obj.get("mult", 1)
    if kind == "Z":
        return Z, mult
    if kind == "Q":
        return Q, mult
    if kind == "cyclic":
        return Cyclic(obj["p"], obj.get("k", 1)), mult
    if kind == "pruefer":
        return Pruefer(obj["p"]), mult
    if kind == "localized":
        return Localized(obj["p"]), mult
    if kind == "localized_away":
        return LocalizedAt(primeset_from_json(obj["l"])), mult
    if kind == "adic":
        return Adic(primeset_from_json(obj["l"])), mult
    raise ValueError(f"unknown atom kind: {kind!r}")


def atom_to_json(atom: Atom, mult: int) -> dict:
    if isinstance(atom, Cyclic):
        out: dict = {"kind": "cyclic", "p": atom.p, "k": atom.k}
    elif isinstance(atom, Pruefer):
        out = {"kind": "pruefer", "p": atom.p}
    elif isinstance(atom, Localized):
        out = {"kind": "localized", "p": atom.p}
    elif isinstance(atom, LocalizedAt):
        out = {"kind": "localized_away", "l": primeset_to_json(atom.support)}
    elif isinstance(atom, Adic):
        out = {"kind": "adic", "l": primeset_to_json(atom.support)}
    else:
        out = {"kind": repr(atom)}
    if mult != 1:
        out["mult"] = mult
    return out


def abelian_from_json(obj: Any) -> AbelianGroup:
    if isinstance(obj, dict) and obj.get("type") == "abelian":
        obj = obj["atoms"]
    if not isinstance(obj, list):
        raise ValueError(f"abelian group must be an atom list, got {obj!r}")
    return AbelianGroup(tuple(atom_from_json(a) for a in obj))


def abelian_to_json(group: AbelianGroup) -> dict:
    return {"type": "abelian",
            "atoms": [atom_to_json(a, m) for a, m in group.atoms]}


# ---------------------------------------------------------------------------
# Group descriptions


def group_from_json(obj: Any) -> GroupDesc:
    """Parse a group file body into a description.

    Finite groups may name a catalog entry or inline a full table; inline
    tables are always validated (untrusted input).
    """
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("group file must be an object with a 'type'")
    t = obj["type"]
    if t == "abelian":
        return AbelianDesc(abelian_from_json(obj))
    if t == "tower":
        layers = [abelian_from_json(layer) for layer in obj["layers"]]
        ab = abelian_from_json(obj["ab"]) if "ab" in obj else None
        witnessed = obj.get("witnessed", True)
        return tower(layers, ab=ab, witnessed=witnessed)
    if t == "finite":
        if "name" in obj:
            from .catalog import resolve

            entry = resolve(obj["name"])
            if not isinstance(entry.desc, FiniteDesc):
                raise ValueError(f"catalog entry {obj['name']!r} is not a finite table")
            return entry.desc
        if "table" in obj:
            g = FiniteGroup.from_table(
                np.asarray(obj["table"]), identity=obj.get("identity"),
                name=obj.get("comment") or "inline", validate=True)
            return FiniteDesc(g)
        raise ValueError("finite group needs a 'name' or a 'table'")
    raise ValueError(f"unknown group type: {t!r}")


def group_to_json(desc: GroupDesc) -> dict:
    if isinstance(desc, AbelianDesc):
        return abelian_to_json(desc.group)
    if isinstance(desc, TowerDesc):
        out: dict = {"type": "tower",
                     "layers": [abelian_to_json(layer) for layer in desc.layers]}
        if desc.ab is not None:
            out["ab"] = abelian_to_json(desc.ab)
        out["witnessed"] = (True if desc.fully_witnessed else list(desc.witnessed))
        return out
    g = desc.group
    return {"type": "finite", "table": g.table.tolist(), "identity": g.identity,
            **({"comment": g.name} if g.name else {})}


# ---------------------------------------------------------------------------
# Profiles


def _extnat_from_json(v: Any) -> ExtNat:
    if v == "inf":
        return INF
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"dimension must be an integer or \"inf\", got {v!r}")
    return v


def _extnat_to_json(v: ExtNat):
    return "inf" if v == INF else v


def _family_from_json(obj: Any) -> PrimeFamily:
    if not isinstance(obj, dict) or "default" not in obj:
        raise ValueError(f"family must be an object with a 'default', got {obj!r}")
    overrides = {}
    for key, val in obj.get("overrides", {}).items():
        overrides[int(key)] = _extnat_from_json(val)
    return PrimeFamily.of(_extnat_from_json(obj["default"]), overrides)


def _family_to_json(fam: PrimeFamily) -> dict:
    return {"default": _extnat_to_json(fam.default),
            "overrides": {str(p): _extnat_to_json(v) for p, v in fam.overrides}}


def profile_from_json(obj: Any) -> DimensionProfile:
    if not isinstance(obj, dict):
        raise ValueError("profile file must be an object")
    missing = {"q", "zp", "zpinf", "loc"} - set(obj)
    if missing:
        raise ValueError(f"profile is missing {sorted(missing)}")
    return DimensionProfile(
        q=_extnat_from_json(obj["q"]),
        zp=_family_from_json(obj["zp"]),
        zpinf=_family_from_json(obj["zpinf"]),
        loc=_family_from_json(obj["loc"]),
    )


def profile_to_json(profile: DimensionProfile) -> dict:
    return {"q": _extnat_to_json(profile.q),
            "zp": _family_to_json(profile.zp),
            "zpinf": _family_to_json(profile.zpinf),
            "loc": _family_to_json(profile.loc)}


# ---------------------------------------------------------------------------
# Text rendering


def basis_text(basis: BocksteinBasis) -> str:
    """The CLI line format: ``Q: no | Z_(p): {} | Z/p: {2} | Z/p^inf: {2}``."""
    return str(basis)


def extnat_text(v: ExtNat) -> str:
    return fmt_extnat(v)
