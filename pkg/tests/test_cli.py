"""The bock command line: output lines, exit codes, determinism."""

import itertools
import json
import subprocess
import sys

import pytest

from bockstein.cli import console_main
from bockstein.suites import SUITE_ORDER, SuiteFailure, SuiteResult

Z4_LINE = "Q: no | Z_(p): {} | Z/p: {2} | Z/p^inf: {2}"

R4_PROFILE = {
    "q": 1,
    "zp": {"default": 1, "overrides": {"2": 2}},
    "zpinf": {"default": 1, "overrides": {"2": 2}},
    "loc": {"default": 1, "overrides": {"2": 2}},
}

TALL_AT_2_PROFILE = {
    "q": 1,
    "zp": {"default": 1, "overrides": {"2": 2}},
    "zpinf": {"default": 1, "overrides": {"2": 2}},
    "loc": {"default": 1, "overrides": {"2": 3}},
}

LE1_PROFILE = {
    "q": 1,
    "zp": {"default": 1, "overrides": {"2": 2}},
    "zpinf": {"default": 1},
    "loc": {"default": 1, "overrides": {"2": 2}},
}


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def s3_rows():
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]


# ---------------------------------------------------------------------------
# sigma


def test_sigma_catalog_and_alias(capsys):
    assert console_main(["sigma", "--catalog", "cyclic(4)"]) == 0
    assert capsys.readouterr().out == Z4_LINE + "\n"
    assert console_main(["sigma", "--catalog", "Q8"]) == 0
    assert capsys.readouterr().out == Z4_LINE + "\n"


def test_sigma_free_abelian_file(capsys, tmp_path):
    path = write_json(tmp_path, "z.json",
                      {"type": "abelian", "atoms": [{"kind": "Z"}]})
    assert console_main(["sigma", path]) == 0
    assert capsys.readouterr().out == (
        "Q: yes | Z_(p): all primes | Z/p: all primes | Z/p^inf: all primes\n")


def test_sigma_trivial_group(capsys, tmp_path):
    path = write_json(tmp_path, "t.json", {"type": "abelian", "atoms": []})
    assert console_main(["sigma", path]) == 0
    assert capsys.readouterr().out == "Q: no | Z_(p): {} | Z/p: {} | Z/p^inf: {}\n"


def test_sigma_unwitnessed_tower_rejected(capsys, tmp_path):
    path = write_json(tmp_path, "tw.json", {
        "type": "tower",
        "layers": [{"type": "abelian", "atoms": [{"kind": "Z"}]},
                   {"type": "abelian", "atoms": [{"kind": "Z"}]}],
        "witnessed": False,
    })
    assert console_main(["sigma", path]) == 2
    err = capsys.readouterr().err
    assert err.startswith("rejected:")
    assert "witnessed" in err


def test_sigma_non_nilpotent_table_rejected(capsys, tmp_path):
    path = write_json(tmp_path, "s3.json", {"type": "finite", "table": s3_rows()})
    assert console_main(["sigma", path]) == 2
    assert capsys.readouterr().err.startswith("rejected:")


def test_sigma_invalid_table_rejected(capsys, tmp_path):
    path = write_json(tmp_path, "bad.json",
                      {"type": "finite", "table": [[0, 1], [1, 1]]})
    assert console_main(["sigma", path]) == 2
    assert capsys.readouterr().err.startswith("rejected:")


def test_sigma_malformed_json_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    assert console_main(["sigma", str(path)]) == 1
    assert capsys.readouterr().err.startswith("cannot read group:")


def test_sigma_missing_file(capsys, tmp_path):
    assert console_main(["sigma", str(tmp_path / "absent.json")]) == 1
    assert capsys.readouterr().err.startswith("cannot read group:")


def test_sigma_needs_some_group(capsys):
    assert console_main(["sigma"]) == 1
    assert "cannot read group" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# dim


def test_dim_of_free_abelian(capsys, tmp_path):
    profile = write_json(tmp_path, "p.json", TALL_AT_2_PROFILE)
    group = write_json(tmp_path, "z.json",
                       {"type": "abelian", "atoms": [{"kind": "Z"}]})
    assert console_main(["dim", profile, group]) == 0
    assert capsys.readouterr().out == "3\n"


def test_dim_of_trivial(capsys, tmp_path):
    profile = write_json(tmp_path, "p.json", TALL_AT_2_PROFILE)
    group = write_json(tmp_path, "t.json", {"type": "abelian", "atoms": []})
    assert console_main(["dim", profile, group]) == 0
    assert capsys.readouterr().out == "0\n"


def test_dim_le1_verdicts(capsys, tmp_path):
    one = write_json(tmp_path, "one.json", {
        "q": 1, "zp": {"default": 1}, "zpinf": {"default": 1},
        "loc": {"default": 1}})
    assert console_main(
        ["dim", one, "--catalog", "heisenberg_ring(Z)", "--le1"]) == 0
    assert capsys.readouterr().out == "true\n"
    tall = write_json(tmp_path, "tall.json", LE1_PROFILE)
    assert console_main(
        ["dim", tall, "--catalog", "ut3_mod(2,1)", "--le1"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_dim_non_abelian_needs_le1(capsys, tmp_path):
    profile = write_json(tmp_path, "p.json", TALL_AT_2_PROFILE)
    assert console_main(["dim", profile, "--catalog", "quaternion8"]) == 1
    assert capsys.readouterr().err == (
        "dim needs an abelian group; pass --le1 for towers and tables\n")


def test_dim_invalid_profile_rejected(capsys, tmp_path):
    profile = write_json(tmp_path, "p.json", R4_PROFILE)
    group = write_json(tmp_path, "z.json",
                       {"type": "abelian", "atoms": [{"kind": "Z"}]})
    assert console_main(["dim", profile, group]) == 2
    assert capsys.readouterr().err == "R4 at p=2: expected loc=3\n"


# ---------------------------------------------------------------------------
# validate-profile


def test_validate_profile_valid(capsys, tmp_path):
    path = write_json(tmp_path, "p.json", TALL_AT_2_PROFILE)
    assert console_main(["validate-profile", path]) == 0
    assert capsys.readouterr().out == "valid\n"


def test_validate_profile_r4(capsys, tmp_path):
    path = write_json(tmp_path, "p.json", R4_PROFILE)
    assert console_main(["validate-profile", path]) == 2
    assert capsys.readouterr().out == "R4 at p=2: expected loc=3\n"


def test_validate_profile_malformed(capsys, tmp_path):
    path = write_json(tmp_path, "p.json", {"q": 1})
    assert console_main(["validate-profile", path]) == 1
    assert capsys.readouterr().err.startswith("cannot read profile:")


# ---------------------------------------------------------------------------
# verify


def test_verify_single_suite(capsys):
    assert console_main(["verify", "--suite", "sigma-union", "--trials", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "PASS 5/5"
    assert lines[-1].startswith("elapsed: ") and lines[-1].endswith("s")


def test_verify_unknown_suite(capsys):
    assert console_main(["verify", "--suite", "bogus"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("unknown suite: bogus")
    for name in SUITE_ORDER:
        assert name in err


def test_verify_json_report(capsys):
    assert console_main(
        ["verify", "--suite", "zl-zhat", "--trials", "4", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report) == 1
    assert report[0]["suite"] == "zl-zhat"
    assert report[0]["instances"] == 4
    assert report[0]["failures"] == []
    assert report[0]["seed"] == 0
    assert isinstance(report[0]["elapsed"], float)


def test_verify_all_suites_prefixed(capsys):
    assert console_main(["verify", "--trials", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:-1] == [f"{name}: PASS 2/2" for name in SUITE_ORDER]
    assert lines[-1].startswith("elapsed: ")


def test_verify_deterministic_modulo_elapsed(capsys):
    def run():
        assert console_main(
            ["verify", "--trials", "3", "--seed", "7", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        for entry in report:
            del entry["elapsed"]
        return report

    assert run() == run()


def test_verify_failure_rendering(capsys, monkeypatch):
    fake = SuiteResult(
        suite="sigma-union",
        instances=2,
        failures=(SuiteFailure("abelian(Z) #0003", "Q: yes", "Q: no"),),
        seed=0,
        elapsed=0.25,
    )
    monkeypatch.setattr("bockstein.cli.run_suite", lambda *a, **k: fake)
    assert console_main(["verify", "--suite", "sigma-union"]) == 2
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "FAIL 1/2"
    assert lines[1] == "  abelian(Z) #0003"
    assert lines[2] == "    expected: Q: yes"
    assert lines[3] == "    actual:   Q: no"
    assert lines[4].startswith("elapsed: ")


# ---------------------------------------------------------------------------
# catalog


def test_catalog_listing(capsys):
    assert console_main(["catalog"]) == 0
    out = capsys.readouterr().out
    assert "quaternion8: finite, order 8, class 2" in out
    assert "heisenberg_ring(Z): tower, order infinite, class 2" in out
    assert "templates:" in out
    assert "  cyclic(n)" in out


# ---------------------------------------------------------------------------
# usage errors


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as exc:
        console_main([])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        console_main(["verify", "--trials", "-1"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        console_main(["frobnicate"])
    assert exc.value.code == 1


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "bockstein", "sigma", "--catalog", "trivial"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "Q: no | Z_(p): {} | Z/p: {} | Z/p^inf: {}\n"
