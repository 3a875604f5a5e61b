import json
import subprocess
import sys

import pytest

from jnpa import __version__
from jnpa.cli import main, parse_field, parse_sets, parse_vector
from jnpa.errors import InputError
from jnpa.field import GF, QQ


def jnpa(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def emitted(tmp_path, capsys):
    def make(name, *sets, field=None, partner=False):
        path = tmp_path / f"{name}-{len(sets)}-{partner}.json"
        argv = ["catalog", "emit", name, "-o", str(path)]
        for s in sets:
            argv += ["--set", s]
        if field:
            argv += ["--field", field]
        if partner:
            argv.append("--partner")
        code, _, err = jnpa(capsys, *argv)
        assert code == 0, err
        return str(path)
    return make


def test_parse_helpers():
    assert parse_field("p=7") == GF(7)
    assert parse_field("QQ") is QQ
    assert parse_field(None) is None
    with pytest.raises(InputError):
        parse_field("p=x")
    assert parse_sets(["k1=1", "k2 = -2"]) == {"k1": "1", "k2": "-2"}
    with pytest.raises(InputError):
        parse_sets(["k1"])
    assert parse_vector(QQ, "0,1/2", 2) == (0, QQ("1/2"))
    with pytest.raises(InputError):
        parse_vector(QQ, "0", 2)


def test_version(capsys):
    code, out, _ = jnpa(capsys, "--version")
    assert code == 0 and out.strip() == f"jnpa {__version__} (format 1)"


def test_emit_then_check_passes(emitted, capsys):
    path = emitted("2d-J1", "k1=1", "k2=-2")
    code, out, _ = jnpa(capsys, "check", path)
    assert code == 0 and "PASS" in out


def test_check_failure_exit_one(tmp_path, capsys):
    bad = {"field": {"kind": "rational"}, "dim": 2, "unit": ["1", "0"],
           "dot": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
           "circ": [[0, 0, 1, "1"], [1, 0, 0, "1"]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = jnpa(capsys, "check", str(path), "--law", "novikov")
    assert code == 1 and "FAIL" in out


def test_json_output_is_parseable(emitted, capsys):
    path = emitted("2d-J1", "k1=1", "k2=-2")
    code, out, _ = jnpa(capsys, "check", path, "--json")
    d = json.loads(out)
    assert code == 0 and d["pass"] is True


def test_repeated_output_is_byte_identical(emitted, capsys):
    path = emitted("3d-J5", "k1=1", "k2=2", "k3=3")
    first = jnpa(capsys, "forms", path, "--json")
    second = jnpa(capsys, "forms", path, "--json")
    assert first == second


def test_output_file(emitted, tmp_path, capsys):
    path = emitted("2d-J1", "k1=1", "k2=-2")
    target = tmp_path / "out.json"
    code, out, _ = jnpa(capsys, "integrals", path, "--json", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["dimension"] == 1


def test_frobenius_yes_and_no(emitted, capsys):
    code, out, _ = jnpa(capsys, "frobenius", emitted("2d-J1", "k1=1", "k2=-2"), "--json")
    d = json.loads(out)
    assert code == 0 and d["frobenius"] and d["pair"]["omega"] == ["0", "2"]
    code, out, _ = jnpa(capsys, "frobenius", emitted("2d-J1", "k1=1", "k2=0"))
    assert code == 1 and "no nondegenerate integral" in out


def test_frobenius_with_degenerate_v(emitted, capsys):
    code, out, _ = jnpa(capsys, "frobenius", emitted("2d-J1", "k1=1", "k2=-2"), "--v", "1,0")
    assert code != 0


def test_missing_file_exit_two(tmp_path, capsys):
    code, out, err = jnpa(capsys, "check", str(tmp_path / "nope.json"))
    assert code == 2 and out == "" and "cannot read" in err


def test_invalid_json_exit_two(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{")
    assert jnpa(capsys, "check", str(p))[0] == 2


def test_missing_parameter_exit_two(capsys):
    code, _, err = jnpa(capsys, "catalog", "emit", "2d-J1", "--set", "k1=1")
    assert code == 2 and "missing" in err


def test_unknown_subcommand_exit_two(capsys):
    assert jnpa(capsys, "frobnicate")[0] == 2


def test_catalog_list(capsys):
    code, out, _ = jnpa(capsys, "catalog", "list", "--json")
    names = [r["name"] for r in json.loads(out)]
    assert code == 0 and "3d-J23" in names and "char3-simple" in names


def test_catalog_verify_with_plan(tmp_path, capsys):
    plan = tmp_path / "plan.json"
    plan.write_text(json.dumps({"2d-J2": {"assignments": [{"k1": "1", "k2": "1/3"}]}}))
    code, out, _ = jnpa(capsys, "catalog", "verify", "--plan", str(plan), "--only-plan")
    assert code == 0 and out.startswith("1 instances checked, 0 failures")


def test_emit_over_prime_field(emitted, capsys):
    path = emitted("char3-simple", "k1=1", "k2=0", "k3=0", "a=1", "b=2", field="p=3")
    code, out, _ = jnpa(capsys, "simple", path)
    assert code == 0


def test_construct_commutator(emitted, capsys):
    code, out, _ = jnpa(capsys, "construct", "commutator", emitted("2d-J1", "k1=1", "k2=-2"), "--json")
    d = json.loads(out)
    assert code == 0 and "bracket" in d


def test_construct_from_derivation(emitted, capsys, tmp_path):
    target = tmp_path / "fd.json"
    code, _, err = jnpa(capsys, "construct", "from-derivation", emitted("poly-euler", "N=3"), "-o", str(target))
    assert code == 0, err
    assert jnpa(capsys, "check", str(target), "--law", "dnp")[0] == 0


def test_construct_missing_map(emitted, capsys):
    assert jnpa(capsys, "construct", "twisted", emitted("2d-J1", "k1=1", "k2=0"))[0] == 2


def test_tensor_jacobi_from_partner(emitted, capsys):
    a = emitted("final-frobenius-pair")
    b = emitted("final-frobenius-pair", partner=True)
    code, out, _ = jnpa(capsys, "check", b, "--law", "right-quadratic")
    assert code == 0
    code, out, _ = jnpa(capsys, "construct", "tensor-jacobi", a, b, "--json")
    assert code == 0 and json.loads(out)["dim"] == 4


def test_affinize(emitted, capsys):
    path = emitted("2d-J3", "k1=1", "k2=0")
    code, out, _ = jnpa(capsys, "affinize", path, "--grid", "-1..1", "--json")
    assert code == 0 and json.loads(out)["grid"] == [-1, 1]
    assert jnpa(capsys, "affinize", path, "--grid", "0..1")[0] == 2
    assert jnpa(capsys, "affinize", path, "--field", "p=5")[0] == 2
    assert jnpa(capsys, "affinize", path, "--field", "p=5", "--allow-prime-field")[0] == 0


def test_module_adjoint_dual_check(emitted, capsys, tmp_path):
    alg = emitted("2d-J1", "k1=1", "k2=-2")
    adj, dual = tmp_path / "adj.json", tmp_path / "dual.json"
    assert jnpa(capsys, "module", "adjoint", alg, "-o", str(adj))[0] == 0
    assert "module" in json.loads(adj.read_text())
    assert jnpa(capsys, "module", "dual", alg, str(adj), "-o", str(dual))[0] == 0
    assert jnpa(capsys, "module", "check", alg, str(dual))[0] == 0
    assert jnpa(capsys, "module", "check", alg)[0] == 2


def test_search(tmp_path, capsys):
    base = {"field": {"kind": "rational"}, "dim": 2, "unit": ["1", "0"],
            "dot": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}
    path = tmp_path / "a1.json"
    path.write_text(json.dumps(base))
    code, out, err = jnpa(capsys, "search", "--base", str(path), "--field", "p=3", "--json")
    assert code == 0, err
    assert json.loads(out)["count"] == 27
    assert jnpa(capsys, "search", "--base", str(path))[0] == 2
    assert jnpa(capsys, "search", "--base", str(path), "--field", "p=3", "--budget", "5")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "jnpa", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("jnpa ")
