import json
import subprocess
import sys

import pytest

from qrverify.cli import EXIT_BUDGET, EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, RunConfig, main
from qrverify.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ("family", "--p", "2", "--ell", "7"),
        ("gp", "--p", "3", "--ell", "13"),
        ("epsilon", "--p", "5", "--ell", "11"),
        ("d", "--p", "2", "--ell", "17"),
        ("little", "--ell", "11"),
        ("chebotarev", "--ell", "5"),
        ("mds", "--p", "11", "--ell", "5", "--exhaustive"),
        ("lemma", "--p", "3", "--m", "2", "--n", "8"),
        ("weights", "--p", "2", "--ell", "7"),
        ("orbits", "--p", "2", "--ell", "7"),
    ],
)
def test_subcommands_pass_and_formats_agree(capsys, argv):
    code, data = run_json(capsys, *argv)
    assert code == EXIT_OK
    code_t, text, _ = run(capsys, *argv)
    assert code_t == code
    for c in data.get("checks", []):
        assert c["pass"]
        row = next(line for line in text.splitlines() if line.strip().startswith(c["name"]))
        assert "PASS" in row


def test_family_json_fields(capsys):
    code, data = run_json(capsys, "family", "--p", "3", "--ell", "11")
    assert code == 0
    assert (data["gamma"], data["eta"], data["eta_prime"]) == (2, 2, 0)
    assert data["R"] == [1, 3, 4, 5, 9]


def test_weights_json(capsys):
    code, data = run_json(capsys, "weights", "--p", "2", "--ell", "23")
    assert code == 0 and data["counts"][8] == 759 and data["min_weight"] == 8
    code, data = run_json(capsys, "weights", "--p", "2", "--ell", "7", "--unextended")
    assert data["counts"] == [1, 0, 0, 7, 7, 0, 0, 1]


def test_failing_check_exits_one(capsys):
    # case-1 quadratics at ell = 1 mod 4 can have double roots
    code, out, _ = run(capsys, "little", "--ell", "13", "--case", "1")
    assert code == EXIT_FAIL and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("family", "--p", "3", "--ell", "7"),
        ("family", "--p", "4", "--ell", "7"),
        ("family", "--p", "2", "--ell", "9"),
        ("d", "--p", "2", "--ell", "7", "--case", "2"),
        ("d", "--p", "2", "--ell", "17", "--s", "3"),
        ("mds", "--p", "13", "--ell", "5"),
        ("lemma", "--p", "2", "--m", "3", "--n", "5"),
        ("chebotarev", "--ell", "5", "--max-order", "9"),
        ("weights", "--p", "2", "--ell", "7", "--budget", "0"),
    ],
)
def test_domain_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_DOMAIN and err.startswith("error:")


def test_budget_and_long_guard_exit_three(capsys):
    code, _, err = run(capsys, "weights", "--p", "2", "--ell", "23", "--budget", "1000")
    assert code == EXIT_BUDGET and "budget" in err
    code, _, err = run(capsys, "weights", "--p", "2", "--ell", "47")
    assert code == EXIT_BUDGET and "--long" in err
    code, _, err = run(capsys, "chebotarev", "--ell", "11")
    assert code == EXIT_BUDGET and "--long" in err


def test_chebotarev_partial_sweep_allowed(capsys):
    code, data = run_json(capsys, "chebotarev", "--ell", "11", "--max-order", "2")
    assert code == 0 and data["minors_checked"] == 11**2 + 55**2


def test_text_table_alignment(capsys):
    _, out, _ = run(capsys, "family", "--p", "2", "--ell", "7")
    rows = [line for line in out.splitlines() if line.endswith(("PASS", "FAIL"))]
    assert len(rows) == 14
    assert len({line.rindex("PASS") for line in rows}) == 1


def test_json_is_deterministic(capsys):
    argv = ("orbits", "--p", "3", "--ell", "11", "--format", "json")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--seed", "7")
    assert a == b


def test_run_config_validate():
    RunConfig("family", p=2, ell=7).validate()
    with pytest.raises(DomainError):
        RunConfig("family", p=2, ell=2).validate()
    with pytest.raises(DomainError):
        RunConfig("family", p=9, ell=7).validate()


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "qrverify", "family", "--p", "2", "--ell", "7", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["gamma"] == 1
