"""
Test cases for the command line interface
"""
import json
import os

import mock
import pytest

from discrete_wigner.base.constants import Status
from discrete_wigner.base.errors import KernelViolationError
from discrete_wigner.base.report import Report
from discrete_wigner.cli.main import EXIT_INVALID, EXIT_KERNEL, EXIT_OK, main

from ... import constants


def _report(status):
    report = Report("verify")
    report.add("geometry.d2.counts", Status.passed)
    report.add("mub.d4.unbiased", status, detail="injected")
    return report


def test_table(capsys):
    """Assert the table command prints the Wigner table of a state."""
    assert main(["table", "--system", "qutrit", "--state", "ns1"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["dwf"]["dimension"] == 3
    assert data["regime"] is None
    assert sorted(data["columns"].values())[0] == pytest.approx(-1.0 / 3.0)
    assert sum(data["columns"].values()) == pytest.approx(1.0)


def test_table_under_noise(capsys):
    """Assert the table command evolves the state and labels the regime."""
    argv = ["table", "--system", "qubit", "--state", "qubit_ns1", "--channel", "rtn"]
    argv += ["--gamma", "0.001", "--b", "0.05", "--t", "10"]
    assert main(argv) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["regime"] == "NonMarkovian"
    assert data["params"] == {"gamma": 0.001, "b": 0.05}
    assert data["state"]["provenance"]["source"]


def test_table_bloch(capsys):
    """Assert raw Bloch parameters are accepted."""
    argv = ["table", "--system", "qubit", "--state", "bloch", "--bloch", "0", "0", "1"]
    assert main(argv) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["state"]["bloch"] == pytest.approx([0.0, 0.0, 1.0])


def test_table_invalid_state():
    """Assert a state that does not fit the system is an input error."""
    assert main(["table", "--system", "qubit", "--state", "phi+"]) == EXIT_INVALID


def test_table_missing_channel_parameters():
    """Assert a channel without its parameters is an input error."""
    assert main(["table", "--system", "qubit", "--state", "ns1", "--channel", "ad"]) == EXIT_INVALID


def test_negstate(capsys):
    """Assert the negstate command prints the qutrit NS1."""
    assert main(["negstate", "--system", "qutrit"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["rank"] == 1
    assert data["eigenvalue"] == pytest.approx(constants.QUTRIT_NS1_EIGENVALUE)
    assert data["mana"] == pytest.approx(constants.QUTRIT_NS1_MANA)
    assert len(data["bloch"]) == 8


def test_negstate_unavailable_rank():
    """Assert a rank beyond the negative eigenvalues is an input error."""
    assert main(["negstate", "--system", "qubit", "--rank", "2"]) == EXIT_INVALID


@pytest.mark.parametrize("argv", [[], ["table"], ["negstate", "--system", "ququart"]])
def test_usage_error(argv):
    """Assert usage errors exit with the input error code."""
    with pytest.raises(SystemExit) as error:
        main(argv)
    assert error.value.code == EXIT_INVALID


def test_sweep_config(tmp_path):
    """Assert a config file sweep writes its output."""
    path = str(tmp_path / "fig2.json")
    argv = ["sweep", "--config", constants.PATH_CONFIG_FIG2, "--out", path, "--format", "json"]
    assert main(argv) == EXIT_OK
    with open(path) as stream:
        data = json.load(stream)
    assert len(data["rows"]) == 11
    assert data["rows"][-1]["t"] == 250.0
    assert data["config"]["label"] == "fig2"


def test_sweep_preset(tmp_path):
    """Assert a multi-series preset writes one file per series."""
    path = str(tmp_path / "fig11.csv")
    argv = ["sweep", "--preset", "fig11", "--steps", "3", "--out", path]
    assert main(argv) == EXIT_OK
    for label in ("qubit", "qutrit", "twoqubit"):
        assert os.path.isfile(str(tmp_path / ("fig11_%s.csv" % label)))


def test_sweep_invalid_steps(tmp_path):
    """Assert an invalid override is an input error."""
    argv = ["sweep", "--preset", "fig2", "--steps", "1", "--out", str(tmp_path / "x.csv")]
    assert main(argv) == EXIT_INVALID


def test_sweep_kernel_violation(tmp_path):
    """Assert a channel leaving its range exits with its own code."""
    argv = ["sweep", "--preset", "fig2", "--steps", "2", "--out", str(tmp_path / "x.csv")]
    with mock.patch(
        "discrete_wigner.cli.main.run_sweep",
        side_effect=KernelViolationError("decay above 1", t=3.0),
    ):
        assert main(argv) == EXIT_KERNEL


def test_verify_ok(capsys, tmp_path):
    """Assert a clean report exits with 0 and is saved."""
    path = str(tmp_path / "report.json")
    with mock.patch("discrete_wigner.cli.main.verify_all", return_value=_report(Status.warning)):
        assert main(["verify", "--json", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[WARN] mub.d4.unbiased" in out
    with open(path) as stream:
        assert json.load(stream)["title"] == "verify"


def test_verify_failure():
    """Assert a failed check exits with the input error code."""
    with mock.patch("discrete_wigner.cli.main.verify_all", return_value=_report(Status.failed)):
        assert main(["-d", "verify"]) == EXIT_INVALID


def test_sweep_without_output(tmp_path):
    """Assert a sweep with nowhere to write fails before running."""
    path = tmp_path / "config.json"
    path.write_text(u'{"system": "qubit", "state": "ns1", "t": [0, 1], "steps": 5}')
    with mock.patch("discrete_wigner.cli.main.run_sweep") as run:
        assert main(["sweep", "--config", str(path)]) == EXIT_INVALID
    assert not run.called
