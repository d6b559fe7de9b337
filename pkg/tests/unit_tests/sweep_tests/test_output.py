"""
Test cases for the sweep writers
"""
import csv
import json
import os

import mock
import pytest

from discrete_wigner.base.errors import ValidationError
from discrete_wigner.sweep.config import SweepConfig
from discrete_wigner.sweep.output import header, series_path, write_output
from discrete_wigner.sweep.runner import run_sweep


@pytest.fixture
def cfg():
    """
    Fixture for a short qubit sweep.

    :rtype: SweepConfig
    """
    return SweepConfig.from_dict(
        {
            "system": "qubit",
            "state": "qubit_ns1",
            "channel": "ad",
            "gamma": 50.0,
            "g": 0.01,
            "t": [0, 40],
            "steps": 4,
            "measures": ["dwf", "mana", "negativity"],
        }
    )


@pytest.fixture
def rows(cfg):
    """
    Fixture for the rows of the short sweep.

    :rtype: list(SweepRow)
    """
    return run_sweep(cfg)


def test_header(rows, cfg):
    """Assert the columns are t, the table, the measures, then the regime."""
    assert header(rows, cfg) == [
        "t",
        "W_1_1",
        "W_1_2",
        "W_2_1",
        "W_2_2",
        "negativity",
        "mana",
        "regime",
    ]


def test_csv(rows, cfg, tmp_path):
    """Assert the CSV output has a header and one line per row."""
    path = write_output(rows, cfg, path=str(tmp_path / "out.csv"))
    with open(path) as stream:
        lines = list(csv.reader(stream))
    assert lines[0] == header(rows, cfg)
    assert len(lines) == 5
    assert lines[1][0] == "0"
    assert lines[1][-1] == "NonMarkovian"
    assert float(lines[1][1]) == pytest.approx(rows[0].table.entries[0, 0])


def test_json(rows, cfg, tmp_path):
    """Assert the JSON output holds the config and the rows."""
    path = write_output(rows, cfg, path=str(tmp_path / "out.json"), fmt="json")
    with open(path) as stream:
        data = json.load(stream)
    expected = cfg.to_dict()
    expected.pop("workers")
    assert data["config"] == expected
    assert len(data["rows"]) == 4
    assert data["rows"][-1]["t"] == 40.0
    assert set(data["rows"][0]) == set(header(rows, cfg))


def test_default_path(rows, cfg, tmp_path):
    """Assert the config output is used without an explicit path."""
    target = str(tmp_path / "default.csv")
    assert write_output(rows, cfg.replace(output=target)) == target


def test_overwrite(rows, cfg, tmp_path):
    """Assert an existing file is replaced."""
    path = tmp_path / "out.csv"
    path.write_text(u"stale")
    write_output(rows, cfg, path=str(path))
    assert path.read_text().startswith("t,")


@pytest.mark.parametrize(
    "kwargs",
    [{"path": None}, {"path": "out.csv", "fmt": "xml"}],
)
def test_errors(rows, cfg, kwargs):
    """Assert missing paths and unknown formats raise."""
    with pytest.raises(ValidationError):
        write_output(rows, cfg, **kwargs)


def test_no_rows(cfg, tmp_path):
    """Assert an empty sweep is not written."""
    with pytest.raises(ValidationError):
        write_output([], cfg, path=str(tmp_path / "out.csv"))


def test_series_path():
    """Assert a series label is appended before the extension."""
    assert series_path("fig12.json", "bell") == "fig12_bell.json"


def test_temporary_file_next_to_target(rows, cfg, tmp_path):
    """Assert the file is written beside the target then renamed over it."""
    path = str(tmp_path / "out.csv")
    with mock.patch("discrete_wigner.sweep.output.os.replace", wraps=os.replace) as replace:
        write_output(rows, cfg, path=path)
    source, target = replace.call_args[0]
    assert os.path.dirname(source) == str(tmp_path)
    assert target == path
    assert os.listdir(str(tmp_path)) == ["out.csv"]


def test_failed_write_keeps_target(rows, cfg, tmp_path):
    """Assert a failed rename leaves the previous file and no temporary file."""
    path = tmp_path / "out.csv"
    path.write_text(u"previous")
    with mock.patch("discrete_wigner.sweep.output.os.replace", side_effect=OSError("disk full")):
        with pytest.raises(OSError):
            write_output(rows, cfg, path=str(path))
    assert path.read_text() == u"previous"
    assert os.listdir(str(tmp_path)) == ["out.csv"]


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_same_bytes_with_workers(cfg, tmp_path, fmt):
    """Assert serial, repeated and threaded runs write identical files."""
    contents = []
    for index, workers in enumerate((1, 1, 3)):
        run = cfg.replace(workers=workers)
        target = str(tmp_path / ("%d.%s" % (index, fmt)))
        path = write_output(run_sweep(run), run, path=target, fmt=fmt)
        with open(path, "rb") as stream:
            contents.append(stream.read())
    assert contents[0] == contents[1] == contents[2]
