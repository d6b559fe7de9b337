"""
Test cases for the qualitative shape of the figure presets, read back from their CSV files
"""
import csv

import numpy as np
import pytest

from discrete_wigner.measures.measures import CLASSICAL_FIDELITY
from discrete_wigner.sweep.output import series_path, write_output
from discrete_wigner.sweep.presets import figure_preset
from discrete_wigner.sweep.runner import run_sweep

from ... import constants


def _curves(name, tmp_path, steps=None):
    """
    Write every series of a figure to CSV and read the columns back.

    :return: {label: {column: values}}, the regime column left out.
    :rtype: dict
    """
    curves = {}
    for cfg in figure_preset(name, steps=steps):
        label = cfg.label or name
        path = write_output(run_sweep(cfg), cfg, path=series_path(str(tmp_path / name), label))
        with open(path) as stream:
            rows = list(csv.DictReader(stream))
        curves[label] = {
            column: np.array([float(row[column]) for row in rows])
            for column in rows[0]
            if column != "regime"
        }
    return curves


def _turning_points(values, tol=1e-12):
    steps = np.diff(values)
    signs = np.sign(steps[np.abs(steps) > tol])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def _table_columns(curve):
    return [values for column, values in curve.items() if column.startswith("W_")]


@pytest.mark.parametrize("name", ["fig2", "fig6", "fig8"])
def test_revivals_under_memory(name, tmp_path):
    """Assert non-Markovian telegraph noise makes some table entry fall and rise again."""
    (curve,) = _curves(name, tmp_path, steps=101).values()
    assert max(_turning_points(values) for values in _table_columns(curve)) >= 2


@pytest.mark.parametrize("name", ["fig3", "fig5"])
def test_no_revival_without_memory(name, tmp_path):
    """Assert Markovian noise moves every table entry with at most one turning point."""
    (curve,) = _curves(name, tmp_path, steps=101).values()
    assert all(_turning_points(values) <= 1 for values in _table_columns(curve))


@pytest.mark.parametrize("name", ["fig12", "fig13"])
def test_coherence_decays(name, tmp_path):
    """Assert every coherence curve ends below where it starts, NS1 above Bell at t = 0."""
    curves = _curves(name, tmp_path, steps=51)
    assert sorted(curves) == ["bell", "ns1", "ns2"]
    for curve in curves.values():
        assert curve["coherence"][-1] < curve["coherence"][0]
    assert curves["ns1"]["coherence"][0] > curves["bell"]["coherence"][0]
    assert curves["bell"]["coherence"][0] == pytest.approx(1.0)


def test_teleportation_below_classical(tmp_path):
    """Assert NS1 leaves the classical teleportation region while Bell only touches its edge."""
    curves = _curves("fig15", tmp_path, steps=300)
    assert curves["ns1"]["fidelity"].min() < CLASSICAL_FIDELITY
    assert curves["bell"]["fidelity"].min() >= CLASSICAL_FIDELITY - 1e-9
    assert curves["bell"]["fidelity"][0] == pytest.approx(1.0)


def test_negativity_ordering(tmp_path):
    """Assert the qutrit starts with the highest negativity, then two qubits, then the qubit."""
    curves = _curves("fig11", tmp_path, steps=3)
    start = {label: curve["negativity"][0] for label, curve in curves.items()}
    assert start["qutrit"] > start["twoqubit"] > start["qubit"]


def test_mana_under_amplitude_damping(tmp_path):
    """Assert the NS1 mana trace drops below the NS2 one under non-Markovian AD."""
    curves = _curves("fig10", tmp_path)
    first = curves["ns1_ad"]["mana"]
    second = curves["ns2_ad"]["mana"]
    assert first[0] == pytest.approx(constants.QUTRIT_NS1_MANA)
    assert np.any(first < second)
