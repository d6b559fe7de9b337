"""
Sweep configs, figure presets, the sweep runner and its writers
"""
from discrete_wigner.sweep.config import SweepConfig, parse_config
from discrete_wigner.sweep.presets import FIGURES, FigurePreset, figure_preset
from discrete_wigner.sweep.runner import SweepRow, measure_state, regime_label, run_sweep
from discrete_wigner.sweep.output import series_path, write_output
from discrete_wigner.sweep.verify import verify_all
