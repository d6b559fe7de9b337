"""
Constants for tests
"""

import os

import numpy as np

PATH_RESOURCE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "resources"))

PATH_CONFIG_FIG2 = os.path.join(PATH_RESOURCE_DIR, "fig2.json")

SEED = 1234

SQRT3 = np.sqrt(3.0)

# Default qubit net: eigenvalues of every phase-point operator.
QUBIT_OPERATOR_SPECTRUM = ((1.0 - SQRT3) / 2.0, (1.0 + SQRT3) / 2.0)

# Qubit NS1 under the default net.
QUBIT_NS1_NEGATIVITY = (SQRT3 - 1.0) / 2.0
QUBIT_NS1_ROBUSTNESS = 1.0 - 1.0 / (2.0 * SQRT3 - 1.0)

# Qutrit NS1: one entry at -1/3, eight at 1/6.
QUTRIT_NS1_EIGENVALUE = -1.0
QUTRIT_NS1_SUM_NEGATIVITY = 1.0 / 3.0
QUTRIT_NS1_MANA = np.log(5.0 / 3.0)
QUTRIT_NS1_ROBUSTNESS = 0.9
QUTRIT_NS2_EIGENVALUE = (1.0 - np.sqrt(5.0)) / 2.0

# First zero of the non-Markovian RTN kernel, gamma=0.001, b=0.05.
RTN_FIRST_ZERO = 15.8088
# First full decay of the non-Markovian AD channel, gamma=50, g=0.01.
AD_FIRST_FULL_DECAY = 3.16175
