name = "discrete_wigner"

version = "0.0.1"

description = "Discrete Wigner functions of noisy qubits, qutrits and two-qubit states"

requires = ["numpy", "scipy", "galois", "six"]


def commands():
    env.PYTHONPATH.append("{root}/python")


uuid = "5b0f3a52-6f4e-4e1d-9a8e-2f1c7d0b9e64"
