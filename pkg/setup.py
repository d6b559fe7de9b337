#!/usr/bin/env python

from setuptools import setup, find_packages

setup(
    name="discrete_wigner",
    version="1.0",
    description="Discrete Wigner functions of noisy qubits, qutrits and two-qubit states",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.7",
    install_requires=["numpy", "scipy", "galois", "six"],
    extras_require={"test": ["pytest", "pytest-cov", "coverage", "hypothesis", "mock"]},
    entry_points={"console_scripts": ["discrete_wigner = discrete_wigner.cli.main:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
