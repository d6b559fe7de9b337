"""
Entry point to call discrete_wigner directly.
"""
import sys

from discrete_wigner.cli import main

if __name__ == "__main__":
    sys.exit(main.main())
