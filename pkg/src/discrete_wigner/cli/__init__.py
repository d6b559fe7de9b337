"""Package for CLI scripts."""
