#!/usr/bin/env python3
"""
annulus-opt - Main Entry Point
Solve, sweep, certify and render ring-constrained shape optimization problems.
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
