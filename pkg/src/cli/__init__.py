"""
Command-line front end: solve, sweep, beta-table, render, certify and fuzz.
"""

from .config import Command, LambdaGrid, OutputFormat, RunConfig, Variant
from .main import build_parser, main

__all__ = ['Command', 'LambdaGrid', 'OutputFormat', 'RunConfig', 'Variant', 'build_parser', 'main']
