"""
Geometric inequalities involving inradius and circumradius, with a seeded fuzzer.
"""

from .checks import (
    CROSSOVER_FACTOR,
    InequalityName,
    InequalityReport,
    check_all,
    check_bonnesen_fenchel,
    check_favard,
    check_new_circumradius,
    crossover,
    crossover_sign,
)
from .fuzz import FuzzSummary, Witness, check_body, fuzz, write_witness_csv

__all__ = [
    'CROSSOVER_FACTOR',
    'InequalityName',
    'InequalityReport',
    'check_all',
    'check_bonnesen_fenchel',
    'check_favard',
    'check_new_circumradius',
    'crossover',
    'crossover_sign',
    'FuzzSummary',
    'Witness',
    'check_body',
    'fuzz',
    'write_witness_csv',
]
