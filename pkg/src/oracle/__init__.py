"""
Brute-force oracles: config enumeration, support descent and certification
of analytic solutions.
"""

from .certify import CertifyReport, OracleCheck, Verdict, certify, certify_grid
from .descent import FAN_NOTE, SupportFan, support_descent
from .enumeration import Pattern, PatternModel, enumerate_configs, hybrid_J, patterns
from .results import OracleBudget, OracleMethod, OracleResult, body_J

__all__ = [
    'OracleMethod',
    'OracleResult',
    'OracleBudget',
    'body_J',
    'Pattern',
    'PatternModel',
    'patterns',
    'hybrid_J',
    'enumerate_configs',
    'SupportFan',
    'FAN_NOTE',
    'support_descent',
    'Verdict',
    'OracleCheck',
    'CertifyReport',
    'certify',
    'certify_grid',
]
