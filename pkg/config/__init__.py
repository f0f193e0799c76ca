"""
Runtime configuration constants.
"""
