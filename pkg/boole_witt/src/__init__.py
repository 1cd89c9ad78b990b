"""
boole_witt.src package.

Kept minimal so modules can be imported individually or run as scripts
without pulling numpy and pandas in at package import.
"""

__all__ = []
