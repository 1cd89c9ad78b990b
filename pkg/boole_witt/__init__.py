"""
Package root for boole_witt.
Ensures tests can import boole_witt.src.* modules.
"""
