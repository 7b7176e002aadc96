"""
Constants, certified numerics and helpers for formsym.
"""
