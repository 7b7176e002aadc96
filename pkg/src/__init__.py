"""
formsym - Symmetries of binary and ternary forms.
"""

from src.utils.constants import VERSION

__version__ = VERSION
