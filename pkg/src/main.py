"""
Main entry point for formsym.
"""

import sys

from src.app.cli import main

if __name__ == '__main__':
    sys.exit(main())
