#!/usr/bin/env python3
"""
formsym - Symmetries of binary and ternary forms.
Main entry point for the command line tool.
"""

import os
import sys

# Add src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from src.app.cli import main

if __name__ == '__main__':
    sys.exit(main())
