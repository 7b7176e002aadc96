"""
Command line front end for formsym.
"""
