"""
Exact algebra, Groebner bases and the form-symmetry pipelines.
"""
