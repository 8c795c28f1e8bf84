"""
Exact noncommutative binomial expansions: Lyndon words, Lyndon-Shirshov PBW
coordinates, shuffle type polynomials, Bell and q-Bell differential
polynomials.
"""

__version__ = '1.0.0'
