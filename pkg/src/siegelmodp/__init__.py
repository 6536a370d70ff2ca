"""Exact-arithmetic toolkit for mod p Siegel modular forms of degree 2.

Modules:

- ``arith``: prime fields, a quadratic extension, truncated series.
- ``rep``: symmetric-power representations of GL2 and the Pieri split.
- ``qexp``: finite-support Fourier expansions and the SMF1 codec.
- ``hecke``: Hecke operators on Fourier coefficients.
- ``theta``: theta operators (scalar, big, and the three vector-valued ones).
- ``cycles``: theta-cycle combinatorics.
- ``strata``: Ekedahl-Oort combinatorics and semilinear-chase engine.
- ``localdef``: local symbolic verification of the theta formulas.
- ``galois``: Frobenius characteristic polynomials and weight-reduction plans.
- ``cli``: command-line front end.
"""

__version__ = "0.1.0"
