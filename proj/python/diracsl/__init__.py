"""Dirichlet spectra for -y'' + q y = lambda m delta y on [0, 1].

Thin re-export of the compiled extension. See the project README for the
mathematical conventions (fundamental basis, hypotheses (H0)/(H)/(H1),
spectral trichotomy, and the single-node inverse problem).
"""

from ._diracsl import *  # noqa: F401,F403
from ._diracsl import __version__  # noqa: F401
