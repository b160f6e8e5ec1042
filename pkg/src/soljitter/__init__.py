"""soljitter: stochastic NLS soliton transmission at desk scale.

Split-step spectral solvers for the cubic focusing 1-D nonlinear Schrodinger
equation under additive and real multiplicative noise, the closed-form
modulated-soliton control solutions, cost functionals and tail-rate bounds
for mass and arrival-time fluctuations, and plain / importance-sampled
Monte Carlo estimation of the corresponding tail probabilities.
"""

__version__ = "0.1.0"

from .grid import Grid, make_grid
from .solitons import SolitonParams, soliton_profile, modulated_soliton

__all__ = [
    "__version__",
    "Grid",
    "make_grid",
    "SolitonParams",
    "soliton_profile",
    "modulated_soliton",
]
