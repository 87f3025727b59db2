"""Newtonian-to-wave-mechanics verification kernels.

Thin python surface over the C++ core: point-particle dynamics, plane-wave
kinematics, the classical wave-equation residual, finite-difference
eigensolves, Crank-Nicolson propagation and the verification suite.
"""

from ._n2s import *  # noqa: F401,F403
from ._n2s import __version__  # noqa: F401
