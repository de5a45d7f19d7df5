"""Steady-state photoluminescence-excitation spectra of a dipole-dipole
coupled two-emitter system.

The heavy lifting happens in the C++ extension ``_plepair``; this package
re-exports its public surface.
"""

from ._plepair import *  # noqa: F401,F403
from ._plepair import __version__  # noqa: F401
