"""Single-vertex quantum wire scattering.

Matrices are passed as 2-d complex numpy arrays; channels are 0-based.
"""

from ._qwire import *  # noqa: F401,F403
from ._qwire import Error, __doc__  # noqa: F401

__version__ = "0.1.0"
