"""Structure theory of Peano partial cubes on finite graphs.

Thin package wrapper around the native module; everything lives in
peanocube._peanocube.
"""

from ._peanocube import *  # noqa: F401,F403
from ._peanocube import __version__  # noqa: F401
