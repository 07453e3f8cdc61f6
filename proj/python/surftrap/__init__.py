"""Surface-trap toolkit: combined magnetic + evanescent-wave potentials for
ultracold atoms near a dielectric prism.

The heavy lifting lives in the C++ extension ``_surftrap``; this package
re-exports its API.
"""

from ._surftrap import *  # noqa: F401,F403

__version__ = "1.0.0"
