"""Exact computations with the mirror Heisenberg-Virasoro algebra and its non-weight modules.

Subpackages:

* :mod:`mhv.liealg` -- the algebra, theta-automorphisms, Whittaker functions;
* :mod:`mhv.uea` -- PBW normal ordering in the enveloping algebra;
* :mod:`mhv.modops` -- module families and their actions;
* :mod:`mhv.analysis` -- criteria, degree stripping, tensor tools, the probe;
* :mod:`mhv.cli` -- configs, seed expressions and the ``mhv`` command.
"""
from . import analysis, liealg, modops, uea

__version__ = "0.1.0"
__all__ = ["analysis", "liealg", "modops", "uea", "__version__"]
