"""Finite-module engine for S-prime and S-weakly prime submodules, with an exhaustive theorem checker."""

__version__ = "0.1.0"
