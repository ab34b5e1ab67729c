"""
Closed-form solution catalogue.
"""

from solutions.catalogue import CATALOGUE, TRANSFORM_KINDS, catalogue, evaluate, instantiate, positivity_scan  # noqa: F401
