"""
Finite symmetry transformations as command objects.
"""

from commands.transform_chain import TransformChain, apply, compose, make_command  # noqa: F401
from commands.transform_command import TransformKind, TransformSpec  # noqa: F401
