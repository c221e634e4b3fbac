"""Squeezed coherent states of the position-dependent-mass oscillator."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # extension on sys.path instead of inside the package
    from _core import *  # noqa: F401,F403
