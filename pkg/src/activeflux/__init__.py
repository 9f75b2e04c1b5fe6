"""Active Flux solver for the 2D compressible Euler equations.

Fully discrete point updates (semi-Lagrangian footpoint plus exact frozen
acoustics, additive or with transported increments), a method-of-lines
reference variant, and the matching Fourier symbol calculus.
"""

from .euler import GasModel, InvalidStateError
from .grid import DofField, Mesh
from .problems import PROBLEM_NAMES, init_field, make_problem
from .stepper import BlowupError, ConservationError, StepReport, advance_step, run_to_time

__version__ = "0.1.0"

__all__ = [
    "GasModel",
    "InvalidStateError",
    "DofField",
    "Mesh",
    "PROBLEM_NAMES",
    "init_field",
    "make_problem",
    "BlowupError",
    "ConservationError",
    "StepReport",
    "advance_step",
    "run_to_time",
    "__version__",
]
