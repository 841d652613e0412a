"""Exact differential cochains and their trivializations on simplicial complexes."""

from .diffcochain import DiffCochain, differential, is_cocycle
from .exactalg import AbelianGroupPresentation, Matrix, smith_normal_form
from .simplicial import Chain, Cochain, Lattice, SimplicialComplex
from .trivialization import Obstruction, Trivialization, trivialize

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupPresentation",
    "Chain",
    "Cochain",
    "DiffCochain",
    "Lattice",
    "Matrix",
    "Obstruction",
    "SimplicialComplex",
    "Trivialization",
    "differential",
    "is_cocycle",
    "smith_normal_form",
    "trivialize",
]
