"""Augmentations and normal rulings of Legendrian knots in plat position."""
from .front import (
    CuspType,
    Direction,
    MaslovPotential,
    MultiComponentError,
    OrientedDiagram,
    PlatDiagram,
    PlatParseError,
    crossing_grading,
    dumps_plat,
    maslov_potential,
    parse_plat,
    rotation_number,
    thurston_bennequin,
    validate,
)

__version__ = "0.1.0"
