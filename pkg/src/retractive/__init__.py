"""Retractive simplicial sets over a simplicial set with a finite group action,
their linearisations, and exact homological checks."""

from .retract import Base, RetractiveMap, RetractiveObject, boundary_cell, cell, horn_cell
from .sgrp import FiniteGroup, cyclic_group
from .sset import DeltaOperator, GeneratedSimplicialSet, NormalSimplex, ns

__all__ = ["Base", "RetractiveMap", "RetractiveObject", "boundary_cell", "cell", "horn_cell", "FiniteGroup",
           "cyclic_group", "DeltaOperator", "GeneratedSimplicialSet", "NormalSimplex", "ns"]
