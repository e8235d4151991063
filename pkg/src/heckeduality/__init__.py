"""Exact Hecke algebra and braid group checks of relative Serre duality."""

from .coxeter import (
    CoxeterSystem,
    Parabolic,
    WeylElement,
    build_system,
    named_system,
)
from .garside import GarsideNF, full_twist, nf_from_word, parse_braid_word
from .hecke import HeckeElt, costandard, eval_braid, full_twist_class, render, standard
from .laurent import LaurentPoly
from .parabolic import ParabolicContext, serre_duality_check

__version__ = "0.1.0"
