"""Braid groups, free braided monoidal categories, slide cliques of point
configurations, and the two-tensor category built from a braided monoidal
category, with executable checks that its vertical part recovers the
original braided structure."""

from .bmc import BicharBMC, FreeBMC, PermBMC, make_category
from .braid import BraidWord, LabelledBraid, braid_equal, garside_nf, parse_braid
from .config import Configuration, slide_equal, slide_key
from .sigma import SigmaB, SigmaMor, SigmaObj

__version__ = "0.1.0"

__all__ = [
    "BicharBMC", "BraidWord", "Configuration", "FreeBMC", "LabelledBraid", "PermBMC",
    "SigmaB", "SigmaMor", "SigmaObj", "braid_equal", "garside_nf", "make_category",
    "parse_braid", "slide_equal", "slide_key",
]
