"""Sequentially Cohen-Macaulay binomial edge ideals: structural classification
with an exact algebraic oracle behind it."""
from .errors import InvalidInput, NotApplicable, ResourceLimit
from .graph import Graph, enumerate_cutsets, recognize
from .cutsets import profiles, spectrum
from .scm import Verdict, check_lemma31, classify, oracle_scm

__version__ = "0.1.0"

__all__ = ["Graph", "InvalidInput", "NotApplicable", "ResourceLimit", "Verdict", "check_lemma31",
           "classify", "enumerate_cutsets", "oracle_scm", "profiles", "recognize", "spectrum",
           "__version__"]
