"""Fibered links in lens spaces: braid words, lens-space surgery presentations,
Kirby moves on linking matrices, open-book bookkeeping, lifts to S^3 and
numerical contact-form checks."""

from ._backend import BACKEND
from .braid import (
    BraidWord,
    classify_two_strand_closure,
    closure_invariants,
    free_reduce,
    garside_delta,
    parse_word,
)
from .contfrac import chain_matrix, evaluate_cf, expand_neg_cf
from .errors import LensfibError
from .kirby import FramedLinkMatrix, h1_order
from .lenslift import BandDiagram, LensParams, lift, normalize
from .openbook import AbstractOpenBook, build_fibered_Lp1, build_fibered_Lpq

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AbstractOpenBook",
    "BandDiagram",
    "BraidWord",
    "FramedLinkMatrix",
    "LensParams",
    "LensfibError",
    "build_fibered_Lp1",
    "build_fibered_Lpq",
    "chain_matrix",
    "classify_two_strand_closure",
    "closure_invariants",
    "evaluate_cf",
    "expand_neg_cf",
    "free_reduce",
    "garside_delta",
    "h1_order",
    "lift",
    "normalize",
    "parse_word",
]
