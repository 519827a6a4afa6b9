"""Framing groups, framed immersed circles and typed bordism words."""

from .cells import OneCell, TwoCell
from .circles import FramedImmersedCircle, circle_family, circle_invariant, parse_polygon, turning_number
from .framing import FramingClass
from .grammar import parse_word, parse_word_file
from .rewrite import ProofTrace, RewriteFailure, default_rules, replay_validate, rewrite_check
from .words import BordismWord, radford_word, serre_word

__all__ = [
    "OneCell",
    "TwoCell",
    "FramedImmersedCircle",
    "circle_family",
    "circle_invariant",
    "parse_polygon",
    "turning_number",
    "FramingClass",
    "parse_word",
    "parse_word_file",
    "ProofTrace",
    "RewriteFailure",
    "default_rules",
    "replay_validate",
    "rewrite_check",
    "BordismWord",
    "radford_word",
    "serre_word",
]
