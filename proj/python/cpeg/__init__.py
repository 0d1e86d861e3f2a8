"""PEG parsing with declarative tree captures and inferred tree types."""

from ._core import (
    Grammar,
    GrammarSyntaxError,
    Inference,
    LeftRecursionError,
    Tree,
    WellFormednessError,
    load_grammar,
    member,
    member_of,
)

__all__ = [
    "Grammar",
    "GrammarSyntaxError",
    "Inference",
    "LeftRecursionError",
    "Tree",
    "WellFormednessError",
    "load_grammar",
    "member",
    "member_of",
]
