"""Proof-search spaces and inhabitation decisions for focused intuitionistic logics."""

from ._core import (  # noqa: F401
    Forest,
    IFormula,
    LjpTerm,
    LjtSequent,
    LjtTerm,
    ParseError,
    PFormula,
    PreconditionError,
    Sequent,
    SyntaxError,
    TranslationError,
    TypingError,
    __version__,
    check,
    check_ljt,
    count,
    finite,
    forget_formula,
    forget_term,
    inhabited,
    ljt_count,
    ljt_finite,
    ljt_inhabited,
    members,
    members_ljt,
    oracle_search,
    oracle_search_ljt,
    parse_formula,
    parse_iformula,
    parse_ljt_sequent,
    parse_ljt_term,
    parse_sequent,
    parse_term,
    space,
    star_formula,
    star_sequent,
    star_term,
)
