"""Exact Hall algebras of quivers over finite fields, their reduced Drinfeld doubles,
and checks of the mutation formulas.

Classes are addressed by dimension vector, with ``#k`` picking one class when a vector
carries several; elements are written in the same expression language as the
``hallkit`` command line tool.
"""

from ._core import (
    DomainError,
    InvariantError,
    ParseError,
    ResourceError,
    Session,
    alternating_binomial_sum,
    suite_groups,
    verify,
)

__all__ = [
    "DomainError",
    "InvariantError",
    "ParseError",
    "ResourceError",
    "Session",
    "alternating_binomial_sum",
    "suite_groups",
    "verify",
]
