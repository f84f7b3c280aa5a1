"""Exceptions and helpers shared by both kernel backends."""

from math import comb

__all__ = ["DegenerateInput", "KernelOverflow", "comb"]


class DegenerateInput(Exception):
    """A kernel hit an exact zero where the input was assumed generic.

    ``kind`` is ``"flat"`` (affinely dependent simplex), ``"sphere"`` (a point on a
    circumsphere or orthosphere) or ``"query"`` (a query on a spanned hyperplane);
    ``witness`` holds the offending indices.
    """

    def __init__(self, kind, witness):
        super().__init__(f"degenerate input ({kind}): {witness}")
        self.kind = kind
        self.witness = tuple(witness)


class KernelOverflow(ArithmeticError):
    """Raised by the compiled backend when 128-bit intermediates would overflow."""
