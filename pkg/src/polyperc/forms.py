"""Adder, conjunctive and disjunctive linear forms and their lax units.

These are the explicit threshold forms that compute AND/OR over binary
vectors.  On binary input every conjunctive or disjunctive form takes
half-integer values, never an integer, so the lax unit threshold at zero
is immune to boundary ambiguity.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SchemeError
from .geometry import HalfSpace, InequalityKind, LinearForm
from .indexing import IndexPair, IndexSet

HALF = Fraction(1, 2)

BitVector = tuple[int, ...]


def adder(indices: IndexSet) -> LinearForm:
    """Sum of the selected coordinates; counts ones on binary vectors."""
    weights = [Fraction(0)] * indices.ambient
    for i in indices:
        weights[i - 1] = Fraction(1)
    return LinearForm(Fraction(0), tuple(weights))


def _check_unit_pair(pair: IndexPair, what: str) -> None:
    if not pair.is_consistent():
        raise SchemeError(f"inconsistent index pair in {what}")
    if pair.is_empty:
        raise SchemeError(f"empty index pair would give a constant {what}")


def conj_form(pair: IndexPair) -> LinearForm:
    """Form that is 1/2 on binary b exactly when every ones index is 1 and
    every zeros index is 0, and at most -1/2 otherwise."""
    _check_unit_pair(pair, "conjunctive form")
    weights = [Fraction(0)] * pair.ambient
    for i in pair.ones:
        weights[i - 1] = Fraction(1)
    for i in pair.zeros:
        weights[i - 1] = Fraction(-1)
    return LinearForm(HALF - pair.ones.size, tuple(weights))


def disj_form(pair: IndexPair) -> LinearForm:
    """Form that is -1/2 on binary b exactly when every ones index is 0 and
    every zeros index is 1, and at least 1/2 otherwise."""
    _check_unit_pair(pair, "disjunctive form")
    weights = [Fraction(0)] * pair.ambient
    for i in pair.ones:
        weights[i - 1] = Fraction(1)
    for i in pair.zeros:
        weights[i - 1] = Fraction(-1)
    return LinearForm(pair.zeros.size - HALF, tuple(weights))


def conj_unit(pair: IndexPair) -> HalfSpace:
    """Lax unit of the conjunctive form: AND over the pair's literals."""
    return HalfSpace(conj_form(pair), InequalityKind.LAX)


def disj_unit(pair: IndexPair) -> HalfSpace:
    """Lax unit of the disjunctive form: OR over the pair's literals."""
    return HalfSpace(disj_form(pair), InequalityKind.LAX)
