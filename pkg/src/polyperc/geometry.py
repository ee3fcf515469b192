"""Exact linear forms and half-spaces over rational coordinates.

Everything here is immutable and every computation is exact rational
arithmetic, so the distinction between a lax boundary (``f >= 0``) and a
strict one (``f > 0``) survives arbitrarily long pipelines.  Coefficients
and points are :class:`fractions.Fraction`; plain ints are accepted and
coerced on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConstantFormError, DimensionError, ParseError

Rational = Fraction
Point = tuple[Fraction, ...]


def parse_rational(text: str) -> Fraction:
    """Parse an integer (``7``), a fraction (``-3/2``) or a decimal (``0.25``)."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as ``p/q``, or a bare integer when the denominator is 1."""
    return str(value)


def parse_point(line: str, lineno: int | None = None) -> Point:
    """Parse a whitespace-separated list of rationals into a point."""
    try:
        return tuple(parse_rational(token) for token in line.split())
    except ParseError as exc:
        raise ParseError(exc.message, lineno) from exc


def format_point(point: Sequence[Fraction]) -> str:
    return "(" + ",".join(format_rational(Fraction(c)) for c in point) + ")"


class InequalityKind(Enum):
    """Which inequality a half-space imposes on its form."""

    LAX = ">="
    STRICT = ">"

    def flipped(self) -> "InequalityKind":
        return InequalityKind.STRICT if self is InequalityKind.LAX else InequalityKind.LAX


@dataclass(frozen=True)
class LinearForm:
    """Affine function ``w0 + w1*y1 + ... + wn*yn``.

    All-zero weight vectors are tolerated here (adders over empty index
    sets produce them internally); :class:`HalfSpace` is where constant
    forms become illegal.
    """

    bias: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "bias", Fraction(self.bias))
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if not self.weights:
            raise ValueError("a linear form needs at least one variable")

    @property
    def dimension(self) -> int:
        return len(self.weights)

    @property
    def is_constant(self) -> bool:
        return not any(self.weights)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != self.dimension:
            raise DimensionError(
                f"point has {len(point)} coordinates, form expects {self.dimension}"
            )
        total = self.bias
        for w, c in zip(self.weights, point):
            if w:
                total += w * c
        return total

    def negated(self) -> "LinearForm":
        return LinearForm(-self.bias, tuple(-w for w in self.weights))


@dataclass(frozen=True)
class HalfSpace:
    """A linear form together with a lax or strict inequality.

    The perceptron unit of the half-space is its characteristic
    function, exposed as :meth:`contains`.
    """

    form: LinearForm
    kind: InequalityKind

    def __post_init__(self):
        if self.form.is_constant:
            raise ConstantFormError("half-space form has all-zero weights")

    @property
    def dimension(self) -> int:
        return self.form.dimension

    def contains(self, point: Sequence[Fraction]) -> int:
        """Membership bit: 1 iff the point satisfies the inequality."""
        value = self.form.evaluate(point)
        if self.kind is InequalityKind.LAX:
            return 1 if value >= 0 else 0
        return 1 if value > 0 else 0

    def complement(self) -> "HalfSpace":
        """Set complement: negate the form and swap lax with strict."""
        return HalfSpace(self.form.negated(), self.kind.flipped())


_OPERATORS = {kind.value: kind for kind in InequalityKind}


def parse_halfspace(line: str, lineno: int | None = None) -> HalfSpace:
    """Parse a half-space line ``w0 w1 ... wn OP`` with OP one of ``>=``, ``>``."""
    tokens = line.split()
    if len(tokens) < 3:
        raise ParseError("half-space line needs a bias, at least one weight and an operator", lineno)
    kind = _OPERATORS.get(tokens[-1])
    if kind is None:
        raise ParseError(f"unknown inequality operator {tokens[-1]!r}", lineno)
    try:
        coefficients = [parse_rational(token) for token in tokens[:-1]]
        return HalfSpace(LinearForm(coefficients[0], tuple(coefficients[1:])), kind)
    except ParseError as exc:
        raise ParseError(exc.message, lineno) from exc
    except ConstantFormError as exc:
        raise ParseError(str(exc), lineno) from exc


def format_halfspace(halfspace: HalfSpace) -> str:
    parts = [format_rational(halfspace.form.bias)]
    parts.extend(format_rational(w) for w in halfspace.form.weights)
    parts.append(halfspace.kind.value)
    return " ".join(parts)


def parse_halfspace_block(lines: Iterable[str], first_lineno: int = 1) -> tuple[HalfSpace, ...]:
    """Parse consecutive half-space lines, skipping blank ones."""
    out = []
    for offset, line in enumerate(lines):
        if line.strip():
            out.append(parse_halfspace(line, first_lineno + offset))
    return tuple(out)
