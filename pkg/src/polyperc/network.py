"""Threshold layers and networks with an exact rational forward pass.

A layer is a tuple of half-spaces sharing an input dimension; applying it
yields one bit per unit.  A network is a composable sequence of layers.
Intermediate bit vectors are re-embedded as rational points, so every
layer remains a standalone map on rational space.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, ParseError, PolypercError, PreconditionError
from .geometry import HalfSpace, Point, format_halfspace, parse_halfspace

BitVector = tuple[int, ...]


def bits_to_point(bits: Sequence[int]) -> Point:
    return tuple(Fraction(b) for b in bits)


@dataclass(frozen=True)
class PerceptronLayer:
    units: tuple[HalfSpace, ...]

    def __post_init__(self) -> None:
        if not self.units:
            raise PreconditionError("empty layer")
        dims = {u.form.dimension for u in self.units}
        if len(dims) != 1:
            raise DimensionError("mixed unit dimensions in layer")

    @property
    def input_dim(self) -> int:
        return self.units[0].form.dimension

    @property
    def output_dim(self) -> int:
        return len(self.units)

    def apply(self, x: Point) -> BitVector:
        return tuple(u.contains(x) for u in self.units)


def layer_of(halfspaces: Iterable[HalfSpace]) -> PerceptronLayer:
    return PerceptronLayer(tuple(halfspaces))


def layer_apply(layer: PerceptronLayer, x: Point) -> BitVector:
    return layer.apply(x)


@dataclass(frozen=True)
class PerceptronNetwork:
    layers: tuple[PerceptronLayer, ...]

    def __post_init__(self) -> None:
        if not self.layers:
            raise PreconditionError("network needs at least one layer")
        for pos, (a, b) in enumerate(zip(self.layers, self.layers[1:]), 1):
            if a.output_dim != b.input_dim:
                raise DimensionError(
                    f"layer {pos} feeds {a.output_dim} bits into a layer "
                    f"expecting {b.input_dim}"
                )

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def input_dim(self) -> int:
        return self.layers[0].input_dim

    @property
    def output_dim(self) -> int:
        return self.layers[-1].output_dim

    @property
    def is_single_output(self) -> bool:
        return self.output_dim == 1

    def forward(self, x: Point) -> BitVector:
        bits = self.layers[0].apply(x)
        for layer in self.layers[1:]:
            bits = layer.apply(bits_to_point(bits))
        return bits

    def trace(self, x: Point) -> tuple[BitVector, ...]:
        """Bit vector after each layer, in order."""
        out = [self.layers[0].apply(x)]
        for layer in self.layers[1:]:
            out.append(layer.apply(bits_to_point(out[-1])))
        return tuple(out)


def architecture(network: PerceptronNetwork) -> tuple[int, ...]:
    """Input dimension followed by every layer's output dimension."""
    return (network.input_dim,) + tuple(l.output_dim for l in network.layers)


def forward(network: PerceptronNetwork, x: Point) -> BitVector:
    return network.forward(x)


def tail_network(network: PerceptronNetwork) -> PerceptronNetwork | None:
    """Layers after the first as a standalone network; None for depth 1."""
    if network.depth == 1:
        return None
    return PerceptronNetwork(network.layers[1:])


_LAYER_LINE = re.compile(r"^LAYER (\d+) (\d+)$")


def format_network(network: PerceptronNetwork) -> str:
    lines = [f"LAYERS={network.depth}"]
    for layer in network.layers:
        lines.append(f"LAYER {layer.input_dim} {layer.output_dim}")
        lines.extend(format_halfspace(u) for u in layer.units)
    return "\n".join(lines) + "\n"


def parse_network(text: str) -> PerceptronNetwork:
    rows = [
        (lineno, line.strip())
        for lineno, line in enumerate(text.splitlines(), 1)
        if line.strip()
    ]
    if not rows:
        raise ParseError("empty network file")
    head_lineno, head = rows[0]
    if not head.startswith("LAYERS="):
        raise ParseError("expected LAYERS=<k> header", head_lineno)
    try:
        count = int(head[len("LAYERS=") :])
    except ValueError:
        raise ParseError("bad layer count", head_lineno) from None
    if count < 1:
        raise ParseError("layer count must be at least 1", head_lineno)

    pos = 1
    layers = []
    for _ in range(count):
        if pos >= len(rows):
            raise ParseError("missing LAYER block", rows[-1][0])
        lineno, line = rows[pos]
        match = _LAYER_LINE.match(line)
        if match is None:
            raise ParseError("expected LAYER <in> <out> line", lineno)
        in_dim, out_dim = int(match.group(1)), int(match.group(2))
        pos += 1
        units = []
        for _ in range(out_dim):
            if pos >= len(rows):
                raise ParseError("missing half-space line", rows[-1][0])
            hs_lineno, hs_line = rows[pos]
            unit = parse_halfspace(hs_line, hs_lineno)
            if unit.form.dimension != in_dim:
                raise ParseError(
                    f"half-space dimension {unit.form.dimension} does not "
                    f"match declared layer input {in_dim}",
                    hs_lineno,
                )
            units.append(unit)
            pos += 1
        try:
            layers.append(PerceptronLayer(tuple(units)))
        except PolypercError as exc:
            raise ParseError(str(exc), lineno) from exc
    if pos != len(rows):
        raise ParseError("unexpected content after last layer", rows[pos][0])
    try:
        return PerceptronNetwork(tuple(layers))
    except PolypercError as exc:
        raise ParseError(str(exc), head_lineno) from exc
