"""Scheme-to-network synthesis, network-to-scheme extraction, three-layer
normalization, and exact equivalence checking.

Synthesis turns a scheme into a 3-layer network: the given half-spaces,
one AND unit per pair, one OR unit over the selector (or the OR/AND
dual for the intersection flavor).  Extraction walks every bit vector
the first layer can emit through the remaining layers and collects the
accepted ones as full index pairs.  Composing the two normalizes any
single-output network to depth 3 without touching its first layer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionError, PreconditionError, SchemeError, SizeCapError
from .feasibility import cell_is_empty, cell_witness
from .forms import conj_unit, disj_unit
from .geometry import HalfSpace, Point
from .indexing import IndexPair, IndexSet, Scheme
from .kernels import tail_accepted_set
from .network import (
    BitVector,
    PerceptronLayer,
    PerceptronNetwork,
    layer_of,
)

DEFAULT_ENUM_CAP = 20


@dataclass(frozen=True)
class ExtractionReport:
    scheme: Scheme
    enumerated_count: int
    accepted_count: int
    pruned_count: int = 0


@dataclass(frozen=True)
class ConstantNetwork:
    """Sentinel for networks whose tail never (or always) fires; only
    produced in permissive mode, since a constant has no unit form."""

    value: int
    input_dim: int

    def forward(self, x: Point) -> BitVector:
        if len(x) != self.input_dim:
            raise DimensionError(f"expected {self.input_dim} coordinates, got {len(x)}")
        return (self.value,)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    mode: str
    checked: int
    counterexample_bits: Optional[BitVector] = None
    counterexample_point: Optional[Point] = None


def _selector_pair(scheme: Scheme) -> IndexPair:
    return IndexPair(scheme.selector, IndexSet((), scheme.q))


def _check_synthesizable(halfspaces: Sequence[HalfSpace], scheme: Scheme) -> None:
    if scheme.ambient != len(halfspaces):
        raise SchemeError(
            f"scheme over {scheme.ambient} pairs with {len(halfspaces)} half-spaces"
        )
    if scheme.selector.is_empty:
        raise SchemeError("empty selector")
    for k, pair in enumerate(scheme.pairs, 1):
        if pair.is_empty:
            raise SchemeError(f"pair G{k} is empty and has no unit form")
        if not pair.is_consistent():
            raise SchemeError(f"pair G{k} is inconsistent")


def build_dnf_network(
    halfspaces: Sequence[HalfSpace], scheme: Scheme
) -> PerceptronNetwork:
    """3-layer network computing the union over the selector of the
    scheme's cells: half-spaces, then AND units, then one OR unit."""
    _check_synthesizable(halfspaces, scheme)
    return PerceptronNetwork(
        (
            layer_of(halfspaces),
            layer_of(conj_unit(pair) for pair in scheme.pairs),
            layer_of((disj_unit(_selector_pair(scheme)),)),
        )
    )


def build_cnf_network(
    halfspaces: Sequence[HalfSpace], scheme: Scheme
) -> PerceptronNetwork:
    """Dual synthesis: OR units per pair, one AND unit over the selector,
    computing the intersection of the scheme's cocells."""
    _check_synthesizable(halfspaces, scheme)
    return PerceptronNetwork(
        (
            layer_of(halfspaces),
            layer_of(disj_unit(pair) for pair in scheme.pairs),
            layer_of((conj_unit(_selector_pair(scheme)),)),
        )
    )


def pair_of_bits(g: int, n_bits: int) -> IndexPair:
    """Full index pair of the bit vector encoded by g (bit i-1 = bit i)."""
    ones = [i for i in range(1, n_bits + 1) if (g >> (i - 1)) & 1]
    zeros = [i for i in range(1, n_bits + 1) if not (g >> (i - 1)) & 1]
    return IndexPair.of(ones, zeros, n_bits)


def bits_of_index(g: int, n_bits: int) -> BitVector:
    return tuple((g >> i) & 1 for i in range(n_bits))


def _require_single_output(network: PerceptronNetwork) -> None:
    if not network.is_single_output:
        raise PreconditionError(
            f"network has {network.output_dim} outputs, expected 1"
        )


def _accepted_indices(
    network: PerceptronNetwork, cap: int, backend: Optional[str]
) -> list[int]:
    n1 = network.layers[0].output_dim
    if n1 > cap:
        raise SizeCapError(
            f"first layer emits {n1} bits; enumeration cap is {cap}"
        )
    if network.depth == 1:
        return [1]
    return tail_accepted_set(network.layers[1:], n1, backend)


def extract_scheme(
    network: PerceptronNetwork,
    prune: bool = False,
    cap: int = DEFAULT_ENUM_CAP,
    backend: Optional[str] = None,
) -> ExtractionReport:
    """Present the network's accepted set as a union of first-layer cells.

    Every bit vector the first layer could emit is pushed through the
    remaining layers; accepted vectors become full index pairs, all
    selected.  With ``prune``, pairs whose cells no point realizes are
    dropped (membership is unchanged either way).
    """
    _require_single_output(network)
    n1 = network.layers[0].output_dim
    accepted = _accepted_indices(network, cap, backend)
    pairs = [pair_of_bits(g, n1) for g in accepted]
    pruned = 0
    if prune:
        kept = [
            p for p in pairs if not cell_is_empty(network.layers[0].units, p)
        ]
        pruned = len(pairs) - len(kept)
        pairs = kept
    pairs.sort(key=IndexPair.sort_key)
    scheme = Scheme(
        n1, tuple(pairs), IndexSet.of(range(1, len(pairs) + 1), len(pairs))
    )
    return ExtractionReport(
        scheme=scheme,
        enumerated_count=1 << n1,
        accepted_count=len(accepted),
        pruned_count=pruned,
    )


def normalize_three_layers(
    network: PerceptronNetwork,
    permit_constant: bool = False,
    cap: int = DEFAULT_ENUM_CAP,
    backend: Optional[str] = None,
) -> PerceptronNetwork | ConstantNetwork:
    """Equivalent 3-layer network with the identical first layer.

    A network that rejects every first-layer bit vector has no unit
    presentation; strict mode raises, permissive mode hands back a
    constant-0 sentinel.
    """
    _require_single_output(network)
    report = extract_scheme(network, prune=False, cap=cap, backend=backend)
    if report.accepted_count == 0:
        if permit_constant:
            return ConstantNetwork(0, network.input_dim)
        raise SchemeError("empty scheme: the network is constantly 0")
    return build_dnf_network(network.layers[0].units, report.scheme)


def prune_empty_cells(
    halfspaces: Sequence[HalfSpace], scheme: Scheme
) -> Scheme:
    """Drop selected pairs whose cells are empty; keep mute pairs as-is."""
    keep: list[IndexPair] = []
    selected: list[int] = []
    chosen = set(scheme.selector.members)
    for k, pair in enumerate(scheme.pairs, 1):
        if k in chosen and cell_is_empty(halfspaces, pair):
            continue
        keep.append(pair)
        if k in chosen:
            selected.append(len(keep))
    return Scheme(
        scheme.ambient, tuple(keep), IndexSet.of(selected, len(keep))
    )


def _random_point(rng: random.Random, dim: int) -> Point:
    return tuple(
        Fraction(rng.randint(-24, 24), rng.randint(1, 8)) for _ in range(dim)
    )


def check_equivalence(
    left: PerceptronNetwork,
    right: PerceptronNetwork,
    mode: str = "exact",
    seed: int = 0,
    samples: int = 200,
    cap: int = DEFAULT_ENUM_CAP,
    backend: Optional[str] = None,
) -> EquivalenceResult:
    """Compare two single-output networks.

    Exact mode requires identical first layers: the tails are compared
    on every first-layer bit vector, and a disagreement only counts when
    some point actually realizes it (its cell over the shared first
    layer is nonempty); the witness point comes from that cell.  Sampled
    mode just compares forwards on a seeded batch of rational points.
    """
    _require_single_output(left)
    _require_single_output(right)
    if left.input_dim != right.input_dim:
        raise DimensionError(
            f"input dimensions differ: {left.input_dim} vs {right.input_dim}"
        )
    if mode == "sampled":
        rng = random.Random(seed)
        for count in range(1, samples + 1):
            x = _random_point(rng, left.input_dim)
            if left.forward(x) != right.forward(x):
                return EquivalenceResult(
                    equivalent=False,
                    mode=mode,
                    checked=count,
                    counterexample_point=x,
                )
        return EquivalenceResult(equivalent=True, mode=mode, checked=samples)
    if mode != "exact":
        raise PreconditionError(f"unknown equivalence mode {mode!r}")
    if left.layers[0] != right.layers[0]:
        raise PreconditionError(
            "exact mode compares tails over a shared first layer; "
            "these first layers differ"
        )
    n1 = left.layers[0].output_dim
    accepted_left = set(_accepted_indices(left, cap, backend))
    accepted_right = set(_accepted_indices(right, cap, backend))
    halfspaces = left.layers[0].units
    checked = 1 << n1
    for g in sorted(accepted_left ^ accepted_right):
        point = cell_witness(halfspaces, pair_of_bits(g, n1))
        if point is not None:
            return EquivalenceResult(
                equivalent=False,
                mode=mode,
                checked=checked,
                counterexample_bits=bits_of_index(g, n1),
                counterexample_point=point,
            )
    return EquivalenceResult(equivalent=True, mode=mode, checked=checked)
