"""Seeded generators shared by the unit and acceptance tests.

Everything takes an explicit random.Random so failures reproduce; the
sizes default to the scales the acceptance criteria use.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from polyperc import (
    HalfSpace,
    IndexPair,
    IndexSet,
    InequalityKind,
    LinearForm,
    PerceptronLayer,
    PerceptronNetwork,
    Scheme,
    conj_form,
    disj_form,
)


def rational(rng: random.Random, span: int = 12, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def point(rng: random.Random, dim: int, span: int = 24, max_den: int = 8):
    return tuple(rational(rng, span, max_den) for _ in range(dim))


def grid(dim: int, values=None):
    """Small deterministic grid; 5^dim points by default."""
    if values is None:
        values = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1))
    return [tuple(c) for c in itertools.product(values, repeat=dim)]


def halfspace(rng: random.Random, dim: int, span: int = 4) -> HalfSpace:
    while True:
        weights = [Fraction(rng.randint(-span, span)) for _ in range(dim)]
        if any(weights):
            break
    bias = rational(rng, 2 * span, 4)
    kind = InequalityKind.LAX if rng.random() < 0.5 else InequalityKind.STRICT
    return HalfSpace(LinearForm(bias, tuple(weights)), kind)


def halfspaces(rng: random.Random, count: int, dim: int) -> tuple[HalfSpace, ...]:
    return tuple(halfspace(rng, dim) for _ in range(count))


def consistent_pair(
    rng: random.Random, ambient: int, max_literals: int | None = None
) -> IndexPair:
    """Nonempty pair with disjoint components."""
    limit = max_literals or ambient
    while True:
        ones, zeros = [], []
        for i in range(1, ambient + 1):
            slot = rng.randint(0, 2)
            if slot == 1:
                ones.append(i)
            elif slot == 2:
                zeros.append(i)
        if not ones and not zeros:
            continue
        if len(ones) + len(zeros) > limit:
            continue
        return IndexPair.of(ones, zeros, ambient)


def sweep_row(pair: IndexPair, is_conj: bool) -> tuple[int, int, int, int, int, int]:
    """Kernel row for the exhaustive unit sweep.

    The doubled bias and the two weight-sign masks come from the library
    form object; the last two masks come from the raw pair, so the sweep
    cross-checks the form against an independent boolean route.
    """
    form = conj_form(pair) if is_conj else disj_form(pair)
    doubled = form.bias * 2
    assert doubled.denominator == 1  # unit biases are half-integers
    m1 = m0 = 0
    for i, w in enumerate(form.weights):
        if w > 0:
            m1 |= 1 << i
        elif w < 0:
            m0 |= 1 << i
    p1 = sum(1 << (i - 1) for i in pair.ones.members)
    p0 = sum(1 << (i - 1) for i in pair.zeros.members)
    return (int(doubled), m1, m0, p1, p0, 1 if is_conj else 0)


def scheme(
    rng: random.Random,
    ambient: int,
    max_pairs: int = 8,
    max_literals: int | None = None,
) -> Scheme:
    """Scheme with consistent nonempty pairs and a nonempty selector."""
    q = rng.randint(1, max_pairs)
    pairs = tuple(consistent_pair(rng, ambient, max_literals) for _ in range(q))
    selected = [j for j in range(1, q + 1) if rng.random() < 0.7]
    if not selected:
        selected = [rng.randint(1, q)]
    return Scheme(ambient, pairs, IndexSet.of(selected, q))


def network(
    rng: random.Random,
    input_dim: int,
    max_depth: int = 4,
    max_width: int = 8,
) -> PerceptronNetwork:
    """Random single-output network; weights are small integers, biases
    small rationals, and both inequality kinds appear."""
    depth = rng.randint(1, max_depth)
    widths = [rng.randint(1, max_width) for _ in range(depth - 1)] + [1]
    layers = []
    fan_in = input_dim
    for width in widths:
        layers.append(PerceptronLayer(tuple(halfspace(rng, fan_in) for _ in range(width))))
        fan_in = width
    return PerceptronNetwork(tuple(layers))


def nonconstant_network(
    rng: random.Random,
    input_dim: int,
    max_depth: int = 4,
    max_width: int = 8,
) -> PerceptronNetwork:
    """Network whose tail accepts at least one first-layer bit vector, so
    a 3-layer presentation exists."""
    from polyperc import extract_scheme

    while True:
        candidate = network(rng, input_dim, max_depth, max_width)
        if extract_scheme(candidate).accepted_count > 0:
            return candidate
