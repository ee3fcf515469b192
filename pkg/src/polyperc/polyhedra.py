"""Scheme-presented polyhedra: membership and a Boolean algebra on presentations.

A presentation is a half-space tuple plus a scheme plus a mode.  In DNF
mode the point set is the union over selected pairs of their cells; in
CNF mode it is the intersection of their cocells.  All operations here
are exact and purely syntactic on presentations; equality of the point
sets they denote is only ever checked pointwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DimensionError, ParseError, PreconditionError, SchemeError
from .geometry import HalfSpace, Point, format_halfspace, parse_halfspace
from .indexing import (
    IndexPair,
    IndexSet,
    Scheme,
    format_scheme,
    normalize_scheme,
    parse_scheme_lines,
)


class Mode(enum.Enum):
    DNF = "DNF"
    CNF = "CNF"


def _check_pair_ambient(halfspaces: Sequence[HalfSpace], pair: IndexPair) -> None:
    if pair.ambient != len(halfspaces):
        raise PreconditionError(
            f"pair over {pair.ambient} half-spaces applied to {len(halfspaces)}"
        )


def cell_contains(halfspaces: Sequence[HalfSpace], pair: IndexPair, x: Point) -> int:
    """Membership in the intersection of the ones half-spaces and the
    complements of the zeros half-spaces.  An inconsistent pair denotes
    the empty set; the empty pair denotes the whole space."""
    _check_pair_ambient(halfspaces, pair)
    for i in pair.ones:
        if not halfspaces[i - 1].contains(x):
            return 0
    for i in pair.zeros:
        if halfspaces[i - 1].contains(x):
            return 0
    return 1


def cocell_contains(halfspaces: Sequence[HalfSpace], pair: IndexPair, x: Point) -> int:
    """Membership in the union of the ones half-spaces and the complements
    of the zeros half-spaces.  The empty pair denotes the empty set."""
    _check_pair_ambient(halfspaces, pair)
    for i in pair.ones:
        if halfspaces[i - 1].contains(x):
            return 1
    for i in pair.zeros:
        if not halfspaces[i - 1].contains(x):
            return 1
    return 0


def bits_match_cell(bits: Sequence[int], pair: IndexPair) -> bool:
    return all(bits[i - 1] for i in pair.ones) and not any(
        bits[i - 1] for i in pair.zeros
    )


def bits_hit_cocell(bits: Sequence[int], pair: IndexPair) -> bool:
    return any(bits[i - 1] for i in pair.ones) or not all(
        bits[i - 1] for i in pair.zeros
    )


@dataclass(frozen=True)
class PresentedPolyhedron:
    halfspaces: tuple[HalfSpace, ...]
    scheme: Scheme
    mode: Mode

    def __post_init__(self) -> None:
        if not self.halfspaces:
            raise PreconditionError("a presentation needs at least one half-space")
        dims = {h.form.dimension for h in self.halfspaces}
        if len(dims) != 1:
            raise DimensionError("half-spaces of mixed dimension")
        if self.scheme.ambient != len(self.halfspaces):
            raise SchemeError(
                f"scheme over {self.scheme.ambient} pairs with "
                f"{len(self.halfspaces)} half-spaces"
            )
        for j in self.scheme.selector:
            if not self.scheme.pairs[j - 1].is_consistent():
                raise SchemeError(f"selected pair G{j} is inconsistent")

    @property
    def dimension(self) -> int:
        return self.halfspaces[0].form.dimension

    def signature(self, x: Point) -> tuple[int, ...]:
        """One containment bit per half-space."""
        return tuple(h.contains(x) for h in self.halfspaces)

    @cached_property
    def _selected_masks(self) -> tuple[tuple[int, int], ...]:
        masks = []
        for pair in self.scheme.selected_pairs():
            m1 = m0 = 0
            for i in pair.ones:
                m1 |= 1 << (i - 1)
            for i in pair.zeros:
                m0 |= 1 << (i - 1)
            masks.append((m1, m0))
        return tuple(masks)

    def member(self, x: Point) -> int:
        return self.member_of_bits(self.signature(x))

    def member_of_bits(self, bits: Sequence[int]) -> int:
        mask = 0
        for i, bit in enumerate(bits):
            if bit:
                mask |= 1 << i
        if self.mode is Mode.DNF:
            for m1, m0 in self._selected_masks:
                if mask & m1 == m1 and not mask & m0:
                    return 1
            return 0
        for m1, m0 in self._selected_masks:
            # a cocell is missed when no ones bit is set and no zeros bit is clear
            if not mask & m1 and mask & m0 == m0:
                return 0
        return 1


def member(polyhedron: PresentedPolyhedron, x: Point) -> int:
    return polyhedron.member(x)


def _same_ground(a: PresentedPolyhedron, b: PresentedPolyhedron) -> None:
    if a.halfspaces != b.halfspaces:
        raise PreconditionError("operands use different half-space tuples")


def _require_dnf(k: PresentedPolyhedron, op: str) -> None:
    if k.mode is not Mode.DNF:
        raise PreconditionError(f"{op} expects a DNF presentation")


def _dnf_of_pairs(
    halfspaces: tuple[HalfSpace, ...], pairs: Sequence[IndexPair], mode: Mode = Mode.DNF
) -> PresentedPolyhedron:
    """Presentation with the given pairs all selected, normalized."""
    n = len(halfspaces)
    raw = Scheme(n, tuple(pairs), IndexSet.of(range(1, len(pairs) + 1), len(pairs)))
    return PresentedPolyhedron(halfspaces, normalize_scheme(raw), mode)


def union(a: PresentedPolyhedron, b: PresentedPolyhedron) -> PresentedPolyhedron:
    """Union of two DNF presentations over the same half-space tuple."""
    _require_dnf(a, "union")
    _require_dnf(b, "union")
    _same_ground(a, b)
    pairs = a.scheme.selected_pairs() + b.scheme.selected_pairs()
    return _dnf_of_pairs(a.halfspaces, pairs)


def intersection(a: PresentedPolyhedron, b: PresentedPolyhedron) -> PresentedPolyhedron:
    """Intersection of two DNF presentations: pairwise merge of cells,
    dropping inconsistent merges (they denote empty cells)."""
    _require_dnf(a, "intersection")
    _require_dnf(b, "intersection")
    _same_ground(a, b)
    n = len(a.halfspaces)
    merged = []
    for ga in a.scheme.selected_pairs():
        for gb in b.scheme.selected_pairs():
            pair = IndexPair.of(
                set(ga.ones) | set(gb.ones), set(ga.zeros) | set(gb.zeros), n
            )
            if pair.is_consistent():
                merged.append(pair)
    return _dnf_of_pairs(a.halfspaces, merged)


def _distribute(n: int, clauses: Sequence[IndexPair]) -> list[IndexPair]:
    """Distribute a conjunction of literal-disjunctions into a disjunction
    of literal-conjunctions (or dually; the combinatorics are identical).

    Each clause contributes one literal per choice; a merged pair that
    needs some index both plain and complemented is dropped.  With zero
    clauses the single empty choice yields the empty pair.  Partial
    merges are deduplicated after every clause, which bounds the working
    set by 3^n instead of the full product of clause sizes.
    """
    partial = {(frozenset(), frozenset())}
    for clause in clauses:
        literals = [(i, True) for i in clause.ones] + [
            (i, False) for i in clause.zeros
        ]
        merged = set()
        for ones, zeros in partial:
            for i, plain in literals:
                if plain:
                    if i not in zeros:
                        merged.add((ones | {i}, zeros))
                elif i not in ones:
                    merged.add((ones, zeros | {i}))
        partial = merged
        if not partial:
            break
    ordered = sorted(
        partial, key=lambda t: (tuple(sorted(t[0])), tuple(sorted(t[1])))
    )
    return [IndexPair.of(ones, zeros, n) for ones, zeros in ordered]


def cnf_to_dnf(k: PresentedPolyhedron) -> PresentedPolyhedron:
    """Rewrite an intersection of cocells as a union of cells, pointwise equal."""
    if k.mode is not Mode.CNF:
        raise PreconditionError("cnf_to_dnf expects a CNF presentation")
    pairs = _distribute(len(k.halfspaces), k.scheme.selected_pairs())
    return _dnf_of_pairs(k.halfspaces, pairs, Mode.DNF)


def dnf_to_cnf(k: PresentedPolyhedron) -> PresentedPolyhedron:
    """Rewrite a union of cells as an intersection of cocells, pointwise equal."""
    _require_dnf(k, "dnf_to_cnf")
    pairs = _distribute(len(k.halfspaces), k.scheme.selected_pairs())
    return _dnf_of_pairs(k.halfspaces, pairs, Mode.CNF)


def complement_poly(k: PresentedPolyhedron) -> PresentedPolyhedron:
    """Complement of a DNF presentation, returned in DNF.

    The complement of a union of cells is the intersection of the
    complementary cocells (swap each pair), which is then distributed
    back into DNF.  Output size can grow as the product of pair sizes.
    """
    _require_dnf(k, "complement")
    swapped = [p.swapped() for p in k.scheme.selected_pairs()]
    pairs = _distribute(len(k.halfspaces), swapped)
    return _dnf_of_pairs(k.halfspaces, pairs)


def halfspace_presentation(i: int, n: int, complementary: bool = False) -> Scheme:
    """Scheme presenting the i-th half-space (or its complement) as a
    single-cell DNF polyhedron."""
    if not 1 <= i <= n:
        raise PreconditionError(f"index {i} out of range 1..{n}")
    pair = IndexPair.of((), (i,), n) if complementary else IndexPair.of((i,), (), n)
    return Scheme(n, (pair,), IndexSet.of((1,), 1))


def format_bundle(k: PresentedPolyhedron) -> str:
    lines = [format_halfspace(h) for h in k.halfspaces]
    lines.append(f"MODE={k.mode.value}")
    return "\n".join(lines) + "\n" + format_scheme(k.scheme)


def parse_bundle(text: str) -> PresentedPolyhedron:
    raw = text.splitlines()
    halfspaces = []
    mode = None
    mode_lineno = None
    for lineno, rawline in enumerate(raw, 1):
        line = rawline.strip()
        if not line:
            continue
        if line.startswith("MODE="):
            value = line[len("MODE=") :]
            if value not in ("DNF", "CNF"):
                raise ParseError(f"unknown mode {value!r}", lineno)
            mode = Mode(value)
            mode_lineno = lineno
            break
        halfspaces.append(parse_halfspace(line, lineno))
    if mode is None or mode_lineno is None:
        raise ParseError("missing MODE=DNF|CNF line")
    if not halfspaces:
        raise ParseError("bundle has no half-space lines")
    scheme = parse_scheme_lines(raw[mode_lineno:], mode_lineno + 1)
    return PresentedPolyhedron(tuple(halfspaces), scheme, mode)
