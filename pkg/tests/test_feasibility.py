import random
from fractions import Fraction

import pytest

from polyperc import (
    DimensionError,
    IndexPair,
    InequalityKind,
    InequalitySystem,
    SizeCapError,
    cell_is_empty,
    cell_witness,
    is_feasible,
    parse_halfspace,
    system_of_cell,
    witness,
)

import randgen


def constraint(line):
    h = parse_halfspace(line)
    return (h.form, h.kind)


def system(*lines):
    return InequalitySystem(tuple(constraint(s) for s in lines))


def test_golden_feasible_lax_boundary():
    # x >= 0 and -x >= 0 pin x = 0, still feasible
    s = system("0 1 >=", "0 -1 >=")
    assert is_feasible(s)
    w = witness(s)
    assert w == (Fraction(0),)


def test_golden_infeasible_strict_boundary():
    assert not is_feasible(system("0 1 >", "0 -1 >"))
    assert witness(system("0 1 >", "0 -1 >")) is None


def test_golden_infeasible_gap():
    # x >= 0, 1 - x >= 0, x - 1 > 0 has no solution
    assert not is_feasible(system("0 1 >=", "1 -1 >=", "-1 1 >"))


def of_halfspaces(hs):
    return InequalitySystem(tuple((h.form, h.kind) for h in hs))


def test_witness_satisfies_random_systems():
    rng = random.Random(11)
    feasible = 0
    for _ in range(200):
        m = rng.randint(1, 3)
        s = of_halfspaces(randgen.halfspaces(rng, rng.randint(1, 5), m))
        w = witness(s)
        if w is not None:
            feasible += 1
            assert s.satisfies(w)
            assert len(w) == m
    assert feasible > 20  # the generator is not degenerate


def test_feasible_iff_some_sample_hits_1d():
    # dense rational sampling cannot prove infeasibility, but any hit
    # must be matched by is_feasible
    rng = random.Random(23)
    samples = [Fraction(i, 4) for i in range(-40, 41)]
    for _ in range(100):
        s = of_halfspaces(randgen.halfspaces(rng, rng.randint(1, 4), 1))
        hit = any(s.satisfies((x,)) for x in samples)
        if hit:
            assert is_feasible(s)
        if not is_feasible(s):
            assert not hit


def test_monotone_under_added_constraints():
    rng = random.Random(31)
    for _ in range(60):
        m = rng.randint(1, 2)
        hs = randgen.halfspaces(rng, rng.randint(2, 5), m)
        if is_feasible(of_halfspaces(hs)):
            continue
        # supersets of an infeasible system stay infeasible
        assert not is_feasible(of_halfspaces(hs + randgen.halfspaces(rng, 2, m)))


def test_empty_system_is_feasible():
    s = InequalitySystem(())
    assert is_feasible(s)
    assert witness(s, dim=3) == (Fraction(0),) * 3


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionError):
        InequalitySystem((constraint("0 1 >="), constraint("0 1 1 >=")))


def test_system_of_cell_golden():
    hs = (parse_halfspace("0 1 >="),)
    s = system_of_cell(hs, IndexPair.of([], [1], 1))
    assert len(s.constraints) == 1
    form, kind = s.constraints[0]
    assert kind is InequalityKind.STRICT
    assert form.weights == (Fraction(-1),)
    assert system_of_cell(hs, IndexPair.of([], [], 1)).constraints == ()


def test_cell_is_empty_golden():
    hs = (parse_halfspace("0 1 >="), parse_halfspace("1 -1 >="))
    # inside the slab both constraints can hold together
    assert not cell_is_empty(hs, IndexPair.of([1, 2], [], 2))
    # x >= 0 and not(x >= 0) is empty
    assert cell_is_empty(hs, IndexPair.of([1], [1], 2))
    # x > 1 and x <= 1 via complement of H2
    hs2 = (parse_halfspace("0 1 >="), parse_halfspace("-1 1 >"))
    assert not cell_is_empty(hs2, IndexPair.of([1], [2], 2))
    assert cell_is_empty(hs2, IndexPair.of([2], [1], 2))


def test_cell_witness_lands_in_cell():
    rng = random.Random(43)
    found = 0
    for _ in range(80):
        n, m = rng.randint(1, 4), rng.randint(1, 3)
        hs = randgen.halfspaces(rng, n, m)
        g = randgen.consistent_pair(rng, n)
        w = cell_witness(hs, g)
        if w is None:
            assert cell_is_empty(hs, g)
            continue
        found += 1
        for i in g.ones.members:
            assert hs[i - 1].contains(w) == 1
        for i in g.zeros.members:
            assert hs[i - 1].contains(w) == 0
    assert found > 20


def test_cell_witness_whole_space_pair():
    hs = (parse_halfspace("0 1 1 >="),)
    assert cell_witness(hs, IndexPair.of([], [], 1)) == (Fraction(0), Fraction(0))


def test_size_cap_triggers():
    # many two-variable constraints make elimination quadratic in rows
    rng = random.Random(53)
    hs = randgen.halfspaces(rng, 40, 3)
    with pytest.raises(SizeCapError):
        is_feasible(of_halfspaces(hs), cap=10)


def test_strict_propagates_through_elimination():
    # x2 > x1 and x1 > 0 and x2 <= 0 is infeasible only because
    # strictness survives the elimination of x2
    s = system("0 -1 1 >", "0 1 0 >", "0 0 -1 >=")
    assert not is_feasible(s)
    lax = system("0 -1 1 >=", "0 1 0 >=", "0 0 -1 >=")
    assert is_feasible(lax)
    assert witness(lax) == (Fraction(0), Fraction(0))
