"""Compare the pure-python and compiled enumeration kernels.

Runs the two hot paths (tail enumeration over all 2^n bit vectors, and
the exhaustive unit truth-table sweep) on deterministic seeded inputs,
checks the backends agree, and prints a timing table.

    python3 benchmarks/bench_kernels.py [--bits N] [--repeat K]
"""

import argparse
import random
import sys
import time
from fractions import Fraction

from polyperc import (
    HAVE_COMPILED,
    HalfSpace,
    InequalityKind,
    LinearForm,
    PerceptronLayer,
    sweep_unit_tables,
    tail_accepted_set,
)

sys.path.insert(0, "tests")
import randgen  # noqa: E402  (seeded generators shared with the test suite)


def seeded_tail(rng, n_bits, widths):
    layers = []
    fan_in = n_bits
    for width in widths:
        units = []
        for _ in range(width):
            weights = [Fraction(rng.randint(-9, 9)) for _ in range(fan_in)]
            if not any(weights):
                weights[0] = Fraction(1)
            kind = InequalityKind.LAX if rng.random() < 0.5 else InequalityKind.STRICT
            units.append(
                HalfSpace(
                    LinearForm(Fraction(rng.randint(-40, 40), 2), tuple(weights)),
                    kind,
                )
            )
        layers.append(PerceptronLayer(tuple(units)))
        fan_in = width
    return layers


def best_of(repeat, thunk):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = thunk()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def row(label, work, py_time, c_time):
    speedup = "-" if c_time is None else f"{py_time / c_time:7.1f}x"
    c_text = "-" if c_time is None else f"{c_time:9.4f}s"
    print(f"{label:<28} {work:>12}  {py_time:9.4f}s  {c_text:>10}  {speedup:>8}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bits", type=int, default=14, help="first-layer width")
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args(argv)

    rng = random.Random(97)
    tail = seeded_tail(rng, args.bits, (10, 4, 1))
    print(f"compiled backend available: {HAVE_COMPILED}")
    print(f"{'kernel':<28} {'work':>12}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")

    py_time, py_accepted = best_of(
        args.repeat, lambda: tail_accepted_set(tail, args.bits, backend="python")
    )
    c_time = None
    if HAVE_COMPILED:
        c_time, c_accepted = best_of(
            args.repeat, lambda: tail_accepted_set(tail, args.bits, backend="compiled")
        )
        assert py_accepted == c_accepted, "backends disagree on the accepted set"
    row("tail enumeration", f"2^{args.bits} vectors", py_time, c_time)

    sweep_n = 10
    pairs = [randgen.consistent_pair(rng, sweep_n) for _ in range(2000)]
    rows = [randgen.sweep_row(p, c) for p in pairs for c in (True, False)]
    checks = len(rows) * (1 << sweep_n)
    py_time, py_out = best_of(
        args.repeat, lambda: sweep_unit_tables(sweep_n, rows, backend="python")
    )
    c_time = None
    if HAVE_COMPILED:
        c_time, c_out = best_of(
            args.repeat, lambda: sweep_unit_tables(sweep_n, rows, backend="compiled")
        )
        assert py_out == c_out, "backends disagree on the sweep tallies"
    row("unit truth-table sweep", f"{checks} checks", py_time, c_time)
    return 0


if __name__ == "__main__":
    sys.exit(main())
