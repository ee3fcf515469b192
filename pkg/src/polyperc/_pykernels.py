"""Pure-python integer kernels.

Same contracts as the compiled module: inputs are denominator-cleared
integers, bit vectors travel as int masks, and the first enumerated
layer is updated incrementally along a Gray-code walk (one bit flip per
step).  Python ints make overflow impossible here, so this backend is
also the fallback for weights too large for the compiled one.
"""

from __future__ import annotations

IntLayer = tuple[list[int], list[list[int]], list[bool]]


def tail_accepted(n_bits: int, layers: list[IntLayer]) -> list[int]:
    """Indices g in [0, 2^n_bits) whose bit vector the layers map to 1.

    Bit i of g (from the low end) is input bit i+1.  ``layers`` holds
    (biases, unit-major weights, lax flags) per layer; the last layer
    must have one unit.
    """
    biases0, weights0, lax0 = layers[0]
    units0 = len(biases0)
    vals = list(biases0)
    rest = layers[1:]
    out = []
    g = 0
    step = 0
    total = 1 << n_bits
    while True:
        mask = 0
        for u in range(units0):
            v = vals[u]
            if v > 0 or (v == 0 and lax0[u]):
                mask |= 1 << u
        for biases, weights, lax in rest:
            nmask = 0
            for u, (bias, row) in enumerate(zip(biases, weights)):
                acc = bias
                m = mask
                j = 0
                while m:
                    if m & 1:
                        acc += row[j]
                    m >>= 1
                    j += 1
                if acc > 0 or (acc == 0 and lax[u]):
                    nmask |= 1 << u
            mask = nmask
        if mask & 1:
            out.append(g)
        step += 1
        if step == total:
            break
        j = (step & -step).bit_length() - 1
        g ^= 1 << j
        if (g >> j) & 1:
            for u in range(units0):
                vals[u] += weights0[u][j]
        else:
            for u in range(units0):
                vals[u] -= weights0[u][j]
    out.sort()
    return out


def sweep_unit_tables(
    n: int, rows: list[tuple[int, int, int, int, int, int]]
) -> tuple[int, int, int, int]:
    """Exhaustive truth-table check of unit forms against boolean masks.

    Each row is (bias2, m1, m0, p1, p0, is_conj): bias2/m1/m0 describe the
    doubled linear form (value 2f(b) = bias2 + 2(|b&m1| - |b&m0|)), while
    p1/p0 are the raw index masks for the independent boolean route.
    Checks, per b: unit bit equals the boolean bit, the value is an odd
    integer (a half-integer form value), and the match/miss dichotomy
    (+1 vs <= -1 for AND rows, >= +1 vs -1 for OR rows).
    Returns (checks, failures, first_bad_row, first_bad_b).
    """
    total = 1 << n
    checks = 0
    failures = 0
    first_row = -1
    first_b = -1
    for r, (bias2, m1, m0, p1, p0, is_conj) in enumerate(rows):
        for b in range(total):
            v2 = bias2 + 2 * ((b & m1).bit_count() - (b & m0).bit_count())
            unit_bit = v2 >= 0
            if is_conj:
                bool_bit = (b & p1) == p1 and (b & p0) == 0
                ok = unit_bit == bool_bit and (v2 == 1 if bool_bit else v2 <= -1)
            else:
                bool_bit = (b & p1) != 0 or (b & p0) != p0
                ok = unit_bit == bool_bit and (v2 >= 1 if bool_bit else v2 == -1)
            if ok and not v2 & 1:
                ok = False
            checks += 1
            if not ok:
                failures += 1
                if first_row < 0:
                    first_row = r
                    first_b = b
    return checks, failures, first_row, first_b
