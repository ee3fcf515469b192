# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels mirroring _pykernels exactly.

Callers guarantee every intermediate value fits in int64 (checked in
kernels.py before dispatch); the pure backend handles anything larger.
"""

from libc.stdlib cimport free, malloc


cdef inline int _popcount(unsigned long long v) noexcept nogil:
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


cdef struct CLayer:
    int units
    int inputs
    long long *bias
    long long *weight  # unit-major, units*inputs entries
    unsigned char *lax


cdef void _free_layers(CLayer *layers, int count) noexcept:
    cdef int i
    if layers == NULL:
        return
    for i in range(count):
        free(layers[i].bias)
        free(layers[i].weight)
        free(layers[i].lax)
    free(layers)


cdef CLayer *_load_layers(list layers) except NULL:
    cdef int count = len(layers)
    cdef CLayer *out = <CLayer *>malloc(count * sizeof(CLayer))
    cdef int i, u, j, units, inputs
    if out == NULL:
        raise MemoryError()
    for i in range(count):
        out[i].bias = NULL
        out[i].weight = NULL
        out[i].lax = NULL
    try:
        for i in range(count):
            biases, weights, lax = layers[i]
            units = len(biases)
            inputs = len(weights[0]) if units else 0
            out[i].units = units
            out[i].inputs = inputs
            out[i].bias = <long long *>malloc(units * sizeof(long long))
            out[i].weight = <long long *>malloc(units * inputs * sizeof(long long))
            out[i].lax = <unsigned char *>malloc(units * sizeof(unsigned char))
            if out[i].bias == NULL or out[i].weight == NULL or out[i].lax == NULL:
                raise MemoryError()
            for u in range(units):
                out[i].bias[u] = biases[u]
                out[i].lax[u] = 1 if lax[u] else 0
                row = weights[u]
                for j in range(inputs):
                    out[i].weight[u * inputs + j] = row[j]
    except BaseException:
        _free_layers(out, count)
        raise
    return out


def tail_accepted(int n_bits, list layers):
    """Indices g in [0, 2^n_bits) whose bit vector the layers map to 1."""
    cdef int count = len(layers)
    cdef CLayer *net = _load_layers(layers)
    cdef long long *vals = NULL
    cdef int units0 = net[0].units
    cdef unsigned long long g = 0, step = 0
    cdef unsigned long long total = (<unsigned long long>1) << n_bits
    cdef unsigned long long mask, nmask
    cdef long long acc, v
    cdef int u, j, ell
    out = []
    try:
        vals = <long long *>malloc(units0 * sizeof(long long))
        if vals == NULL:
            raise MemoryError()
        for u in range(units0):
            vals[u] = net[0].bias[u]
        while True:
            mask = 0
            for u in range(units0):
                v = vals[u]
                if v > 0 or (v == 0 and net[0].lax[u]):
                    mask |= (<unsigned long long>1) << u
            for ell in range(1, count):
                nmask = 0
                for u in range(net[ell].units):
                    acc = net[ell].bias[u]
                    for j in range(net[ell].inputs):
                        if (mask >> j) & 1:
                            acc += net[ell].weight[u * net[ell].inputs + j]
                    if acc > 0 or (acc == 0 and net[ell].lax[u]):
                        nmask |= (<unsigned long long>1) << u
                mask = nmask
            if mask & 1:
                out.append(g)
            step += 1
            if step == total:
                break
            j = 0
            while not (step >> j) & 1:
                j += 1
            g ^= (<unsigned long long>1) << j
            if (g >> j) & 1:
                for u in range(units0):
                    vals[u] += net[0].weight[u * net[0].inputs + j]
            else:
                for u in range(units0):
                    vals[u] -= net[0].weight[u * net[0].inputs + j]
    finally:
        free(vals)
        _free_layers(net, count)
    out.sort()
    return out


def sweep_unit_tables(int n, list rows):
    """Exhaustive unit truth-table check; see _pykernels.sweep_unit_tables."""
    cdef unsigned long long total = (<unsigned long long>1) << n
    cdef unsigned long long b, m1, m0, p1, p0
    cdef long long bias2, v2
    cdef int is_conj
    cdef bint unit_bit, bool_bit, ok
    cdef long long checks = 0, failures = 0, first_row = -1, first_b = -1
    cdef Py_ssize_t r, row_count = len(rows)
    for r in range(row_count):
        bias2, m1, m0, p1, p0, is_conj = rows[r]
        for b in range(total):
            v2 = bias2 + 2 * (_popcount(b & m1) - _popcount(b & m0))
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
                    first_b = <long long>b
    return checks, failures, first_row, first_b
