# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for (strong) Skolem starters.

Contract and semantics mirror skolem._pysearch.run_search exactly; the
walk is iterative here so the hot loop stays in C. All modular operands
are nonnegative, so cdivision is safe.
"""

from libc.stdlib cimport calloc, free


def run_search(int n, bint strong, long long stop_after=0,
               long long collect_limit=0, bint descending=True,
               int fixed_top=0):
    """Count and optionally collect Skolem starters of Z_n.

    See skolem._pysearch.run_search for the full parameter contract; both
    kernels return identical (count, nodes, witnesses) triples.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    cdef int t = (n - 1) // 2
    cdef int top_d = t if descending else 1
    if fixed_top and not (1 <= fixed_top <= n - 1 - top_d):
        raise ValueError(
            f"fixed_top {fixed_top} out of range for difference {top_d}"
        )

    cdef unsigned char *used = <unsigned char *> calloc(n, sizeof(unsigned char))
    cdef unsigned char *sum_seen = <unsigned char *> calloc(n, sizeof(unsigned char))
    cdef int *order = <int *> calloc(t, sizeof(int))
    cdef int *placed = <int *> calloc(t, sizeof(int))
    cdef int *xs = <int *> calloc(t + 1, sizeof(int))
    if used == NULL or sum_seen == NULL or order == NULL or placed == NULL or xs == NULL:
        free(used); free(sum_seen); free(order); free(placed); free(xs)
        raise MemoryError()

    cdef long long count = 0, nodes = 0
    cdef int level, d, x, y, i, hi
    witnesses = []

    for i in range(t):
        order[i] = (t - i) if descending else (i + 1)

    try:
        level = 0
        while level >= 0:
            d = order[level]
            if placed[level]:
                # undo the current placement at this level, then advance
                x = placed[level]
                y = x + d
                used[x] = 0
                used[y] = 0
                if strong:
                    sum_seen[(x + y) % n] = 0
                placed[level] = 0
                x = x + 1
            else:
                x = fixed_top if (level == 0 and fixed_top) else 1
            hi = fixed_top if (level == 0 and fixed_top) else n - 1 - d
            while x <= hi:
                y = x + d
                if used[x] == 0 and used[y] == 0:
                    if not strong or sum_seen[(x + y) % n] == 0:
                        break
                x = x + 1
            if x > hi:
                level -= 1
                continue
            y = x + d
            used[x] = 1
            used[y] = 1
            if strong:
                sum_seen[(x + y) % n] = 1
            placed[level] = x
            xs[d] = x
            nodes += 1
            if level == t - 1:
                count += 1
                if collect_limit < 0 or len(witnesses) < collect_limit:
                    witnesses.append(tuple([xs[i] for i in range(1, t + 1)]))
                if 0 < stop_after <= count:
                    break
                # stay at this level; the next pass undoes and advances
            else:
                level += 1
    finally:
        free(used)
        free(sum_seen)
        free(order)
        free(placed)
        free(xs)

    return count, nodes, witnesses
