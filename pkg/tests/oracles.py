"""Independent reference computations used by the tests.

Nothing here imports the package's linear algebra or search code: rank uses
Python integers as bitsets, codes are enumerated exhaustively, and the design
is rebuilt straight from the block formula.
"""

from itertools import combinations


def x2(n, j):
    return 2 * j + 1 if j < n else 2 * (j - n)


def blocks_by_formula(n):
    """Blocks B_ja in orbit-major order, evaluated directly from the formula."""
    m = 2 * n
    return [
        (a, (j + a) % m + m, (x2(n, j) + a) % m + 2 * m)
        for j in range(m) if j != n
        for a in range(m)
    ]


def dense_h(n):
    bl = blocks_by_formula(n)
    return [[1 if i in b else 0 for b in bl] for i in range(6 * n)]


def int_rank(rows):
    """GF(2) rank of rows given as 0/1 lists, via an XOR basis keyed by top bit."""
    basis = {}
    for r in rows:
        v = int("".join(map(str, r)), 2) if r else 0
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def columns_as_ints(h_rows):
    cols = len(h_rows[0])
    return [sum(h_rows[i][c] << i for i in range(len(h_rows))) for c in range(cols)]


def min_weight_by_subsets(h_rows, max_weight):
    """Smallest w <= max_weight such that some w columns XOR to zero, else None."""
    cols = columns_as_ints(h_rows)
    for w in range(1, max_weight + 1):
        for s in combinations(range(len(cols)), w):
            acc = 0
            for c in s:
                acc ^= cols[c]
            if acc == 0:
                return w, list(s)
    return None


def codewords_by_span(h_rows):
    """All codewords as column-index bitmasks, by Gaussian elimination on ints then span."""
    cols = columns_as_ints(h_rows)
    ncols = len(cols)
    # null space: reduce the augmented vectors (column value, unit marker)
    basis = []  # list of (value, marker)
    null = []
    for c, val in enumerate(cols):
        mark = 1 << c
        for bv, bm in basis:
            if val ^ bv < val:
                val ^= bv
                mark ^= bm
        if val == 0:
            null.append(mark)
        else:
            basis.append((val, mark))
            basis.sort(key=lambda t: -t[0])
    words = [0]
    for v in null:
        words += [w ^ v for w in words]
    return words, ncols


def has_block_triangle(col_support):
    """True iff three columns pairwise share a row, at three distinct rows.

    With no 4-cycles this is exactly the condition for a 6-cycle in the
    Tanner graph.
    """
    by_row = {}
    for c, s in enumerate(col_support):
        for r in s:
            by_row.setdefault(r, []).append(c)
    sets = [set(s) for s in col_support]
    for b1, s1 in enumerate(sets):
        for p in s1:
            for b2 in by_row[p]:
                if b2 <= b1:
                    continue
                for q in sets[b2] - {p}:
                    if q in s1:
                        continue
                    for b3 in by_row[q]:
                        if b3 in (b1, b2):
                            continue
                        shared = sets[b3] & s1
                        if shared - {p, q}:
                            return True
    return False
