"""Pure-Python enumeration kernel.

Drop-in twin of the compiled module `_enum_cy`; the selector in `_kernel`
prefers the compiled one.  Tables travel as flat row-major tuples.
"""

from itertools import permutations


def commutative_tables(n):
    """All commutative associative tables on 0..n-1, as flat tuples.

    Backtracking over the upper-triangle cells in row-major order with
    value order 0..n-1, pruning on every fully determined triple, so the
    output order is deterministic.
    """
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    ncells = len(cells)
    op = [[-1] * n for _ in range(n)]
    rng = range(n)
    out = []

    def determined_ok():
        for x in rng:
            rx = op[x]
            for y in rng:
                xy = rx[y]
                if xy < 0:
                    continue
                ry = op[y]
                rxy = op[xy]
                for z in rng:
                    yz = ry[z]
                    if yz < 0:
                        continue
                    a = rxy[z]
                    if a < 0:
                        continue
                    b = rx[yz]
                    if 0 <= b != a:
                        return False
        return True

    def fill(k):
        if k == ncells:
            out.append(tuple(v for row in op for v in row))
            return
        i, j = cells[k]
        for v in rng:
            op[i][j] = v
            op[j][i] = v
            if determined_ok():
                fill(k + 1)
        op[i][j] = -1
        op[j][i] = -1

    fill(0)
    return out


def is_canonical(flat, n):
    """True iff no relabeling of the table is lexicographically smaller."""
    for perm in permutations(range(n)):
        inv = [0] * n
        for a, b in enumerate(perm):
            inv[b] = a
        for i in range(n):
            base = inv[i] * n
            for j in range(n):
                v = perm[flat[base + inv[j]]]
                w = flat[i * n + j]
                if v != w:
                    if v < w:
                        return False
                    break
            else:
                continue
            break
    return True


def canonical_form(flat, n):
    """Lexicographically least relabeling of the table."""
    best = tuple(flat)
    for perm in permutations(range(n)):
        inv = [0] * n
        for a, b in enumerate(perm):
            inv[b] = a
        cand = tuple(perm[flat[inv[i] * n + inv[j]]]
                     for i in range(n) for j in range(n))
        if cand < best:
            best = cand
    return best
