"""Finite-semigroup kernel: Cayley tables and element-level computations.

Elements are dense indices 0..n-1; the row index of a table is the left
operand.  Every function here is a pure function of immutable inputs and is
safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional


class MalformedTableError(ValueError):
    """The given rows are not a well-formed n-by-n table over [0, n)."""


class PreconditionError(ValueError):
    """An operation was called outside its contract."""


class CayleyTable:
    """An n-by-n operation table over element indices 0..n-1.

    Shape and entry ranges are checked on construction.  Associativity is
    not: run `validate` once and the remaining operations assume it.
    """

    __slots__ = ("n", "op")

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0:
            raise MalformedTableError("empty table")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MalformedTableError(
                    "row %d has %d entries, expected %d" % (i, len(row), n))
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise MalformedTableError(
                        "entry at row %d, column %d is %r, not an integer in [0, %d)"
                        % (i, j, v, n))
        self.n = n
        self.op = rows

    def mul(self, x, y):
        return self.op[x][y]

    def power(self, x, k):
        """x to the k-th power, k >= 1."""
        if k < 1:
            raise PreconditionError("power exponent must be >= 1")
        acc = x
        for _ in range(k - 1):
            acc = self.op[acc][x]
        return acc

    @property
    def elements(self):
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def __repr__(self):
        return "CayleyTable(%r)" % ([list(r) for r in self.op],)


@dataclass(frozen=True)
class ValidationReport:
    associative: bool
    commutative: bool
    assoc_witness: Optional[tuple] = None   # first (x, y, z) with (xy)z != x(yz)
    comm_witness: Optional[tuple] = None    # first (x, y) with xy != yx


class MonogenicData(NamedTuple):
    """Shape of the power sequence x, x^2, x^3, ... of a single element.

    index:  least i >= 1 with x^(i+period) = x^i
    period: cycle length of the power sequence
    pi:     the unique idempotent among the powers of x
    """
    index: int
    period: int
    pi: int


def _check_element(table, x, what="element"):
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < table.n:
        raise PreconditionError("%s %r out of range [0, %d)" % (what, x, table.n))


def _check_subset(table, subset):
    for x in subset:
        _check_element(table, x, "subset member")
    return frozenset(subset)


def validate(table: CayleyTable) -> ValidationReport:
    """Exhaustive associativity and commutativity check.

    Witnesses are the lexicographically first violating triple/pair, which
    keeps reports deterministic.
    """
    n = table.n
    op = table.op
    assoc_witness = None
    for x in range(n):
        if assoc_witness:
            break
        for y in range(n):
            if assoc_witness:
                break
            xy = op[x][y]
            row_x = op[x]
            for z in range(n):
                if op[xy][z] != row_x[op[y][z]]:
                    assoc_witness = (x, y, z)
                    break
    comm_witness = None
    for x in range(n):
        if comm_witness:
            break
        for y in range(x + 1, n):
            if op[x][y] != op[y][x]:
                comm_witness = (x, y)
                break
    return ValidationReport(assoc_witness is None, comm_witness is None,
                            assoc_witness, comm_witness)


def is_commutative(table):
    return validate(table).commutative


def idempotents(table) -> frozenset:
    """The fixed points of squaring."""
    return frozenset(x for x in table.elements if table.op[x][x] == x)


def natural_le(table, e, f) -> bool:
    """e <= f in the natural order on idempotents: ef = e."""
    _check_element(table, e)
    _check_element(table, f)
    if table.op[e][e] != e:
        raise PreconditionError("element %d is not idempotent" % e)
    if table.op[f][f] != f:
        raise PreconditionError("element %d is not idempotent" % f)
    return table.op[e][f] == e


def max_chain_length(table) -> tuple:
    """Size of a largest chain, with one witness.

    A chain is a subset in which the product of any two distinct members
    lands back in the pair (both multiplication orders).  Branch and bound
    over subsets; exponential in the worst case, fine at desk scale.  The
    witness is the lexicographically least chain of maximal size.
    """
    n = table.n
    op = table.op
    best_size = 0
    best = ()

    def extend(chosen, start):
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
        for x in range(start, n):
            if len(chosen) + (n - x) <= best_size:
                break
            ok = True
            for c in chosen:
                if op[c][x] not in (c, x) or op[x][c] not in (c, x):
                    ok = False
                    break
            if ok:
                chosen.append(x)
                extend(chosen, x + 1)
                chosen.pop()

    extend([], 0)
    return best_size, frozenset(best)


def center(table) -> frozenset:
    """Elements commuting with everything; the full set iff commutative."""
    n = table.n
    op = table.op
    return frozenset(z for z in range(n)
                     if all(op[z][x] == op[x][z] for x in range(n)))


def _right_ideal(table, a):
    # aS^1 = {a} | aS, with the identity adjoined virtually
    return frozenset((a,)) | frozenset(table.op[a])


def _left_ideal(table, a):
    op = table.op
    return frozenset((a,)) | frozenset(op[x][a] for x in range(table.n))


def h_class(table, a) -> frozenset:
    """Elements generating the same principal left and right ideals as a.

    For an idempotent e this is the maximal subgroup containing e.
    """
    _check_element(table, a)
    ra = _right_ideal(table, a)
    la = _left_ideal(table, a)
    return frozenset(x for x in table.elements
                     if _right_ideal(table, x) == ra and _left_ideal(table, x) == la)


def clifford_part(table) -> frozenset:
    """Union of the maximal subgroups (H-classes of idempotents)."""
    out = frozenset()
    for e in sorted(idempotents(table)):
        out |= h_class(table, e)
    return out


def monogenic_data(table, x) -> MonogenicData:
    """Index, period and idempotent of the power sequence of x."""
    _check_element(table, x)
    op = table.op
    powers = [x]
    seen = {x: 1}
    while True:
        nxt = op[powers[-1]][x]
        k = len(powers) + 1
        if nxt in seen:
            index = seen[nxt]
            period = k - index
            break
        seen[nxt] = k
        powers.append(nxt)
    cycle = powers[index - 1:]
    pi = next(e for e in cycle if op[e][e] == e)
    return MonogenicData(index, period, pi)


def pi_map(table) -> tuple:
    """Map each element to the unique idempotent among its powers.

    Requires every idempotent to be central; with that hypothesis the map
    is a homomorphism onto the idempotents, and without it the conclusion
    can fail, so we reject instead of guessing.
    """
    z = center(table)
    for e in sorted(idempotents(table)):
        if e not in z:
            raise PreconditionError("idempotent %d is not central" % e)
    return tuple(monogenic_data(table, x).pi for x in table.elements)


def root_inf(table, subset) -> frozenset:
    """All x some positive power of which lands in the subset."""
    subset = _check_subset(table, subset)
    op = table.op
    out = []
    for x in table.elements:
        acc = x
        seen = set()
        while acc not in seen:
            if acc in subset:
                out.append(x)
                break
            seen.add(acc)
            acc = op[acc][x]
    return frozenset(out)


def z_sets(table, e, n_max) -> list:
    """Central elements whose k-th power lies in the maximal subgroup at e,
    for k = 1..n_max.  The returned sequence is ascending."""
    _check_element(table, e)
    if table.op[e][e] != e:
        raise PreconditionError("element %d is not idempotent" % e)
    if not isinstance(n_max, int) or n_max < 1:
        raise PreconditionError("n_max must be a positive integer")
    he = h_class(table, e)
    zc = sorted(center(table))
    op = table.op
    out = []
    power = {z: z for z in zc}
    for _ in range(n_max):
        out.append(frozenset(z for z in zc if power[z] in he))
        power = {z: op[power[z]][z] for z in zc}
    return out


def group_exponent(table, e) -> int:
    """Least k >= 1 with x^k = e for every member of the subgroup at e."""
    _check_element(table, e)
    if table.op[e][e] != e:
        raise PreconditionError("element %d is not idempotent" % e)
    he = h_class(table, e)
    op = table.op
    exp = 1
    for x in he:
        order = 1
        acc = x
        while acc != e:
            acc = op[acc][x]
            order += 1
        exp = math.lcm(exp, order)
    return exp


# -- table builders ----------------------------------------------------------

def cyclic_table(m) -> CayleyTable:
    """Z_m, written additively."""
    return CayleyTable([[(i + j) % m for j in range(m)] for i in range(m)])


def chain_table(m) -> CayleyTable:
    """The m-element chain semilattice (min)."""
    return CayleyTable([[min(i, j) for j in range(m)] for i in range(m)])


def null_table(m) -> CayleyTable:
    """All products equal 0."""
    return CayleyTable([[0] * m for _ in range(m)])


def taimanov_table(m) -> CayleyTable:
    """Distinct elements >= 2 multiply to 1, everything else to 0."""
    return CayleyTable([[1 if i != j and i >= 2 and j >= 2 else 0
                         for j in range(m)] for i in range(m)])


def antichain_zero_table(m) -> CayleyTable:
    """A bottom element 0 below m-1 pairwise incomparable idempotents."""
    return CayleyTable([[i if i == j and i > 0 else 0 for j in range(m)]
                        for i in range(m)])


def product_table(a: CayleyTable, b: CayleyTable) -> CayleyTable:
    """Direct product; index (x, y) is encoded as x * b.n + y."""
    bn = b.n
    rows = []
    for x in range(a.n):
        for y in range(bn):
            rows.append([a.op[x][u] * bn + b.op[y][v]
                         for u in range(a.n) for v in range(bn)])
    return CayleyTable(rows)


def adjoin_zero(table: CayleyTable) -> CayleyTable:
    """Fresh absorbing element at index 0; old elements shift up by one."""
    n = table.n
    rows = [[0] * (n + 1)]
    for i in range(n):
        rows.append([0] + [table.op[i][j] + 1 for j in range(n)])
    return CayleyTable(rows)


def adjoin_identity(table: CayleyTable) -> CayleyTable:
    """Fresh two-sided identity at the last index; old indices unchanged."""
    n = table.n
    rows = [list(table.op[i]) + [i] for i in range(n)]
    rows.append(list(range(n + 1)))
    return CayleyTable(rows)


def relabel(table: CayleyTable, perm) -> CayleyTable:
    """Apply a permutation of the element indices."""
    n = table.n
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    return CayleyTable([[perm[table.op[inv[i]][inv[j]]] for j in range(n)]
                        for i in range(n)])


def restrict(table: CayleyTable, subset) -> tuple:
    """Subtable on a product-closed subset, with the index embedding.

    Returns (subtable, embedding) where embedding[new] = old.
    """
    subset = sorted(_check_subset(table, subset))
    if not subset:
        raise PreconditionError("cannot restrict to the empty set")
    pos = {x: i for i, x in enumerate(subset)}
    rows = []
    for x in subset:
        row = []
        for y in subset:
            v = table.op[x][y]
            if v not in pos:
                raise PreconditionError(
                    "subset is not closed: %d * %d = %d escapes" % (x, y, v))
            row.append(pos[v])
        rows.append(row)
    return CayleyTable(rows), tuple(subset)
