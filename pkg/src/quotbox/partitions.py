"""Plane partitions, box-bounded counting, and monomial ideals.

A plane partition is stored as its height matrix: a tuple of rows of
positive integers, weakly decreasing along rows and down columns.  Its
boxes form a downward-closed subset of Z_{>=0}^3 (the staircase), which is
also how the bijection with finite-colength monomial ideals works: the
staircase is the set of monomials outside the ideal.

Three independent counting routes are provided for box-bounded partitions,
kept deliberately separate so they can check each other:

* direct enumeration (``count_box_partitions``),
* a row-by-row transfer-matrix DP (``box_partition_polynomial_dp``),
* the closed-form product (``quotbox.series.box_product``).

Enumeration sizes are guarded; exceeding a guard raises GuardExceeded
rather than grinding or exhausting memory.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .series import TruncatedSeries


class GuardExceeded(RuntimeError):
    """An enumeration was asked to exceed its configured size guard."""


def _triple(v) -> tuple[int, int, int]:
    v1, v2, v3 = (int(c) for c in v)
    if min(v1, v2, v3) < 1:
        raise ValueError("box sides must be >= 1")
    return v1, v2, v3


@dataclass(frozen=True)
class PlanePartition:
    """Height-matrix form of a plane partition.

    rows[a][b] is the stack height over cell (a, b).  Invariants: entries
    positive, rows weakly decreasing left to right, successive rows weakly
    smaller componentwise (hence weakly shorter).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        prev = None
        for row in self.rows:
            if not row:
                raise ValueError("empty row in height matrix")
            if any(h < 1 for h in row):
                raise ValueError("heights must be positive")
            if any(row[b] < row[b + 1] for b in range(len(row) - 1)):
                raise ValueError("row not weakly decreasing")
            if prev is not None:
                if len(row) > len(prev) or any(
                    row[b] > prev[b] for b in range(len(row))
                ):
                    raise ValueError("rows must decrease componentwise")
            prev = row

    @property
    def size(self) -> int:
        return sum(sum(row) for row in self.rows)

    def height(self, a: int, b: int) -> int:
        if 0 <= a < len(self.rows) and 0 <= b < len(self.rows[a]):
            return self.rows[a][b]
        return 0

    def boxes(self) -> frozenset[tuple[int, int, int]]:
        """The staircase: all (a, b, c) with c < height(a, b)."""
        out = set()
        for a, row in enumerate(self.rows):
            for b, h in enumerate(row):
                for c in range(h):
                    out.add((a, b, c))
        return frozenset(out)

    def fits_in_box(self, v) -> bool:
        v1, v2, v3 = _triple(v)
        if len(self.rows) > v1:
            return False
        if self.rows and len(self.rows[0]) > v2:
            return False
        if self.rows and self.rows[0][0] > v3:
            return False
        return True

    @classmethod
    def from_boxes(cls, boxes) -> "PlanePartition":
        """Rebuild from a box set; raises if it is not downward closed."""
        boxes = frozenset(tuple(map(int, b)) for b in boxes)
        heights: dict[tuple[int, int], int] = {}
        for (a, b, c) in boxes:
            if min(a, b, c) < 0:
                raise ValueError("box coordinates must be >= 0")
            heights[(a, b)] = max(heights.get((a, b), 0), c + 1)
        rows = []
        if heights:
            nrows = max(a for (a, _) in heights) + 1
            for a in range(nrows):
                ncols = max((b for (x, b) in heights if x == a), default=-1) + 1
                rows.append(tuple(heights.get((a, b), 0) for b in range(ncols)))
        pp = cls(tuple(tuple(r) for r in rows))
        if pp.boxes() != boxes:
            raise ValueError("box set is not downward closed")
        return pp

    def to_triples(self) -> list[list[int]]:
        return [list(t) for t in sorted(self.boxes())]

    def to_json(self) -> str:
        return json.dumps(self.to_triples())

    @classmethod
    def from_json(cls, text: str) -> "PlanePartition":
        return cls.from_boxes(tuple(t) for t in json.loads(text))


def _rows_fitting(bound, smax):
    """Weakly decreasing positive tuples fitting under bound, sum <= smax.

    bound is itself weakly decreasing; position b is capped by bound[b].
    """
    def rec(b, cap, budget):
        yield ()
        if b >= len(bound) or budget < 1:
            return
        top = min(cap, bound[b], budget)
        for h in range(top, 0, -1):
            for rest in rec(b + 1, h, budget - h):
                yield (h,) + rest

    for row in rec(0, smax, smax):
        yield row


def _stacks(bound, budget, max_rows):
    """Row stacks under bound with at most max_rows rows and total == budget."""
    if budget == 0:
        yield ()
        return
    if max_rows == 0:
        return
    for row in _rows_fitting(bound, budget):
        if not row:
            continue
        s = sum(row)
        for rest in _stacks(row, budget - s, max_rows - 1):
            yield (row,) + rest


def enumerate_plane_partitions(n: int, guard: int = 12) -> list[PlanePartition]:
    """All plane partitions of n, sorted by height matrix.

    Exhaustive, so intended for n up to about 12; larger n raises
    GuardExceeded unless the guard is raised explicitly.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard:
        raise GuardExceeded(f"plane partition enumeration guarded at n <= {guard}")
    bound = (n,) * max(n, 1)
    found = [PlanePartition(rows) for rows in _stacks(bound, n, max(n, 1))]
    return sorted(found, key=lambda p: p.rows)


def count_box_partitions(v, n: int) -> int:
    """Number of plane partitions of n fitting inside a v1 x v2 x v3 box.

    Counts by direct enumeration; this is the brute-force reference for
    the DP and the product formula.
    """
    v1, v2, v3 = _triple(v)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > v1 * v2 * v3:
        return 0
    bound = (v3,) * v2
    return sum(1 for _ in _stacks(bound, n, v1))


def box_partition_polynomial_dp(v, state_guard: int = 10_000_000) -> TruncatedSeries:
    """Size generating polynomial of box-bounded plane partitions via DP.

    States are weakly decreasing tuples of length v2 with entries in
    [0, v3]; the DP walks the v1 rows, each row componentwise below the
    previous.  The state count is C(v2+v3, v2) and is checked against
    state_guard before any state is generated.
    """
    v1, v2, v3 = _triple(v)
    nstates = math.comb(v2 + v3, v2)
    if nstates > state_guard:
        raise GuardExceeded(
            f"DP would need {nstates} states, guard is {state_guard}"
        )
    states = []

    def gen(prefix, cap):
        if len(prefix) == v2:
            states.append(prefix)
            return
        for h in range(cap, -1, -1):
            gen(prefix + (h,), h)

    gen((), v3)

    order = v1 * v2 * v3
    # poly[state] = generating polynomial of stacks so far ending at state
    top = (v3,) * v2
    poly = {s: [0] * (order + 1) for s in states}
    poly[top][0] = 1
    for _ in range(v1):
        new = {s: [0] * (order + 1) for s in states}
        for s in states:
            w = sum(s)
            acc = new[s]
            for t, pt in poly.items():
                if all(t[b] >= s[b] for b in range(v2)):
                    for d, c in enumerate(pt):
                        if c:
                            acc[d + w] += c
        poly = new
    total = [0] * (order + 1)
    for pt in poly.values():
        for d, c in enumerate(pt):
            total[d] += c
    return TruncatedSeries(order, tuple(total))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain of
    exponent triples).

    box=None means an ideal of the full polynomial ring in three
    variables; box=(v1,v2,v3) means an ideal of the quotient by the pure
    powers x1^v1, x2^v2, x3^v3, in which case generators live strictly
    inside the box.
    """

    generators: tuple[tuple[int, int, int], ...]
    box: tuple[int, int, int] | None = None

    def __post_init__(self):
        gens = tuple(sorted(tuple(map(int, g)) for g in self.generators))
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if min(g) < 0:
                raise ValueError("exponents must be >= 0")
        if self.box is not None:
            v = _triple(self.box)
            object.__setattr__(self, "box", v)
            for g in gens:
                if any(g[i] >= v[i] for i in range(3)):
                    raise ValueError("generator lies outside the box quotient")
        for g, h in itertools.combinations(gens, 2):
            if all(g[i] <= h[i] for i in range(3)) or all(
                h[i] <= g[i] for i in range(3)
            ):
                raise ValueError("generators must form an antichain")

    def contains(self, m) -> bool:
        """Membership of the monomial with exponent triple m."""
        m = tuple(map(int, m))
        if self.box is not None and any(m[i] >= self.box[i] for i in range(3)):
            return True  # the monomial is zero in the quotient ring
        return any(all(g[i] <= m[i] for i in range(3)) for g in self.generators)

    def _axis_bounds(self) -> tuple[int, int, int]:
        if self.box is not None:
            return self.box
        bounds = []
        for i in range(3):
            pure = [g[i] for g in self.generators
                    if g[(i + 1) % 3] == 0 and g[(i + 2) % 3] == 0]
            if not pure:
                raise ValueError("ideal has infinite colength")
            bounds.append(min(pure))
        return tuple(bounds)

    def staircase(self) -> frozenset[tuple[int, int, int]]:
        """Monomials outside the ideal; finite iff the colength is."""
        b = self._axis_bounds()
        return frozenset(
            m
            for m in itertools.product(range(b[0]), range(b[1]), range(b[2]))
            if not self.contains(m)
        )

    def colength(self) -> int:
        return len(self.staircase())

    def to_json(self) -> str:
        data = {"generators": [list(g) for g in self.generators]}
        if self.box is not None:
            data["box"] = list(self.box)
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "MonomialIdeal":
        data = json.loads(text)
        box = tuple(data["box"]) if "box" in data else None
        return cls(tuple(tuple(g) for g in data["generators"]), box)


def partition_to_monomial_ideal(pp: PlanePartition, box=None) -> MonomialIdeal:
    """Ideal whose staircase is the partition's box set.

    With box=None the partition must be nonempty on every axis only in the
    trivial sense that the resulting ideal always has finite colength; with
    a box the partition must fit inside it and the ideal lives in the
    quotient ring.
    """
    lam = pp.boxes()
    if box is not None:
        v = _triple(box)
        if not pp.fits_in_box(v):
            raise ValueError("partition does not fit in the box")
        bounds = v
    else:
        bounds = tuple(
            max((m[i] for m in lam), default=-1) + 2 for i in range(3)
        )
    gens = []
    for m in itertools.product(range(bounds[0]), range(bounds[1]), range(bounds[2])):
        if m in lam:
            continue
        preds_inside = all(
            m[i] == 0 or tuple(m[j] - (j == i) for j in range(3)) in lam
            for i in range(3)
        )
        if preds_inside:
            gens.append(m)
    return MonomialIdeal(tuple(gens), box=tuple(bounds) if box is not None else None)


def monomial_ideal_to_partition(ideal: MonomialIdeal) -> PlanePartition:
    """Inverse of partition_to_monomial_ideal: staircase as a partition."""
    return PlanePartition.from_boxes(ideal.staircase())


def enumerate_box_monomial_ideals(v, guard: int = 1 << 16) -> list[MonomialIdeal]:
    """All monomial ideals of the box quotient ring, via antichains.

    Enumerates antichains in the box poset directly, one ideal per
    antichain (the empty antichain is the zero ideal).  Guarded by the
    number of box cells: 2^cells is a crude ceiling on the search.
    """
    v1, v2, v3 = _triple(v)
    cells = sorted(itertools.product(range(v1), range(v2), range(v3)))
    if 2 ** len(cells) > guard:
        raise GuardExceeded(f"antichain search over {len(cells)} cells exceeds guard")
    out: list[MonomialIdeal] = []

    def comparable(a, b):
        return all(a[i] <= b[i] for i in range(3)) or all(
            b[i] <= a[i] for i in range(3)
        )

    def rec(idx, chosen):
        if idx == len(cells):
            out.append(MonomialIdeal(tuple(chosen), box=(v1, v2, v3)))
            return
        rec(idx + 1, chosen)
        c = cells[idx]
        if all(not comparable(c, g) for g in chosen):
            rec(idx + 1, chosen + [c])

    rec(0, [])
    return out


def count_partition_pairs(n: int, guard: int = 12) -> int:
    """Number of ordered pairs of plane partitions with total size n.

    Convolution of plane partition counts; the brute-force reference for
    the q^n coefficient of macmahon^2.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard:
        raise GuardExceeded(f"pair counting guarded at n <= {guard}")
    counts = [len(enumerate_plane_partitions(k, guard=guard)) for k in range(n + 1)]
    return sum(counts[k] * counts[n - k] for k in range(n + 1))
