"""Torus-fixed locus of finite-colength graded quotients of R0.

A torus-fixed quotient of colength n is the same thing as a graded
submodule F of R0 with total codimension n.  Group submodules by their
coprofile: the map  w  ->  dim (R0)_w - dim F_w  restricted to its finite
support.  Each coprofile stratum is cut out inside a product of projective
lines, one P^1 for every support weight where the fiber is 2-dimensional
and exactly one dimension is removed (there F_w is a line in C^2; at every
other support weight F_w is forced to a fixed subspace by dimension
count).

Valid supports satisfy a reachability rule: every support weight is a
generator weight or has a predecessor w - e_k in the support.  This is
forced by the module structure, since away from the generator degrees the
fiber of R0 is spanned by the images of its three predecessors, so a
dimension drop at w entails one at some predecessor.

The constraint system of a stratum records how multiplication maps tie
the line variables together: forcings to a fixed line, rank-2 links
(target line determined by source line), rank-1 disjunctions (source in
the kernel or target equal to the image), or outright infeasibility.
``stratum_euler`` evaluates the Euler characteristic of the stratum
exactly by propagating forcings, resolving disjunctions by inclusion and
exclusion, and contracting rank-2 links; leftover loops contribute the
number of common fixed lines of the loop maps, computed as common
projective roots of binary quadratics, and free lines contribute a factor
of 2 each.

``stratum_euler_oracle_fp`` recomputes the same number independently by
counting points over several prime fields and interpolating the count
polynomial at 1.  Everything is exact integer arithmetic; enumeration
depth is guarded.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import GuardExceeded
from .reflexive import ReflexiveParams, fiber_dim, mult_matrix
from .series import TruncatedSeries

Weight = tuple[int, int, int]
Point = tuple[int, int]

_E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_ID = ((1, 0), (0, 1))


def _normalize_point(x: int, y: int) -> Point:
    """Primitive representative of [x : y], first nonzero entry positive."""
    if x == 0 and y == 0:
        raise ValueError("(0, 0) does not define a projective point")
    g = math.gcd(abs(x), abs(y))
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return (x, y)


def _apply(mat, pt):
    return tuple(sum(row[j] * pt[j] for j in range(len(pt))) for row in mat)


def _adj(m):
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def _rank(mat) -> int:
    rows = [r for r in mat if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            for a in range(ncols):
                for b in range(a + 1, ncols):
                    if rows[i][a] * rows[j][b] - rows[i][b] * rows[j][a]:
                        return 2
    return 1


def _kernel_line(mat) -> Point:
    """Kernel of a rank-1 matrix with two columns."""
    for (a, b) in mat:
        if a or b:
            return _normalize_point(b, -a)
    raise ValueError("zero matrix has no kernel line")


def _image_line(mat) -> Point:
    """Image of a rank-1 matrix with two rows."""
    for c in range(len(mat[0])):
        x, y = mat[0][c], mat[1][c]
        if x or y:
            return _normalize_point(x, y)
    raise ValueError("zero matrix has no image line")


@dataclass(frozen=True)
class Coprofile:
    """Finitely supported dimension-drop profile, entries sorted by weight."""

    entries: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        norm = tuple(
            (tuple(int(c) for c in w), int(c0)) for (w, c0) in self.entries
        )
        object.__setattr__(self, "entries", norm)
        weights = [w for w, _ in norm]
        if weights != sorted(weights):
            raise ValueError("entries must be sorted by weight")
        if len(set(weights)) != len(weights):
            raise ValueError("duplicate weight in coprofile")
        if any(c < 1 for _, c in norm):
            raise ValueError("dimension drops must be >= 1")
        if any(min(w) < 0 for w in weights):
            raise ValueError("weights must be >= 0")

    @property
    def n(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def support(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    def to_jsonable(self):
        return [[list(w), c] for (w, c) in self.entries]

    @classmethod
    def from_jsonable(cls, data) -> "Coprofile":
        return cls(tuple((tuple(w), c) for (w, c) in data))


def enumerate_coprofiles(v, n: int, guard: int = 5) -> list["Coprofile"]:
    """All coprofiles of total drop n for the module attached to v.

    Supports grow inside the window [0, max(v)+n]^3 by adding weights in
    increasing (coordinate sum, lex) order; a weight is addable when it is
    a generator weight or has a predecessor already in the support.  Each
    valid support appears exactly once this way.  Drops are then
    distributed with 1 <= c(w) <= fiber dimension.
    """
    params = ReflexiveParams.of(v)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard:
        raise GuardExceeded(f"coprofile enumeration guarded at n <= {guard}")
    if n == 0:
        return [Coprofile(())]

    gens = set(params.generator_weights())
    hi = max(params.triple) + n
    universe = []
    dims = {}
    for w in itertools.product(range(hi + 1), repeat=3):
        d = fiber_dim(params, w)
        if d:
            universe.append(w)
            dims[w] = d
    universe.sort(key=lambda w: (sum(w), w))

    supports: list[tuple[Weight, ...]] = []

    def grow(chosen: list[Weight], members: set[Weight], start: int) -> None:
        if chosen:
            supports.append(tuple(chosen))
        if len(chosen) == n:
            return
        for idx in range(start, len(universe)):
            w = universe[idx]
            addable = w in gens or any(
                (w[0] - e[0], w[1] - e[1], w[2] - e[2]) in members for e in _E
            )
            if not addable:
                continue
            chosen.append(w)
            members.add(w)
            grow(chosen, members, idx + 1)
            chosen.pop()
            members.remove(w)

    grow([], set(), 0)

    out: list[Coprofile] = []
    for sup in supports:
        # support stays inside the enumeration window by construction
        assert all(max(w) <= hi for w in sup)
        caps = [dims[w] for w in sup]
        if len(sup) > n or sum(caps) < n:
            continue
        sorted_sup = sorted(sup)
        sorted_caps = [dims[w] for w in sorted_sup]

        def distribute(i: int, remaining: int, acc: list[int]) -> None:
            if i == len(sorted_sup):
                if remaining == 0:
                    out.append(
                        Coprofile(tuple(zip(sorted_sup, tuple(acc))))
                    )
                return
            slots_after = len(sorted_sup) - i - 1
            top = min(sorted_caps[i], remaining - slots_after)
            for c in range(1, top + 1):
                acc.append(c)
                distribute(i + 1, remaining - c, acc)
                acc.pop()

        distribute(0, n, [])
    return sorted(out, key=lambda p: p.entries)


@dataclass(frozen=True)
class IsoLink:
    """Target line is the image of the source line under a rank-2 map."""

    source: Weight
    target: Weight
    direction: int
    matrix: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class RankOneLink:
    """Source line in the kernel, or target line equal to the image."""

    source: Weight
    target: Weight
    direction: int
    matrix: tuple[tuple[int, int], tuple[int, int]]
    kernel: Point
    image: Point


@dataclass
class ConstraintSystem:
    """Incidence constraints of one coprofile stratum.

    variables lists the weights whose F_w is a free line (a P^1 each);
    fixed_lines are forcings already implied by full neighboring fibers;
    infeasible is set when a required containment can never hold.
    """

    variables: tuple[Weight, ...]
    fixed_lines: dict[Weight, Point]
    iso_links: tuple[IsoLink, ...]
    rank_one_links: tuple[RankOneLink, ...]
    infeasible: bool = False


def profile_constraint_system(v, profile: Coprofile) -> ConstraintSystem:
    """Build the constraint system of one coprofile.

    For every support weight w and direction k the multiplication map from
    w - e_k must carry F_{w-e_k} into F_w.  Depending on which side is a
    full fiber, a forced subspace or a free line, this yields nothing, a
    forcing, a rank-2 link, a rank-1 disjunction, or infeasibility.
    """
    params = ReflexiveParams.of(v)
    drops = profile.as_dict()
    variables = []
    fixed: dict[Weight, Point] = {}
    isos: list[IsoLink] = []
    rank_ones: list[RankOneLink] = []
    infeasible = False

    for w, c in profile.entries:
        d = fiber_dim(params, w)
        if c > d:
            raise ValueError(f"drop {c} exceeds fiber dimension {d} at {w}")
        if d == 2 and c == 1:
            variables.append(w)

    def force(wt: Weight, pt: Point) -> None:
        nonlocal infeasible
        cur = fixed.get(wt)
        if cur is None:
            fixed[wt] = pt
        elif cur != pt:
            infeasible = True

    for wt, ct in profile.entries:
        dt = fiber_dim(params, wt)
        free_t = dt - ct
        for k in (1, 2, 3):
            ws = (wt[0] - _E[k - 1][0], wt[1] - _E[k - 1][1], wt[2] - _E[k - 1][2])
            if min(ws) < 0:
                continue
            ds = fiber_dim(params, ws)
            if ds == 0:
                continue
            cs = drops.get(ws, 0)
            if ds - cs == 0:
                continue  # source fiber fully removed, no condition
            mat = mult_matrix(params, ws, k).matrix
            r = _rank(mat)
            if r == 0:
                continue
            if cs == 0:
                # full source fiber pushes its whole image into F_wt
                if free_t == 0 or r == 2:
                    infeasible = True
                else:
                    force(wt, _image_line(mat))
            else:
                # source is a free line variable (ds == 2, cs == 1)
                if free_t == 0:
                    if r == 2:
                        infeasible = True
                    else:
                        force(ws, _kernel_line(mat))
                elif r == 2:
                    isos.append(IsoLink(ws, wt, k, mat))
                else:
                    rank_ones.append(
                        RankOneLink(
                            ws, wt, k, mat, _kernel_line(mat), _image_line(mat)
                        )
                    )

    return ConstraintSystem(
        variables=tuple(sorted(variables)),
        fixed_lines=fixed,
        iso_links=tuple(sorted(isos, key=lambda l: (l.source, l.target, l.direction))),
        rank_one_links=tuple(
            sorted(rank_ones, key=lambda l: (l.source, l.target, l.direction))
        ),
        infeasible=infeasible,
    )


def _propagate(fixed, isos, rank_ones):
    """Push forcings through links until stable.

    Returns (fixed, isos, rank_ones) with consumed links removed, or None
    when a contradiction appears.
    """
    changed = True
    while changed:
        changed = False
        keep = []
        for (s, t, m) in isos:
            ps, pt = fixed.get(s), fixed.get(t)
            if ps is None and pt is None:
                keep.append((s, t, m))
                continue
            if ps is not None:
                q = _normalize_point(*_apply(m, ps))
                if pt is None:
                    fixed[t] = q
                    changed = True
                elif pt != q:
                    return None
            else:
                fixed[s] = _normalize_point(*_apply(_adj(m), pt))
                changed = True
        isos = keep
        keep = []
        for (s, t, m, ker, im) in rank_ones:
            ps, pt = fixed.get(s), fixed.get(t)
            if (ps is not None and ps == ker) or (pt is not None and pt == im):
                continue  # satisfied, drop
            if ps is None and pt is None:
                keep.append((s, t, m, ker, im))
                continue
            if ps is not None and pt is not None:
                return None  # neither disjunct holds
            if ps is not None:
                fixed[t] = im
            else:
                fixed[s] = ker
            changed = True
        rank_ones = keep
    return fixed, isos, rank_ones


def _loop_form(u, w):
    """Binary quadratic vanishing where u(p) is parallel to w(p)."""
    a = u[0][0] * w[1][0] - u[1][0] * w[0][0]
    b = (
        u[0][0] * w[1][1]
        + u[0][1] * w[1][0]
        - u[1][0] * w[0][1]
        - u[1][1] * w[0][0]
    )
    c = u[0][1] * w[1][1] - u[1][1] * w[0][1]
    return (a, b, c)


def _poly_gcd(p, q):
    """Gcd of two integer polynomials (coefficient tuples, high power
    first), returned primitive with positive leading coefficient."""

    def strip(r):
        r = list(r)
        while r and r[0] == 0:
            r.pop(0)
        return r

    fa = [Fraction(c) for c in strip(p)]
    fb = [Fraction(c) for c in strip(q)]
    while fb:
        # remainder of fa by fb
        rem = fa[:]
        while len(rem) >= len(fb) and rem:
            factor = rem[0] / fb[0]
            for i in range(len(fb)):
                rem[i] -= factor * fb[i]
            rem.pop(0)
            while rem and rem[0] == 0:
                rem.pop(0)
        fa, fb = fb, rem
    den = math.lcm(*(c.denominator for c in fa)) if fa else 1
    ints = [int(c * den) for c in fa]
    content = math.gcd(*(abs(c) for c in ints)) if ints else 0
    if content:
        ints = [c // content for c in ints]
    if ints and ints[0] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _common_fixed_lines(forms) -> int:
    """Distinct common projective roots of nonzero binary quadratics.

    Works over the complex numbers: a quadratic with nonzero discriminant
    has two roots whether or not they are rational.
    """
    at_infinity = all(f[0] == 0 for f in forms)
    # gcd of a form with itself just strips and normalizes it
    acc = _poly_gcd(forms[0], forms[0])
    for f in forms[1:]:
        acc = _poly_gcd(acc, f)
    finite = 0
    if len(acc) == 3:
        a, b, c = acc
        finite = 2 if b * b - 4 * a * c != 0 else 1
    elif len(acc) == 2:
        finite = 1
    return finite + (1 if at_infinity else 0)


def stratum_euler(cs: ConstraintSystem) -> int:
    """Exact Euler characteristic of one coprofile stratum."""
    if cs.infeasible:
        return 0
    isos = tuple((l.source, l.target, l.matrix) for l in cs.iso_links)
    rank_ones = tuple(
        (l.source, l.target, l.matrix, l.kernel, l.image)
        for l in cs.rank_one_links
    )
    memo: dict = {}
    return _stratum_euler_rec(
        tuple(sorted(cs.variables)), dict(cs.fixed_lines), isos, rank_ones, memo
    )


def _stratum_euler_rec(variables, fixed, isos, rank_ones, memo) -> int:
    state = _propagate(dict(fixed), list(isos), list(rank_ones))
    if state is None:
        return 0
    fixed, isos, rank_ones = state
    key = (
        tuple(sorted(fixed.items())),
        tuple(sorted(isos)),
        tuple(sorted(rank_ones)),
        variables,
    )
    if key in memo:
        return memo[key]

    if rank_ones:
        s, t, m, ker, im = sorted(rank_ones)[0]
        rest = tuple(r for r in rank_ones if r != (s, t, m, ker, im))
        left = _stratum_euler_rec(variables, {**fixed, s: ker}, isos, rest, memo)
        right = _stratum_euler_rec(variables, {**fixed, t: im}, isos, rest, memo)
        if s == t:
            both = left if ker == im else 0
        else:
            both = _stratum_euler_rec(
                variables, {**fixed, s: ker, t: im}, isos, rest, memo
            )
        memo[key] = left + right - both
        return memo[key]

    # only rank-2 links remain, and only between unfixed variables
    unfixed = [w for w in variables if w not in fixed]
    parent = {w: w for w in unfixed}
    trans = {w: _ID for w in unfixed}

    def find(x):
        if parent[x] == x:
            return x
        root = find(parent[x])
        if parent[x] != root:
            trans[x] = _mat_mul(trans[x], trans[parent[x]])
            parent[x] = root
        return root

    for (s, t, m) in isos:
        rs, rt = find(s), find(t)
        if rs != rt:
            # point(t) = m.point(s) glues the two trees
            trans[rt] = _mat_mul(_adj(trans[t]), _mat_mul(m, trans[s]))
            parent[rt] = rs

    forms: dict[Weight, list] = {}
    for (s, t, m) in isos:
        root = find(s)
        assert find(t) == root  # compresses t's path before reading trans[t]
        form = _loop_form(trans[t], _mat_mul(m, trans[s]))
        if form != (0, 0, 0):
            forms.setdefault(root, []).append(form)

    result = 1
    for root in {find(x) for x in unfixed}:
        fs = forms.get(root)
        if not fs:
            result *= 2
        else:
            cnt = _common_fixed_lines(fs)
            if cnt == 0:
                result = 0
                break
            result *= cnt
    memo[key] = result
    return result


def _interp_coeffs(xs, ys):
    """Lagrange interpolation coefficients, low power first, as Fractions."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            # multiply basis by (x - xs[j])
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] -= c * xs[j]
                nxt[d + 1] += c
            basis = nxt
            denom *= Fraction(xs[i] - xs[j])
        scale = Fraction(ys[i]) / denom
        for d, c in enumerate(basis):
            coeffs[d] += scale * c
    return coeffs


def stratum_euler_oracle_fp(
    cs: ConstraintSystem, primes=(5, 7, 11), guard: int = 4
) -> int:
    """Euler characteristic via point counts over prime fields.

    Counts solutions in a product of P^1(F_p), fits the counts by a
    polynomial in p of degree at most the number of variables, and
    evaluates at p = 1.  Primes must be pairwise distinct, at least one
    more than the variable count, and larger than any matrix entry so the
    reductions stay faithful.
    """
    if cs.infeasible:
        return 0
    m = len(cs.variables)
    if m > guard:
        raise GuardExceeded(f"field oracle guarded at {guard} variables, got {m}")
    primes = tuple(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    if len(primes) < m + 1:
        raise ValueError("need at least one prime more than the variable count")

    index = {w: i for i, w in enumerate(cs.variables)}
    fixed = [(index[w], pt) for w, pt in cs.fixed_lines.items()]
    links = [
        (index[l.source], index[l.target], l.matrix)
        for l in (*cs.iso_links, *cs.rank_one_links)
    ]

    counts = []
    for p in primes:
        points = [(1, t) for t in range(p)] + [(0, 1)]
        total = 0
        for assign in itertools.product(points, repeat=m):
            ok = True
            for i, pt in fixed:
                x, y = assign[i]
                if (x * pt[1] - y * pt[0]) % p:
                    ok = False
                    break
            if ok:
                for si, ti, mat in links:
                    img = _apply(mat, assign[si])
                    x, y = assign[ti]
                    if (img[0] * y - img[1] * x) % p:
                        ok = False
                        break
            if ok:
                total += 1
        counts.append(total)

    coeffs = _interp_coeffs(primes, counts)
    for d in range(m + 1, len(coeffs)):
        if coeffs[d] != 0:
            raise ArithmeticError(
                "field counts do not fit a polynomial of degree <= variable count"
            )
    value = sum(coeffs)
    if value.denominator != 1:
        raise ArithmeticError("interpolated Euler characteristic is not integral")
    return int(value)


@dataclass(frozen=True)
class StratumRecord:
    coprofile: Coprofile
    euler: int
    feasible: bool


@dataclass
class FixedLocusSummary:
    """Stratum-by-stratum account of the fixed locus for one (v, n)."""

    v: Weight
    n: int
    strata: list[StratumRecord]
    total: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "v": list(self.v),
                "n": self.n,
                "strata": [
                    {
                        "coprofile": s.coprofile.to_jsonable(),
                        "euler": s.euler,
                        "feasible": s.feasible,
                    }
                    for s in self.strata
                ],
                "total": self.total,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "FixedLocusSummary":
        data = json.loads(text)
        strata = [
            StratumRecord(
                Coprofile.from_jsonable(s["coprofile"]), s["euler"], s["feasible"]
            )
            for s in data["strata"]
        ]
        return cls(tuple(data["v"]), data["n"], strata, data["total"])


def fixed_locus_summary(v, n: int, guard: int = 5) -> FixedLocusSummary:
    """Evaluate every stratum for colength n and collect the results.

    Infeasible strata are kept with euler 0 and feasible False, so the
    record shows the full stratification, not just the surviving part.
    """
    params = ReflexiveParams.of(v)
    records = []
    total = 0
    for profile in enumerate_coprofiles(params, n, guard=guard):
        system = profile_constraint_system(params, profile)
        e = stratum_euler(system)
        records.append(StratumRecord(profile, e, e != 0))
        total += e
    return FixedLocusSummary(params.triple, n, records, total)


def quot_fixed_euler(v, n: int, guard: int = 5) -> int:
    """Euler characteristic of the colength-n fixed locus."""
    return fixed_locus_summary(v, n, guard=guard).total


def quot_series(v, order: int, guard: int = 5) -> TruncatedSeries:
    """Generating series of fixed-locus Euler characteristics up to q^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = tuple(quot_fixed_euler(v, n, guard=guard) for n in range(order + 1))
    return TruncatedSeries(order, coeffs)
