"""Graded fibers of the rank-2 singular module attached to a triple v.

For v = (v1, v2, v3) with all entries >= 1, set the three generator
weights

    g1 = (v1, v2, 0),   g2 = (v1, 0, v3),   g3 = (0, v2, v3).

The module R0 is spanned by three generators e1, e2, e3, where e_i sits in
degree g_i and is free over the monomials above it, except that on the
common upward cone w >= v = (v1, v2, v3) the single relation
e1 + e2 + e3 = 0 is imposed.  Concretely the fiber of R0 at a weight w is

    C^{present(w)} / (relation if all three present)

with present(w) = { i : w >= g_i componentwise }.  A short case check
shows present(w) always has size 0, 1 or 3: if w dominates two generator
weights it dominates v and hence the third as well.  So fiber dimensions
are 0, 1 or 2, and dimension 2 happens exactly on the cone w >= v.

Fibers with all three generators present carry the fixed basis
(class of e1, class of e2); the class of e3 is (-1, -1) in it.  All
multiplication matrices in these coordinates have entries in {-1, 0, 1}.

The module ``check_cosection_quotient`` compares graded dimensions of
R0 / (line submodule spanned by the class of e1 + e2) against the
monomial ideal (x1^v1 x2^v2, x1^v1 x3^v3, x2^v2 x3^v3), and
``check_resolution_dims`` checks the Euler-characteristic identity of the
three-line-bundle presentation of R0.  Both work weight by weight over a
finite window; dimensions are the only invariants compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .partitions import MonomialIdeal

Weight = tuple[int, int, int]

_E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class ReflexiveParams:
    """The defining triple v, validated once."""

    v1: int
    v2: int
    v3: int

    def __post_init__(self):
        for c in (self.v1, self.v2, self.v3):
            if not isinstance(c, int) or c < 1:
                raise ValueError("v components must be integers >= 1")

    @classmethod
    def of(cls, v) -> "ReflexiveParams":
        if isinstance(v, cls):
            return v
        v1, v2, v3 = (int(c) for c in v)
        return cls(v1, v2, v3)

    def __iter__(self):
        yield self.v1
        yield self.v2
        yield self.v3

    @property
    def triple(self) -> Weight:
        return (self.v1, self.v2, self.v3)

    @property
    def box_volume(self) -> int:
        return self.v1 * self.v2 * self.v3

    def generator_weights(self) -> tuple[Weight, Weight, Weight]:
        return (
            (self.v1, self.v2, 0),
            (self.v1, 0, self.v3),
            (0, self.v2, self.v3),
        )


def _dominates(w: Weight, u: Weight) -> bool:
    return w[0] >= u[0] and w[1] >= u[1] and w[2] >= u[2]


def _present(params: ReflexiveParams, w: Weight) -> frozenset[int]:
    return frozenset(
        i + 1 for i, g in enumerate(params.generator_weights()) if _dominates(w, g)
    )


@dataclass(frozen=True)
class FiberDescription:
    """Fiber of R0 at one weight.

    basis holds coset representatives as integer vectors over the labels
    (e1, e2, e3); relation is (1, 1, 1) when the fiber is a proper
    quotient, else None.
    """

    weight: Weight
    present: frozenset[int]
    dim: int
    basis: tuple[tuple[int, int, int], ...]
    relation: tuple[int, int, int] | None


def fiber(v, w) -> FiberDescription:
    """Describe the fiber of R0 at weight w."""
    params = ReflexiveParams.of(v)
    w = tuple(int(c) for c in w)
    present = _present(params, w)
    if len(present) == 0:
        return FiberDescription(w, present, 0, (), None)
    if len(present) == 1:
        (i,) = present
        return FiberDescription(w, present, 1, (_E[i - 1],), None)
    # two generator weights below w force the third: w >= v
    assert len(present) == 3 and _dominates(w, params.triple)
    return FiberDescription(w, present, 2, (_E[0], _E[1]), (1, 1, 1))


def fiber_dim(v, w) -> int:
    """Dimension of the fiber at w, without building basis data."""
    params = ReflexiveParams.of(v)
    w = tuple(int(c) for c in w)
    k = len(_present(params, w))
    return 2 if k == 3 else k


def _coords_in_basis(fd: FiberDescription, vec: tuple[int, int, int]):
    """Coordinates of a label vector in the fiber basis."""
    if fd.dim == 0:
        if any(vec):
            raise ValueError("nonzero vector in zero fiber")
        return ()
    if fd.dim == 1:
        (i,) = fd.present
        for j in range(3):
            if j != i - 1 and vec[j] != 0:
                raise ValueError("vector not supported on the present generator")
        return (vec[i - 1],)
    # dim 2: classes mod (1,1,1); coordinates over (class e1, class e2)
    return (vec[0] - vec[2], vec[1] - vec[2])


@dataclass(frozen=True)
class MultMap:
    """Matrix of multiplication by x_k from weight w to w + e_k.

    Rows are indexed by the target fiber basis, columns by the source
    fiber basis.
    """

    source: Weight
    direction: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def target(self) -> Weight:
        e = _E[self.direction - 1]
        return tuple(self.source[i] + e[i] for i in range(3))

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def target_dim(self) -> int:
        return len(self.matrix)


def mult_matrix(v, w, k: int) -> MultMap:
    """Multiplication by x_k on fibers, in the fixed bases.

    Generators map to themselves label-wise; the matrix just re-expresses
    source basis vectors in the target basis.  Entries land in {-1, 0, 1}.
    """
    if k not in (1, 2, 3):
        raise ValueError("direction k must be 1, 2 or 3")
    params = ReflexiveParams.of(v)
    w = tuple(int(c) for c in w)
    src = fiber(params, w)
    tgt = fiber(params, tuple(w[i] + _E[k - 1][i] for i in range(3)))
    cols = [_coords_in_basis(tgt, b) for b in src.basis]
    matrix = tuple(
        tuple(col[r] for col in cols) for r in range(tgt.dim)
    )
    return MultMap(w, k, matrix)


def sing_ideal(v) -> MonomialIdeal:
    """Monomial ideal cutting out the singular locus: pure powers
    (x1^v1, x2^v2, x3^v3)."""
    params = ReflexiveParams.of(v)
    return MonomialIdeal(
        ((params.v1, 0, 0), (0, params.v2, 0), (0, 0, params.v3))
    )


def line_submodule_dim(params: ReflexiveParams, w: Weight) -> int:
    """Graded dimension of the line submodule spanned by the class of
    e1 + e2 over the cone w >= v.

    Any class off the relation line and off the coordinate lines spans a
    sub-line stable under multiplication; graded dimensions do not depend
    on the choice, so the class of (1, 1, 0) is fixed here.
    """
    return 1 if _dominates(w, params.triple) else 0


def _window_weights(window):
    """Iterate integer weights of a window: an int m means [0, m]^3, a
    pair (lo, hi) means the closed box between the triples."""
    if isinstance(window, int):
        lo, hi = (0, 0, 0), (window, window, window)
    else:
        lo, hi = window
        lo = tuple(int(c) for c in lo)
        hi = tuple(int(c) for c in hi)
    for a in range(lo[0], hi[0] + 1):
        for b in range(lo[1], hi[1] + 1):
            for c in range(lo[2], hi[2] + 1):
                yield (a, b, c)


@dataclass(frozen=True)
class DimCheckEntry:
    weight: Weight
    lhs_dim: int
    rhs_dim: int

    @property
    def ok(self) -> bool:
        return self.lhs_dim == self.rhs_dim


@dataclass
class DimCheckReport:
    """Weight-by-weight dimension comparison over a window."""

    name: str
    entries: list[DimCheckEntry]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def first_mismatch(self) -> DimCheckEntry | None:
        for e in self.entries:
            if not e.ok:
                return e
        return None

    def to_json(self) -> str:
        return json.dumps(
            [
                {
                    "weight": list(e.weight),
                    "lhs_dim": e.lhs_dim,
                    "rhs_dim": e.rhs_dim,
                    "ok": e.ok,
                }
                for e in self.entries
            ]
        )


def check_cosection_quotient(v, window) -> DimCheckReport:
    """Check dim (R0 / line submodule)_w == dim (ideal of the three
    doubled walls)_w over the window.

    The right side is the monomial ideal
    (x1^v1 x2^v2, x1^v1 x3^v3, x2^v2 x3^v3): its weight-w piece has
    dimension 1 exactly when w dominates one of the generator weights.
    """
    params = ReflexiveParams.of(v)
    gens = params.generator_weights()
    entries = []
    for w in _window_weights(window):
        lhs = fiber_dim(params, w) - line_submodule_dim(params, w)
        rhs = 1 if any(_dominates(w, g) for g in gens) else 0
        entries.append(DimCheckEntry(w, lhs, rhs))
    return DimCheckReport("cosection_quotient", entries)


def check_resolution_dims(v, window) -> DimCheckReport:
    """Check the graded Euler identity of the presentation
    0 -> L -> N1 + N2 + N3 -> R0 -> 0 over the window.

    N_i is free of rank one on the cone above g_i, L is the line module on
    the cone above v, so the identity reads

        sum_i [w >= g_i]  ==  [w >= v] + dim (R0)_w.
    """
    params = ReflexiveParams.of(v)
    gens = params.generator_weights()
    entries = []
    for w in _window_weights(window):
        lhs = sum(1 for g in gens if _dominates(w, g))
        rhs = line_submodule_dim(params, w) + fiber_dim(params, w)
        entries.append(DimCheckEntry(w, lhs, rhs))
    return DimCheckReport("resolution_dims", entries)
