"""End-to-end verification claims, each comparing independent routes.

Every checker returns a VerificationReport with the two coefficient lists
it compared, a pass or fail status, the first mismatching index if any,
and the wall time spent.  Reports serialize to JSON so runs can be
archived and diffed.

Claims:

* ``product``: the stratification engine's colength series equals the
  closed form macmahon^2 * box_product, coefficient by coefficient.
* ``stanley``: box-bounded plane partition counts agree three ways, by
  direct enumeration, by transfer-matrix DP, and by the classical
  product formula.
* ``hilb``: monomial ideals of the fat-point quotient ring, counted by
  colength via antichain enumeration, match box-bounded partition counts,
  with the palindromic degree-v1*v2*v3 count vector.
* ``rank2free``: ordered pairs of plane partitions counted by total size
  match the coefficients of macmahon^2 (the free rank-2 baseline).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .partitions import (
    count_box_partitions,
    count_partition_pairs,
    box_partition_polynomial_dp,
    enumerate_box_monomial_ideals,
)
from .quotfixed import quot_series
from .reflexive import ReflexiveParams
from .series import box_product, macmahon, quot_closed_form


@dataclass
class VerificationReport:
    """Outcome of one verification claim."""

    claim: str
    params: dict
    lhs: list[int]
    rhs: list[int]
    status: str
    first_mismatch: int | None
    wall_time: float

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim": self.claim,
                "params": self.params,
                "lhs": self.lhs,
                "rhs": self.rhs,
                "status": self.status,
                "first_mismatch": self.first_mismatch,
                "wall_time": self.wall_time,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        return cls(
            claim=data["claim"],
            params=data["params"],
            lhs=[int(c) for c in data["lhs"]],
            rhs=[int(c) for c in data["rhs"]],
            status=data["status"],
            first_mismatch=data["first_mismatch"],
            wall_time=data["wall_time"],
        )

    def summary(self) -> str:
        line = f"claim={self.claim} params={self.params} status={self.status.upper()}"
        if self.first_mismatch is not None:
            line += (
                f" first_mismatch=n{self.first_mismatch}"
                f" lhs={self.lhs[self.first_mismatch]}"
                f" rhs={self.rhs[self.first_mismatch]}"
            )
        return line + f" wall_time={self.wall_time:.3f}s"


def _first_diff(lhs, rhs) -> int | None:
    for i in range(max(len(lhs), len(rhs))):
        a = lhs[i] if i < len(lhs) else None
        b = rhs[i] if i < len(rhs) else None
        if a != b:
            return i
    return None


def _finish(claim, params, lhs, rhs, start, extra_ok: bool = True) -> VerificationReport:
    mism = _first_diff(lhs, rhs)
    status = "pass" if mism is None and extra_ok else "fail"
    return VerificationReport(
        claim=claim,
        params=params,
        lhs=list(lhs),
        rhs=list(rhs),
        status=status,
        first_mismatch=mism,
        wall_time=time.perf_counter() - start,
    )


def verify_product_formula(v, order: int, guard: int = 5) -> VerificationReport:
    """Engine series against the closed form, up to q^order."""
    params = ReflexiveParams.of(v)
    start = time.perf_counter()
    lhs = list(quot_series(params, order, guard=guard).coeffs)
    rhs = list(quot_closed_form(params.triple, order).coeffs)
    return _finish(
        "product", {"v": list(params.triple), "order": order}, lhs, rhs, start
    )


def verify_stanley(v) -> VerificationReport:
    """Three-way box-bounded partition counts for every size.

    Reports enumeration against the product formula; the DP is checked
    against the product as well, and a DP discrepancy is what gets
    reported if the enumeration route happens to agree.
    """
    params = ReflexiveParams.of(v)
    start = time.perf_counter()
    order = params.box_volume
    brute = [count_box_partitions(params.triple, n) for n in range(order + 1)]
    dp = list(box_partition_polynomial_dp(params.triple).coeffs)
    prod = list(box_product(params.triple).coeffs)
    p = {"v": list(params.triple)}
    if brute != prod:
        return _finish("stanley", p, brute, prod, start)
    if dp != prod:
        return _finish("stanley", p, dp, prod, start)
    return _finish("stanley", p, brute, prod, start)


def verify_hilb_counts(v) -> VerificationReport:
    """Fat-point monomial ideal counts against box-bounded partitions.

    Also requires the count vector to have degree exactly v1*v2*v3 and to
    be palindromic; both are properties of the matching, not extra input.
    """
    params = ReflexiveParams.of(v)
    start = time.perf_counter()
    order = params.box_volume
    by_colength = [0] * (order + 1)
    for ideal in enumerate_box_monomial_ideals(params.triple):
        by_colength[ideal.colength()] += 1
    boxes = [count_box_partitions(params.triple, n) for n in range(order + 1)]
    extra_ok = (
        by_colength[order] != 0
        and by_colength == by_colength[::-1]
    )
    return _finish(
        "hilb", {"v": list(params.triple)}, by_colength, boxes, start, extra_ok
    )


def verify_rank2_free(order: int, guard: int = 12) -> VerificationReport:
    """Pair counts against macmahon^2, the series of the free rank-2 case."""
    start = time.perf_counter()
    lhs = [count_partition_pairs(n, guard=guard) for n in range(order + 1)]
    m = macmahon(order)
    rhs = list((m * m).coeffs)
    return _finish("rank2free", {"order": order}, lhs, rhs, start)
