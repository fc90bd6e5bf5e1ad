"""Exact truncated power series over the integers.

A TruncatedSeries holds coefficients of q^0 .. q^order as Python ints, so
every operation is exact at arbitrary coefficient size.  Arithmetic between
series of different orders is an error rather than a silent re-truncation:
verification code should never lose precision without noticing.

The module also provides the closed-form products the rest of the package
is checked against:

* ``macmahon(order)``, the plane partition generating function
  prod_{k>=1} (1 - q^k)^(-k);
* ``box_product(v, order)``, the generating polynomial of plane partitions
  fitting inside a v1 x v2 x v3 box, in telescoped form
  prod_{i<=v1, j<=v2} (1 - q^(i+j+v3-1)) / (1 - q^(i+j-1));
* ``quot_closed_form(v, order)``, the predicted colength generating series
  macmahon(order)^2 * box_product(v, order) for graded quotients of the
  rank-2 module attached to v.

Serialization uses decimal strings for coefficients so files stay readable
and width-independent: {"order": N, "coeffs": ["1", "3", ...]}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series truncated at a fixed order (inclusive)."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be ints")

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "TruncatedSeries":
        """Build from a coefficient list, zero-padded up to order."""
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than order allows")
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,) + (0,) * order)

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff: int = 1) -> "TruncatedSeries":
        """c * q^exponent, truncated; exponents beyond the order vanish."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        coeffs = [0] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = int(coeff)
        return cls(order, tuple(coeffs))

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def _check_order(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}; "
                "truncate explicitly before mixing"
            )

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above a smaller order."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.order, tuple(other * a for a in self.coeffs))
        self._check_order(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +1 or -1 to stay
        integral."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("inverse needs constant term 1 or -1")
        n = self.order
        inv = [0] * (n + 1)
        inv[0] = c0
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m + 1):
                acc += self.coeffs[k] * inv[m - k]
            inv[m] = -c0 * acc
        return TruncatedSeries(n, tuple(inv))

    def degree(self) -> int:
        """Index of the last nonzero coefficient, or -1 for the zero series."""
        for n in range(self.order, -1, -1):
            if self.coeffs[n]:
                return n
        return -1

    def is_palindromic(self) -> bool:
        """True when coefficients read the same reversed up to the degree."""
        d = self.degree()
        if d < 0:
            return True
        return all(self.coeffs[i] == self.coeffs[d - i] for i in range(d + 1))

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        data = json.loads(text)
        order = int(data["order"])
        coeffs = tuple(int(c) for c in data["coeffs"])
        return cls(order, coeffs)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def _one_minus_q_pow(order: int, exponent: int) -> TruncatedSeries:
    return TruncatedSeries.one(order) - TruncatedSeries.monomial(order, exponent)


def macmahon(order: int) -> TruncatedSeries:
    """MacMahon's function prod_{k>=1} (1 - q^k)^(-k) up to q^order.

    The q^n coefficient counts plane partitions of n.
    """
    result = TruncatedSeries.one(order)
    for k in range(1, order + 1):
        result = result * _one_minus_q_pow(order, k).inverse() ** k
    return result


def _box_triple(v) -> tuple[int, int, int]:
    v1, v2, v3 = (int(c) for c in v)
    if min(v1, v2, v3) < 1:
        raise ValueError("box sides must be >= 1")
    return v1, v2, v3


def box_product(v, order: int | None = None) -> TruncatedSeries:
    """Generating polynomial of plane partitions inside a v1 x v2 x v3 box.

    Computed in the telescoped two-index form

        prod_{i=1..v1, j=1..v2} (1 - q^(i+j+v3-1)) / (1 - q^(i+j-1)),

    whose denominator exponents are always >= 1, so no 0/0 factor appears.
    The result is a polynomial of degree v1*v2*v3 (symmetric in v and
    palindromic); order defaults to exactly that degree.
    """
    v1, v2, v3 = _box_triple(v)
    if order is None:
        order = v1 * v2 * v3
    num = TruncatedSeries.one(order)
    den = TruncatedSeries.one(order)
    for i in range(1, v1 + 1):
        for j in range(1, v2 + 1):
            num = num * _one_minus_q_pow(order, i + j + v3 - 1)
            den = den * _one_minus_q_pow(order, i + j - 1)
    return num * den.inverse()


def quot_closed_form(v, order: int) -> TruncatedSeries:
    """Predicted colength generating series for graded quotients of the
    rank-2 module attached to v:  macmahon(order)^2 * box_product(v, order).
    """
    _box_triple(v)
    m = macmahon(order)
    return m * m * box_product(v, order)
