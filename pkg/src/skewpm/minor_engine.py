"""Principal-minor fingerprints and their comparison."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DimensionError, ResourceError, SubsetRangeError
from .matrix_core import Matrix, Number, SkewMatrix, determinant, principal_submatrix
from .subsets import VertexSubset, check_within, subsets_of_size, to_indices

#: Largest n for which all 2**n principal minors are computed.
MAX_FINGERPRINT_N = 20


def principal_minor(A: Matrix, X: VertexSubset) -> Number:
    """``det(A[X])``, computed independently by Bareiss elimination."""
    check_within(X, A.nrows)
    return determinant(principal_submatrix(A, X))


class _PfaffianTable:
    """Memoized Pfaffians of principal submatrices of one skew matrix.

    ``pf(S)`` expands along the smallest index of ``S`` and reuses the
    Pfaffians of the smaller subsets, so a full table costs O(n 2**n).
    """

    def __init__(self, A: SkewMatrix):
        self.rows = A.rows
        self.memo: dict[int, Number] = {0: 1}

    def pf(self, S: int) -> Number:
        got = self.memo.get(S)
        if got is not None:
            return got
        low = S & -S
        i = low.bit_length() - 1
        rest = S ^ low
        row = self.rows[i]
        total = 0
        pos = 0
        m = rest
        while m:
            bit = m & -m
            v = row[bit.bit_length() - 1]
            if v:
                term = v * self.pf(rest ^ bit)
                total += -term if pos & 1 else term
            pos += 1
            m ^= bit
        self.memo[S] = total
        return total

    def minor(self, S: int) -> Number:
        if bin(S).count("1") & 1:
            return 0
        p = self.pf(S)
        return p * p


@dataclass(frozen=True)
class MinorFingerprint:
    """Principal minors of ``A`` indexed by subset bitmask."""

    n: int
    orders: tuple[int, ...]
    values: dict[VertexSubset, Number] = field(compare=False, hash=False)

    def of_order(self, k: int) -> dict[VertexSubset, Number]:
        return {S: v for S, v in self.values.items() if bin(S).count("1") == k}

    def key(self) -> tuple[Number, ...]:
        """Hashable value sequence; equal keys mean equal fingerprints."""
        return tuple(self.values[S] for S in sorted(self.values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MinorFingerprint):
            return NotImplemented
        return self.n == other.n and self.orders == other.orders and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.n, self.orders, self.key()))


def _resolve_orders(n: int, orders: Iterable[int] | int | None) -> tuple[int, ...]:
    if orders is None:
        if n > MAX_FINGERPRINT_N:
            raise ResourceError(
                f"all-orders fingerprint of n={n} needs 2**{n} minors (cap n<={MAX_FINGERPRINT_N})"
            )
        return tuple(range(n + 1))
    if isinstance(orders, int):
        orders = (orders,)
    out = tuple(sorted(set(orders)))
    for k in out:
        if not 0 <= k <= n:
            raise SubsetRangeError(f"order {k} outside [0, {n}]")
    return out


def _minor_source(A: Matrix):
    if isinstance(A, SkewMatrix):
        return _PfaffianTable(A).minor
    if not A.is_square:
        raise DimensionError("principal minors need a square matrix")
    return lambda S: principal_minor(A, S)


def fingerprint(A: Matrix, orders: Iterable[int] | int | None = None) -> MinorFingerprint:
    """All principal minors of the requested orders (default: every order).

    Skew input goes through a shared Pfaffian table; other square matrices
    use one determinant per subset.
    """
    n = A.nrows
    ks = _resolve_orders(n, orders)
    minor = _minor_source(A)
    values = {}
    for k in ks:
        for S in subsets_of_size(n, k):
            values[S] = minor(S)
    return MinorFingerprint(n, ks, values)


def minors_of_order(A: Matrix, k: int) -> MinorFingerprint:
    return fingerprint(A, (k,))


@dataclass(frozen=True)
class FingerprintComparison:
    """Outcome of :func:`fingerprints_equal`.

    On a difference, ``subset`` is the first differing subset (orders
    ascending, then bitmask ascending) and ``value_a``/``value_b`` are the
    two minors there.
    """

    equal: bool
    subset: VertexSubset | None = None
    value_a: Number | None = None
    value_b: Number | None = None

    def __bool__(self) -> bool:
        return self.equal

    @property
    def status(self) -> str:
        return "EQUAL" if self.equal else "DIFFER"

    @property
    def order(self) -> int | None:
        return None if self.subset is None else bin(self.subset).count("1")

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if not self.equal:
            out.update(
                subset=to_indices(self.subset),
                value_a=str(self.value_a),
                value_b=str(self.value_b),
            )
        return out


def fingerprints_equal(
    A: Matrix, B: Matrix, orders: Iterable[int] | int | None = None
) -> FingerprintComparison:
    """Compare principal minors of ``A`` and ``B``; short-circuits per order."""
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    n = A.nrows
    ks = _resolve_orders(n, orders)
    ma, mb = _minor_source(A), _minor_source(B)
    for k in ks:
        for S in subsets_of_size(n, k):
            va, vb = ma(S), mb(S)
            if va != vb:
                return FingerprintComparison(False, S, va, vb)
    return FingerprintComparison(True)


def fingerprint_json(A: Matrix, k: int | None = None) -> dict:
    """JSON-ready fingerprint; values are decimal strings."""
    fp = fingerprint(A, None if k is None else (k,))
    return {
        "n": A.nrows,
        "order": k,
        "minors": [
            {"subset": to_indices(S), "value": str(fp.values[S])}
            for k2 in fp.orders
            for S in subsets_of_size(A.nrows, k2)
        ],
    }


__all__ = [
    "MAX_FINGERPRINT_N",
    "FingerprintComparison",
    "MinorFingerprint",
    "fingerprint",
    "fingerprint_json",
    "fingerprints_equal",
    "minors_of_order",
    "principal_minor",
]
