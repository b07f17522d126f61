"""HL-clans, the reversal transform and reversal certificates.

A subset ``X`` is an HL-clan of ``A`` when both off-diagonal blocks
``A[X, ~X]`` and ``A[~X, X]`` have rank at most one. Reversing an HL-clan
(negating the entries inside ``X x X``) preserves every principal minor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, DomainError, ResourceError
from .matrix_core import Matrix, SkewMatrix
from .subsets import (
    VertexSubset,
    check_within,
    complement,
    from_indices,
    full_mask,
    is_trivial,
    members,
    to_indices,
)

#: Largest n for which enumerate_hl_clans scans all 2**n subsets.
MAX_ENUMERATION_N = 16


def _rank_le1(rows, ri: Sequence[int], ci: Sequence[int]) -> bool:
    # rank <= 1 iff every 2x2 minor through a fixed nonzero pivot vanishes.
    for r0 in ri:
        row0 = rows[r0]
        c0 = next((c for c in ci if row0[c] != 0), None)
        if c0 is not None:
            break
    else:
        return True
    p = row0[c0]
    for i in ri:
        if i == r0:
            continue
        row = rows[i]
        f = row[c0]
        for j in ci:
            if row[j] * p != f * row0[j]:
                return False
    return True


def is_hl_clan(A: Matrix, X: VertexSubset) -> bool:
    """True iff ``rank A[X, ~X] <= 1`` and ``rank A[~X, X] <= 1``.

    For skew input the two blocks are negated transposes of each other, so
    only one is scanned (the other is asserted).
    """
    n = A.nrows
    check_within(X, n)
    inside = members(X)
    outside = members(complement(X, n))
    if not inside or not outside:
        return True
    rows = A.rows
    ok = _rank_le1(rows, inside, outside)
    if isinstance(A, SkewMatrix):
        assert ok == _rank_le1(rows, outside, inside)
        return ok
    return ok and _rank_le1(rows, outside, inside)


@dataclass(frozen=True)
class HlClanList:
    """All HL-clans of a matrix, ascending by bitmask."""

    n: int
    clans: tuple[VertexSubset, ...]

    def __iter__(self) -> Iterator[VertexSubset]:
        return iter(self.clans)

    def __len__(self) -> int:
        return len(self.clans)

    def __contains__(self, X) -> bool:
        return X in set(self.clans)

    def is_trivial(self, X: VertexSubset) -> bool:
        return is_trivial(X, self.n)

    @property
    def nontrivial(self) -> tuple[VertexSubset, ...]:
        return tuple(X for X in self.clans if not is_trivial(X, self.n))

    def to_json(self) -> list[dict]:
        return [{"subset": to_indices(X), "trivial": is_trivial(X, self.n)} for X in self.clans]


def enumerate_hl_clans(A: Matrix, cap: int = MAX_ENUMERATION_N) -> HlClanList:
    """Test every subset of [n]; brute force, guarded by ``cap``."""
    n = A.nrows
    if n > cap:
        raise ResourceError(f"HL-clan enumeration over 2**{n} subsets exceeds cap n<={cap}")
    return HlClanList(n, tuple(X for X in range(1 << n) if is_hl_clan(A, X)))


def invert(A: Matrix, X: VertexSubset) -> Matrix:
    """Negate the entries with both indices in ``X``.

    Defined for every subset; minors are only guaranteed to survive when
    ``X`` is an HL-clan (see :func:`invert_checked`).
    """
    n = A.nrows
    check_within(X, n)
    rows = tuple(
        tuple(-x if (X >> i) & 1 and (X >> j) & 1 else x for j, x in enumerate(r))
        if (X >> i) & 1
        else r
        for i, r in enumerate(A.rows)
    )
    if isinstance(A, SkewMatrix):
        return SkewMatrix._trusted(rows)
    return Matrix(rows, ncols=A.ncols)


def invert_checked(A: Matrix, X: VertexSubset) -> Matrix:
    if not is_hl_clan(A, X):
        raise DomainError(f"{to_indices(X)} is not an HL-clan")
    return invert(A, X)


def remark1_pair(
    A11: SkewMatrix, A22: SkewMatrix, alpha: Sequence[int], beta: Sequence[int]
) -> tuple[SkewMatrix, SkewMatrix]:
    """Block pair ``A = [[A11, -beta alpha^t], [alpha beta^t, A22]]`` and
    ``B`` = ``A`` with the top block reversed.

    The off-diagonal block has rank at most one, so the top block is an
    HL-clan of both and the two matrices share every principal minor.
    """
    p, q = A11.n, A22.n
    if len(beta) != p or len(alpha) != q:
        raise DimensionError(
            f"need len(beta)={p} and len(alpha)={q}, got {len(beta)} and {len(alpha)}"
        )
    n = p + q
    rows = [[0] * n for _ in range(n)]
    for i in range(p):
        for j in range(p):
            rows[i][j] = A11[i, j]
    for i in range(q):
        for j in range(q):
            rows[p + i][p + j] = A22[i, j]
    for i in range(p):
        for j in range(q):
            v = -beta[i] * alpha[j]
            rows[i][p + j] = v
            rows[p + j][i] = -v
    A = SkewMatrix(rows)
    return A, invert(A, full_mask(p))


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class ReversalCertificate:
    """Ordered reversal steps ``X_0, ..., X_{m-1}`` on ``n`` vertices."""

    n: int
    steps: tuple[VertexSubset, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[VertexSubset]:
        return iter(self.steps)

    def __add__(self, other: ReversalCertificate) -> ReversalCertificate:
        if self.n != other.n:
            raise DimensionError("cannot join certificates of different dimension")
        return ReversalCertificate(self.n, self.steps + other.steps)

    def reversed(self) -> ReversalCertificate:
        """Certificate from the end matrix back to the start."""
        return ReversalCertificate(self.n, self.steps[::-1])

    def to_json(self) -> dict:
        return {"steps": [to_indices(X) for X in self.steps]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict, n: int) -> ReversalCertificate:
        try:
            steps = data["steps"]
        except (KeyError, TypeError):
            raise DomainError('certificate JSON needs a "steps" list') from None
        return cls(n, tuple(from_indices(s, n) for s in steps))


def apply_reversals(A: Matrix, steps: Iterable[VertexSubset]) -> Matrix:
    for X in steps:
        A = invert(A, X)
    return A
