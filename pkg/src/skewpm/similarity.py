"""Diagonal similarity (up to transposition), the sign-diagonal to reversal
sequence conversion, and the Loewy rank condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .errors import DimensionError, DomainError, ResourceError
from .hlclan import ReversalCertificate
from .matrix_core import Matrix, Number, SkewMatrix, _normalize, rank, submatrix
from .subsets import VertexSubset, complement, full_mask, popcount, to_indices

#: Largest n for which loewy_condition enumerates bipartitions.
MAX_LOEWY_N = 20

SignDiagonal = tuple  # tuple of nonzero ints / Fractions


def scale(A: Matrix, d: Sequence[Number]) -> Matrix:
    """``D^-1 A D`` for ``D = diag(d)``."""
    if len(d) != A.nrows or not A.is_square:
        raise DimensionError("diagonal length must match a square matrix")
    if any(x == 0 for x in d):
        raise DomainError("diagonal entries must be nonzero")
    rows = [
        [_normalize(Fraction(a) * d[j] / d[i]) if a else 0 for j, a in enumerate(r)]
        for i, r in enumerate(A.rows)
    ]
    M = Matrix(rows, ncols=A.ncols)
    return SkewMatrix(rows) if isinstance(A, SkewMatrix) and M.is_skew() else M


@dataclass(frozen=True)
class SimilarityWitness:
    """``B = D^-1 A D`` (or ``B^t = D^-1 A D`` when ``transposed``)."""

    diagonal: SignDiagonal
    transposed: bool = False

    def apply(self, A: Matrix) -> Matrix:
        M = scale(A, self.diagonal)
        return M.transpose() if self.transposed else M

    def verifies(self, A: Matrix, B: Matrix) -> bool:
        return self.apply(A) == B

    def to_json(self) -> dict:
        return {"diagonal": [str(x) for x in self.diagonal], "transposed": self.transposed}


def pattern_mismatch(A: Matrix, B: Matrix) -> tuple[int, int] | None:
    """First 0-based ``(i, j)`` where exactly one of ``A``, ``B`` is zero."""
    for i, (ra, rb) in enumerate(zip(A.rows, B.rows)):
        for j, (a, b) in enumerate(zip(ra, rb)):
            if (a == 0) != (b == 0):
                return i, j
    return None


def _pattern_graph(A: Matrix) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(A.nrows))
    for i, r in enumerate(A.rows):
        for j, a in enumerate(r):
            if a and i != j:
                G.add_edge(i, j)
    return G


def find_diagonal_similarity(A: Matrix, B: Matrix) -> SimilarityWitness | None:
    """A nonsingular diagonal ``D`` with ``B = D^-1 A D``, or None.

    ``b_ij = a_ij d_j / d_i`` fixes every ratio along a spanning forest of
    the nonzero pattern; anchoring the first vertex of each component at 1
    loses nothing, and the final check covers all non-tree entries.
    """
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    if pattern_mismatch(A, B) is not None:
        return None
    if any(A[i, i] != B[i, i] for i in range(A.nrows)):
        return None
    d: list[Number | None] = [None] * A.nrows
    G = _pattern_graph(A)
    for comp in sorted(nx.connected_components(G), key=min):
        root = min(comp)
        d[root] = 1
        for u, v in nx.bfs_edges(G, root):
            # u already fixed; use whichever of a_uv, a_vu is nonzero.
            if A[u, v]:
                d[v] = _normalize(Fraction(B[u, v]) / A[u, v] * d[u])
            else:
                d[v] = _normalize(Fraction(A[v, u]) / B[v, u] * d[u])
    w = SimilarityWitness(tuple(d))
    return w if w.verifies(A, B) else None


def find_similarity_up_to_transpose(A: Matrix, B: Matrix) -> SimilarityWitness | None:
    w = find_diagonal_similarity(A, B)
    if w is not None:
        return w
    w = find_diagonal_similarity(A, B.transpose())
    if w is not None:
        return SimilarityWitness(w.diagonal, transposed=True)
    return None


def similarity_to_reversal_sequence(A: SkewMatrix, D: Sequence[int]) -> ReversalCertificate:
    """Reversal steps taking ``A`` to ``D^-1 A D`` for a ``{-1, 1}`` diagonal.

    Each ``j`` with ``d_j = -1`` contributes ``[n]`` then ``[n] - {j}``; the
    pair negates row and column ``j`` and leaves everything else alone.
    Both subsets are HL-clans of any matrix.
    """
    n = A.n
    if len(D) != n:
        raise DimensionError(f"diagonal of length {len(D)} for n={n}")
    if any(x not in (-1, 1) for x in D):
        raise DomainError("diagonal entries must be -1 or 1")
    everything = full_mask(n)
    steps: list[VertexSubset] = []
    for j, x in enumerate(D):
        if x == -1:
            steps += [everything, everything & ~(1 << j)]
    return ReversalCertificate(n, tuple(steps))


def is_irreducible(A: Matrix) -> bool:
    """Strong connectivity of the pattern digraph ``i -> j`` iff ``a_ij != 0``."""
    return nx.is_strongly_connected(_pattern_digraph(A))


def _pattern_digraph(A: Matrix) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(range(A.nrows))
    G.add_edges_from((i, j) for i, r in enumerate(A.rows) for j, a in enumerate(r) if a and i != j)
    return G


@dataclass(frozen=True)
class LoewyResult:
    holds: bool
    reason: str | None = None  # "reducible" or "rank"
    partition: VertexSubset | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self, n: int) -> dict:
        out = {"holds": self.holds}
        if not self.holds:
            out["reason"] = self.reason
            out["partition"] = [to_indices(self.partition), to_indices(complement(self.partition, n))]
        return out


def loewy_condition(A: Matrix, cap: int = MAX_LOEWY_N) -> LoewyResult:
    """Irreducible, and every bipartition ``X | Y`` with both sides of size
    at least two has ``rank A[X, Y] >= 2`` or ``rank A[Y, X] >= 2``.
    """
    n = A.nrows
    if n < 4:
        raise DomainError(f"the rank condition is stated for n >= 4, got n={n}")
    if n > cap:
        raise ResourceError(f"bipartition scan of n={n} exceeds cap n<={cap}")
    if not is_irreducible(A):
        comp = next(c for c in nx.strongly_connected_components(_pattern_digraph(A)) if 0 in c)
        return LoewyResult(False, "reducible", sum(1 << v for v in comp))
    everything = full_mask(n)
    # X always contains vertex 0, so each bipartition is seen once.
    for X in range(1, 1 << n, 2):
        k = popcount(X)
        if k < 2 or n - k < 2:
            continue
        Y = everything & ~X
        if rank(submatrix(A, X, Y)) <= 1 and rank(submatrix(A, Y, X)) <= 1:
            return LoewyResult(False, "rank", X)
    return LoewyResult(True)


__all__ = [
    "LoewyResult",
    "SignDiagonal",
    "SimilarityWitness",
    "find_diagonal_similarity",
    "find_similarity_up_to_transpose",
    "is_irreducible",
    "loewy_condition",
    "pattern_mismatch",
    "scale",
    "similarity_to_reversal_sequence",
]
