"""Orientations of simple graphs and their skew-adjacency matrices.

An orientation on vertices ``0..n-1`` is a skew map ``sigma`` into
``{-1, 0, 1}`` with ``sigma[i][j] == 1`` iff ``i -> j`` is an arc.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

from .errors import DomainError, OrientationError, StructureError
from .matrix_core import Number, SkewMatrix, determinant, principal_submatrix
from .subsets import VertexSubset, check_within, complement, members, popcount, to_indices


@dataclass(frozen=True)
class Orientation:
    n: int
    sigma: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.sigma) != self.n or any(len(r) != self.n for r in self.sigma):
            raise DomainError("sigma must be n x n")
        for i in range(self.n):
            for j in range(i, self.n):
                a = self.sigma[i][j]
                if a not in (-1, 0, 1) or a != -self.sigma[j][i]:
                    raise DomainError(f"sigma is not a skew {{-1,0,1}} map at ({i + 1},{j + 1})")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Orientation:
        """Build from 1-based arcs ``(u, v)`` meaning ``u -> v``."""
        s = [[0] * n for _ in range(n)]
        for u, v in arcs:
            if u == v or s[u - 1][v - 1]:
                raise DomainError(f"arc ({u},{v}) is a loop or repeats an edge")
            s[u - 1][v - 1] = 1
            s[v - 1][u - 1] = -1
        return cls(n, tuple(tuple(r) for r in s))

    def arcs(self) -> list[tuple[int, int]]:
        """1-based arcs in lexicographic order."""
        return [
            (i + 1, j + 1) for i in range(self.n) for j in range(self.n) if self.sigma[i][j] == 1
        ]

    def edges(self) -> frozenset[tuple[int, int]]:
        """Underlying simple graph as 0-based pairs ``(i, j)`` with ``i < j``."""
        return frozenset(
            (i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.sigma[i][j]
        )

    def induced(self, X: VertexSubset) -> Orientation:
        idx = members(X)
        return Orientation(len(idx), tuple(tuple(self.sigma[i][j] for j in idx) for i in idx))


def from_skew(A: SkewMatrix) -> Orientation:
    for r in A.rows:
        for x in r:
            if x not in (-1, 0, 1):
                raise DomainError(f"entry {x} outside {{-1,0,1}}")
    return Orientation(A.n, A.rows)


def to_skew(g: Orientation) -> SkewMatrix:
    return SkewMatrix._trusted(g.sigma)


def converse(g: Orientation) -> Orientation:
    return Orientation(g.n, tuple(tuple(-x for x in r) for r in g.sigma))


def is_clan(g: Orientation, X: VertexSubset) -> bool:
    """Every vertex outside ``X`` sees all of ``X`` the same way."""
    check_within(X, g.n)
    inside = members(X)
    if len(inside) < 2:
        return True
    s = g.sigma
    for x in members(complement(X, g.n)):
        first = s[inside[0]][x]
        if any(s[a][x] != first for a in inside[1:]):
            return False
    return True


def digraph_invert(g: Orientation, X: VertexSubset) -> Orientation:
    """Reverse every arc with both ends in ``X``."""
    check_within(X, g.n)
    s = tuple(
        tuple(-x if (X >> i) & 1 and (X >> j) & 1 else x for j, x in enumerate(r))
        for i, r in enumerate(g.sigma)
    )
    return Orientation(g.n, s)


def is_isomorphic(g1: Orientation, g2: Orientation) -> bool:
    """Brute force over all vertex bijections; small digraphs only."""
    if g1.n != g2.n:
        return False
    a, b = g1.sigma, g2.sigma
    n = g1.n
    for p in permutations(range(n)):
        if all(a[i][j] == b[p[i]][p[j]] for i in range(n) for j in range(n)):
            return True
    return False


def is_hemimorphic(g1: Orientation, g2: Orientation) -> bool:
    return is_isomorphic(g1, g2) or is_isomorphic(converse(g1), g2)


class Shape(enum.Enum):
    EMPTY = "EMPTY"
    SINGLE_EDGE = "SINGLE_EDGE"
    PATH = "PATH"
    TRIANGLE = "TRIANGLE"


class OrientationClass(enum.Enum):
    NA = "N/A"
    SOURCE_SINK = "SOURCE_SINK"
    DIRECTED_PATH = "DIRECTED_PATH"
    CYCLIC = "CYCLIC"
    TRANSITIVE = "TRANSITIVE"


@dataclass(frozen=True)
class TripleClass:
    shape: Shape
    orientation_class: OrientationClass = OrientationClass.NA

    def __str__(self) -> str:
        if self.orientation_class is OrientationClass.NA:
            return self.shape.value
        return f"{self.shape.value}/{self.orientation_class.value}"


def triple_class(g: Orientation, t: VertexSubset) -> TripleClass:
    """Shape of ``g[t]`` and, for paths and triangles, its hemimorphy class.

    A path is SOURCE_SINK when its middle vertex is a source or a sink of
    the two arcs, DIRECTED_PATH otherwise. A triangle is CYCLIC when every
    vertex has out-degree one.
    """
    check_within(t, g.n)
    if popcount(t) != 3:
        raise DomainError(f"triple_class needs 3 vertices, got {to_indices(t)}")
    s = g.sigma
    vs = members(t)
    es = [(i, j) for i, j in combinations(vs, 2) if s[i][j]]
    if not es:
        return TripleClass(Shape.EMPTY)
    if len(es) == 1:
        return TripleClass(Shape.SINGLE_EDGE)
    if len(es) == 2:
        mid = next(v for v in vs if sum(v in e for e in es) == 2)
        ends = [u for u in vs if u != mid]
        out = [s[mid][u] for u in ends]
        if out[0] == out[1]:
            return TripleClass(Shape.PATH, OrientationClass.SOURCE_SINK)
        return TripleClass(Shape.PATH, OrientationClass.DIRECTED_PATH)
    outdeg = [sum(1 for u in vs if s[v][u] == 1) for v in vs]
    if outdeg == [1, 1, 1]:
        return TripleClass(Shape.TRIANGLE, OrientationClass.CYCLIC)
    return TripleClass(Shape.TRIANGLE, OrientationClass.TRANSITIVE)


@dataclass(frozen=True)
class TripleComparison:
    equal: bool
    witness: VertexSubset | None = None
    class_a: TripleClass | None = None
    class_b: TripleClass | None = None

    def __bool__(self) -> bool:
        return self.equal

    @property
    def status(self) -> str:
        return "EQUAL-CLASS" if self.equal else "DIFFER"


def triples_hemimorphic(g1: Orientation, g2: Orientation) -> TripleComparison:
    """Check that ``g1[t]`` and ``g2[t]`` are hemimorphic for every 3-subset.

    Hemimorphy is decided by brute force on each induced triple; the first
    failing triple (ascending bitmask) is returned with both classes.
    """
    if g1.n != g2.n or g1.edges() != g2.edges():
        raise StructureError("orientations of different underlying graphs")
    triples = sorted(
        sum(1 << v for v in c) for c in combinations(range(g1.n), 3)
    )
    for t in triples:
        if not is_hemimorphic(g1.induced(t), g2.induced(t)):
            return TripleComparison(False, t, triple_class(g1, t), triple_class(g2, t))
    return TripleComparison(True)


def apex_det_triple(g: Orientation, apex: int, t: VertexSubset) -> Number:
    """Determinant of the skew-adjacency matrix on ``{apex} | t``.

    ``apex`` is 0-based and must send an arc to each vertex of ``t``.
    """
    check_within(t, g.n)
    if popcount(t) != 3 or (t >> apex) & 1:
        raise OrientationError("t must be three vertices other than the apex")
    bad = [v for v in members(t) if g.sigma[apex][v] != 1]
    if bad:
        raise OrientationError(
            f"apex {apex + 1} does not dominate vertices {[v + 1 for v in bad]}"
        )
    return determinant(principal_submatrix(to_skew(g), t | (1 << apex)))
