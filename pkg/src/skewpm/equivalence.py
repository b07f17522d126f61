"""HL-clan-reversal equivalence.

Covers certificate checking, breadth-first orbit search and the decision
procedure for first-row-full sign matrices. A scan, exhaustive or sampled,
compares minor equality with reversal equivalence.

A first-row-full sign matrix is a skew-symmetric {-1, 0, 1} matrix whose
first row is nonzero off the diagonal. Functions suffixed ``_mn`` work on
this class.
"""

from __future__ import annotations

import enum
import itertools
import logging
import random
from collections import Counter, deque
from dataclasses import dataclass, field

from .digraph_orient import from_skew, triples_hemimorphic
from .errors import DimensionError, DomainError
from .hlclan import ReversalCertificate, invert, is_hl_clan
from .matrix_core import Matrix, SkewMatrix, new_skew
from .minor_engine import fingerprint, fingerprints_equal
from .similarity import scale, similarity_to_reversal_sequence
from .subsets import VertexSubset, members, to_indices

log = logging.getLogger(__name__)

#: Default cap on visited states for breadth-first search.
DEFAULT_BUDGET = 10**6


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    failed_step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        out = {"valid": self.valid}
        if not self.valid:
            out.update(failed_step=self.failed_step, reason=self.reason)
        return out


def verify_certificate(A: Matrix, cert: ReversalCertificate, B: Matrix) -> CertificateCheck:
    """Replay ``cert`` from ``A``; every step must reverse an HL-clan of the
    running matrix and the walk must end exactly at ``B``.

    ``failed_step`` is the 0-based index of the first bad step, or
    ``len(cert)`` when only the endpoint is wrong.
    """
    if A.shape != B.shape or cert.n != A.nrows:
        return CertificateCheck(False, 0, "dimension mismatch")
    M = A
    for k, X in enumerate(cert.steps):
        if X < 0 or X >> A.nrows:
            return CertificateCheck(False, k, f"step {to_indices(X)} outside [n]")
        if not is_hl_clan(M, X):
            return CertificateCheck(False, k, f"step {to_indices(X)} is not an HL-clan")
        M = invert(M, X)
    if M != B:
        return CertificateCheck(False, len(cert), "endpoint differs from target")
    return CertificateCheck(True)


# -- breadth-first search ---------------------------------------------------


class SearchStatus(enum.Enum):
    FOUND = "FOUND"
    NOT_FOUND = "NOT_FOUND"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    certificate: ReversalCertificate | None = None
    explored: int = 0

    def __bool__(self) -> bool:
        return self.status is SearchStatus.FOUND


def reversal_moves(M: Matrix) -> list[tuple[VertexSubset, Matrix]]:
    """HL-clans ``X`` of ``M`` whose reversal changes ``M``, with the results.

    Reversals of the empty set, singletons, or zero principal blocks are
    no-ops and are skipped.
    """
    n = M.nrows
    rows = M.rows
    out = []
    for X in range(3, 1 << n):
        if X & (X - 1) == 0:
            continue
        idx = members(X)
        if not any(rows[i][j] for i in idx for j in idx):
            continue
        if is_hl_clan(M, X):
            out.append((X, invert(M, X)))
    return out


@dataclass
class Orbit:
    """States reached from ``root``; ``parent`` maps state -> (previous, step)."""

    root: Matrix
    parent: dict = field(default_factory=dict)
    depth: dict = field(default_factory=dict)
    complete: bool = False

    def __contains__(self, M) -> bool:
        return M in self.parent

    def __len__(self) -> int:
        return len(self.parent)

    def certificate_to(self, M: Matrix) -> ReversalCertificate:
        steps = []
        while True:
            prev, X = self.parent[M]
            if prev is None:
                break
            steps.append(X)
            M = prev
        return ReversalCertificate(self.root.nrows, tuple(reversed(steps)))

    @property
    def eccentricity(self) -> int:
        return max(self.depth.values(), default=0)


def _bfs(A: Matrix, target: Matrix | None, max_states: int, max_depth: int | None):
    orbit = Orbit(A, {A: (None, None)}, {A: 0})
    if target is not None and A == target:
        return orbit, True
    queue = deque([A])
    truncated = False
    while queue:
        M = queue.popleft()
        d = orbit.depth[M]
        if max_depth is not None and d >= max_depth:
            truncated = True
            continue
        for X, child in reversal_moves(M):
            if child in orbit.parent:
                continue
            if len(orbit.parent) >= max_states:
                return orbit, False
            orbit.parent[child] = (M, X)
            orbit.depth[child] = d + 1
            if target is not None and child == target:
                return orbit, True
            queue.append(child)
    orbit.complete = not truncated
    return orbit, False


def reversal_orbit(A: Matrix, max_states: int = DEFAULT_BUDGET) -> Orbit:
    """Full reversal-equivalence class of ``A`` (``complete`` unless capped)."""
    orbit, _ = _bfs(A, None, max_states, None)
    return orbit


def bfs_reversal_equivalent(
    A: Matrix, B: Matrix, max_states: int = DEFAULT_BUDGET, max_depth: int | None = None
) -> SearchResult:
    """Shortest reversal certificate from ``A`` to ``B`` by breadth-first search.

    NOT_FOUND is definitive (the orbit of ``A`` was fully explored);
    BUDGET_EXHAUSTED only means the caps were hit.
    """
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    # Reversals only flip signs, so the orbit keeps every |a_ij|.
    if any(abs(a) != abs(b) for ra, rb in zip(A.rows, B.rows) for a, b in zip(ra, rb)):
        return SearchResult(SearchStatus.NOT_FOUND, explored=1)
    orbit, found = _bfs(A, B, max_states, max_depth)
    if found:
        return SearchResult(SearchStatus.FOUND, orbit.certificate_to(B), len(orbit))
    if orbit.complete:
        return SearchResult(SearchStatus.NOT_FOUND, explored=len(orbit))
    return SearchResult(SearchStatus.BUDGET_EXHAUSTED, explored=len(orbit))


# -- first-row-full sign matrices -------------------------------------------


def in_class_mn(A: Matrix) -> bool:
    if not isinstance(A, SkewMatrix) and not A.is_skew():
        return False
    if any(x not in (-1, 0, 1) for r in A.rows for x in r):
        return False
    return all(A[0, j] != 0 for j in range(1, A.nrows))


def normalize_first_row(A: SkewMatrix) -> tuple[SkewMatrix, tuple[int, ...]]:
    """``(D^-1 A D, D)`` with ``D = diag(1, a_12, ..., a_1n)``, making the
    first row ``(0, 1, ..., 1)``."""
    if not in_class_mn(A):
        raise DomainError("matrix is not a sign matrix with a zero-free first row")
    d = (1,) + tuple(A[0, j] for j in range(1, A.nrows))
    return scale(A, d), d


class Status(enum.Enum):
    EQUIVALENT = "EQUIVALENT"
    NOT_EQUIVALENT = "NOT_EQUIVALENT"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class EquivVerdict:
    status: Status
    certificate: ReversalCertificate | None = None
    witness: VertexSubset | None = None
    value_a: int | None = None
    value_b: int | None = None
    diagnostics: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.witness is not None:
            out["witness"] = {
                "subset": to_indices(self.witness),
                "value_a": str(self.value_a),
                "value_b": str(self.value_b),
            }
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out


def _differ(cmp, **diag) -> EquivVerdict:
    return EquivVerdict(Status.NOT_EQUIVALENT, None, cmp.subset, cmp.value_a, cmp.value_b, diag)


def decide_equivalence_mn(
    A: SkewMatrix, B: SkewMatrix, max_states: int = DEFAULT_BUDGET
) -> EquivVerdict:
    """Decide HL-clan-reversal equivalence for two first-row-full sign matrices.

    Order-2 minors (the underlying graph) are compared first, then order-4
    minors. If both agree, both matrices are normalized to first row
    ``(0, 1, ..., 1)`` and the certificate is assembled from three
    separately verified pieces: ``A -> A'`` from the sign diagonal,
    ``A' -> B'`` by orbit search, ``B' -> B`` from the other diagonal.
    """
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    for name, M in (("A", A), ("B", B)):
        if not in_class_mn(M):
            raise DomainError(f"{name} is not a sign matrix with a zero-free first row")
    n = A.nrows
    cmp4 = fingerprints_equal(A, B, 4) if n >= 4 else None
    cmp2 = fingerprints_equal(A, B, 2) if n >= 2 else None
    if cmp2 is not None and not cmp2:
        diag = {}
        if cmp4 is not None and cmp4:
            # Order-4 minors alone do not pin down the underlying graph.
            diag["order4_equal"] = True
            log.warning("order-4 minors agree but underlying graphs differ at %s",
                        to_indices(cmp2.subset))
        return _differ(cmp2, **diag)
    if cmp4 is not None and not cmp4:
        return _differ(cmp4)

    A1, d = normalize_first_row(A)
    B1, e = normalize_first_row(B)
    head = similarity_to_reversal_sequence(A, d)
    tail = similarity_to_reversal_sequence(B1, e)
    diag = {}
    if n >= 3:
        diag["triples_hemimorphic"] = bool(triples_hemimorphic(from_skew(A1), from_skew(B1)))
    search = bfs_reversal_equivalent(A1, B1, max_states=max_states)
    diag["states_explored"] = search.explored
    if search.status is not SearchStatus.FOUND:
        full = fingerprints_equal(A, B)
        if not full:
            diag["high_order_gap"] = "order <= 4 minors agree but higher minors differ"
            log.error("sign pair agrees to order 4 but differs at %s", to_indices(full.subset))
            return _differ(full, **diag)
        diag["search"] = search.status.value
        if search.status is SearchStatus.NOT_FOUND:
            diag["conjecture_counterexample"] = True
            log.error("sign pair with equal minors but no reversal path")
        return EquivVerdict(Status.UNDECIDED, diagnostics=diag)

    for start, seg, end in ((A, head, A1), (A1, search.certificate, B1), (B1, tail, B)):
        check = verify_certificate(start, seg, end)
        if not check:
            raise AssertionError(f"certificate segment failed: {check.reason}")
    cert = head + search.certificate + tail
    assert verify_certificate(A, cert, B)
    return EquivVerdict(Status.EQUIVALENT, cert, diagnostics=diag)


# -- scanning ---------------------------------------------------------------

ENTRY_SETS = {"pm1": (-1, 1), "full": (-1, 0, 1)}


@dataclass
class ScanReport:
    n: int
    entries: str
    mode: str
    matrices: int = 0
    groups: int = 0
    group_sizes: dict = field(default_factory=dict)
    orbits: int = 0
    orbit_sizes: dict = field(default_factory=dict)
    max_certificate_length: int = 0
    counterexamples: list = field(default_factory=list)
    corollary_violations: list = field(default_factory=list)
    incomplete: bool = False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": self.entries,
            "mode": self.mode,
            "matrices": self.matrices,
            "groups": self.groups,
            "group_sizes": {str(k): v for k, v in sorted(self.group_sizes.items())},
            "orbits": self.orbits,
            "orbit_sizes": {str(k): v for k, v in sorted(self.orbit_sizes.items())},
            "max_certificate_length": self.max_certificate_length,
            "counterexamples": self.counterexamples,
            "corollary_violations": self.corollary_violations,
            "incomplete": self.incomplete,
        }


def conjecture_scan(
    n: int,
    entries: str = "pm1",
    exhaustive: bool = True,
    samples: int = 10_000,
    seed: int = 0,
    max_states: int = DEFAULT_BUDGET,
) -> ScanReport:
    """Group skew matrices by all-orders fingerprint and check that each
    group is a single reversal orbit.

    Exhaustive mode walks every matrix with entries from ``entries``
    (feasible for n <= 6); otherwise ``samples`` random matrices are drawn.
    A group split across fully explored orbits is a counterexample
    candidate and is always reported.
    """
    if entries not in ENTRY_SETS:
        raise DomainError(f"entries must be one of {sorted(ENTRY_SETS)}")
    if n < 1:
        raise DimensionError("n must be positive")
    values = ENTRY_SETS[entries]
    m = n * (n - 1) // 2
    report = ScanReport(n, entries, "exhaustive" if exhaustive else "random")
    if exhaustive:
        pool = [new_skew(n, u) for u in itertools.product(values, repeat=m)]
    else:
        rng = random.Random(seed)
        pool = list({new_skew(n, [rng.choice(values) for _ in range(m)]) for _ in range(samples)})
        pool.sort(key=lambda M: M.entry_key())
    report.matrices = len(pool)

    keys = {M: fingerprint(M).key() for M in pool}
    groups: dict = {}
    for M in pool:
        groups.setdefault(keys[M], []).append(M)
    report.groups = len(groups)
    report.group_sizes = dict(Counter(len(g) for g in groups.values()))

    orbit_of: dict = {}
    orbit_complete: list[bool] = []
    orbit_reps: list[Matrix] = []
    orbit_sizes: Counter = Counter()
    for key in sorted(groups, key=lambda k: groups[k][0].entry_key()):
        members_ = groups[key]
        if len(members_) == 1 and not exhaustive:
            continue
        for M in members_:
            if M in orbit_of:
                continue
            orbit = reversal_orbit(M, max_states)
            oid = len(orbit_reps)
            orbit_reps.append(M)
            orbit_complete.append(orbit.complete)
            orbit_sizes[len(orbit)] += 1
            report.incomplete |= not orbit.complete
            report.max_certificate_length = max(report.max_certificate_length, orbit.eccentricity)
            for state in orbit.parent:
                orbit_of.setdefault(state, oid)
                if state in keys and keys[state] != key:
                    report.corollary_violations.append(
                        {"a": list(M.entry_key()), "b": list(state.entry_key())}
                    )
        oids = sorted({orbit_of[M] for M in members_})
        if len(oids) > 1:
            first = oids[0]
            for other in oids[1:]:
                if orbit_complete[first] and orbit_complete[other]:
                    report.counterexamples.append(
                        {
                            "a": list(orbit_reps[first].entry_key()),
                            "b": list(orbit_reps[other].entry_key()),
                        }
                    )
    report.orbits = len(orbit_reps)
    report.orbit_sizes = dict(orbit_sizes)
    for c in report.counterexamples:
        log.warning("equal fingerprints but disjoint orbits: %s vs %s", c["a"], c["b"])
    return report


def decide_equivalence(
    A: SkewMatrix, B: SkewMatrix, max_states: int = DEFAULT_BUDGET
) -> EquivVerdict:
    """Equivalence for arbitrary skew matrices: minor comparison, then orbit search.

    Dispatches to :func:`decide_equivalence_mn` when both matrices lie in
    that class. A fully explored orbit that misses ``B`` although all minors agree
    is reported as NOT_EQUIVALENT without a witness subset and flagged.
    """
    if in_class_mn(A) and in_class_mn(B):
        return decide_equivalence_mn(A, B, max_states)
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    cmp = fingerprints_equal(A, B)
    if not cmp:
        return _differ(cmp)
    search = bfs_reversal_equivalent(A, B, max_states=max_states)
    diag = {"states_explored": search.explored}
    if search.status is SearchStatus.FOUND:
        return EquivVerdict(Status.EQUIVALENT, search.certificate, diagnostics=diag)
    if search.status is SearchStatus.NOT_FOUND:
        diag["conjecture_counterexample"] = True
        log.error("equal principal minors but no reversal path")
        return EquivVerdict(Status.NOT_EQUIVALENT, diagnostics=diag)
    diag["search"] = search.status.value
    return EquivVerdict(Status.UNDECIDED, diagnostics=diag)
