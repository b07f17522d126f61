"""Random instance generators and independent oracles shared by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

from skewpm.matrix_core import Matrix, SkewMatrix, new_skew


def random_skew(rng, n, lo=-3, hi=3):
    return new_skew(n, [rng.randint(lo, hi) for _ in range(n * (n - 1) // 2)])


def random_sign_skew(rng, n, values=(-1, 0, 1)):
    return new_skew(n, [rng.choice(values) for _ in range(n * (n - 1) // 2)])


def planted_clan_skew(rng, n, lo=-3, hi=3):
    """Skew matrix with a planted HL-clan X, 2 <= |X| <= n - 2 (needs n >= 4)."""
    verts = list(range(n))
    rng.shuffle(verts)
    k = rng.randint(2, n - 2)
    inside, outside = sorted(verts[:k]), sorted(verts[k:])
    rows = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        same = (i in inside) == (j in inside)
        if same:
            v = rng.randint(lo, hi)
            rows[i][j], rows[j][i] = v, -v
    alpha = {i: rng.randint(-2, 2) for i in outside}
    beta = {j: rng.randint(-2, 2) for j in inside}
    for i in outside:
        for j in inside:
            v = alpha[i] * beta[j]
            rows[i][j], rows[j][i] = v, -v
    return SkewMatrix(rows), sum(1 << j for j in inside)


def random_rational_diagonal(rng, n):
    out = []
    for _ in range(n):
        num = rng.choice([x for x in range(-5, 6) if x])
        out.append(Fraction(num, rng.randint(1, 4)))
    return out


def random_sign_diagonal(rng, n):
    return [rng.choice((-1, 1)) for _ in range(n)]


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * a * cofactor_det(minor)
    return total


def leibniz_pf(rows):
    """Pfaffian as a sum over all permutations (tiny n only)."""
    n = len(rows)
    if n % 2:
        return 0
    m = n // 2
    total = Fraction(0)
    for p in itertools.permutations(range(n)):
        sign = 1
        seen = list(p)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = 1
        for k in range(m):
            term *= rows[p[2 * k]][p[2 * k + 1]]
        total += sign * term
    fact = 1
    for k in range(2, m + 1):
        fact *= k
    return total / (2 ** m * fact)


def fraction_rank(rows):
    """Gaussian elimination over Fraction; independent of the library's rank."""
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def all_signed_diagonal_images(A):
    """Every D^-1 A D and its transpose over the 2**n sign diagonals."""
    n = A.nrows
    out = set()
    for d in itertools.product((-1, 1), repeat=n):
        rows = tuple(tuple(A[i, j] * d[i] * d[j] for j in range(n)) for i in range(n))
        M = Matrix(rows)
        out.add(M)
        out.add(M.transpose())
    return out


def mn_matrices(n):
    """Every sign matrix of order n with a zero-free first row, in a fixed order."""
    out = []
    for first in itertools.product((-1, 1), repeat=n - 1):
        for rest in itertools.product((-1, 0, 1), repeat=(n - 1) * (n - 2) // 2):
            out.append(new_skew(n, list(first) + list(rest)))
    return out
