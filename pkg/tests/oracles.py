"""Independent reference computations used only by the tests.

Nothing here touches the elimination engine: determinants come from
cofactor expansion, inverses from the adjugate, rank from minors.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations


def as_rows(M):
    return tuple(tuple(M.row(i)) for i in range(M.rows))


@lru_cache(maxsize=None)
def det(rows):
    """Laplace expansion along the first row; rows is a tuple of tuples."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a:
            minor = tuple(r[:j] + r[j + 1:] for r in rows[1:])
            total += (-1) ** j * a * det(minor)
    return total


def minor(rows, i, j):
    return tuple(r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i)


def adjugate(rows):
    n = len(rows)
    # adj[i][j] = cofactor C_ji
    return tuple(tuple((-1) ** (i + j) * det(minor(rows, j, i)) for j in range(n)) for i in range(n))


def adjugate_inverse(rows):
    d = det(rows)
    if d == 0:
        return None
    adj = adjugate(rows)
    return tuple(tuple(x / d for x in r) for r in adj)


def rank_by_minors(rows, ncols):
    """Largest k with a nonzero k x k minor. Exponential; tiny inputs only."""
    m = len(rows)
    for k in range(min(m, ncols), 0, -1):
        for rs in combinations(range(m), k):
            for cs in combinations(range(ncols), k):
                if det(tuple(tuple(rows[i][j] for j in cs) for i in rs)) != 0:
                    return k
    return 0


def matmul_rows(A, B):
    """Schoolbook product over tuples of tuples."""
    inner = len(B)
    cols = len(B[0]) if B else 0
    return tuple(
        tuple(sum((a[k] * B[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)) for a in A
    )
