"""Exact linear algebra over the rationals.

Matrices are tuples of tuples of Fraction.  Everything here is small and
dense, so plain Gaussian elimination with exact pivoting is entirely
adequate; there are no tolerances anywhere.
"""

from fractions import Fraction


def mat(rows):
    """Normalize a nested list of numbers into an immutable Fraction matrix."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(n, m):
    return tuple((Fraction(0),) * m for _ in range(n))


def identity(n):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a):
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a, b):
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch: {n}x{k} times {k2}x{m}")
    bt = tuple(zip(*b)) if m else ()
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(a):
    n, m = shape(a)
    if n != m:
        raise ValueError("trace of a non-square matrix")
    return sum((a[i][i] for i in range(n)), Fraction(0))


def _elim(a):
    """Row-reduce a copy of `a`; return (rows, rank, det_if_square)."""
    rows = [list(r) for r in a]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    det = Fraction(1)
    rank = 0
    for col in range(m):
        piv = None
        for r in range(rank, n):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            det = Fraction(0)
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            det = -det
        det *= rows[rank][col]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rows, rank, det


def rank(a):
    if not a or not a[0]:
        return 0
    return _elim(a)[1]


def det(a):
    n, m = shape(a)
    if n != m:
        raise ValueError(f"determinant of a {n}x{m} matrix")
    if n == 0:
        return Fraction(1)
    rows, rk, d = _elim(a)
    return d if rk == n else Fraction(0)


def inverse(a):
    n, m = shape(a)
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    aug = tuple(tuple(a[i]) + tuple(identity(n)[i]) for i in range(n))
    rows, rk, _ = _elim(aug)
    if rk < n or any(rows[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def is_invertible(a):
    n, m = shape(a)
    return n == m and (n == 0 or det(a) != 0)
