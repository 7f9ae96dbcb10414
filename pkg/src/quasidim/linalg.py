"""Small exact linear algebra over the rationals.

Matrices are lists of rows.  Everything returns Fractions; nothing is
ever rounded.
"""

from fractions import Fraction
from math import lcm


class SingularMatrixError(ArithmeticError):
    pass


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def solve(A, b):
    """Solve the square system ``A x = b`` exactly.

    Fraction-free (Bareiss) elimination on the integer-scaled augmented
    matrix, then rational back substitution.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve() needs a square system")
    M = _integer_rows([list(A[i]) + [b[i]] for i in range(n)])
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular system")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(M[i][n]) - sum(M[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / M[i][i]
    return x


def row_echelon(rows):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * p for a, p in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows):
    return len(row_echelon(rows)[1])


def det(A):
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            d = -d
        d *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                M[i] = [a - f * p for a, p in zip(M[i], M[k])]
    return d


def kernel_vector(rows, ncols):
    """A nonzero vector spanning the kernel of a rank ``ncols - 1`` matrix."""
    R, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError("kernel is not one-dimensional")
    f = free[0]
    v = [Fraction(0)] * ncols
    v[f] = Fraction(1)
    for row, p in zip(R, pivots):
        v[p] = -row[f]
    return v
