"""Exact integer and rational matrices.

Matrices are tuples of row tuples holding ``int`` (or ``Fraction`` for the
rational results).  They are small, so everything is dense and written for
clarity rather than speed; no floating point is used anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "Definiteness",
    "SnfDecomposition",
    "as_matrix",
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "bilinear",
    "block_diag",
    "is_square",
    "is_symmetric",
    "determinant",
    "smith_normal_form",
    "hermite_normal_form",
    "rational_inverse",
    "solve_rational",
    "integer_inverse",
    "definiteness",
    "orthogonal_basis",
    "signature",
    "reduce_binary_form",
    "solve_mod2",
    "kernel_mod2",
]

IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive-definite"
    NEGATIVE_DEFINITE = "negative-definite"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Freeze a nested sequence into an ``IntMatrix``, checking rectangularity."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def _shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m)) if m else ()


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def bilinear(s: Sequence[Sequence], x: Sequence, y: Sequence):
    """``x^T S y``."""
    return sum(xi * t for xi, t in zip(x, matvec(s, y)))


def block_diag(*blocks: Sequence[Sequence[int]]) -> IntMatrix:
    n = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        k = len(b)
        for row in b:
            rows.append((0,) * offset + tuple(row) + (0,) * (n - offset - k))
        offset += k
    return tuple(rows)


def is_square(m: Sequence[Sequence]) -> bool:
    return all(len(row) == len(m) for row in m)


def is_symmetric(m: Sequence[Sequence]) -> bool:
    return is_square(m) and all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    >>> determinant([[-15, 10], [10, -7]])
    5
    """
    if not is_square(m):
        raise ValueError("determinant of a non-square matrix")
    n = len(m)
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ S @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form.

    ``U_inv`` is carried along because the cokernel generators are its columns.
    """

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(_shape(self.D))))


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfDecomposition:
    """Smith normal form with both unimodular transforms.

    The diagonal of ``D`` is nonnegative and each entry divides the next.

    >>> smith_normal_form([[2, 1], [1, 2]]).invariant_factors
    (1, 3)
    """
    rows, cols = _shape(m)
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    u_inv = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    # Each row operation on ``a`` is mirrored on ``u``; its inverse is applied
    # as a column operation on ``u_inv``.
    def swap_rows(i, j):
        for mat in (a, u):
            mat[i], mat[j] = mat[j], mat[i]
        for r in u_inv:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):  # row[dst] += c * row[src]
        for mat in (a, u):
            mat[dst] = [x + c * y for x, y in zip(mat[dst], mat[src])]
        for r in u_inv:
            r[src] -= c * r[dst]

    def negate_row(i):
        for mat in (a, u):
            mat[i] = [-x for x in mat[i]]
        for r in u_inv:
            r[i] = -r[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for r in mat:
                r[i], r[j] = r[j], r[i]

    def add_col(dst, src, c):
        for mat in (a, v):
            for r in mat:
                r[dst] += c * r[src]

    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i0, j0 = min(nonzero)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            col = [(abs(a[i][t]), i) for i in range(t + 1, rows) if a[i][t]]
            row = [(abs(a[t][j]), j) for j in range(t + 1, cols) if a[t][j]]
            if col:
                swap_rows(t, min(col)[1])
                continue
            if row:
                swap_cols(t, min(row)[1])
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)

    return SnfDecomposition(
        D=as_matrix(a), U=as_matrix(u), V=as_matrix(v), U_inv=as_matrix(u_inv)
    )


def hermite_normal_form(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Row Hermite normal form; zero rows are dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    a = [list(r) for r in m if any(r)]
    cols = _shape(m)[1]
    r = 0
    for c in range(cols):
        if r == len(a):
            break
        while True:
            live = [(abs(a[i][c]), i) for i in range(r, len(a)) if a[i][c]]
            if not live:
                break
            _, piv = min(live)
            a[r], a[piv] = a[piv], a[r]
            if len(live) == 1:
                break
            for i in range(r + 1, len(a)):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        if not a[r][c]:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return as_matrix([row for row in a if any(row)])


def solve_rational(m: Sequence[Sequence[int]], columns: Sequence[Sequence[int]]
                   ) -> tuple[tuple[Fraction, ...], ...]:
    """Exact solutions ``x`` of ``m x = b`` for each integer column ``b``.

    Bareiss elimination on the augmented matrix keeps every intermediate an
    integer; only the back substitution uses ``Fraction``.
    """
    if not is_square(m):
        raise ValueError("solve needs a square matrix")
    n, k = len(m), len(columns)
    a = [list(row) + [b[i] for b in columns] for i, row in enumerate(m)]
    prev = 1
    for c in range(n):
        if a[c][c] == 0:
            piv = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
        for i in range(c + 1, n):
            for j in range(c + 1, n + k):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    out = []
    for col in range(n, n + k):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = a[i][col] - sum(a[i][j] * x[j] for j in range(i + 1, n))
            x[i] = Fraction(acc) / a[i][i]
        out.append(tuple(x))
    return tuple(out)


def rational_inverse(m: Sequence[Sequence[int]]) -> RatMatrix:
    """Exact inverse over the rationals."""
    if not is_square(m):
        raise ValueError("inverse of a non-square matrix")
    n = len(m)
    cols = solve_rational(m, identity(n))
    return transpose(cols) if n else ()


def integer_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular matrix."""
    inv = rational_inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return as_matrix([[int(x) for x in row] for row in inv])


def definiteness(m: Sequence[Sequence[int]]) -> Definiteness:
    """Sylvester's criterion on the exact leading principal minors."""
    if not is_symmetric(m):
        raise ValueError("definiteness of a non-symmetric matrix")
    n = len(m)
    if determinant(m) == 0:
        return Definiteness.DEGENERATE
    minors = [determinant([row[:k] for row in m[:k]]) for k in range(1, n + 1)]
    if all(d > 0 for d in minors):
        return Definiteness.POSITIVE_DEFINITE
    if all((d < 0) if k % 2 else (d > 0) for k, d in enumerate(minors, start=1)):
        return Definiteness.NEGATIVE_DEFINITE
    return Definiteness.INDEFINITE


def orthogonal_basis(m: Sequence[Sequence[int]]) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Rational basis ``c_k`` with ``c_i^T S c_j == 0`` for ``i != j``.

    Returns ``(c_k, c_k^T S c_k)`` pairs; this is symmetric LDL^T written in
    terms of basis vectors.  When every remaining diagonal entry vanishes a
    pair ``b_i + b_j`` with nonzero pairing is used instead.
    """
    if not is_symmetric(m):
        raise ValueError("orthogonal_basis needs a symmetric matrix")
    n = len(m)
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    out = []
    while basis:
        vals = [bilinear(m, b, b) for b in basis]
        k = next((i for i, x in enumerate(vals) if x != 0), None)
        if k is None:
            pair = next(
                ((i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
                 if bilinear(m, basis[i], basis[j]) != 0),
                None,
            )
            if pair is None:
                out.extend((b, Fraction(0)) for b in basis)
                break
            i, j = pair
            basis[i] = tuple(x + y for x, y in zip(basis[i], basis[j]))
            continue
        c = basis.pop(k)
        cc = vals[k]
        out.append((c, cc))
        basis = [
            tuple(x - (bilinear(m, c, b) / cc) * y for x, y in zip(b, c)) for b in basis
        ]
    return out


def signature(m: Sequence[Sequence[int]]) -> int:
    """``n_plus - n_minus`` of a symmetric matrix."""
    return sum((v > 0) - (v < 0) for _, v in orthogonal_basis(m))


def reduce_binary_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Lagrange reduction of a nondegenerate 2x2 symmetric matrix.

    Returns ``(R, B)`` with ``R = B m B^T``, ``B`` unimodular and
    ``|2 R01| <= |R00| <= |R11|`` unless ``R00 == 0``.
    """
    (a, b), (_, c) = m
    basis = [[1, 0], [0, 1]]
    if a == 0 and c != 0:
        a, c = c, a
        basis.reverse()
    while a != 0:
        k = round(Fraction(b, a))
        b, c = b - k * a, c - 2 * k * b + k * k * a
        basis[1] = [y - k * x for x, y in zip(basis[0], basis[1])]
        if abs(c) < abs(a):
            a, c = c, a
            basis.reverse()
        else:
            break
    B = as_matrix(basis)
    return matmul(matmul(B, m), transpose(B)), B


def _rref_mod2(a: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    rows, cols = len(a), (len(a[0]) if a else 0)
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                a[i] = [x ^ y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def solve_mod2(a: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[int, ...]:
    """One solution of ``A x == b (mod 2)`` with free variables set to 0."""
    if not is_square(a) or len(b) != len(a):
        raise ValueError("solve_mod2 needs a square system")
    n = len(a)
    aug = [[x & 1 for x in row] + [bi & 1] for row, bi in zip(a, b)]
    red, pivots = _rref_mod2(aug)
    if n in pivots:
        raise ArithmeticError("A x = b (mod 2) is inconsistent")
    x = [0] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    return tuple(x)


def kernel_mod2(a: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """A basis of the null space of ``A`` over the two-element field."""
    cols = _shape(a)[1]
    red, pivots = _rref_mod2([[x & 1 for x in row] for row in a])
    basis = []
    for f in (c for c in range(cols) if c not in pivots):
        x = [0] * cols
        x[f] = 1
        for r, c in enumerate(pivots):
            x[c] = red[r][f]
        basis.append(tuple(x))
    return basis
