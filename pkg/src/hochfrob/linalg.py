"""Dense exact linear algebra: rank and kernel over Q and F_p.

Two layers live here.  The public :class:`Matrix` API does pure-Python
elimination (fraction-free over Q, plain modular elimination over F_p)
and is meant for desk-scale inputs.  The homology engine additionally
uses the int64/numpy routines below: modular elimination is exact in
int64 for small primes, and integer-matrix rank over Q is certified by
pairing a mod-p lower bound with exactly verified integer kernel
vectors (rational reconstruction, with a slow Fraction fallback).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

from .errors import FieldMismatchError
from .scalars import Field, Scalar

# Primes used for rank candidates of integer matrices over Q.  Both fit
# int64 elimination with per-step reduction; the second backs the CRT
# retry when rational reconstruction needs a larger modulus.
WITNESS_PRIME = 2147483647
WITNESS_PRIME_2 = 2147483629


@dataclass
class Matrix:
    """Dense row-major matrix over an exact field."""

    rows: int
    cols: int
    entries: List[Scalar]
    field: Field

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")
        self.entries = [self.field.normalize(x) for x in self.entries]

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Scalar]], field: Field) -> "Matrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        flat: List[Scalar] = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols), field)

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Scalar]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> List[List[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        out = [self.entries[i * self.cols + j]
               for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, out, self.field)

    def mul_vector(self, v: Sequence[Scalar]) -> List[Scalar]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match cols")
        f = self.field
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = f.zero
            for j, x in enumerate(v):
                if x:
                    acc = f.add(acc, f.mul(self.entries[base + j], x))
            out.append(acc)
        return out


def _echelon_modp(rows: List[List[int]], p: int) -> Tuple[List[List[int]], List[int]]:
    """In-place forward elimination over F_p; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c] % p, p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                q = rows[i][c] % p
                rows[i] = [(x - q * y) % p for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _echelon_rationals(rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q with lowest-index pivot preference.

    Rows are scaled to integers first so the elimination core works on
    ints (controls intermediate blow-up); the final normalization
    reintroduces fractions only in the reduced rows.
    """
    work: List[List[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in fr]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        work.append(ints)

    if not work:
        return [], []
    ncols = len(work[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r]
        lc = lead[c]
        for i in range(len(work)):
            if i != r and work[i][c]:
                a = work[i][c]
                g = gcd(a, lc)
                fa, fl = lc // g, a // g
                newrow = [fa * x - fl * y for x, y in zip(work[i], lead)]
                g2 = 0
                for x in newrow:
                    g2 = gcd(g2, x)
                if g2 > 1:
                    newrow = [x // g2 for x in newrow]
                work[i] = newrow
        pivots.append(c)
        r += 1
        if r == len(work):
            break

    reduced: List[List[Fraction]] = []
    for i in range(len(work)):
        if i < len(pivots):
            lc = work[i][pivots[i]]
            reduced.append([Fraction(x, lc) for x in work[i]])
        else:
            reduced.append([Fraction(0)] * ncols)
    return reduced, pivots


def rref(matrix: Matrix) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row-echelon form and pivot columns (exact, deterministic)."""
    f = matrix.field
    if f.is_rationals:
        rows, pivots = _echelon_rationals([list(matrix.row(i)) for i in range(matrix.rows)])
        norm = [[f.normalize(x) for x in row] for row in rows]
        return norm, pivots
    rows = [[int(x) % f.p for x in matrix.row(i)] for i in range(matrix.rows)]
    return _echelon_modp(rows, f.p)


def matrix_rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: Matrix) -> List[List[Scalar]]:
    """Basis of the right kernel, one vector per free column.

    Vectors are in the standard echelon pattern: the free column carries
    a 1 and the pivot columns carry the negated reduced entries, so the
    result is deterministic.
    """
    f = matrix.field
    rows, pivots = rref(matrix)
    pivot_set = set(pivots)
    out: List[List[Scalar]] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = [f.zero] * matrix.cols
        vec[free] = f.one
        for r, pc in enumerate(pivots):
            vec[pc] = f.neg(rows[r][free])
        out.append(vec)
    return out


# -- fast integer/modular routines used by the homology engine ---------------------


def modp_echelon_np(mat: np.ndarray, p: int, reduced: bool = True) -> Tuple[np.ndarray, List[int]]:
    """Vectorized (reduced) echelon form of an int64 matrix over F_p.

    Exactness in int64: pivot rows and multipliers are always reduced to
    [0, p), so one update adds at most (p-1)^2 in magnitude.  For small
    p the per-row accumulation over all pivot steps stays far below
    2^63 and reduction is deferred to the end; for large p every updated
    row is reduced immediately.  With reduced=False only rows below the
    pivot are eliminated (enough for rank).
    """
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    # Max updates any row can receive is the pivot count (<= ncols).
    defer_ok = p * p * (min(nrows, ncols) + 2) < (1 << 62)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        col = a[r:, c] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] %= p
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        coeff = a[:, c] % p
        if reduced:
            coeff[r] = 0
        else:
            coeff[:r + 1] = 0
        rows_nz = np.nonzero(coeff)[0]
        if rows_nz.size:
            a[rows_nz] -= np.outer(coeff[rows_nz], a[r])
            if not defer_ok:
                a[rows_nz] %= p
        pivots.append(c)
        r += 1
    a %= p
    return a, pivots


def modp_rank(mat: np.ndarray, p: int) -> int:
    return len(modp_echelon_np(mat, p)[1])


def modp_kernel(mat: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Kernel basis over F_p as rows of an int64 array, plus pivot columns."""
    a, pivots = modp_echelon_np(mat, p)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-int(a[r, fc])) % p
    return basis, pivots


def _rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Wang reconstruction of a/m into n/d with |n|, d <= sqrt(m/2)."""
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    d = abs(s1)
    if d == 0 or d > bound or gcd(r1, d) != 1:
        return None
    n = r1 if s1 > 0 else -r1
    return Fraction(n, d)


def integer_rank_certified(mat: np.ndarray) -> int:
    """Exact rank over Q of an integer matrix.

    Candidate rank r comes from elimination mod WITNESS_PRIME (a lower
    bound, since an r x r minor nonzero mod p is nonzero over Q).  It is
    certified as an upper bound by producing cols - r kernel vectors,
    rationally reconstructed from the mod-p kernel and then verified by
    exact integer matrix multiplication.  A CRT retry with a second
    prime widens the reconstruction window; the last resort is
    fraction-free elimination.
    """
    mat = np.asarray(mat, dtype=np.int64)
    rows, cols = mat.shape
    if rows == 0 or cols == 0:
        return 0
    kern, pivots = modp_kernel(mat, WITNESS_PRIME)
    r = len(pivots)
    if r == min(rows, cols):
        return r
    if _verify_modular_kernel(mat, kern.tolist(), WITNESS_PRIME):
        return r
    kern2, pivots2 = modp_kernel(mat, WITNESS_PRIME_2)
    if pivots2 == pivots:
        m12 = WITNESS_PRIME * WITNESS_PRIME_2
        inv1 = pow(WITNESS_PRIME, -1, WITNESS_PRIME_2)
        combined = []
        for row1, row2 in zip(kern.tolist(), kern2.tolist()):
            combined.append([
                (x1 + WITNESS_PRIME * ((x2 - x1) * inv1 % WITNESS_PRIME_2)) % m12
                for x1, x2 in zip(row1, row2)
            ])
        if _verify_modular_kernel(mat, combined, m12):
            return r
    m = Matrix.from_rows(mat.tolist(), Field.rationals())
    return matrix_rank(m)


def _reconstruct_kernel(mat: np.ndarray, kern_rows: List[List[int]],
                        modulus: int) -> List[List[int]] | None:
    """Lift modular kernel rows to verified integer kernel vectors, or None."""
    int_vecs: List[List[int]] = []
    for row in kern_rows:
        vec: List[Fraction] = []
        for x in row:
            f = _rational_reconstruct(int(x), modulus)
            if f is None:
                return None
            vec.append(f)
        den = 1
        for f in vec:
            den = den * f.denominator // gcd(den, f.denominator)
        int_vecs.append([int(f * den) for f in vec])
    if not int_vecs:
        return []
    max_m = int(np.abs(mat).max()) if mat.size else 0
    max_k = max((abs(v) for vec in int_vecs for v in vec), default=0)
    if max_m * max_k * mat.shape[1] < (1 << 62):
        prod = mat @ np.array(int_vecs, dtype=np.int64).T
        return int_vecs if not np.any(prod) else None
    obj = mat.astype(object)
    for vec in int_vecs:
        if np.any(obj @ np.array(vec, dtype=object)):
            return None
    return int_vecs


def _verify_modular_kernel(mat: np.ndarray, kern_rows: List[List[int]], modulus: int) -> bool:
    return _reconstruct_kernel(mat, kern_rows, modulus) is not None


def integer_kernel_exact(mat: np.ndarray) -> List[List[int]]:
    """Exact integer basis of the rational kernel of an integer matrix.

    Same certification scheme as :func:`integer_rank_certified`; the
    fraction-free fallback clears denominators so vectors stay integral.
    """
    mat = np.asarray(mat, dtype=np.int64)
    kern, pivots = modp_kernel(mat, WITNESS_PRIME)
    # cols - len(pivots) verified vectors plus the mod-p minor pin the rank.
    lifted = _reconstruct_kernel(mat, kern.tolist(), WITNESS_PRIME)
    if lifted is not None:
        return lifted
    field = Field.rationals()
    vecs = kernel_basis(Matrix.from_rows(mat.tolist(), field))
    out = []
    for vec in vecs:
        fr = [Fraction(x) for x in vec]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        out.append([int(f * den) for f in fr])
    return out
