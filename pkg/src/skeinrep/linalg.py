"""Dense matrices over a cyclotomic field, stored as lists of rows of CycNum.

Products skip zero entries and accumulate unreduced polynomials before a
single reduction per entry, which matters for the sparse curve operators.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from flint import fmpq_poly

from .cyclotomic import CycField, CycNum

Matrix = list[list[CycNum]]

__all__ = [
    "Matrix",
    "zeros",
    "eye",
    "diag",
    "matmul",
    "matadd",
    "matscale",
    "conj_transpose",
    "mat_equal",
    "is_zero_matrix",
    "poly_on_matrix",
    "charpoly",
    "nullity",
]


def zeros(K: CycField, n: int, m: int | None = None) -> Matrix:
    return [[K.zero] * (n if m is None else m) for _ in range(n)]


def eye(K: CycField, n: int) -> Matrix:
    out = zeros(K, n)
    for i in range(n):
        out[i][i] = K.one
    return out


def diag(K: CycField, values: Sequence[CycNum]) -> Matrix:
    out = zeros(K, len(values))
    for i, v in enumerate(values):
        out[i][i] = v
    return out


def _sparse_rows(M: Matrix) -> list[list[tuple[int, fmpq_poly]]]:
    return [[(j, x.poly) for j, x in enumerate(row) if not x.poly.is_zero()] for row in M]


def matmul(K: CycField, A: Matrix, B: Matrix) -> Matrix:
    if A and len(A[0]) != len(B):
        raise ValueError("inner dimensions differ")
    rows_b = _sparse_rows(B)
    mod = K._mod
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc: dict[int, fmpq_poly] = {}
        for k, a in enumerate(row):
            pa = a.poly
            if pa.is_zero():
                continue
            for j, pb in rows_b[k]:
                p = pa * pb
                if j in acc:
                    acc[j] += p
                else:
                    acc[j] = p
        new = [K.zero] * m
        for j, p in acc.items():
            new[j] = CycNum(K, p % mod)
        out.append(new)
    return out


def matadd(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matscale(c: CycNum, A: Matrix) -> Matrix:
    return [[c * a for a in row] for row in A]


def conj_transpose(A: Matrix) -> Matrix:
    n = len(A)
    m = len(A[0]) if A else 0
    return [[A[i][j].conj() for i in range(n)] for j in range(m)]


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def is_zero_matrix(A: Matrix) -> bool:
    return all(x.is_zero() for row in A for x in row)


def poly_on_matrix(K: CycField, coeffs: Sequence[CycNum], M: Matrix) -> Matrix:
    """sum_k coeffs[k] M^k by Horner's rule."""
    n = len(M)
    out = zeros(K, n)
    for c in reversed(coeffs):
        out = matmul(K, out, M)
        if not c.is_zero():
            for i in range(n):
                out[i][i] = out[i][i] + c
    return out


def charpoly(K: CycField, M: Matrix) -> list[CycNum]:
    """Coefficients (lowest degree first, monic) of det(x I - M), Faddeev-LeVerrier."""
    n = len(M)
    coeffs = [K.zero] * (n + 1)
    coeffs[n] = K.one
    Mk = zeros(K, n)
    for k in range(1, n + 1):
        Mk = matmul(K, M, Mk)
        for i in range(n):
            Mk[i][i] = Mk[i][i] + coeffs[n - k + 1]
        AM = matmul(K, M, Mk)
        tr = sum((AM[i][i] for i in range(n)), K.zero)
        coeffs[n - k] = -tr / k
    return coeffs


def nullity(K: CycField, rows: Iterable[dict[int, CycNum]], nvars: int) -> int:
    """nvars minus the rank of a sparse linear system, by incremental exact RREF.

    Pivot rows are kept fully reduced against each other, so a new row is
    reduced in one pass over its entries.
    """
    pivots: dict[int, dict[int, CycNum]] = {}
    occurs: dict[int, set[int]] = {}
    for row in rows:
        row = {v: c for v, c in row.items() if not c.is_zero()}
        for v in [v for v in row if v in pivots]:
            c = row.get(v)
            if c is None:
                continue
            for w, d in pivots[v].items():
                val = row.get(w, K.zero) - c * d
                if val.is_zero():
                    row.pop(w, None)
                else:
                    row[w] = val
        if not row:
            continue
        p = min(row, key=lambda v: (len(occurs.get(v, ())), v))
        scale = row[p].inverse()
        row = {v: c * scale for v, c in row.items()}
        for q in list(occurs.get(p, ())):
            prow = pivots[q]
            c = prow[p]
            for w, d in row.items():
                val = prow.get(w, K.zero) - c * d
                if val.is_zero():
                    prow.pop(w, None)
                    occurs.get(w, set()).discard(q)
                else:
                    if w not in prow:
                        occurs.setdefault(w, set()).add(q)
                    prow[w] = val
        occurs.pop(p, None)
        pivots[p] = row
        for w in row:
            if w != p:
                occurs.setdefault(w, set()).add(p)
    return nvars - len(pivots)
