"""Theta coefficients, the diagonal Hermitian form, and the Hopf pairing."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .colorings import (
    Coloring,
    TrivalentGraph,
    enumerate_admissible,
    internal_colors,
    is_admissible_triple,
)
from .cyclotomic import CycNum, cyclotomic_field, quantum_factorial, quantum_int
from .temperley_lieb import AnnulusElement

__all__ = [
    "GramForm",
    "HopfMatrix",
    "PrecisionError",
    "loop_value",
    "theta",
    "gram_form",
    "hopf_matrix",
    "twist_node",
    "annulus_dual",
    "signature",
]


class PrecisionError(ArithmeticError):
    """An embedded Gram norm is numerically indistinguishable from zero."""


@dataclass(frozen=True)
class GramForm:
    r: int
    basis: tuple[Coloring, ...]
    norms: tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.basis) != len(self.norms):
            raise ValueError("basis and norms differ in length")
        if any(h.is_zero() for h in self.norms):
            raise ValueError("Gram norms must be nonzero")

    def __len__(self):
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "basis": [list(c) for c in self.basis],
            "norms": [h.to_json() for h in self.norms],
        }

    @classmethod
    def from_json(cls, data) -> "GramForm":
        return cls(
            int(data["r"]),
            tuple(tuple(c) for c in data["basis"]),
            tuple(CycNum.from_json(h) for h in data["norms"]),
        )


@dataclass(frozen=True)
class HopfMatrix:
    r: int
    entries: tuple[tuple[CycNum, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def square(self) -> list[list[CycNum]]:
        n = self.size
        K = cyclotomic_field(self.r)
        return [
            [sum((self.entries[i][k] * self.entries[k][j] for k in range(n)), K.zero) for j in range(n)]
            for i in range(n)
        ]

    def square_scalar(self) -> CycNum:
        """-2r / (A^2 - A^-2)^2."""
        K = cyclotomic_field(self.r)
        d = K.A(2) - K.A(-2)
        return K(-2 * self.r) / (d * d)

    def inverse(self) -> list[list[CycNum]]:
        # Pi^2 = s Id, so Pi^-1 = Pi / s
        s_inv = self.square_scalar().inverse()
        return [[s_inv * x for x in row] for row in self.entries]

    def to_json(self) -> dict:
        return {"r": self.r, "matrix": [[x.to_json() for x in row] for row in self.entries]}


def loop_value(n: int, r: int) -> CycNum:
    """<n> = tr f_n = (-1)^n [n+1]."""
    if not 0 <= n <= r - 2:
        raise ValueError(f"loop color {n} outside 0..{r - 2}")
    q = quantum_int(n + 1, r)
    return -q if n % 2 else q


@lru_cache(maxsize=None)
def theta(a: int, b: int, c: int, r: int) -> CycNum:
    """Evaluation of the colored theta graph.

    (-1)^(i+j+k) [i+j+k+1]! [i]! [j]! [k]! / ([a]! [b]! [c]!) with i, j, k
    the internal colors.
    """
    if not is_admissible_triple(a, b, c, r):
        raise ValueError(f"({a}, {b}, {c}) is not an r-admissible triple for r={r}")
    i, j, k = internal_colors(a, b, c)
    num = (
        quantum_factorial(i + j + k + 1, r)
        * quantum_factorial(i, r)
        * quantum_factorial(j, r)
        * quantum_factorial(k, r)
    )
    den = quantum_factorial(a, r) * quantum_factorial(b, r) * quantum_factorial(c, r)
    val = num / den
    return -val if (i + j + k) % 2 else val


def gram_form(g: TrivalentGraph, r: int) -> GramForm:
    """<Gamma_c, Gamma_c> = prod_v theta(c at v) / prod_e <c(e)> on the admissible basis.

    A vertexless loop contributes <c> / <c> = 1.
    """
    if g.boundary:
        raise ValueError("gram_form needs a graph without univalent vertices")
    K = cyclotomic_field(r)
    basis = enumerate_admissible(g, r)
    verts = [g.incident(v) for v in g.trivalent_vertices()]
    norms = []
    for c in basis:
        num = K.one
        for e1, e2, e3 in verts:
            num = num * theta(c[e1], c[e2], c[e3], r)
        den = K.one
        for e in range(len(g.edges)):
            den = den * loop_value(c[e], r)
        norms.append(num / den)
    return GramForm(r, tuple(basis), tuple(norms))


def hopf_matrix(r: int) -> HopfMatrix:
    """Pi_ij = (-1)^(i+j) [(i+1)(j+1)], i, j = 0..r-2."""
    if r < 2:
        raise ValueError("r must be >= 2")
    rows = []
    for i in range(r - 1):
        row = []
        for j in range(r - 1):
            q = quantum_int((i + 1) * (j + 1), r)
            row.append(-q if (i + j) % 2 else q)
        rows.append(tuple(row))
    return HopfMatrix(r, tuple(rows))


def twist_node(n: int, r: int) -> CycNum:
    """x_n = -A^(2n+2) - A^(-2n-2): eigenvalue of a meridian curve on color n."""
    K = cyclotomic_field(r)
    return -(K.A(2 * n + 2) + K.A(-2 * n - 2))


def annulus_dual(r: int, i: int) -> AnnulusElement:
    """t_i(z) with t_i(x_j) = delta_ij on the nodes x_0..x_{r-2} (Lagrange basis)."""
    if not 0 <= i <= r - 2:
        raise ValueError(f"index {i} outside 0..{r - 2}")
    K = cyclotomic_field(r)
    xi = twist_node(i, r)
    out = AnnulusElement(K, [K.one])
    for j in range(r - 1):
        if j == i:
            continue
        xj = twist_node(j, r)
        denom = (xi - xj).inverse()
        out = out * AnnulusElement(K, [-xj * denom, denom])
    return out


def signature(gram: GramForm, m: int) -> tuple[int, int]:
    """(positive, negative) counts of the Gram norms under A = exp(i pi m / 2r)."""
    p = q = 0
    for h in gram.norms:
        v = h.embed(m)
        if abs(v) < 1e-9:
            raise PrecisionError(f"embedded norm {v} too close to zero")
        if v.real > 0:
            p += 1
        else:
            q += 1
    return p, q
