"""Dehn-twist matrices in genus 1 and 2.

Twists along boundaries of dual discs act diagonally on the coloring basis.
Every other twist is obtained from a curve operator Phi(gamma), which is
tridiagonal in that basis, through the interpolating polynomial Q with
Q(x_n) = (-1)^n A^(n(n+2)) at the nodes x_n = -A^(2n+2) - A^(-2n-2).

Matrices act on column vectors: ``M[i][j]`` is the coefficient of basis
vector i in the image of basis vector j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .colorings import Coloring, TrivalentGraph, enumerate_admissible, standard_graph
from .cyclotomic import CycNum, cyclotomic_field, quantum_int
from .linalg import (
    Matrix,
    conj_transpose,
    diag,
    eye,
    is_zero_matrix,
    mat_equal,
    matmul,
    nullity,
    poly_on_matrix,
    zeros,
)
from .pairing import GramForm, annulus_dual, gram_form, twist_node

__all__ = [
    "RepMatrix",
    "InterpolationPoly",
    "InvalidCurveOperator",
    "twist_eigenvalue",
    "dehn_twist_dual",
    "interpolation_Q",
    "node_polynomial",
    "curve_operator_genus1",
    "curve_operator_genus2",
    "dehn_twist_via_Q",
    "genus1_rep",
    "genus2_rep",
    "commutant_dimension",
    "projective_scalar",
    "projective_equal",
    "is_gram_unitary",
    "is_gram_self_adjoint",
    "annihilated_by_nodes",
]

THETA_EDGES = ("a", "b", "c")


class InvalidCurveOperator(ValueError):
    """The operator's spectrum is not contained in the node set {x_n}."""


@dataclass
class RepMatrix:
    r: int
    genus: int
    basis: tuple[Coloring, ...]
    entries: Matrix
    name: str = ""

    def __post_init__(self):
        n = len(self.basis)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"matrix shape does not match basis of size {n}")

    @property
    def field(self):
        return cyclotomic_field(self.r)

    @property
    def size(self) -> int:
        return len(self.basis)

    def __getitem__(self, ij) -> CycNum:
        i, j = ij
        return self.entries[i][j]

    def _like(self, entries: Matrix, name: str = "") -> "RepMatrix":
        return RepMatrix(self.r, self.genus, self.basis, entries, name)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if other.basis != self.basis:
            raise ValueError("matrices are indexed by different bases")
        return self._like(matmul(self.field, self.entries, other.entries))

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.r == other.r and self.basis == other.basis and mat_equal(self.entries, other.entries)

    def __pow__(self, k: int) -> "RepMatrix":
        out = self._like(eye(self.field, self.size))
        for _ in range(k):
            out = out @ self
        return out

    def conj_transpose(self) -> "RepMatrix":
        return self._like(conj_transpose(self.entries))

    def is_diagonal(self) -> bool:
        return all(x.is_zero() for i, row in enumerate(self.entries) for j, x in enumerate(row) if i != j)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "genus": self.genus,
            "name": self.name,
            "basis": [list(c) for c in self.basis],
            "matrix": [[x.to_json() for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "RepMatrix":
        r = int(data["r"])
        entries = [[_parse_entry(x, r) for x in row] for row in data["matrix"]]
        return cls(r, int(data["genus"]), tuple(tuple(c) for c in data["basis"]), entries, data.get("name", ""))


def _parse_entry(x, r: int) -> CycNum:
    z = CycNum.from_json(x)
    if z.field.r != r:
        raise ValueError(f"entry at level {z.field.r} inside a level-{r} matrix")
    return z


@dataclass(frozen=True)
class InterpolationPoly:
    r: int
    coeffs: tuple[CycNum, ...] = field(repr=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: CycNum) -> CycNum:
        K = cyclotomic_field(self.r)
        acc = K.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "InterpolationPoly":
        return cls(int(data["r"]), tuple(CycNum.from_json(c) for c in data["coeffs"]))

    def on_matrix(self, M: Matrix) -> Matrix:
        return poly_on_matrix(cyclotomic_field(self.r), self.coeffs, M)


def twist_eigenvalue(n: int, r: int) -> CycNum:
    """(-1)^n A^(n(n+2)): positive twist on a band colored n."""
    if not 0 <= n <= r - 2:
        raise ValueError(f"color {n} outside 0..{r - 2}")
    K = cyclotomic_field(r)
    v = K.A(n * (n + 2))
    return -v if n % 2 else v


def _graph(genus: int) -> TrivalentGraph:
    if genus not in (1, 2):
        raise ValueError("twist matrices are available in genus 1 and 2 only")
    return standard_graph(genus)


@lru_cache(maxsize=None)
def _basis(genus: int, r: int) -> tuple[Coloring, ...]:
    return tuple(enumerate_admissible(_graph(genus), r))


def dehn_twist_dual(genus: int, r: int, edge: int | str) -> RepMatrix:
    """Twist along the boundary of the disc dual to ``edge`` (index or 'a'/'b'/'c')."""
    if isinstance(edge, str):
        edge = THETA_EDGES.index(edge)
    basis = _basis(genus, r)
    if not 0 <= edge < len(basis[0]):
        raise IndexError(f"edge {edge} not in the genus-{genus} graph")
    K = cyclotomic_field(r)
    entries = diag(K, [twist_eigenvalue(c[edge], r) for c in basis])
    return RepMatrix(r, genus, basis, entries, f"t_dual[{edge}]")


@lru_cache(maxsize=None)
def interpolation_Q(r: int) -> InterpolationPoly:
    """The polynomial of degree <= r-2 with Q(x_n) = (-1)^n A^(n(n+2))."""
    K = cyclotomic_field(r)
    nodes = [twist_node(n, r) for n in range(r - 1)]
    for i in range(len(nodes)):
        for j in range(i):
            if nodes[i] == nodes[j]:
                raise AssertionError(f"interpolation nodes x_{j} and x_{i} coincide")
    coeffs = [K.zero] * (r - 1)
    for n in range(r - 1):
        lam = twist_eigenvalue(n, r)
        for k, c in enumerate(annulus_dual(r, n).coeffs):
            coeffs[k] = coeffs[k] + lam * c
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    return InterpolationPoly(r, tuple(coeffs))


def node_polynomial(r: int) -> list[CycNum]:
    """prod_n (x - x_n), lowest degree first."""
    K = cyclotomic_field(r)
    out = [K.one]
    for n in range(r - 1):
        x = twist_node(n, r)
        nxt = [K.zero] * (len(out) + 1)
        for k, c in enumerate(out):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - x * c
        out = nxt
    return out


def curve_operator_genus1(r: int) -> RepMatrix:
    """Core curve z on the solid torus: z Gamma_i = Gamma_{i-1} + Gamma_{i+1}, Gamma_{r-1} = 0."""
    K = cyclotomic_field(r)
    basis = _basis(1, r)
    n = len(basis)
    M = zeros(K, n)
    for i in range(n):
        if i > 0:
            M[i - 1][i] = K.one
        if i + 1 < n:
            M[i + 1][i] = K.one
    return RepMatrix(r, 1, basis, M, "Phi(z)")


def curve_operator_genus2(r: int, edges: tuple[str, str] = ("a", "b")) -> RepMatrix:
    """Curve running along two edges of the theta graph.

    With (a, b) the colors of the traversed edges and c the third one:
    Phi Gamma_{a,b,c} = Gamma_{a+1,b+1,c}
        - [(c+a-b)/2]^2/([a][a+1]) Gamma_{a-1,b+1,c}
        - [(c+b-a)/2]^2/([b][b+1]) Gamma_{a+1,b-1,c}
        + [(a+b+c)/2+1]^2 [(a+b-c)/2]^2/([a][a+1][b][b+1]) Gamma_{a-1,b-1,c}.
    Inadmissible targets are zero; terms lowering a color below 0 are dropped.
    Other edge pairs use the relabeling symmetry of the theta graph.
    """
    p, q = (THETA_EDGES.index(e) if isinstance(e, str) else e for e in edges)
    if p == q or {p, q} - {0, 1, 2}:
        raise ValueError(f"need two distinct theta edges, got {edges}")
    (s,) = {0, 1, 2} - {p, q}
    K = cyclotomic_field(r)
    basis = _basis(2, r)
    index = {c: k for k, c in enumerate(basis)}
    M = zeros(K, len(basis))

    def qi(n):
        return quantum_int(n, r)

    for col, col_c in enumerate(basis):
        a, b, c = col_c[p], col_c[q], col_c[s]
        terms = [(1, 1, K.one)]
        if a > 0:
            terms.append((-1, 1, -(qi((c + a - b) // 2) ** 2) / (qi(a) * qi(a + 1))))
        if b > 0:
            terms.append((1, -1, -(qi((c + b - a) // 2) ** 2) / (qi(b) * qi(b + 1))))
        if a > 0 and b > 0:
            num = qi((a + b + c) // 2 + 1) ** 2 * qi((a + b - c) // 2) ** 2
            terms.append((-1, -1, num / (qi(a) * qi(a + 1) * qi(b) * qi(b + 1))))
        for da, db, coef in terms:
            target = list(col_c)
            target[p] += da
            target[q] += db
            row = index.get(tuple(target))
            if row is not None and not coef.is_zero():
                M[row][col] = M[row][col] + coef
    name = f"Phi(gamma_{THETA_EDGES[p]}{THETA_EDGES[q]})"
    return RepMatrix(r, 2, basis, M, name)


def annihilated_by_nodes(op: RepMatrix) -> bool:
    """True iff prod_n (op - x_n) = 0, i.e. the minimal polynomial divides it."""
    K = op.field
    n = op.size
    P = eye(K, n)
    for k in range(op.r - 1):
        x = twist_node(k, op.r)
        shifted = [[v - x if i == j else v for j, v in enumerate(row)] for i, row in enumerate(op.entries)]
        P = matmul(K, P, shifted)
    return is_zero_matrix(P)


def dehn_twist_via_Q(op: RepMatrix, r: int | None = None) -> RepMatrix:
    """rho(t_gamma) = Q(Phi(gamma))."""
    r = op.r if r is None else r
    if r != op.r:
        raise ValueError("level mismatch between operator and Q")
    if not annihilated_by_nodes(op):
        raise InvalidCurveOperator(f"{op.name or 'operator'} has spectrum outside the node set")
    Q = interpolation_Q(r)
    return RepMatrix(op.r, op.genus, op.basis, Q.on_matrix(op.entries), f"Q({op.name})")


def genus1_rep(r: int) -> tuple[RepMatrix, RepMatrix]:
    t_alpha = dehn_twist_dual(1, r, 0)
    t_alpha.name = "T_alpha"
    t_beta = dehn_twist_via_Q(curve_operator_genus1(r))
    t_beta.name = "T_beta"
    return t_alpha, t_beta


def genus2_rep(r: int) -> list[RepMatrix]:
    """[t_a, t_b, t_c, Q(Phi(gamma_ab)), Q(Phi(gamma_bc))] on the theta basis."""
    out = []
    for e in THETA_EDGES:
        m = dehn_twist_dual(2, r, e)
        m.name = f"t_{e}"
        out.append(m)
    for pair in (("a", "b"), ("b", "c")):
        m = dehn_twist_via_Q(curve_operator_genus2(r, pair))
        m.name = f"t_gamma_{pair[0]}{pair[1]}"
        out.append(m)
    return out


def commutant_dimension(mats: Sequence[RepMatrix]) -> int:
    """dim_K {X : XM = MX for all M}, by exact sparse elimination."""
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].size
    K = mats[0].field
    if any(m.size != n for m in mats):
        raise ValueError("matrices of different sizes")

    def nnz(m):
        return sum(1 for row in m.entries for x in row if not x.is_zero())

    def rows():
        for m in sorted(mats, key=nnz):
            E = m.entries
            cols = [[(k, E[k][j]) for k in range(n) if not E[k][j].is_zero()] for j in range(n)]
            rws = [[(k, E[i][k]) for k in range(n) if not E[i][k].is_zero()] for i in range(n)]
            for i in range(n):
                for j in range(n):
                    row: dict[int, CycNum] = {}
                    for k, v in cols[j]:  # (XM)_ij
                        key = i * n + k
                        row[key] = row[key] + v if key in row else v
                    for k, v in rws[i]:  # (MX)_ij
                        key = k * n + j
                        row[key] = row[key] - v if key in row else -v
                    yield row

    return nullity(K, rows(), n * n)


def projective_scalar(M: RepMatrix | Matrix, N: RepMatrix | Matrix) -> CycNum | None:
    """lambda with M = lambda N, located at the first nonzero entry of N, or None."""
    A = M.entries if isinstance(M, RepMatrix) else M
    B = N.entries if isinstance(N, RepMatrix) else N
    if len(A) != len(B):
        return None
    lam = None
    for i, row in enumerate(B):
        for j, x in enumerate(row):
            if not x.is_zero():
                lam = A[i][j] / x
                break
        if lam is not None:
            break
    if lam is None or lam.is_zero():
        return None
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            if a != lam * b:
                return None
    return lam


def projective_equal(M: RepMatrix | Matrix, N: RepMatrix | Matrix) -> bool:
    return projective_scalar(M, N) is not None


def is_gram_unitary(M: RepMatrix, gram: GramForm) -> bool:
    """M^H h M = h with M^H the conjugate transpose under A -> A^-1."""
    if tuple(gram.basis) != tuple(M.basis):
        raise ValueError("Gram form and matrix use different bases")
    K = M.field
    h = gram.norms
    MH = conj_transpose(M.entries)
    left = [[x * h[k] for k, x in enumerate(row)] for row in MH]
    prod = matmul(K, left, M.entries)
    return mat_equal(prod, diag(K, list(h)))


def is_gram_self_adjoint(M: RepMatrix, gram: GramForm) -> bool:
    """M^H h = h M, entrywise conj(M_ji) h_j = h_i M_ij."""
    h = gram.norms
    E = M.entries
    n = M.size
    return all(E[j][i].conj() * h[j] == h[i] * E[i][j] for i in range(n) for j in range(n))


def gram_for(genus: int, r: int) -> GramForm:
    return gram_form(_graph(genus), r)
