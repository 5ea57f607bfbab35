"""Temperley-Lieb algebras in the planar-diagram basis.

A diagram on n strands is a perfect matching of 2n boundary points stored
as an involution tuple ``match``: points 0..n-1 are the top row (left to
right), points n..2n-1 the bottom row.  Products follow the stacking
convention ``x * y`` = x placed below y.  Closed loops are never stored;
each one is replaced by delta = -A^2 - A^-2 when it appears.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from flint import fmpq_poly

from .cyclotomic import CycField, CycNum, FieldMismatchError, cyclotomic_field, quantum_int

__all__ = [
    "TLDiagram",
    "TLElement",
    "AnnulusElement",
    "JonesWenzlError",
    "diagrams",
    "catalan",
    "delta",
    "identity",
    "generator_e",
    "tl_mul",
    "tensor",
    "jones_wenzl",
    "jones_wenzl_recursive",
    "epsilon",
    "markov_trace",
    "partial_trace",
    "braid_sigma",
    "encircle",
    "full_twist",
    "annulus_closure",
    "chebyshev",
    "random_element",
]

Match = tuple[int, ...]


class JonesWenzlError(ValueError):
    """f_n does not exist at this level (some [k], k <= n, vanishes)."""


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class TLDiagram:
    n: int
    match: Match

    def __post_init__(self):
        if len(self.match) != 2 * self.n:
            raise ValueError("matching must cover 2n points")
        for p, q in enumerate(self.match):
            if self.match[q] != p or p == q:
                raise ValueError(f"not a perfect matching: {self.match}")
        if not _is_planar(self.n, self.match):
            raise ValueError(f"matching is not planar: {self.match}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "TLDiagram":
        match = [-1] * (2 * n)
        for p, q in pairs:
            match[p] = q
            match[q] = p
        return cls(n, tuple(match))

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((p, q) for p, q in enumerate(self.match) if p < q)

    def is_identity(self) -> bool:
        return self.match == _identity_match(self.n)


def _cyclic_position(n: int, p: int) -> int:
    # walk the rectangle boundary: top row left->right, then bottom row right->left
    return p if p < n else 3 * n - 1 - p


def _is_planar(n: int, match: Match) -> bool:
    arcs = [
        tuple(sorted((_cyclic_position(n, p), _cyclic_position(n, q))))
        for p, q in enumerate(match)
        if p < q
    ]
    for a, b in arcs:
        for c, d in arcs:
            if a < c < b < d:
                return False
    return True


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(catalan(k) * catalan(n - 1 - k) for k in range(n))


def _noncrossing(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1 :]
        for a in _noncrossing(inside):
            for b in _noncrossing(outside):
                yield [(first, points[k])] + a + b


@lru_cache(maxsize=None)
def diagrams(n: int) -> tuple[Match, ...]:
    """All planar matchings on n strands, sorted (Catalan many)."""
    out = []
    cyc_to_point = [k if k < n else 3 * n - 1 - k for k in range(2 * n)]
    for arcs in _noncrossing(tuple(range(2 * n))):
        match = [0] * (2 * n)
        for a, b in arcs:
            p, q = cyc_to_point[a], cyc_to_point[b]
            match[p] = q
            match[q] = p
        out.append(tuple(match))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _identity_match(n: int) -> Match:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


@lru_cache(maxsize=None)
def _generator_match(n: int, i: int) -> Match:
    # caps strands i, i+1 (1-based) on top and on bottom
    match = list(_identity_match(n))
    a, b = i - 1, i
    match[a], match[b] = b, a
    match[n + a], match[n + b] = n + b, n + a
    return tuple(match)


@lru_cache(maxsize=1 << 21)
def _compose(lower: Match, upper: Match) -> tuple[Match, int]:
    """Stack ``upper`` on top of ``lower``; return (matching, closed loops)."""
    n = len(lower) // 2
    res = [-1] * (2 * n)
    seen = [False] * n
    for start in range(2 * n):
        if res[start] >= 0:
            continue
        if start < n:
            # top point of the result = top point of upper
            q = upper[start]
            while True:
                if q < n:
                    end = q
                    break
                m = q - n
                seen[m] = True
                q2 = lower[m]
                if q2 >= n:
                    end = q2
                    break
                seen[q2] = True
                q = upper[n + q2]
        else:
            q = lower[start]
            while True:
                if q >= n:
                    end = q
                    break
                seen[q] = True
                q2 = upper[n + q]
                if q2 < n:
                    end = q2
                    break
                m = q2 - n
                seen[m] = True
                q = lower[m]
        res[start] = end
        res[end] = start
    loops = 0
    for m in range(n):
        if seen[m]:
            continue
        loops += 1
        cur = m
        while not seen[cur]:
            seen[cur] = True
            nxt = lower[cur]  # lower top -> lower top
            seen[nxt] = True
            cur = upper[n + nxt] - n  # upper bottom -> upper bottom
    return tuple(res), loops


def _tensor_match(x: Match, y: Match) -> Match:
    n, m = len(x) // 2, len(y) // 2
    N = n + m

    def rx(p):
        return p if p < n else N + (p - n)

    def ry(p):
        return n + p if p < m else N + n + (p - m)

    out = [0] * (2 * N)
    for p, q in enumerate(x):
        out[rx(p)] = rx(q)
    for p, q in enumerate(y):
        out[ry(p)] = ry(q)
    return tuple(out)


def _closure_loops(match: Match) -> int:
    n = len(match) // 2
    seen = [False] * (2 * n)
    loops = 0
    for p in range(2 * n):
        if seen[p]:
            continue
        loops += 1
        cur = p
        while not seen[cur]:
            seen[cur] = True
            q = match[cur]
            seen[q] = True
            cur = q + n if q < n else q - n
    return loops


def _annulus_loops(match: Match) -> tuple[int, int]:
    """Return (contractible, core-parallel) loop counts of the annular closure."""
    n = len(match) // 2
    seen = [False] * (2 * n)
    trivial = essential = 0
    for p in range(2 * n):
        if seen[p]:
            continue
        winding = 0
        cur = p
        while not seen[cur]:
            seen[cur] = True
            q = match[cur]
            seen[q] = True
            if q < n:
                winding -= 1
                cur = q + n
            else:
                winding += 1
                cur = q - n
        if winding:
            essential += 1
        else:
            trivial += 1
    return trivial, essential


def _partial_trace_match(match: Match) -> tuple[Match, int]:
    N = len(match) // 2
    n = N - 1
    top, bot = N - 1, 2 * N - 1
    a, b = match[top], match[bot]
    pairs = []
    loop = 0
    if a == bot:
        loop = 1
    else:
        pairs.append((a, b))
    for p, q in enumerate(match):
        if p < q and p not in (top, bot, a, b) and q not in (top, bot, a, b):
            pairs.append((p, q))

    def relabel(p):
        return p if p < N else n + (p - N)

    out = [0] * (2 * n)
    for p, q in pairs:
        out[relabel(p)] = relabel(q)
        out[relabel(q)] = relabel(p)
    return tuple(out), loop


@lru_cache(maxsize=None)
def _right_tree(n: int) -> tuple[list[Match], dict[Match, tuple[Match, int]]]:
    """Spanning tree of the diagram basis: each child = parent * e_i with no loops."""
    root = _identity_match(n)
    order = [root]
    parent: dict[Match, tuple[Match, int]] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        d = queue.popleft()
        for i in range(1, n):
            child, loops = _compose(d, _generator_match(n, i))
            if loops == 0 and child not in seen:
                seen.add(child)
                parent[child] = (d, i)
                order.append(child)
                queue.append(child)
    if len(order) != catalan(n):
        raise AssertionError("generator tree does not span the diagram basis")
    return order, parent


# ---------------------------------------------------------------------------
# elements


def delta(field: CycField) -> CycNum:
    return -(field.A(2) + field.A(-2))


@lru_cache(maxsize=None)
def _delta_powers(r: int, k: int) -> CycNum:
    K = cyclotomic_field(r)
    return delta(K) ** k


class TLElement:
    """Finite linear combination of diagrams on ``n`` strands over K."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: CycField, terms: Mapping[Match, CycNum] | None = None):
        self.n = n
        self.field = field
        self.terms = {d: c for d, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def _raw(cls, n, field, polys: dict[Match, fmpq_poly]) -> "TLElement":
        mod = field._mod
        out = cls.__new__(cls)
        out.n = n
        out.field = field
        terms = {}
        for d, p in polys.items():
            if p.degree() >= field.degree:
                p = p % mod
            if not p.is_zero():
                terms[d] = CycNum(field, p)
        out.terms = terms
        return out

    def _check(self, other: "TLElement") -> None:
        if not isinstance(other, TLElement):
            raise TypeError("expected a TLElement")
        if other.n != self.n:
            raise ValueError(f"strand counts differ: {self.n} vs {other.n}")
        if other.field.r != self.field.r:
            raise FieldMismatchError(f"r={self.field.r} vs r={other.field.r}")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: Match | TLDiagram) -> CycNum:
        if isinstance(d, TLDiagram):
            d = d.match
        return self.terms.get(d, self.field.zero)

    def __add__(self, other):
        self._check(other)
        polys = {d: c.poly for d, c in self.terms.items()}
        for d, c in other.terms.items():
            polys[d] = polys[d] + c.poly if d in polys else c.poly
        return TLElement._raw(self.n, self.field, polys)

    def __neg__(self):
        return TLElement(self.n, self.field, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TLElement":
        c = self.field(c) if not isinstance(c, CycNum) else c
        return TLElement._raw(self.n, self.field, {d: v.poly * c.poly for d, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, CycNum)) or hasattr(c, "denominator"):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return tl_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return (
            self.n == other.n
            and self.field.r == other.field.r
            and self.terms.keys() == other.terms.keys()
            and all(self.terms[d] == c for d, c in other.terms.items())
        )

    def __repr__(self) -> str:
        return f"TLElement(n={self.n}, r={self.field.r}, terms={len(self.terms)})"


def identity(n: int, r: int) -> TLElement:
    K = cyclotomic_field(r)
    return TLElement(n, K, {_identity_match(n): K.one})


def generator_e(n: int, i: int, r: int) -> TLElement:
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range for T_{n}")
    K = cyclotomic_field(r)
    return TLElement(n, K, {_generator_match(n, i): K.one})


def diagram_element(d: TLDiagram | Match, r: int) -> TLElement:
    if isinstance(d, TLDiagram):
        d = d.match
    K = cyclotomic_field(r)
    return TLElement(len(d) // 2, K, {d: K.one})


# above this many term pairs, expand y along the generator tree (prunes x*e_i = 0)
_TREE_THRESHOLD = 20000


def _mul_naive(x: TLElement, y: TLElement) -> TLElement:
    r = x.field.r
    acc: dict[Match, fmpq_poly] = {}
    for d1, c1 in x.terms.items():
        p1 = c1.poly
        for d2, c2 in y.terms.items():
            m, loops = _compose(d1, d2)
            p = p1 * c2.poly
            if loops:
                p = p * _delta_powers(r, loops).poly
            if m in acc:
                acc[m] += p
            else:
                acc[m] = p
    return TLElement._raw(x.n, x.field, acc)


def _mul_generator(x: TLElement, i: int) -> TLElement:
    g = _generator_match(x.n, i)
    dpoly = delta(x.field).poly
    acc: dict[Match, fmpq_poly] = {}
    for d, c in x.terms.items():
        m, loops = _compose(d, g)
        p = c.poly * dpoly if loops else c.poly
        if m in acc:
            acc[m] += p
        else:
            acc[m] = p
    return TLElement._raw(x.n, x.field, acc)


def _mul_tree(x: TLElement, y: TLElement) -> TLElement:
    # x * D computed along D = parent * e_i; zero branches stay zero
    order, parent = _right_tree(x.n)
    needed = set()
    for d in y.terms:
        while d not in needed:
            needed.add(d)
            if d not in parent:
                break
            d = parent[d][0]
    values: dict[Match, TLElement | None] = {}
    for d in order:
        if d not in needed:
            continue
        if d not in parent:
            values[d] = x
            continue
        p, i = parent[d]
        pv = values[p]
        if pv is None:
            values[d] = None
        else:
            v = _mul_generator(pv, i)
            values[d] = None if v.is_zero() else v
    acc: dict[Match, fmpq_poly] = {}
    for d, c in y.terms.items():
        v = values[d]
        if v is None:
            continue
        for m, cv in v.terms.items():
            p = cv.poly * c.poly
            if m in acc:
                acc[m] += p
            else:
                acc[m] = p
    return TLElement._raw(x.n, x.field, acc)


def tl_mul(x: TLElement, y: TLElement) -> TLElement:
    """Stacking product x * y (x below y)."""
    x._check(y)
    if len(x) * len(y) > _TREE_THRESHOLD:
        return _mul_tree(x, y)
    return _mul_naive(x, y)


def tensor(x: TLElement, y: TLElement) -> TLElement:
    if x.field.r != y.field.r:
        raise FieldMismatchError("tensor of elements over different fields")
    acc = {}
    mod = x.field._mod
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            m = _tensor_match(d1, d2)
            p = (c1.poly * c2.poly) % mod
            acc[m] = acc[m] + p if m in acc else p
    return TLElement._raw(x.n + y.n, x.field, acc)


def _extend(x: TLElement) -> TLElement:
    """x (x) 1_1: append a through strand on the right."""
    one = _identity_match(1)
    return TLElement(x.n + 1, x.field, {_tensor_match(d, one): c for d, c in x.terms.items()})


def epsilon(x: TLElement) -> CycNum:
    """Coefficient of the identity diagram: x = eps(x) 1_n mod I_n."""
    return x.coefficient(_identity_match(x.n))


def markov_trace(x: TLElement) -> CycNum:
    r = x.field.r
    acc = fmpq_poly([])
    for d, c in x.terms.items():
        acc += c.poly * _delta_powers(r, _closure_loops(d)).poly
    return CycNum(x.field, acc % x.field._mod)


def partial_trace(x: TLElement) -> TLElement:
    """Close the rightmost strand of an element of T_{n+1}."""
    if x.n < 1:
        raise ValueError("partial trace needs at least one strand")
    dpoly = delta(x.field).poly
    acc: dict[Match, fmpq_poly] = {}
    for d, c in x.terms.items():
        m, loop = _partial_trace_match(d)
        p = c.poly * dpoly if loop else c.poly
        acc[m] = acc[m] + p if m in acc else p
    return TLElement._raw(x.n - 1, x.field, acc)


def braid_sigma(n: int, i: int, sign: int, r: int) -> TLElement:
    """Kauffman resolution of the crossing sigma_i^{+-1}: A 1 + A^-1 e_i (positive)."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"crossing index {i} out of range for T_{n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    K = cyclotomic_field(r)
    return TLElement(n, K, {_identity_match(n): K.A(sign), _generator_match(n, i): K.A(-sign)})


def _braid_word(n: int, word: Iterable[int], r: int) -> TLElement:
    out = identity(n, r)
    for i in word:
        out = _mul_naive(out, braid_sigma(n, i, 1, r))
    return out


def encircle(x: TLElement) -> TLElement:
    """Wrap an unknotted circle around all strands of x (the y_n picture)."""
    n = x.n
    r = x.field.r
    word = list(range(n, 0, -1)) + list(range(1, n + 1))
    w = _braid_word(n + 1, word, r)
    return partial_trace(tl_mul(w, _extend(x)))


def full_twist(x: TLElement) -> TLElement:
    """Banded full twist: pure-braid full twist times one positive curl per strand."""
    n = x.n
    r = x.field.r
    word = list(range(1, n)) * n
    w = _braid_word(n, word, r)
    curl = (-x.field.A(3)) ** n
    return tl_mul(w, x).scale(curl)


def _jw_check(n: int, r: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= r:
        raise JonesWenzlError(f"f_{n} does not exist at level r={r} ([r] = 0)")


def jones_wenzl_recursive(n: int, r: int) -> TLElement:
    """f_n = f_{n-1} + ([n-1]/[n]) f_{n-1} e_{n-1} f_{n-1}, literally. Slow; reference only."""
    _jw_check(n, r)
    f = identity(0, r)
    for k in range(1, n + 1):
        F = _extend(f)
        if k == 1:
            f = F
            continue
        e = generator_e(k, k - 1, r)
        coef = quantum_int(k - 1, r) / quantum_int(k, r)
        f = F + _mul_naive(_mul_naive(F, e), F).scale(coef)
    return f


@lru_cache(maxsize=None)
def jones_wenzl(n: int, r: int) -> TLElement:
    """Jones-Wenzl idempotent f_n in T_n over K_r.

    Unrolling the recursion with f_k(f_j (x) 1) = f_k (j <= k) gives
    f_n = F + sum_{k=1}^{n-1} ([k]/[n]) F e_{n-1} e_{n-2} ... e_k,
    with F = f_{n-1} (x) 1; only generator products are needed.
    """
    _jw_check(n, r)
    if n == 0:
        return identity(0, r)
    if n == 1:
        return identity(1, r)
    F = _extend(jones_wenzl(n - 1, r))
    qn_inv = quantum_int(n, r).inverse()
    acc = {d: c.poly for d, c in F.terms.items()}
    chain = F
    for k in range(n - 1, 0, -1):
        chain = _mul_generator(chain, k)
        coef = (quantum_int(k, r) * qn_inv).poly
        for d, c in chain.terms.items():
            p = c.poly * coef
            acc[d] = acc[d] + p if d in acc else p
    return TLElement._raw(n, F.field, acc)


def random_element(n: int, r: int, rng: random.Random, terms: int = 6, span: int = 3) -> TLElement:
    """Pseudorandom element with small integer-coefficient CycNum coefficients."""
    K = cyclotomic_field(r)
    basis = diagrams(n)
    out = {}
    for _ in range(terms):
        d = rng.choice(basis)
        c = K.from_coeffs(rng.randint(-span, span) for _ in range(K.degree))
        out[d] = out[d] + c if d in out else c
    return TLElement(n, K, out)


# ---------------------------------------------------------------------------
# annulus


class AnnulusElement:
    """Polynomial in the core curve z of the annulus, coefficients in K."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycField, coeffs: Iterable[CycNum]):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "AnnulusElement") -> "AnnulusElement":
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return AnnulusElement(self.field, [u + v for u, v in zip(a, b)])

    def __neg__(self):
        return AnnulusElement(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AnnulusElement):
            if not self.coeffs or not other.coeffs:
                return AnnulusElement(self.field, [])
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return AnnulusElement(self.field, out)
        c = self.field(other) if not isinstance(other, CycNum) else other
        return AnnulusElement(self.field, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, value) -> CycNum:
        value = self.field(value) if not isinstance(value, CycNum) else value
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, AnnulusElement):
            return NotImplemented
        return self.field.r == other.field.r and self.coeffs == other.coeffs

    def __repr__(self):
        return f"AnnulusElement(degree={self.degree}, r={self.field.r})"

    @classmethod
    def z(cls, field: CycField) -> "AnnulusElement":
        return cls(field, [field.zero, field.one])


def annulus_closure(x: TLElement) -> AnnulusElement:
    """Glue top to bottom inside the annulus; trivial loops give delta, essential ones z."""
    K = x.field
    dl = delta(K)
    out: dict[int, CycNum] = {}
    for d, c in x.terms.items():
        trivial, essential = _annulus_loops(d)
        v = c * dl**trivial if trivial else c
        out[essential] = out[essential] + v if essential in out else v
    deg = max(out) if out else -1
    return AnnulusElement(K, [out.get(k, K.zero) for k in range(deg + 1)])


@lru_cache(maxsize=None)
def chebyshev(n: int, r: int) -> AnnulusElement:
    """S_0 = 1, S_1 = z, S_{n+1} = z S_n - S_{n-1}."""
    K = cyclotomic_field(r)
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if n == 0:
        return AnnulusElement(K, [K.one])
    if n == 1:
        return AnnulusElement.z(K)
    return AnnulusElement.z(K) * chebyshev(n - 1, r) - chebyshev(n - 2, r)
