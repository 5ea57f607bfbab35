"""Independent reference implementations used only by the tests.

None of these share code paths with the library beyond the basic field
type, so agreement is meaningful.
"""

import cmath
import itertools
import math
from fractions import Fraction

from skeinrep.cyclotomic import cyclotomic_field, quantum_int
from skeinrep.temperley_lieb import TLElement, jones_wenzl, markov_trace, tensor


# -- polynomials over Q, lowest degree first ---------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(f, g):
    f = [Fraction(c) for c in f]
    g = _trim(g)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    while len(_trim(f)) >= len(g):
        f = _trim(f)
        shift = len(f) - len(g)
        c = f[-1] / g[-1]
        q[shift] = c
        for i, gi in enumerate(g):
            f[i + shift] -= c * gi
    return q, _trim(f)


def _sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def xgcd_inverse(coeffs, modulus):
    """Inverse of coeffs modulo modulus by the extended Euclidean algorithm."""
    r0, r1 = _trim([Fraction(c) for c in modulus]), _trim([Fraction(c) for c in coeffs])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _sub(s0, _mul(q, s1))
    assert r1, "not invertible"
    c = r1[0]
    _, inv = _divmod([x / c for x in s1], modulus)
    return inv + [Fraction(0)] * (len(modulus) - 1 - len(inv))


def numeric_norm(x):
    """Product of x over all embeddings A -> exp(i pi m / 2r), gcd(m, 4r) = 1."""
    r = x.field.r
    prod = 1
    for m in range(1, 4 * r):
        if math.gcd(m, 4 * r) == 1:
            prod *= x.embed(m)
    return prod


def embed_at(coeffs, r, m):
    a = cmath.exp(1j * math.pi * m / (2 * r))
    return sum(complex(c) * a**k for k, c in enumerate(coeffs))


# -- Temperley-Lieb diagrams by explicit gluing ------------------------------

def glue(lower, upper):
    """Compose matchings (upper stacked on lower) with a union-find over points.

    Returns (matching, closed loops).  Points: lower uses ('L', p), upper
    ('U', p); the bottom row of upper is glued to the top row of lower.
    """
    n = len(lower) // 2
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for p, q in enumerate(lower):
        union(("L", p), ("L", q))
    for p, q in enumerate(upper):
        union(("U", p), ("U", q))
    for k in range(n):
        union(("L", k), ("U", n + k))
    # outer points: upper top row becomes the top, lower bottom row the bottom
    outer = [("U", k) for k in range(n)] + [("L", n + k) for k in range(n)]
    groups = {}
    for idx, pt in enumerate(outer):
        groups.setdefault(find(pt), []).append(idx)
    match = [0] * (2 * n)
    for a, b in groups.values():
        match[a], match[b] = b, a
    roots = {find(("L", p)) for p in range(2 * n)} | {find(("U", p)) for p in range(2 * n)}
    loops = len(roots - set(groups))
    return tuple(match), loops


def oracle_mul(x, y):
    """Product x * y (x below y) computed term by term with glue()."""
    K = x.field
    delta = -(K.A(2) + K.A(-2))
    out = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            m, loops = glue(d1, d2)
            v = c1 * c2 * delta**loops
            out[m] = out[m] + v if m in out else v
    return TLElement(x.n, K, out)


def theta_by_closure(a, b, c, r):
    """Colored theta graph evaluated as tr((f_a (x) f_b) Z) in T_{a+b}.

    Z carries f_c on the through strands and k = (a+b-c)/2 nested caps
    joining the a-block to the b-block, on top and on bottom.
    """
    k = (a + b - c) // 2
    n = a + b
    K = cyclotomic_field(r)
    # positions in T_n that carry f_c's strands, in order
    through = list(range(a - k)) + list(range(a + k, n))
    terms = {}
    for d, coef in jones_wenzl(c, r).terms.items():
        match = [0] * (2 * n)

        def outer(p):
            # point of f_c -> point of T_n
            return through[p] if p < c else n + through[p - c]

        for p, q in enumerate(d):
            match[outer(p)] = outer(q)
        for t in range(k):
            lo, hi = a - 1 - t, a + t
            match[lo], match[hi] = hi, lo
            match[n + lo], match[n + hi] = n + hi, n + lo
        terms[tuple(match)] = coef
    Z = TLElement(n, K, terms)
    return markov_trace(tensor(jones_wenzl(a, r), jones_wenzl(b, r)) * Z)


# -- colorings --------------------------------------------------------------

def triple_ok(a, b, c, r):
    s = a + b + c
    return s % 2 == 0 and a <= b + c and b <= a + c and c <= a + b and s < 2 * r - 2


def brute_force_count(graph, r):
    """Count colorings by looping over the full product of color ranges."""
    total = 0
    for cols in itertools.product(range(r - 1), repeat=len(graph.edges)):
        ok = True
        for v in graph.trivalent_vertices():
            e1, e2, e3 = graph.incident(v)
            if not triple_ok(cols[e1], cols[e2], cols[e3], r):
                ok = False
                break
        total += ok
    return total * (r - 1) ** graph.loops


def verlinde_float(g, r):
    return (r / 2) ** (g - 1) * sum(math.sin(math.pi * j / r) ** (2 - 2 * g) for j in range(1, r))


def chebyshev_closed_form(j, i, r):
    """(-1)^j [(i+1)(j+1)] / [i+1]: S_j at -A^(2i+2) - A^(-2i-2)."""
    v = quantum_int((i + 1) * (j + 1), r) / quantum_int(i + 1, r)
    return -v if j % 2 else v
