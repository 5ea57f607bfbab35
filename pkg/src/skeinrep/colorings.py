"""Trivalent graphs, r-admissible colorings and the Verlinde dimension."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import mpmath

__all__ = [
    "TrivalentGraph",
    "Coloring",
    "VerlindeMismatch",
    "internal_colors",
    "is_admissible_triple",
    "is_r_admissible",
    "enumerate_admissible",
    "verlinde_formula",
    "verlinde_dim",
    "standard_graph",
    "theta_graph",
    "punctured_torus_graph",
    "necklace_graph",
    "generalized_theta_graph",
]

# edge colors in canonical edge order, then one color per vertexless loop
Coloring = tuple[int, ...]


class VerlindeMismatch(RuntimeError):
    """The trigonometric formula and the coloring count disagree."""


@dataclass(frozen=True)
class TrivalentGraph:
    """Abstract graph with trivalent and univalent vertices.

    ``edges`` may contain self-loops and parallel edges; ``loops`` counts
    free circles carrying no vertex.  ``boundary`` lists the univalent
    vertices (marked points).
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    loops: int = 0
    boundary: tuple[int, ...] = ()
    _incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "boundary", tuple(self.boundary))
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for k, (u, v) in enumerate(edges):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge {k} = {(u, v)} has an unknown endpoint")
            inc[u].append(k)
            inc[v].append(k)
        for v, es in enumerate(inc):
            want = 1 if v in self.boundary else 3
            if len(es) != want:
                raise ValueError(f"vertex {v} has valence {len(es)}, expected {want}")
        object.__setattr__(self, "_incidence", tuple(tuple(es) for es in inc))

    @property
    def num_colors(self) -> int:
        return len(self.edges) + self.loops

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge indices at v; a self-loop appears twice."""
        return self._incidence[v]

    def trivalent_vertices(self) -> list[int]:
        return [v for v in range(self.num_vertices) if v not in self.boundary]

    def boundary_edge(self, v: int) -> int:
        return self._incidence[v][0]

    def genus(self) -> int:
        """First Betti number (assumes a connected graph plus free loops)."""
        comps = _components(self.num_vertices, self.edges)
        return len(self.edges) - self.num_vertices + comps + self.loops

    def to_json(self) -> dict:
        return {
            "vertices": self.num_vertices,
            "edges": [list(e) for e in self.edges],
            "loops": self.loops,
            "boundary": list(self.boundary),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TrivalentGraph":
        return cls(
            int(data["vertices"]),
            tuple(tuple(e) for e in data["edges"]),
            int(data.get("loops", 0)),
            tuple(data.get("boundary", ())),
        )


def _components(n: int, edges) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)})


def internal_colors(a: int, b: int, c: int) -> tuple[int, int, int] | None:
    """(i, j, k) with a = j + k, b = i + k, c = i + j, or None if not triangular/even."""
    if (a + b + c) % 2:
        return None
    i, j, k = (b + c - a) // 2, (a + c - b) // 2, (a + b - c) // 2
    if min(i, j, k) < 0:
        return None
    return i, j, k


def is_admissible_triple(a: int, b: int, c: int, r: int) -> bool:
    if min(a, b, c) < 0 or max(a, b, c) > r - 2:
        return False
    return internal_colors(a, b, c) is not None and a + b + c < 2 * r - 2


def is_r_admissible(g: TrivalentGraph, c: Sequence[int], r: int) -> bool:
    if len(c) != g.num_colors:
        raise ValueError(f"coloring has {len(c)} entries, graph needs {g.num_colors}")
    if any(x < 0 or x > r - 2 for x in c):
        return False
    for v in g.trivalent_vertices():
        e1, e2, e3 = g.incident(v)
        if not is_admissible_triple(c[e1], c[e2], c[e3], r):
            return False
    return True


def enumerate_admissible(
    g: TrivalentGraph, r: int, boundary_colors: Mapping[int, int] | None = None
) -> list[Coloring]:
    """All r-admissible colorings extending ``boundary_colors`` (vertex -> color).

    Output is lexicographic in the canonical edge order (loops last).
    """
    boundary_colors = dict(boundary_colors or {})
    fixed: dict[int, int] = {}
    for v in g.boundary:
        if v not in boundary_colors:
            raise ValueError(f"boundary vertex {v} has no color")
        col = boundary_colors[v]
        e = g.boundary_edge(v)
        if e in fixed and fixed[e] != col:
            return []
        fixed[e] = col
    unknown = set(boundary_colors) - set(g.boundary)
    if unknown:
        raise ValueError(f"colors given for non-boundary vertices {sorted(unknown)}")
    if any(not 0 <= x <= r - 2 for x in fixed.values()):
        return []

    m = len(g.edges)
    # a vertex is checked as soon as its last incident edge is assigned
    check_at: list[list[int]] = [[] for _ in range(m)]
    for v in g.trivalent_vertices():
        check_at[max(g.incident(v))].append(v)

    out: list[Coloring] = []
    colors = [0] * m

    def rec(k: int) -> None:
        if k == m:
            out.append(tuple(colors))
            return
        choices = (fixed[k],) if k in fixed else range(r - 1)
        for col in choices:
            colors[k] = col
            ok = True
            for v in check_at[k]:
                e1, e2, e3 = g.incident(v)
                if not is_admissible_triple(colors[e1], colors[e2], colors[e3], r):
                    ok = False
                    break
            if ok:
                rec(k + 1)

    rec(0)
    if g.loops:
        tails = _loop_tails(g.loops, r)
        out = [c + t for c in out for t in tails]
    return out


def _loop_tails(k: int, r: int) -> list[tuple[int, ...]]:
    tails: list[tuple[int, ...]] = [()]
    for _ in range(k):
        tails = [t + (x,) for t in tails for x in range(r - 1)]
    return tails


def _guard_bits() -> int:
    return int(os.environ.get("SKEINREP_PRECISION", "64"))


def verlinde_formula(genus: int, r: int, boundary: Sequence[int] = ()) -> int:
    """(r/2)^(g-1) sum_j sin(pi j/r)^(2-2g), rounded from high precision.

    With marked points colored c_1..c_k each summand also carries
    prod_i sin(pi j (c_i+1)/r) / sin(pi j/r).
    """
    if genus < 0 or r < 2:
        raise ValueError("need genus >= 0 and r >= 2")
    bits = int(2 * (max(genus, 1) * math.log2(r) + _guard_bits()))
    with mpmath.workprec(bits):
        total = mpmath.mpf(0)
        for j in range(1, r):
            s = mpmath.sin(mpmath.pi * j / r)
            term = s ** (2 - 2 * genus)
            for c in boundary:
                term *= mpmath.sin(mpmath.pi * j * (c + 1) / r) / s
            total += term
        value = (mpmath.mpf(r) / 2) ** (genus - 1) * total
        rounded = int(mpmath.nint(value))
        if abs(value - rounded) > mpmath.mpf(2) ** (-bits // 4):
            raise VerlindeMismatch(f"Verlinde sum {value} is not close to an integer")
    return rounded


def verlinde_dim(genus: int, r: int) -> int:
    """Dimension of the genus-g space, formula cross-checked against enumeration."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    value = verlinde_formula(genus, r)
    count = len(enumerate_admissible(standard_graph(genus), r))
    if value != count:
        raise VerlindeMismatch(f"formula gives {value}, enumeration gives {count} (g={genus}, r={r})")
    return value


def theta_graph() -> TrivalentGraph:
    return TrivalentGraph(2, ((0, 1), (0, 1), (0, 1)))


def standard_graph(genus: int) -> TrivalentGraph:
    """Circle (g=1), theta (g=2), caterpillar (g>=3: loops at both ends, doubled rungs)."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    if genus == 1:
        return TrivalentGraph(0, (), loops=1)
    if genus == 2:
        return theta_graph()
    nv = 2 * genus - 2
    edges = [(0, 0)]
    for v in range(nv - 1):
        edges.append((v, v + 1))
    for v in range(1, nv - 2, 2):
        edges.append((v, v + 1))
    edges.append((nv - 1, nv - 1))
    return TrivalentGraph(nv, tuple(edges))


def punctured_torus_graph() -> TrivalentGraph:
    """Edge 0: loop at the trivalent vertex 0; edge 1: leg to the marked point 1."""
    return TrivalentGraph(2, ((0, 0), (0, 1)), boundary=(1,))


def necklace_graph(k: int) -> TrivalentGraph:
    """Torus with k marked points: a k-cycle of trivalent vertices, one leg each.

    Edges 0..k-1 form the cycle, edges k..2k-1 are the legs; vertices k..2k-1
    are the marked points.
    """
    if k < 1:
        raise ValueError("need at least one marked point")
    if k == 1:
        return punctured_torus_graph()
    cycle = [(v, (v + 1) % k) for v in range(k)]
    legs = [(v, k + v) for v in range(k)]
    return TrivalentGraph(2 * k, tuple(cycle + legs), boundary=tuple(range(k, 2 * k)))


def generalized_theta_graph(m: int) -> TrivalentGraph:
    """m parallel strands between two combs of m-2 trivalent vertices (genus m-1).

    Edges 0..m-1 are the strands, followed by the top and bottom comb edges.
    """
    if m < 3:
        raise ValueError("generalized theta needs m >= 3")
    top = list(range(m - 2))
    bottom = list(range(m - 2, 2 * m - 4))

    def slot(k: int) -> int:
        return min(max(k - 1, 0), m - 3)

    edges = [(top[slot(k)], bottom[slot(k)]) for k in range(m)]
    edges += [(top[k], top[k + 1]) for k in range(m - 3)]
    edges += [(bottom[k], bottom[k + 1]) for k in range(m - 3)]
    return TrivalentGraph(2 * m - 4, tuple(edges))
