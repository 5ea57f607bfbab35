"""Named verification suites run by ``skeinrep check``.

Each suite takes the level r and returns a list of ``Check`` results in a
fixed order, so reports are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .colorings import standard_graph, enumerate_admissible, verlinde_formula
from .cyclotomic import cyclotomic_field, field_norm, quantum_int
from .linalg import charpoly, diag, mat_equal
from .pairing import gram_form, hopf_matrix, twist_node
from .representation import (
    annihilated_by_nodes,
    commutant_dimension,
    curve_operator_genus1,
    curve_operator_genus2,
    genus1_rep,
    genus2_rep,
    interpolation_Q,
    is_gram_self_adjoint,
    is_gram_unitary,
    node_polynomial,
    projective_equal,
    twist_eigenvalue,
)
from .temperley_lieb import (
    annulus_closure,
    chebyshev,
    encircle,
    epsilon,
    full_twist,
    generator_e,
    jones_wenzl,
    markov_trace,
    partial_trace,
    random_element,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: int
    total: int
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _count(name: str, results, note: str = "") -> Check:
    results = list(results)
    return Check(name, sum(bool(x) for x in results), len(results), note)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def suite_cyclotomic(r: int) -> list[Check]:
    K = cyclotomic_field(r)
    a = K.gen
    qs = [quantum_int(n, r) for n in range(1, r)]
    return [
        _count("A^(4r) = 1", [a ** (4 * r) == 1]),
        _count("A * A^-1 = 1", [a * a.inverse() == 1]),
        _count("conj fixes [n]", [q.conj() == q for q in qs]),
        _count("[n] * [n]^-1 = 1", [q * q.inverse() == 1 for q in qs]),
        _count("conj is an involution", [(a + a**3).conj().conj() == a + a**3]),
    ]


def suite_jones_wenzl(r: int) -> list[Check]:
    ns = range(1, min(9, r - 1) + 1)
    idem, killed, eps, tr = [], [], [], []
    for n in ns:
        f = jones_wenzl(n, r)
        idem.append(f * f == f)
        killed.extend((generator_e(n, i, r) * f).is_zero() for i in range(1, n))
        eps.append(epsilon(f) == 1)
        q = quantum_int(n + 1, r)
        tr.append(markov_trace(f) == (-q if n % 2 else q))
    return [
        _count("f_n^2 = f_n", idem),
        _count("e_i f_n = 0", killed),
        _count("eps(f_n) = 1", eps),
        _count("tr f_n = (-1)^n [n+1]", tr),
    ]


def suite_epsilon(r: int) -> list[Check]:
    K = cyclotomic_field(r)
    top = min(6, r - 2)
    ptr, enc, tw = [], [], []
    for n in range(0, top + 1):
        if n + 1 <= r - 1:
            val = epsilon(partial_trace(jones_wenzl(n + 1, r)))
            ptr.append(val == -quantum_int(n + 2, r) / quantum_int(n + 1, r))
        f = jones_wenzl(n, r)
        enc.append(epsilon(encircle(f)) == -K.A(2 * n + 2) - K.A(-2 * n - 2))
        tw.append(epsilon(full_twist(f)) == twist_eigenvalue(n, r))
    return [
        _count("eps(partial trace f_(n+1)) = -[n+2]/[n+1]", ptr),
        _count("eps(encircle f_n) = -A^(2n+2) - A^-(2n+2)", enc),
        _count("eps(full twist f_n) = (-1)^n A^(n(n+2))", tw),
    ]


def suite_vanishing(r: int, samples: int = 100, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    n = r - 1
    f = jones_wenzl(n, r)
    return [_count("tr(f_(r-1) x) = 0", [markov_trace(f * random_element(n, r, rng)).is_zero() for _ in range(samples)])]


def suite_chebyshev(r: int) -> list[Check]:
    return [
        _count(
            "closure of f_n = S_n(z)",
            [annulus_closure(jones_wenzl(n, r)) == chebyshev(n, r) for n in range(0, min(8, r - 1) + 1)],
        )
    ]


def suite_verlinde(r: int) -> list[Check]:
    res = []
    for g in (1, 2, 3):
        res.append(verlinde_formula(g, r) == len(enumerate_admissible(standard_graph(g), r)))
    return [_count("formula = coloring count, g = 1..3", res)]


def suite_hopf(r: int) -> list[Check]:
    P = hopf_matrix(r)
    K = cyclotomic_field(r)
    n = P.size
    s = P.square_scalar()
    return [
        _count("Pi^2 = -2r/(A^2-A^-2)^2 Id", [mat_equal(P.square(), diag(K, [s] * n))]),
        _count("Pi symmetric", [P[i, j] == P[j, i] for i in range(n) for j in range(n)]),
        _count("Pi conj-invariant", [P[i, j].conj() == P[i, j] for i in range(n) for j in range(n)]),
    ]


def suite_interpolation(r: int) -> list[Check]:
    Q = interpolation_Q(r)
    return [_count("Q(x_n) = (-1)^n A^(n(n+2))", [Q(twist_node(n, r)) == twist_eigenvalue(n, r) for n in range(r - 1)])]


def suite_genus1(r: int) -> list[Check]:
    K = cyclotomic_field(r)
    h = gram_form(standard_graph(1), r)
    ta, tb = genus1_rep(r)
    one = ta ** 0
    return [
        _count("charpoly Phi(z) = prod (x - x_n)", [charpoly(K, curve_operator_genus1(r).entries) == node_polynomial(r)]),
        _count("twists Gram-unitary", [is_gram_unitary(ta, h), is_gram_unitary(tb, h)]),
        _count("braid relation", [projective_equal(ta @ tb @ ta, tb @ ta @ tb)]),
        _count("(T_a T_b)^6 = Id projectively", [projective_equal((ta @ tb) ** 6, one)]),
    ]


def suite_genus2(r: int) -> list[Check]:
    h = gram_form(standard_graph(2), r)
    ops = [curve_operator_genus2(r, ("a", "b")), curve_operator_genus2(r, ("b", "c"))]
    ta, tb, tc, gab, gbc = mats = genus2_rep(r)
    return [
        _count("curve operators Gram-self-adjoint", [is_gram_self_adjoint(op, h) for op in ops]),
        _count("min poly divides prod (x - x_n)", [annihilated_by_nodes(op) for op in ops]),
        _count("twists Gram-unitary", [is_gram_unitary(m, h) for m in mats]),
        _count(
            "braid relations",
            [projective_equal(ta @ gab @ ta, gab @ ta @ gab), projective_equal(tb @ gbc @ tb, gbc @ tb @ gbc)],
        ),
        _count("disjoint twists commute", [gab @ tc == tc @ gab, gbc @ ta == ta @ gbc]),
    ]


def suite_irreducibility(r: int) -> list[Check]:
    d1 = commutant_dimension(list(genus1_rep(r)))
    d2 = commutant_dimension(genus2_rep(r))
    if not _is_prime(r):
        note = f"dimensions {d1}, {d2}; irreducibility is asserted for prime r only"
        return [Check("commutant dimension", 0, 0, note=note)]
    lam = [twist_eigenvalue(n, r) for n in range(r - 1)]
    return [
        _count("genus 1 commutant dimension 1", [d1 == 1]),
        _count("genus 2 commutant dimension 1", [d2 == 1]),
        _count("twist eigenvalues distinct", [lam[i] != lam[j] for i in range(len(lam)) for j in range(i)]),
    ]


def suite_integrality(r: int) -> list[Check]:
    if not _is_prime(r):
        return [Check("units and integral idempotents", 0, 0, note="skipped: r is not prime")]
    return [
        _count("N([n]) = +-1", [abs(field_norm(quantum_int(n, r))) == 1 for n in range(1, r)]),
        _count(
            "f_n coefficients integral",
            [c.is_integral() for n in range(r) for _, c in jones_wenzl(n, r)],
        ),
    ]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "cyclotomic": suite_cyclotomic,
    "jones-wenzl": suite_jones_wenzl,
    "epsilon": suite_epsilon,
    "vanishing": suite_vanishing,
    "chebyshev": suite_chebyshev,
    "verlinde": suite_verlinde,
    "hopf": suite_hopf,
    "interpolation": suite_interpolation,
    "genus1": suite_genus1,
    "genus2": suite_genus2,
    "irreducibility": suite_irreducibility,
    "integrality": suite_integrality,
}


def run_suites(r: int, names=None) -> list[tuple[str, list[Check]]]:
    names = list(SUITES) if not names else list(names)
    return [(name, SUITES[name](r)) for name in names]
