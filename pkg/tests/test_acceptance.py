"""Acceptance criteria 1-11, one test each.

Every test prints a single ``PASS``/``FAIL`` line for its criterion; the
lines are also collected and repeated in the pytest terminal summary.
Run standalone with ``python tests/test_acceptance.py``.
"""

import json
import random
import subprocess
import sys
import time

from skeinrep.colorings import enumerate_admissible, standard_graph, verlinde_dim, verlinde_formula
from skeinrep.cyclotomic import cyclotomic_field, field_norm, is_algebraic_integer, quantum_int
from skeinrep.linalg import charpoly, diag, mat_equal
from skeinrep.pairing import GramForm, gram_form, hopf_matrix, twist_node
from skeinrep.representation import (
    InterpolationPoly,
    RepMatrix,
    annihilated_by_nodes,
    commutant_dimension,
    curve_operator_genus1,
    curve_operator_genus2,
    genus1_rep,
    genus2_rep,
    is_gram_self_adjoint,
    is_gram_unitary,
    node_polynomial,
    projective_equal,
    twist_eigenvalue,
)
from skeinrep.temperley_lieb import (
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

RESULTS = {}


def report(n, title, failures, extra=""):
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}{extra}"
    if failures:
        line += f" | first failures: {failures[:3]}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_01_jones_wenzl():
    start = time.perf_counter()
    bad = []
    for r in range(3, 11):
        for n in range(1, min(9, r - 1) + 1):
            f = jones_wenzl(n, r)
            if f * f != f:
                bad.append(("idempotent", r, n))
            for i in range(1, n):
                if not (generator_e(n, i, r) * f).is_zero():
                    bad.append(("e_i f", r, n, i))
            if epsilon(f) != 1:
                bad.append(("eps", r, n))
            q = quantum_int(n + 1, r)
            if markov_trace(f) != (-q if n % 2 else q):
                bad.append(("trace", r, n))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        bad.append(("runtime", round(elapsed, 1)))
    report(1, "Jones-Wenzl suite, r = 3..10", bad, f" ({elapsed:.1f}s)")


def test_criterion_02_epsilon_values():
    bad = []
    for r in (8, 9, 11):
        K = cyclotomic_field(r)
        for n in range(0, 7):
            x = partial_trace(jones_wenzl(n + 1, r))
            if epsilon(x) != -quantum_int(n + 2, r) / quantum_int(n + 1, r):
                bad.append(("x_n", r, n))
            f = jones_wenzl(n, r)
            if epsilon(encircle(f)) != -K.A(2 * n + 2) - K.A(-2 * n - 2):
                bad.append(("y_n", r, n))
            z = epsilon(full_twist(f))
            if z != (-1) ** n * K.A(n * (n + 2)):
                bad.append(("z_n", r, n))
    report(2, "eps values of partial trace, encircling and twist, n <= 6", bad)


def test_criterion_03_vanishing():
    bad = []
    rng = random.Random(20240501)
    for r in (3, 4, 5):
        f = jones_wenzl(r - 1, r)
        for k in range(100):
            x = random_element(r - 1, r, rng, terms=8)
            if not markov_trace(f * x).is_zero():
                bad.append((r, k))
    report(3, "tr(f_(r-1) x) = 0, 100 samples for r = 3, 4, 5", bad)


def test_criterion_04_chebyshev_closure():
    bad = []
    for r in (9, 10, 12):
        for n in range(0, 9):
            if annulus_closure(jones_wenzl(n, r)) != chebyshev(n, r):
                bad.append((r, n))
    report(4, "annulus closure of f_n = S_n(z), n <= 8", bad)


def test_criterion_05_verlinde():
    start = time.perf_counter()
    bad = []
    for g in (1, 2, 3):
        for r in range(2, 11):
            value = verlinde_formula(g, r)
            count = len(enumerate_admissible(standard_graph(g), r))
            if value != count:
                bad.append((g, r, value, count))
            if g == 1 and value != r - 1:
                bad.append(("g=1 spot", r, value))
    if verlinde_dim(2, 3) != 4 or verlinde_dim(2, 4) != 10:
        bad.append(("genus 2 spot values",))
    elapsed = time.perf_counter() - start
    if elapsed >= 30:
        bad.append(("runtime", round(elapsed, 1)))
    report(5, "Verlinde formula = coloring count, g <= 3, r <= 10", bad, f" ({elapsed:.1f}s)")


def test_criterion_06_hopf():
    bad = []
    for r in range(2, 13):
        K = cyclotomic_field(r)
        P = hopf_matrix(r)
        n = P.size
        s = K(-2 * r) / (K.A(2) - K.A(-2)) ** 2
        if not mat_equal(P.square(), diag(K, [s] * n)):
            bad.append(("square", r))
        for i in range(n):
            for j in range(n):
                if P[i, j] != P[j, i] or P[i, j].conj() != P[i, j]:
                    bad.append(("symmetry", r, i, j))
    report(6, "Pi^2 = -2r/(A^2-A^-2)^2 Id, symmetric, conj-invariant, r <= 12", bad)


def test_criterion_07_genus1():
    bad = []
    for r in range(2, 13):
        K = cyclotomic_field(r)
        if charpoly(K, curve_operator_genus1(r).entries) != node_polynomial(r):
            bad.append(("charpoly", r))
        h = gram_form(standard_graph(1), r)
        ta, tb = genus1_rep(r)
        if not is_gram_unitary(tb, h):
            bad.append(("unitary", r))
        if not projective_equal(ta @ tb @ ta, tb @ ta @ tb):
            bad.append(("braid", r))
        if not projective_equal((ta @ tb) ** 6, ta**0):
            bad.append(("(T_a T_b)^6", r))
    report(7, "genus-1 charpoly, unitarity, braid and sixfold relations, r <= 12", bad)


def test_criterion_08_genus2():
    bad = []
    for r in range(3, 9):
        h = gram_form(standard_graph(2), r)
        phi = curve_operator_genus2(r, ("a", "b"))
        if not is_gram_self_adjoint(phi, h):
            bad.append(("self-adjoint", r))
        if not annihilated_by_nodes(phi):
            bad.append(("min poly", r))
        ta, tb, tc, gab, gbc = mats = genus2_rep(r)
        for m in mats:
            if not is_gram_unitary(m, h):
                bad.append(("unitary", r, m.name))
        if not projective_equal(ta @ gab @ ta, gab @ ta @ gab):
            bad.append(("braid", r))
        if gab @ tc != tc @ gab:
            bad.append(("commute", r))
    report(8, "genus-2 adjointness, spectrum, unitarity, braid and commutation, r = 3..8", bad)


def test_criterion_09_irreducibility():
    bad = []
    for r in (3, 5, 7):
        d1 = commutant_dimension(list(genus1_rep(r)))
        d2 = commutant_dimension(genus2_rep(r))
        if (d1, d2) != (1, 1):
            bad.append(("commutant", r, d1, d2))
        lam = [twist_eigenvalue(n, r) for n in range(r - 1)]
        for n in range(r - 1):
            for m in range(r - 1):
                if (lam[n] == lam[m]) != (n == m):
                    bad.append(("eigenvalues", r, n, m))
    report(9, "commutant dimension 1 and distinct twist eigenvalues, r = 3, 5, 7", bad)


def test_criterion_10_integrality():
    bad = []
    for r in (3, 5, 7, 11):
        for n in range(1, r):
            if abs(field_norm(quantum_int(n, r))) != 1:
                bad.append(("norm", r, n))
        for n in range(0, r):
            for _, c in jones_wenzl(n, r):
                if not is_algebraic_integer(c):
                    bad.append(("coefficient", r, n))
                    break
    report(10, "[n] are units and f_n has integral coefficients, r = 3, 5, 7, 11", bad)


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "skeinrep", *argv], capture_output=True, check=False)


def test_criterion_11_cli():
    bad = []
    runs = [
        ["rep", "--r", "5", "--genus", "2"],
        ["rep", "--r", "5", "--genus", "1", "--format", "csv"],
        ["verlinde", "--r", "4", "--genus", "2"],
        ["check", "--r", "5", "--suite", "hopf"],
    ]
    for argv in runs:
        a, b = _cli(*argv), _cli(*argv)
        if a.returncode != 0 or a.stdout != b.stdout or not a.stdout:
            bad.append(("determinism", " ".join(argv)))
    data = json.loads(_cli("rep", "--r", "4", "--genus", "2").stdout)
    for m in data["twists"] + data["curve_operators"]:
        if RepMatrix.from_json(m).to_json() != m:
            bad.append(("round trip", m["name"]))
    if GramForm.from_json(data["gram"]).to_json() != data["gram"]:
        bad.append(("round trip", "gram"))
    if InterpolationPoly.from_json(data["Q"]).to_json() != data["Q"]:
        bad.append(("round trip", "Q"))
    codes = {
        ("verlinde", "--r", "3", "--genus", "2"): 0,
        ("check", "--r", "5", "--suite", "irreducibility"): 0,
        ("signature", "--r", "5", "--genus", "1", "--embedding", "2"): 2,
        ("rep", "--r", "5", "--genus", "4"): 2,
        ("check", "--r", "5", "--suite", "no-such-suite"): 2,
    }
    for argv, want in codes.items():
        got = _cli(*argv).returncode
        if got != want:
            bad.append(("exit code", " ".join(argv), got, want))
    # exit code 1: a verification failure, forced by sabotaging a suite in-process
    from skeinrep import checks
    from skeinrep.cli import main

    saved = checks.SUITES["hopf"]
    checks.SUITES["hopf"] = lambda r: [checks.Check("sabotaged", 0, 1)]
    try:
        got = main(["check", "--r", "5", "--suite", "hopf", "--output", "/dev/null"])
    finally:
        checks.SUITES["hopf"] = saved
    if got != 1:
        bad.append(("exit code", "verification failure", got, 1))
    report(11, "CLI determinism, JSON round trip, exit codes", bad)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
