import itertools

import pytest

from oracles import theta_by_closure
from skeinrep.colorings import punctured_torus_graph, standard_graph, theta_graph
from skeinrep.cyclotomic import cyclotomic_field, quantum_int
from skeinrep.pairing import (
    GramForm,
    PrecisionError,
    annulus_dual,
    gram_form,
    hopf_matrix,
    loop_value,
    signature,
    theta,
    twist_node,
)
from skeinrep.temperley_lieb import AnnulusElement, chebyshev, encircle, epsilon, jones_wenzl, markov_trace


def test_loop_values():
    r = 8
    assert loop_value(0, r) == 1
    assert loop_value(1, r) == -quantum_int(2, r)
    for n in range(7):
        assert loop_value(n, r) == markov_trace(jones_wenzl(n, r))
    with pytest.raises(ValueError):
        loop_value(r - 1, r)


def test_theta_examples():
    r = 6
    assert theta(0, 0, 0, r) == 1
    assert theta(1, 1, 0, r) == -quantum_int(2, r) == loop_value(1, r)
    assert theta(2, 1, 1, r) == quantum_int(3, r)
    with pytest.raises(ValueError):
        theta(1, 1, 1, r)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_theta_against_tl_closure(r):
    for a, b, c in itertools.product(range(r - 1), repeat=3):
        try:
            v = theta(a, b, c, r)
        except ValueError:
            continue
        assert v == theta_by_closure(a, b, c, r)
        assert not v.is_zero()
        for p in itertools.permutations((a, b, c)):
            assert theta(*p, r) == v


@pytest.mark.parametrize("r", range(2, 10))
def test_theta_degenerate(r):
    for a in range(r - 1):
        assert theta(a, a, 0, r) == loop_value(a, r)


def test_genus1_norms_are_one():
    for r in (3, 6, 9):
        h = gram_form(standard_graph(1), r)
        assert all(x == 1 for x in h.norms)
        assert len(h) == r - 1


@pytest.mark.parametrize("r", [3, 4, 5])
def test_theta_graph_norms_against_tl(r):
    h = gram_form(theta_graph(), r)
    assert h.basis[0] == (0, 0, 0) and h.norms[0] == 1
    for (a, b, c), norm in zip(h.basis, h.norms):
        t = theta_by_closure(a, b, c, r)
        loops = markov_trace(jones_wenzl(a, r)) * markov_trace(jones_wenzl(b, r)) * markov_trace(jones_wenzl(c, r))
        assert norm == t * t / loops


@pytest.mark.parametrize("g", [1, 2, 3])
def test_norms_real(g):
    h = gram_form(standard_graph(g), 5)
    assert all(x.conj() == x for x in h.norms)


def test_gram_rejects_boundary():
    with pytest.raises(ValueError):
        gram_form(punctured_torus_graph(), 5)


def test_gram_json_round_trip():
    h = gram_form(theta_graph(), 5)
    assert GramForm.from_json(h.to_json()) == h


def test_hopf_examples():
    r = 7
    P = hopf_matrix(r)
    assert P[0, 0] == 1
    assert P[1, 1] == quantum_int(4, r)
    assert P.size == r - 1


@pytest.mark.parametrize("r", range(2, 13))
def test_hopf_square_and_symmetry(r):
    P = hopf_matrix(r)
    K = cyclotomic_field(r)
    s = P.square_scalar()
    assert s == K(-2 * r) / (K.A(2) - K.A(-2)) ** 2
    sq = P.square()
    n = P.size
    for i in range(n):
        for j in range(n):
            assert sq[i][j] == (s if i == j else 0)
            assert P[i, j] == P[j, i]
            assert P[i, j].conj() == P[i, j]
    Pinv = P.inverse()
    for i in range(n):
        for j in range(n):
            v = sum((P[i, k] * Pinv[k][j] for k in range(n)), K.zero)
            assert v == (1 if i == j else 0)


@pytest.mark.parametrize("r", [4, 7])
def test_hopf_entries_are_link_evaluations(r):
    # Pi_ij = <i> S_j(x_i); for j = 1 the encircled projector gives the same value
    P = hopf_matrix(r)
    for i in range(r - 1):
        for j in range(r - 1):
            assert P[i, j] == loop_value(i, r) * chebyshev(j, r)(twist_node(i, r))
        f = jones_wenzl(i, r)
        assert P[i, 1] == epsilon(encircle(f)) * loop_value(i, r)


@pytest.mark.parametrize("r", [2, 3, 5, 8])
def test_annulus_duals(r):
    K = cyclotomic_field(r)
    total = AnnulusElement(K, [])
    for i in range(r - 1):
        t = annulus_dual(r, i)
        assert t.degree <= r - 2
        for j in range(r - 1):
            assert t(twist_node(j, r)) == (1 if i == j else 0)
        total = total + t
    assert total == AnnulusElement(K, [K.one])
    if r == 3:
        assert annulus_dual(3, 0).degree == annulus_dual(3, 1).degree == 1


def test_signature_examples():
    for r in (3, 5, 8):
        h = gram_form(standard_graph(1), r)
        for m in cyclotomic_field(r).units_mod_order()[:3]:
            assert signature(h, m) == (r - 1, 0)
    p, q = signature(gram_form(theta_graph(), 3), 1)
    assert p + q == 4


def test_signature_counts_signs():
    r = 7
    h = gram_form(theta_graph(), r)
    for m in (1, 3, 5):
        p, q = signature(h, m)
        vals = [x.embed(m) for x in h.norms]
        assert all(abs(v.imag) < 1e-9 for v in vals)
        assert p == sum(v.real > 0 for v in vals) and p + q == len(h)


def test_signature_precision_error():
    K = cyclotomic_field(5)
    tiny = GramForm(5, ((0,),), (K(1) / 10**12,))
    with pytest.raises(PrecisionError):
        signature(tiny, 1)
