import math

import numpy as np
import pytest

from toroidal_fullerene import spectra
from toroidal_fullerene.cayley import build_graph, simple_by_algebra
from toroidal_fullerene.lattice import Lattice, pq_lattice
from toroidal_fullerene.spectra import (
    closed_form_spectrum,
    f,
    g,
    gap_from_sorted_spectrum,
    homo_lumo_gap,
    jacobi_eigenvalues,
    oracle_spectrum,
    prop_f_lower_bound_check,
)

from conftest import all_hnf_lattices

PI = math.pi
Z2 = Lattice(((1, 0), (0, 1)))


def f_trig(t1, t2):
    return 3 + 2 * np.cos(t1) + 2 * np.cos(t2) + 2 * np.cos(t1) * np.cos(t2) + 2 * np.sin(t1) * np.sin(t2)


def cycle_adjacency(n):
    A = np.zeros((n, n), dtype=int)
    for i in range(n):
        A[i, (i + 1) % n] = A[(i + 1) % n, i] = 1
    return A


@pytest.mark.parametrize(
    "t1, t2, expected", [(0, 0, 9), (0, PI, 1), (2 * PI / 3, 4 * PI / 3, 0)]
)
def test_f_examples(t1, t2, expected):
    assert f(t1, t2) == pytest.approx(expected, abs=1e-12)


def test_f_matches_trig_expansion():
    rng = np.random.default_rng(1)
    t = rng.uniform(-4 * PI, 4 * PI, size=(2, 5000))
    vals = f(t[0], t[1])
    assert np.allclose(vals, f_trig(t[0], t[1]), atol=1e-12)
    assert vals.min() >= 0 and vals.max() <= 9 + 1e-12


@pytest.mark.parametrize("theta, expected", [(0, 1), (2 * PI / 3, 0), (PI, 1)])
def test_g_examples(theta, expected):
    assert g(theta) == pytest.approx(expected, abs=1e-15)


def test_g_matches_definition():
    theta = np.linspace(-PI, PI, 2001)
    assert np.allclose(g(theta), 3 + 2 * np.cos(theta) - 4 * np.cos(theta / 2), atol=1e-13)
    assert np.allclose(g(theta), f(theta, theta / 2 + PI), atol=1e-13)
    assert np.array_equal(g(theta), g(-theta))


def test_g_rejects_out_of_range():
    with pytest.raises(ValueError):
        g(3.5)


def test_g_monotone():
    up = np.linspace(0, 2 * PI / 3, 10_000)
    down = np.linspace(2 * PI / 3, PI, 10_000)
    assert np.all(np.diff(g(up)) <= 0)
    assert np.all(np.diff(g(down)) >= 0)


def test_closed_form_examples():
    assert closed_form_spectrum(Z2).eigenvalues.tolist() == [3.0, -3.0]
    eigs = closed_form_spectrum(pq_lattice(1, 1)).eigenvalues
    assert np.allclose(eigs, [3, 1, -1, -3], atol=1e-12)
    N = pq_lattice(2, 1)
    closed = closed_form_spectrum(N).eigenvalues
    assert len(closed) == 8
    assert np.allclose(closed, oracle_spectrum(build_graph(N)).eigenvalues, atol=1e-10)


@pytest.mark.parametrize(
    "N, expected",
    [(Z2, 6.0), (pq_lattice(1, 1), 2.0), (pq_lattice(3, 1), 0.0), (pq_lattice(3, 5), 0.0)],
)
def test_homo_lumo_gap_examples(N, expected):
    assert homo_lumo_gap(N) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "eigs, expected", [([3, 1, -1, -3], 2), ([3, 0, 0, -3], 0), ([1, 1, -1, -1], 2)]
)
def test_gap_from_sorted_spectrum(eigs, expected):
    assert gap_from_sorted_spectrum(eigs) == expected


def test_gap_from_sorted_spectrum_odd():
    with pytest.raises(ValueError):
        gap_from_sorted_spectrum([3, 0, -3])


def test_oracle_examples():
    assert np.allclose(jacobi_eigenvalues([[0, 3], [3, 0]]), [3, -3], atol=1e-14)
    assert np.allclose(jacobi_eigenvalues(cycle_adjacency(6)), [2, 1, 1, -1, -1, -2], atol=1e-12)
    eigs = oracle_spectrum(build_graph(pq_lattice(1, 1))).eigenvalues
    assert np.allclose(eigs, [3, 1, -1, -3], atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 17, 40, 63])
def test_jacobi_matches_lapack(n):
    rng = np.random.default_rng(n)
    X = rng.normal(size=(n, n))
    X = X + X.T
    expected = np.sort(np.linalg.eigvalsh(X))[::-1]
    assert np.allclose(jacobi_eigenvalues(X), expected, atol=1e-10)


def test_jacobi_repeated_eigenvalues():
    # complete graph K_n: n - 1 once, -1 with multiplicity n - 1
    n = 9
    A = np.ones((n, n)) - np.eye(n)
    assert np.allclose(jacobi_eigenvalues(A), [n - 1] + [-1] * (n - 1), atol=1e-12)


def test_jacobi_errors():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.zeros((spectra.ORACLE_MAX_SIZE + 1,) * 2))
    rng = np.random.default_rng(0)
    X = rng.normal(size=(30, 30))
    with pytest.raises(RuntimeError):
        jacobi_eigenvalues(X + X.T, max_sweeps=1)


def test_prop_f_lower_bound_examples():
    assert prop_f_lower_bound_check([0.0], [0.0, PI / 2, PI])
    assert f(0.0, PI) == pytest.approx(1.0) and g(0.0) == pytest.approx(1.0)
    theta = 2 * PI / 3
    assert f(theta, theta / 2 + PI) == pytest.approx(0.0, abs=1e-15)
    assert prop_f_lower_bound_check([theta], [theta / 2 + PI])


def test_prop_f_lower_bound_detects_violation():
    # negative slack demands f > g + 0.1, which the equality points violate
    theta = np.linspace(-PI, PI, 50)
    assert not prop_f_lower_bound_check(theta, np.linspace(-PI, PI, 50), tol=-0.1)


def test_trivial_character_is_unique_maximum():
    for N in all_hnf_lattices(20):
        for chi in N.characters[1:]:
            assert spectra.character_modulus(chi) < 3 - 1e-9


@pytest.mark.parametrize("N", all_hnf_lattices(20), ids=lambda N: str(N.hnf))
def test_spectrum_invariants(N):
    rep = closed_form_spectrum(N)
    eigs = rep.eigenvalues
    n = N.index
    assert len(eigs) == 2 * n
    assert np.array_equal(eigs, -eigs[::-1])
    assert abs(eigs.sum()) <= 1e-9
    assert eigs[0] == 3.0 and np.sum(np.abs(eigs - 3) < 1e-9) == 1
    assert eigs[-1] == -3.0 and np.sum(np.abs(eigs + 3) < 1e-9) == 1
    if simple_by_algebra(N):
        assert abs(np.sum(eigs**2) - 6 * n) <= 1e-6
    assert homo_lumo_gap(N) == gap_from_sorted_spectrum(eigs) == rep.gap
